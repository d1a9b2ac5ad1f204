// Command line front end: closed-form values, explicit constructions,
// exact solving, verification and certificate replay for outer independent
// Roman domination on cylinder graphs.
//
// Exit codes: 0 success/valid, 1 invalid input semantics, 2 parse or
// format error, 3 size-cap refusal.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oird/certificates.hpp"
#include "oird/codec.hpp"
#include "oird/constructions.hpp"
#include "oird/cylinder.hpp"
#include "oird/formulas.hpp"
#include "oird/solver.hpp"

using namespace oird;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitFormat = 2;
constexpr int kExitCap = 3;

SolverCaps caps_for(const std::string& profile) {
  SolverCaps caps;
  if (profile == "small") {
    caps.brute_max_cells = 12;
    caps.cycle_sweep_width_max = 5;
    caps.path_sweep_width_max = 7;
    caps.sweep_length_max = 2000;
  } else if (profile == "large") {
    caps.brute_max_cells = 16;
    caps.cycle_sweep_width_max = 7;
    caps.path_sweep_width_max = 9;
    caps.sweep_length_max = 100000;
  }
  return caps;
}

struct FamilyFormula {
  std::string family;
  FormulaValue value;
};

// The exactly solved families; rows win over cols so (3,3) reports p3cm.
std::optional<FamilyFormula> exact_family(int n, int m) {
  if (n == 1) return FamilyFormula{"p1cm", gamma_p1cm(m)};
  if (n == 2) return FamilyFormula{"p2cm", gamma_p2cm(m)};
  if (n == 3) return FamilyFormula{"p3cm", gamma_p3cm(m)};
  if (m == 3) return FamilyFormula{"pnc3", gamma_pnc3(n)};
  return std::nullopt;
}

std::string formula_line(const FamilyFormula& ff) {
  std::string s = formula_kind_name(ff.value.kind) + " " +
                  std::to_string(ff.value.value) + " (formula: " + ff.family;
  if (!ff.value.case_tag.empty()) s += ", case " + ff.value.case_tag;
  s += ")";
  return s;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

int cmd_gamma(int n, int m, const std::string& method, const SolverCaps& caps,
              int threads) {
  CylinderSpec spec(n, m);
  if (method == "formula" || method == "auto") {
    if (auto ff = exact_family(n, m)) {
      std::cout << formula_line(*ff) << "\n";
      return kExitOk;
    }
    if (method == "formula") {
      FamilyFormula global{"bound", upper_pncm_global(n, m)};
      std::cout << formula_line(global) << "\n";
      std::cout << "note: no exact closed form for this size; "
                   "the value shown is an upper bound on the optimum\n";
      return kExitOk;
    }
  }
  SolveOutcome out = (method == "brute")
                         ? brute_force(spec, caps, false)
                         : solve_dp(spec, caps, DpOrientation::Auto, false, threads);
  std::cout << "exact " << out.gamma << " (" << solve_method_name(out.method)
            << ")\n";
  return kExitOk;
}

int cmd_construct(int n, int m, const std::string& format) {
  Labeling f = construct_any(n, m);
  if (format == "record")
    std::cout << encode_record(f) << "\n";
  else
    std::cout << encode_grid(f);
  return kExitOk;
}

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Labeling load_labeling(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  if (format == "grid") return decode_grid(text);
  if (format == "record") return decode_record(text);
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return decode_record(text);
  return decode_grid(text);
}

int cmd_verify(const std::string& path, const std::string& format) {
  Labeling f = load_labeling(path, format);
  ValidationReport rep = validate(f);
  std::cout << "rows: " << f.spec.rows << "\n";
  std::cout << "cols: " << f.spec.cols << "\n";
  std::cout << "weight: " << f.weight() << "\n";
  std::cout << "valid: " << yn(rep.is_valid) << "\n";
  if (!rep.is_valid) {
    std::cout << "violations:\n";
    for (const Violation& v : rep.violations)
      std::cout << "  " << violation_kind_name(v.kind) << " at (" << v.row
                << "," << v.col << ")\n";
  }
  return rep.is_valid ? kExitOk : kExitInvalid;
}

void print_sums(const SliceSums& s, const char* label) {
  std::cout << label << ":";
  for (std::int64_t v : s.sums) std::cout << " " << v;
  std::cout << "\n";
}

void print_properties(const std::vector<PropertyCheck>& checks, bool& ok) {
  std::cout << "properties:\n";
  for (const PropertyCheck& c : checks) {
    std::cout << "  " << (c.pass ? "pass" : "fail") << "  " << c.name;
    if (!c.mandatory) std::cout << " [informational]";
    if (!c.pass) {
      std::cout << " (slices";
      for (int idx : c.failures) std::cout << " " << idx;
      std::cout << ")";
    }
    std::cout << "\n";
    if (c.mandatory && !c.pass) ok = false;
  }
}

void print_partition(const BagPartition& part) {
  std::cout << "bags:\n";
  for (const Bag& b : part.bags) {
    std::cout << "  " << bag_category_name(b.category) << " {";
    for (std::size_t k = 0; k < b.members.size(); ++k)
      std::cout << (k ? "," : "") << b.members[k];
    std::cout << "} sum=" << b.sum << "\n";
  }
  std::cout << "counts: t0=" << part.t0 << " t1=" << part.t1
            << " t2=" << part.t2 << "\n";
  std::cout << "covered: " << yn(part.covered) << "\n";
  std::cout << "bounds-ok: " << yn(part.bounds_ok) << "\n";
  if (part.algorithm == 1)
    std::cout << "strict-ok: " << yn(part.strict_ok) << "\n";
  else
    std::cout << "premise-b: " << yn(part.property_b) << "\n";
  std::cout << "bound: " << part.bound;
  if (part.algorithm == 2 && !part.property_b)
    std::cout << " (not claimed: premise-b failed)";
  std::cout << "\n";
}

int cmd_certify(const std::string& path, const std::string& format) {
  Labeling f = load_labeling(path, format);
  const int n = f.spec.rows;
  const int m = f.spec.cols;
  bool ok = true;
  if (n == 2 || n == 3) {
    Family fam = (n == 2) ? Family::P2Cm : Family::P3Cm;
    std::cout << "family: " << family_name(fam) << "\n";
    std::cout << "weight: " << f.weight() << "\n";
    print_sums(column_sums(f, SliceSums::Axis::Columns), "column sums");
    BagPartition part =
        (n == 2) ? partition_algorithm1(f) : partition_algorithm2(f);
    print_partition(part);
    if (!part.covered || !part.bounds_ok) ok = false;
    print_properties(check_proof_properties(f, fam), ok);
  } else if (m == 3) {
    std::cout << "family: " << family_name(Family::PnC3) << "\n";
    std::cout << "weight: " << f.weight() << "\n";
    print_sums(column_sums(f, SliceSums::Axis::Rows), "row sums");
    print_properties(check_proof_properties(f, Family::PnC3), ok);
  } else {
    std::cerr << "certify: no certificate family for " << n << " rows and "
              << m << " cols (needs 2 or 3 rows, or 3 cols)\n";
    return kExitInvalid;
  }
  std::cout << "certificate: " << (ok ? "ok" : "failed") << "\n";
  return ok ? kExitOk : kExitInvalid;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("range", "expected A..B, got " + text);
  int a = 0, b = 0;
  try {
    a = std::stoi(text.substr(0, pos));
    b = std::stoi(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected A..B, got " + text);
  }
  if (a > b) throw CLI::ValidationError("range", "empty range " + text);
  return {a, b};
}

std::vector<int> axis_values(std::optional<int> single, const std::string& range,
                             const char* what) {
  if (single) return {*single};
  if (!range.empty()) {
    auto [a, b] = parse_range(range);
    std::vector<int> out;
    for (int x = a; x <= b; ++x) out.push_back(x);
    return out;
  }
  throw CLI::RequiredError(what);
}

struct TableArgs {
  std::optional<int> n, m;
  std::string n_range, m_range;
  std::vector<std::string> columns{"formula", "construction", "dp"};
  std::string format = "text";
  bool stable = false;
  std::string caps_profile = "default";
  int threads = 1;
};

int cmd_table(const TableArgs& a) {
  const auto ns = axis_values(a.n, a.n_range, "--n or --n-range");
  const auto ms = axis_values(a.m, a.m_range, "--m or --m-range");
  const SolverCaps caps = caps_for(a.caps_profile);
  auto has = [&](const char* c) {
    return std::find(a.columns.begin(), a.columns.end(), c) != a.columns.end();
  };
  const bool want_formula = has("formula");
  const bool want_construction = has("construction");
  const bool want_dp = has("dp");
  const bool want_bound = has("bound");

  std::vector<std::string> header = {"n", "m"};
  if (want_formula) {
    header.push_back("formula");
    header.push_back("kind");
    header.push_back("case");
  }
  if (want_construction) header.push_back("construction");
  if (want_dp) header.push_back("dp");
  if (want_bound) header.push_back("bound");
  header.push_back("flags");

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<std::string>> text_rows;
  std::vector<std::string> json_rows;
  bool all_ok = true;

  for (int n : ns) {
    for (int m : ms) {
      CylinderSpec spec(n, m);
      ordered_json j;
      j["n"] = n;
      j["m"] = m;
      std::vector<std::string> cells = {std::to_string(n), std::to_string(m)};

      std::optional<FormulaValue> fval;
      if (want_formula) {
        std::string family;
        if (auto ff = exact_family(n, m)) {
          fval = ff->value;
          family = ff->family;
        } else {
          fval = upper_pncm_case(n, m);
          family = "pncm";
        }
        j["family"] = family;
        j["formula"] = fval->value;
        j["kind"] = formula_kind_name(fval->kind);
        j["case"] = fval->case_tag;
        cells.push_back(std::to_string(fval->value));
        cells.push_back(formula_kind_name(fval->kind));
        cells.push_back(fval->case_tag.empty() ? "-" : fval->case_tag);
      }

      std::optional<std::int64_t> cw;
      bool cons_valid = true;
      if (want_construction) {
        Labeling f = construct_any(n, m);
        cw = f.weight();
        cons_valid = validate(f).is_valid;
        j["construction"] = *cw;
        cells.push_back(std::to_string(*cw));
      }

      std::optional<std::int64_t> dv;
      if (want_dp) {
        try {
          SolveOutcome out =
              solve_dp(spec, caps, DpOrientation::Auto, false, a.threads);
          dv = out.gamma;
          j["dp"] = *dv;
          j["dp_method"] = solve_method_name(out.method);
          cells.push_back(std::to_string(*dv));
        } catch (const SizeCapError&) {
          j["dp"] = nullptr;
          j["dp_note"] = "size-cap";
          cells.push_back("cap");
        }
      }

      std::optional<std::int64_t> bv;
      if (want_bound) {
        if (n >= 4 && m >= 4) {
          bv = upper_pncm_global(n, m).value;
          j["bound"] = *bv;
          cells.push_back(std::to_string(*bv));
        } else {
          j["bound"] = nullptr;
          cells.push_back("-");
        }
      }

      std::vector<std::string> fails;
      if (!cons_valid) fails.push_back("construction-invalid");
      if (fval && cw) {
        if (fval->kind == FormulaKind::Exact && *cw != fval->value)
          fails.push_back("construction!=formula");
        if (fval->kind == FormulaKind::UpperBound && *cw != fval->value)
          fails.push_back("construction!=case-bound");
      }
      if (fval && dv) {
        if (fval->kind == FormulaKind::Exact && *dv != fval->value)
          fails.push_back("dp!=formula");
        if (fval->kind == FormulaKind::UpperBound && *dv > fval->value)
          fails.push_back("dp>case-bound");
      }
      if (dv && cw && *dv > *cw) fails.push_back("dp>construction");
      if (bv && cw && *cw > *bv) fails.push_back("construction>bound");
      if (bv && dv && *dv > *bv) fails.push_back("dp>bound");

      const bool ok = fails.empty();
      all_ok = all_ok && ok;
      j["ok"] = ok;
      if (!ok) j["flags"] = fails;
      std::string flag_cell = "ok";
      if (!ok) {
        flag_cell.clear();
        for (std::size_t k = 0; k < fails.size(); ++k)
          flag_cell += (k ? "," : "") + fails[k];
      }
      cells.push_back(flag_cell);

      if (a.format == "jsonl")
        json_rows.push_back(j.dump());
      else
        text_rows.push_back(std::move(cells));
    }
  }

  if (a.format == "jsonl") {
    for (const std::string& r : json_rows) std::cout << r << "\n";
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : text_rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::cout << row[c];
        if (c + 1 < row.size())
          std::cout << std::string(width[c] - row[c].size() + 2, ' ');
      }
      std::cout << "\n";
    };
    emit(header);
    for (const auto& row : text_rows) emit(row);
  }
  if (!a.stable) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << "# elapsed_ms " << ms << "\n";
  }
  return all_ok ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"outer independent Roman domination on cylinder graphs"};
  app.require_subcommand(1);
  int rc = kExitOk;

  auto* gamma = app.add_subcommand("gamma", "optimum weight of one cylinder");
  int gn = 0, gm = 0, gthreads = 1;
  std::string gmethod = "auto", gcaps = "default";
  gamma->add_option("--n", gn, "rows (path dimension)")->required();
  gamma->add_option("--m", gm, "cols (cycle dimension)")->required();
  gamma->add_option("--method", gmethod, "auto|brute|dp|formula")
      ->check(CLI::IsMember({"auto", "brute", "dp", "formula"}));
  gamma->add_option("--caps", gcaps, "size-cap profile")
      ->check(CLI::IsMember({"default", "small", "large"}));
  gamma->add_option("--threads", gthreads, "seam worker threads")
      ->check(CLI::Range(1, 64));
  gamma->callback(
      [&] { rc = cmd_gamma(gn, gm, gmethod, caps_for(gcaps), gthreads); });

  auto* construct = app.add_subcommand("construct", "explicit optimal or near-optimal labeling");
  int cn = 0, cm = 0;
  std::string cformat = "grid";
  construct->add_option("--n", cn, "rows")->required();
  construct->add_option("--m", cm, "cols")->required();
  construct->add_option("--format", cformat, "grid|record")
      ->check(CLI::IsMember({"grid", "record"}));
  construct->callback([&] { rc = cmd_construct(cn, cm, cformat); });

  auto* verify = app.add_subcommand("verify", "check a labeling file");
  std::string vfile, vformat = "auto";
  verify->add_option("file", vfile, "labeling file, - for stdin")->required();
  verify->add_option("--format", vformat, "auto|grid|record")
      ->check(CLI::IsMember({"auto", "grid", "record"}));
  verify->callback([&] { rc = cmd_verify(vfile, vformat); });

  auto* certify = app.add_subcommand("certify", "replay the lower-bound accounting on a labeling file");
  std::string yfile, yformat = "auto";
  certify->add_option("file", yfile, "labeling file, - for stdin")->required();
  certify->add_option("--format", yformat, "auto|grid|record")
      ->check(CLI::IsMember({"auto", "grid", "record"}));
  certify->callback([&] { rc = cmd_certify(yfile, yformat); });

  auto* table = app.add_subcommand("table", "per-size comparison rows");
  TableArgs targs;
  int tn = 0, tm = 0;
  auto* opt_tn = table->add_option("--n", tn, "single row count");
  auto* opt_tnr = table->add_option("--n-range", targs.n_range, "inclusive A..B");
  auto* opt_tm = table->add_option("--m", tm, "single col count");
  auto* opt_tmr = table->add_option("--m-range", targs.m_range, "inclusive A..B");
  opt_tn->excludes(opt_tnr);
  opt_tm->excludes(opt_tmr);
  table->add_option("--columns", targs.columns, "formula,construction,dp,bound")
      ->delimiter(',')
      ->check(CLI::IsMember({"formula", "construction", "dp", "bound"}));
  table->add_option("--format", targs.format, "text|jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  table->add_flag("--stable", targs.stable, "suppress timing for byte-stable output");
  table->add_option("--caps", targs.caps_profile, "size-cap profile")
      ->check(CLI::IsMember({"default", "small", "large"}));
  table->add_option("--threads", targs.threads, "seam worker threads")
      ->check(CLI::Range(1, 64));
  table->callback([&] {
    if (opt_tn->count()) targs.n = tn;
    if (opt_tm->count()) targs.m = tm;
    rc = cmd_table(targs);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFormat;
  } catch (const SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return rc;
}
