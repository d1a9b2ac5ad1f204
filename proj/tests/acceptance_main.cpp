// Acceptance gate.  Each numbered criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.  Budgets are part
// of the criteria and are enforced.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oird/certificates.hpp"
#include "oird/constructions.hpp"
#include "oird/formulas.hpp"
#include "oird/solver.hpp"
#include "sampling.hpp"

using namespace oird;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& msg) {
  if (o.ok) {
    o.ok = false;
    o.detail = msg;
  }
}

std::string at(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

bool witness_ok(const SolveOutcome& out, const CylinderSpec& spec) {
  if (!out.witness) return false;
  const Labeling& w = *out.witness;
  return w.spec == spec && validate(w).is_valid && w.weight() == out.gamma;
}

bool mandatory_pass(const std::vector<PropertyCheck>& checks) {
  for (const PropertyCheck& c : checks)
    if (c.mandatory && !c.pass) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  for (int m = 3; m <= 200 && o.ok; ++m) {
    FormulaValue fv = gamma_p1cm(m);
    SolveOutcome out = solve_dp(CylinderSpec(1, m), {}, DpOrientation::Auto, false);
    if (out.gamma != fv.value)
      fail(o, "dp " + std::to_string(out.gamma) + " != formula " +
                  std::to_string(fv.value) + " at m=" + std::to_string(m));
    Labeling c = construct_p1cm(m);
    if (!validate(c).is_valid || c.weight() != fv.value)
      fail(o, "construction off at m=" + std::to_string(m));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int m = 3; m <= 200 && o.ok; ++m) {
    FormulaValue fv = gamma_p2cm(m);
    CylinderSpec spec(2, m);
    SolveOutcome out = solve_dp(spec, {}, DpOrientation::Auto, true);
    if (out.gamma != fv.value)
      fail(o, "dp != formula at m=" + std::to_string(m));
    Labeling c = construct_p2cm(m);
    if (!validate(c).is_valid || c.weight() != fv.value)
      fail(o, "construction off at m=" + std::to_string(m));
    if (!witness_ok(out, spec)) fail(o, "bad witness at m=" + std::to_string(m));
    if (o.ok) {
      BagPartition bp = partition_algorithm1(*out.witness);
      if (!bp.covered || !bp.bounds_ok || bp.bound > out.gamma)
        fail(o, "bagging bound " + std::to_string(bp.bound) + " vs gamma " +
                    std::to_string(out.gamma) + " at m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int m = 3; m <= 200 && o.ok; ++m) {
    FormulaValue fv = gamma_p3cm(m);
    CylinderSpec spec(3, m);
    SolveOutcome out = solve_dp(spec, {}, DpOrientation::Auto, true);
    if (out.gamma != fv.value)
      fail(o, "dp != formula at m=" + std::to_string(m));
    Labeling c = construct_p3cm(m);
    if (!validate(c).is_valid || c.weight() != fv.value)
      fail(o, "construction off at m=" + std::to_string(m));
    if (!witness_ok(out, spec)) fail(o, "bad witness at m=" + std::to_string(m));
    if (o.ok && !mandatory_pass(check_proof_properties(*out.witness, Family::P3Cm)))
      fail(o, "slice property failed on witness at m=" + std::to_string(m));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 3; n <= 200 && o.ok; ++n) {
    FormulaValue fv = gamma_pnc3(n);
    CylinderSpec spec(n, 3);
    SolveOutcome out = solve_dp(spec, {}, DpOrientation::Auto, true);
    if (out.gamma != fv.value)
      fail(o, "dp != formula at n=" + std::to_string(n));
    Labeling c = construct_pnc3(n);
    if (!validate(c).is_valid || c.weight() != fv.value)
      fail(o, "construction off at n=" + std::to_string(n));
    if (!witness_ok(out, spec)) fail(o, "bad witness at n=" + std::to_string(n));
    if (o.ok && !mandatory_pass(check_proof_properties(*out.witness, Family::PnC3)))
      fail(o, "slice property failed on witness at n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int n = 4; n <= 200 && o.ok; ++n) {
    for (int m = 4; m <= 200; ++m) {
      Labeling c = construct_pncm(n, m);
      std::int64_t w = c.weight();
      if (!validate(c).is_valid) {
        fail(o, "invalid construction at " + at(n, m));
        break;
      }
      if (w != upper_pncm_case(n, m).value) {
        fail(o, "weight != case bound at " + at(n, m));
        break;
      }
      if (w > upper_pncm_global(n, m).value) {
        fail(o, "weight exceeds global bound at " + at(n, m));
        break;
      }
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int n = 1; n <= 4 && o.ok; ++n) {
    for (int m = 3; static_cast<std::int64_t>(n) * m <= 12 && o.ok; ++m) {
      CylinderSpec spec(n, m);
      SolveOutcome ref = brute_force(spec);
      if (!witness_ok(ref, spec)) fail(o, "bad brute witness at " + at(n, m));
      SolveOutcome cols = solve_dp(spec, {}, DpOrientation::PathLayers, true);
      if (cols.gamma != ref.gamma || !witness_ok(cols, spec))
        fail(o, "column sweep disagrees at " + at(n, m));
      if (m <= 8) {
        SolveOutcome rows = solve_dp(spec, {}, DpOrientation::CycleLayers, true);
        if (rows.gamma != ref.gamma || !witness_ok(rows, spec))
          fail(o, "row sweep disagrees at " + at(n, m));
      }
    }
  }
  if (o.ok) {
    SolverCaps caps;
    caps.brute_max_cells = 16;
    CylinderSpec spec(4, 4);
    SolveOutcome ref = brute_force(spec, caps);
    SolveOutcome dp = solve_dp(spec, caps, DpOrientation::Auto, true);
    if (ref.gamma != dp.gamma || !witness_ok(ref, spec) || !witness_ok(dp, spec))
      fail(o, "(4,4) full enumeration disagrees with dp");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::pair<int, int>> todo;
  for (int n = 4; n <= 6; ++n)
    for (int m = 4; m <= 32; ++m) todo.emplace_back(n, m);
  for (int m = 4; m <= 6; ++m)
    for (int n = 7; n <= 32; ++n) todo.emplace_back(n, m);
  for (auto [n, m] : todo) {
    CylinderSpec spec(n, m);
    SolveOutcome out = solve_dp(spec, {}, DpOrientation::Auto, true, 2);
    if (!witness_ok(out, spec)) {
      fail(o, "bad witness at " + at(n, m));
      break;
    }
    Labeling c = construct_pncm(n, m);
    std::int64_t w = c.weight();
    if (!validate(c).is_valid || w != upper_pncm_case(n, m).value) {
      fail(o, "construction off at " + at(n, m));
      break;
    }
    if (out.gamma > w || w > upper_pncm_global(n, m).value) {
      fail(o, "sandwich violated at " + at(n, m) + ": gamma " +
                  std::to_string(out.gamma) + ", construction " +
                  std::to_string(w));
      break;
    }
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<CylinderSpec> reps = {
      CylinderSpec(1, 12), CylinderSpec(2, 9), CylinderSpec(3, 8),
      CylinderSpec(9, 3), CylinderSpec(4, 5)};
  for (const CylinderSpec& spec : reps) {
    std::mt19937_64 rng(9000u + 97u * spec.rows + spec.cols);
    for (int trial = 0; trial < 100000; ++trial) {
      Labeling f = testutil::random_labeling(rng, spec.rows, spec.cols);
      bool got = validate(f).is_valid;
      if (got != testutil::naive_valid(f)) {
        fail(o, "validator disagrees with re-check on " +
                    at(spec.rows, spec.cols));
        return o;
      }
      int shift = static_cast<int>(rng() % spec.cols);
      if (validate(rotate_cols(f, shift)).is_valid != got ||
          validate(reverse_rows(f)).is_valid != got) {
        fail(o, "validity not invariant under symmetry on " +
                    at(spec.rows, spec.cols));
        return o;
      }
    }
  }
  return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(OIRD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[1 << 16];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

Outcome criterion9() {
  Outcome o;
  const std::vector<std::string> configs = {
      "table --n 1 --m-range 3..200 --stable",
      "table --n 2 --m-range 3..200 --stable",
      "table --n 3 --m-range 3..200 --stable",
      "table --n-range 3..200 --m 3 --stable",
      "table --n-range 4..200 --m-range 4..200 "
      "--columns formula,construction,bound --stable",
  };
  for (const std::string& cfg : configs) {
    auto [code1, out1] = run_cli(cfg);
    auto [code2, out2] = run_cli(cfg);
    if (code1 != 0 || code2 != 0) {
      fail(o, "nonzero exit for: " + cfg);
      break;
    }
    if (out1.empty() || out1 != out2) {
      fail(o, "output differs between runs for: " + cfg);
      break;
    }
  }
  return o;
}

struct Criterion {
  int id;
  std::string label;
  double budget_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "one-row sweep m=3..200: dp = formula = construction", 10, criterion1},
      {2, "two-row sweep m=3..200: dp = formula = construction, bagging bound holds on witnesses", 30, criterion2},
      {3, "three-row sweep m=3..200: dp = formula = construction, slice properties on witnesses", 60, criterion3},
      {4, "three-column sweep n=3..200: dp = formula = construction, slice properties on witnesses", 60, criterion4},
      {5, "construction table 4<=n,m<=200: valid, weight = case bound <= global bound", 120, criterion5},
      {6, "oracle equivalence: brute = dp (both sweeps) for n*m<=12 and (4,4)", 600, criterion6},
      {7, "sandwich 4<=min(n,m)<=6, other <=32: dp <= construction <= global bound", 300, criterion7},
      {8, "validator suite: 10^5 random labelings per family, naive re-check and symmetry invariance", 60, criterion8},
      {9, "determinism: table --stable byte-identical across repeated runs", 600, criterion9},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs > c.budget_s)
      fail(o, "exceeded " + std::to_string(static_cast<int>(c.budget_s)) +
                  "s budget");
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": "
         << c.label << " [" << std::fixed;
    line.precision(1);
    line << secs << "s]";
    if (!o.ok) line << " | " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
