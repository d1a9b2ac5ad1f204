#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oird/certificates.hpp"
#include "oird/codec.hpp"
#include "oird/constructions.hpp"
#include "oird/cylinder.hpp"
#include "oird/formulas.hpp"
#include "oird/solver.hpp"

namespace py = pybind11;
using namespace oird;

namespace {

Labeling to_labeling(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("labels: no rows");
  CylinderSpec spec(static_cast<int>(rows.size()),
                    static_cast<int>(rows[0].size()));
  Labeling f(spec);
  for (int i = 0; i < spec.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != spec.cols)
      throw std::invalid_argument("labels: ragged rows");
    for (int j = 0; j < spec.cols; ++j) {
      int v = rows[i][j];
      if (v < 0 || v > 2)
        throw std::invalid_argument("labels: entries must be 0, 1 or 2");
      f.set(i, j, static_cast<std::uint8_t>(v));
    }
  }
  return f;
}

std::vector<std::vector<int>> from_labeling(const Labeling& f) {
  std::vector<std::vector<int>> rows(f.spec.rows,
                                     std::vector<int>(f.spec.cols));
  for (int i = 0; i < f.spec.rows; ++i)
    for (int j = 0; j < f.spec.cols; ++j) rows[i][j] = f.at(i, j);
  return rows;
}

py::dict formula_dict(const FormulaValue& v, const std::string& family) {
  py::dict d;
  d["value"] = v.value;
  d["kind"] = formula_kind_name(v.kind);
  d["case"] = v.case_tag;
  d["family"] = family;
  d["integral"] = v.integral;
  return d;
}

py::object exact_formula(int n, int m) {
  if (n == 1) return formula_dict(gamma_p1cm(m), "p1cm");
  if (n == 2) return formula_dict(gamma_p2cm(m), "p2cm");
  if (n == 3) return formula_dict(gamma_p3cm(m), "p3cm");
  if (m == 3) return formula_dict(gamma_pnc3(n), "pnc3");
  return py::none();
}

py::dict partition_dict(const BagPartition& p) {
  py::dict d;
  d["algorithm"] = p.algorithm;
  py::list bags;
  for (const Bag& b : p.bags) {
    py::dict bd;
    bd["category"] = bag_category_name(b.category);
    bd["members"] = b.members;
    bd["sum"] = b.sum;
    bags.append(bd);
  }
  d["bags"] = bags;
  d["t0"] = p.t0;
  d["t1"] = p.t1;
  d["t2"] = p.t2;
  d["covered"] = p.covered;
  d["bounds_ok"] = p.bounds_ok;
  d["strict_ok"] = p.strict_ok;
  d["property_b"] = p.property_b;
  d["bound"] = p.bound;
  return d;
}

Family family_from_name(const std::string& name) {
  if (name == "p2cm") return Family::P2Cm;
  if (name == "p3cm") return Family::P3Cm;
  if (name == "pnc3") return Family::PnC3;
  throw std::invalid_argument("family: expected p2cm, p3cm or pnc3");
}

}  // namespace

PYBIND11_MODULE(_oird, mod) {
  mod.doc() =
      "outer independent Roman domination numbers, constructions and "
      "certificates on cylinder graphs";

  py::register_exception<SizeCapError>(mod, "SizeCapError", PyExc_RuntimeError);
  py::register_exception<FormatError>(mod, "FormatError", PyExc_ValueError);

  mod.def(
      "validate",
      [](const std::vector<std::vector<int>>& labels) {
        ValidationReport rep = validate(to_labeling(labels));
        py::dict d;
        d["valid"] = rep.is_valid;
        py::list viols;
        for (const Violation& v : rep.violations)
          viols.append(
              py::make_tuple(violation_kind_name(v.kind), v.row, v.col));
        d["violations"] = viols;
        return d;
      },
      py::arg("labels"),
      "check the domination and outer independence conditions");

  mod.def(
      "weight",
      [](const std::vector<std::vector<int>>& labels) {
        return to_labeling(labels).weight();
      },
      py::arg("labels"), "sum of all labels");

  mod.def(
      "construct",
      [](int n, int m) { return from_labeling(construct_any(n, m)); },
      py::arg("n"), py::arg("m"),
      "explicit labeling whose weight matches the closed form");

  mod.def("formula", &exact_formula, py::arg("n"), py::arg("m"),
          "closed-form optimum for the exactly solved families, else None");

  mod.def(
      "upper_bound_case",
      [](int n, int m) { return formula_dict(upper_pncm_case(n, m), "pncm"); },
      py::arg("n"), py::arg("m"),
      "per-residue construction weight, an upper bound (n, m >= 4)");

  mod.def(
      "upper_bound",
      [](int n, int m) {
        return formula_dict(upper_pncm_global(n, m), "bound");
      },
      py::arg("n"), py::arg("m"),
      "floor((5mn+5n+2m)/8) upper bound (n, m >= 4)");

  mod.def(
      "gamma",
      [](int n, int m) {
        py::object f = exact_formula(n, m);
        if (!f.is_none()) return f["value"].cast<std::int64_t>();
        return solve_dp(CylinderSpec(n, m)).gamma;
      },
      py::arg("n"), py::arg("m"),
      "exact optimum: closed form when known, otherwise the DP solver");

  mod.def(
      "solve",
      [](int n, int m, const std::string& method, bool witness, int threads) {
        CylinderSpec spec(n, m);
        SolveOutcome out;
        if (method == "brute")
          out = brute_force(spec, {}, witness);
        else
          out = solve_dp(spec, {}, DpOrientation::Auto, witness, threads);
        py::dict d;
        d["gamma"] = out.gamma;
        d["method"] = solve_method_name(out.method);
        d["witness"] =
            out.witness ? py::cast(from_labeling(*out.witness)) : py::none();
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("method") = "dp",
      py::arg("witness") = true, py::arg("threads") = 1,
      "exact solve with an optional optimal labeling");

  mod.def(
      "certify",
      [](const std::vector<std::vector<int>>& labels) {
        Labeling f = to_labeling(labels);
        if (f.spec.rows == 2) return partition_dict(partition_algorithm1(f));
        if (f.spec.rows == 3) return partition_dict(partition_algorithm2(f));
        throw std::invalid_argument("certify: needs 2 or 3 rows");
      },
      py::arg("labels"), "replay the column bagging lower bound");

  mod.def(
      "check_properties",
      [](const std::vector<std::vector<int>>& labels,
         const std::string& family) {
        auto checks =
            check_proof_properties(to_labeling(labels), family_from_name(family));
        py::list out;
        for (const PropertyCheck& c : checks) {
          py::dict d;
          d["name"] = c.name;
          d["mandatory"] = c.mandatory;
          d["pass"] = c.pass;
          d["failures"] = c.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("labels"), py::arg("family"),
      "structural slice-sum facts for p2cm, p3cm or pnc3");

  mod.def(
      "encode_grid",
      [](const std::vector<std::vector<int>>& labels) {
        return encode_grid(to_labeling(labels));
      },
      py::arg("labels"), "grid text, one row per line");

  mod.def(
      "decode_grid",
      [](const std::string& text) { return from_labeling(decode_grid(text)); },
      py::arg("text"), "parse grid text into a list of rows");
}
