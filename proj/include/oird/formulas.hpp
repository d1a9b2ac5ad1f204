#pragma once
// Closed-form values and bounds for the outer independent Roman domination
// number of cylinder graphs.
//
// Exact families: one row (a plain cycle), two rows, three rows, and
// three-column cylinders.  For rows >= 4 and cols >= 4 only an upper bound
// is known; `upper_pncm_case` is the exact weight of the explicit
// construction for that size (a per-residue refinement of the global bound
// (5mn+5n+2m)/8).

#include <cstdint>
#include <string>

namespace oird {

enum class FormulaKind { Exact, UpperBound };

struct FormulaValue {
  std::int64_t value = 0;
  FormulaKind kind = FormulaKind::Exact;
  std::string case_tag;   // residue classes that selected the branch
  bool integral = true;   // false when the reported value was floored
};

FormulaValue gamma_p1cm(std::int64_t m);  // m >= 3
FormulaValue gamma_p2cm(std::int64_t m);  // m >= 3
FormulaValue gamma_p3cm(std::int64_t m);  // m >= 3
FormulaValue gamma_pnc3(std::int64_t n);  // n >= 3

FormulaValue upper_pncm_case(std::int64_t n, std::int64_t m);    // n,m >= 4
FormulaValue upper_pncm_global(std::int64_t n, std::int64_t m);  // n,m >= 4

std::string formula_kind_name(FormulaKind k);

}  // namespace oird
