#include "oird/formulas.hpp"

#include <stdexcept>

namespace oird {

namespace {

void check_dim(std::int64_t v, std::int64_t lo, const char* what) {
  if (v < lo) throw std::invalid_argument(std::string(what) + ": below domain");
  if (v > 1000000) throw std::invalid_argument(std::string(what) + ": exceeds 10^6");
}

std::int64_t exact_div8(std::int64_t num) {
  if (num % 8 != 0) throw std::logic_error("case weight not divisible by 8");
  return num / 8;
}

}  // namespace

FormulaValue gamma_p1cm(std::int64_t m) {
  check_dim(m, 3, "gamma_p1cm: m");
  std::int64_t t = m % 4;
  return {3 * (m / 4) + t, FormulaKind::Exact, "m%4=" + std::to_string(t), true};
}

FormulaValue gamma_p2cm(std::int64_t m) {
  check_dim(m, 3, "gamma_p2cm: m");
  std::int64_t r = m % 6;
  std::int64_t v = (4 * m + 2) / 3;  // ceil(4m/3)
  if (r == 3 || r == 5) v += 1;
  return {v, FormulaKind::Exact, "m%6=" + std::to_string(r), true};
}

FormulaValue gamma_p3cm(std::int64_t m) {
  check_dim(m, 3, "gamma_p3cm: m");
  std::int64_t r = m % 2;
  return {2 * m + r, FormulaKind::Exact, "m%2=" + std::to_string(r), true};
}

FormulaValue gamma_pnc3(std::int64_t n) {
  check_dim(n, 3, "gamma_pnc3: n");
  return {(7 * n + 2) / 3, FormulaKind::Exact, "n%3=" + std::to_string(n % 3), true};
}

FormulaValue upper_pncm_case(std::int64_t n, std::int64_t m) {
  check_dim(n, 4, "upper_pncm_case: n");
  check_dim(m, 4, "upper_pncm_case: m");
  std::int64_t mr = m % 4;
  bool n_even_class = (n % 4 == 0) || (n % 4 == 2);
  std::int64_t num = 0;
  switch (mr) {
    case 0: num = n_even_class ? 5 * m * n + 2 * m : 5 * m * n + m; break;
    case 1: num = n_even_class ? 5 * m * n + 3 * n + 2 * m - 2 : 5 * m * n + 3 * n + m - 1; break;
    case 2: num = n_even_class ? 5 * m * n + 2 * n + 2 * m - 12 : 5 * m * n + 2 * n + m + 2; break;
    case 3: num = n_even_class ? 5 * m * n + 5 * n + 2 * m - 14 : 5 * m * n + 5 * n + m + 1; break;
  }
  std::string tag = "m%4=" + std::to_string(mr) + ",n%4=" + std::to_string(n % 4);
  return {exact_div8(num), FormulaKind::UpperBound, tag, true};
}

FormulaValue upper_pncm_global(std::int64_t n, std::int64_t m) {
  check_dim(n, 4, "upper_pncm_global: n");
  check_dim(m, 4, "upper_pncm_global: m");
  std::int64_t num = 5 * m * n + 5 * n + 2 * m;
  return {num / 8, FormulaKind::UpperBound, "", num % 8 == 0};
}

std::string formula_kind_name(FormulaKind k) {
  return k == FormulaKind::Exact ? "exact" : "upper-bound";
}

}  // namespace oird
