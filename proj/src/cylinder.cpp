#include "oird/cylinder.hpp"

namespace oird {

std::vector<std::pair<int, int>> neighbors(const CylinderSpec& spec, int i, int j) {
  spec.check();
  if (i < 0 || i >= spec.rows || j < 0 || j >= spec.cols)
    throw std::invalid_argument("neighbors: coordinate out of range");
  std::vector<std::pair<int, int>> out;
  out.reserve(4);
  if (i > 0) out.emplace_back(i - 1, j);
  if (i + 1 < spec.rows) out.emplace_back(i + 1, j);
  int left = (j + spec.cols - 1) % spec.cols;
  int right = (j + 1) % spec.cols;
  // m >= 3 keeps the two cyclic neighbors distinct.
  out.emplace_back(i, left);
  out.emplace_back(i, right);
  return out;
}

std::int64_t Labeling::weight() const {
  std::int64_t w = 0;
  for (std::uint8_t v : values) w += v;
  return w;
}

ValidationReport validate(const Labeling& f) {
  f.spec.check();
  const int n = f.spec.rows, m = f.spec.cols;
  if (f.values.size() != static_cast<std::size_t>(f.spec.cell_count()))
    throw std::invalid_argument("validate: value array does not match spec");
  for (std::uint8_t v : f.values)
    if (v > 2) throw std::invalid_argument("validate: label out of {0,1,2}");

  ValidationReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (f.at(i, j) != 0) continue;
      bool has_two = false;
      bool has_zero = false;
      auto look = [&](int r, int c) {
        std::uint8_t v = f.at(r, c);
        if (v == 2) has_two = true;
        if (v == 0) has_zero = true;
      };
      if (i > 0) look(i - 1, j);
      if (i + 1 < n) look(i + 1, j);
      look(i, (j + m - 1) % m);
      look(i, (j + 1) % m);
      if (!has_two)
        report.violations.push_back({ViolationKind::UndominatedZero, i, j});
      if (has_zero)
        report.violations.push_back({ViolationKind::AdjacentZeros, i, j});
    }
  }
  report.is_valid = report.violations.empty();
  return report;
}

Labeling rotate_cols(const Labeling& f, int shift) {
  const int n = f.spec.rows, m = f.spec.cols;
  shift = ((shift % m) + m) % m;
  Labeling g(f.spec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) g.set(i, (j + shift) % m, f.at(i, j));
  return g;
}

Labeling reverse_rows(const Labeling& f) {
  const int n = f.spec.rows, m = f.spec.cols;
  Labeling g(f.spec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) g.set(n - 1 - i, j, f.at(i, j));
  return g;
}

std::string violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::UndominatedZero: return "undominated-zero";
    case ViolationKind::AdjacentZeros: return "adjacent-zeros";
  }
  return "?";
}

}  // namespace oird
