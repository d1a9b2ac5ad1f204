#pragma once
// Explicit OIRDF labelings matching the closed-form weights in formulas.hpp.
//
// Each builder tiles a small periodic block over the cylinder and then
// applies an ordered list of coordinate overrides (last write wins) to fix
// up the residue tail where the period does not divide the dimension.

#include <functional>
#include <vector>

#include "oird/cylinder.hpp"

namespace oird {

struct PatternOverride {
  std::function<bool(int i, int j)> applies;  // bound to a concrete (n,m)
  std::uint8_t value;
};

struct PatternBlock {
  enum class Tiling { Cols, Rows, Both };

  std::vector<std::vector<std::uint8_t>> block;
  Tiling tiling = Tiling::Both;
  std::vector<PatternOverride> overrides;

  // Tiles the block (row index mod height, column index mod width), then
  // applies the overrides in order.
  Labeling realize(const CylinderSpec& spec) const;
};

Labeling construct_p1cm(int m);              // one row, m >= 3
Labeling construct_p2cm(int m);              // two rows, m >= 3
Labeling construct_p3cm(int m);              // three rows, m >= 3
Labeling construct_pnc3(int n);              // three columns, n >= 3
Labeling construct_pncm(int n, int m);       // n,m >= 4, weight = upper_pncm_case

// Picks the family covering (n,m): rows 1..3, then cols == 3, then the
// general upper-bound construction.
Labeling construct_any(int n, int m);

}  // namespace oird
