#pragma once
// Test-side helpers: an independent per-vertex validity check written
// straight from the two defining conditions, plus random labeling samplers.

#include <cstdint>
#include <random>

#include "oird/cylinder.hpp"

namespace testutil {

// Re-derives the neighbor arithmetic instead of calling oird::validate, so
// the two implementations can check each other.
inline bool naive_valid(const oird::Labeling& f) {
  const int n = f.spec.rows, m = f.spec.cols;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (f.at(i, j) != 0) continue;
      const int l = (j + m - 1) % m;
      const int r = (j + 1) % m;
      bool has_two = false;
      bool zero_adjacent = false;
      auto peek = [&](int a, int b) {
        has_two = has_two || f.at(a, b) == 2;
        zero_adjacent = zero_adjacent || f.at(a, b) == 0;
      };
      if (i > 0) peek(i - 1, j);
      if (i + 1 < n) peek(i + 1, j);
      peek(i, l);
      peek(i, r);
      if (!has_two || zero_adjacent) return false;
    }
  }
  return true;
}

inline oird::Labeling random_labeling(std::mt19937_64& rng, int n, int m) {
  oird::Labeling f(oird::CylinderSpec(n, m));
  std::uniform_int_distribution<int> digit(0, 2);
  for (auto& v : f.values) v = static_cast<std::uint8_t>(digit(rng));
  return f;
}

// Random valid OIRDF: sample uniformly, then one row-major repair pass that
// bumps every still-violating 0 to 1.  Bumps never remove a 2 and never
// create a 0, so each cell's verdict at visit time is final.
inline oird::Labeling repaired_labeling(std::mt19937_64& rng, int n, int m) {
  oird::Labeling f = random_labeling(rng, n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (f.at(i, j) != 0) continue;
      bool has_two = false;
      bool zero_adjacent = false;
      for (auto [a, b] : oird::neighbors(f.spec, i, j)) {
        has_two = has_two || f.at(a, b) == 2;
        zero_adjacent = zero_adjacent || f.at(a, b) == 0;
      }
      if (!has_two || zero_adjacent) f.set(i, j, 1);
    }
  }
  return f;
}

// Walks all 3^(nm) labelings in row-major digit order; returns false when
// the odometer wraps.
inline bool next_labeling(oird::Labeling& f) {
  for (std::size_t k = f.values.size(); k-- > 0;) {
    if (f.values[k] < 2) {
      ++f.values[k];
      return true;
    }
    f.values[k] = 0;
  }
  return false;
}

}  // namespace testutil
