#pragma once
// Cylinder graphs P_n x C_m and outer independent Roman dominating
// functions on them.
//
// Vertices are laid out on a grid with `rows` path layers and `cols`
// cyclic columns: (i,j) is adjacent to (i-1,j), (i+1,j) when those rows
// exist, and to (i,(j-1) mod m), (i,(j+1) mod m) always.
//
// A labeling f : V -> {0,1,2} is valid when
//   * every vertex with f(v)=0 has a neighbor with label 2, and
//   * no two vertices labeled 0 are adjacent.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oird {

struct CylinderSpec {
  int rows = 1;  // n >= 1, the path dimension
  int cols = 3;  // m >= 3, the cycle dimension

  CylinderSpec() = default;
  CylinderSpec(int n, int m) : rows(n), cols(m) { check(); }

  void check() const {
    if (rows < 1) throw std::invalid_argument("cylinder: rows must be >= 1");
    if (cols < 3) throw std::invalid_argument("cylinder: cols must be >= 3");
    if (rows > 1000000 || cols > 1000000)
      throw std::invalid_argument("cylinder: dimension exceeds 10^6");
  }

  std::int64_t cell_count() const {
    return static_cast<std::int64_t>(rows) * cols;
  }

  bool operator==(const CylinderSpec&) const = default;
};

// Neighbor coordinates of (i,j), deterministic order: up, down, left, right
// (the cyclic pair is always two distinct vertices since m >= 3).
std::vector<std::pair<int, int>> neighbors(const CylinderSpec& spec, int i, int j);

struct Labeling {
  CylinderSpec spec;
  std::vector<std::uint8_t> values;  // row-major, entries in {0,1,2}

  Labeling() = default;
  Labeling(const CylinderSpec& s, std::uint8_t fill = 0)
      : spec(s), values(static_cast<std::size_t>(s.cell_count()), fill) {}

  std::uint8_t at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * spec.cols + j];
  }
  void set(int i, int j, std::uint8_t v) {
    values[static_cast<std::size_t>(i) * spec.cols + j] = v;
  }

  std::int64_t weight() const;

  bool operator==(const Labeling&) const = default;
};

enum class ViolationKind { UndominatedZero, AdjacentZeros };

struct Violation {
  ViolationKind kind;
  int row = 0;
  int col = 0;
};

struct ValidationReport {
  bool is_valid = true;
  std::vector<Violation> violations;  // row-major vertex order, each vertex
                                      // listed at most once per condition
};

// Checks the two defining conditions for every vertex.
ValidationReport validate(const Labeling& f);

// Graph automorphisms, useful for invariance checks.
Labeling rotate_cols(const Labeling& f, int shift);
Labeling reverse_rows(const Labeling& f);

std::string violation_kind_name(ViolationKind k);

}  // namespace oird
