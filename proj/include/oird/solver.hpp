#pragma once
// Exact computation of the outer independent Roman domination number.
//
// Two independent engines:
//   * brute_force: depth-first enumeration of all labelings, for tiny grids.
//   * solve_dp: a layered profile DP.  A layer is one column (a path of
//     `rows` cells, sweeping around the cycle) or one row (a cycle of `cols`
//     cells, sweeping along the path).  The column sweep has to close the
//     cycle, which is handled by enumerating every labeling of a fixed seam
//     column and charging the wrap-around constraints to it; the row sweep
//     needs no seam since the path ends are free.
//
// Both refuse instances beyond their configured caps instead of guessing.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "oird/cylinder.hpp"

namespace oird {

class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverCaps {
  std::int64_t brute_max_cells = 14;  // brute force: rows*cols limit
  int cycle_sweep_width_max = 6;      // column layers (seam orientation): rows limit
  int path_sweep_width_max = 8;       // row layers: cols limit
  int sweep_length_max = 10000;       // layers along the sweep direction
};

enum class SolveMethod { Brute, DpPathLayers, DpCycleLayers };
enum class DpOrientation { Auto, PathLayers, CycleLayers };

struct SolveStats {
  std::uint64_t states_explored = 0;
  std::uint64_t transitions = 0;
  std::uint64_t seams = 0;
  double elapsed_ms = 0.0;
};

struct SolveOutcome {
  std::int64_t gamma = 0;
  SolveMethod method = SolveMethod::Brute;
  std::optional<Labeling> witness;
  SolveStats stats;
};

// Enumerates every labeling (digit order 0,1,2, row-major cell order) with
// feasibility pruning; returns the first optimum in enumeration order.
SolveOutcome brute_force(const CylinderSpec& spec, const SolverCaps& caps = {},
                         bool want_witness = true);

// Profile DP.  Auto orientation picks the smaller in-cap layer width.
// `threads` > 1 distributes seam columns; results are reduced
// deterministically so the outcome never depends on scheduling.
SolveOutcome solve_dp(const CylinderSpec& spec, const SolverCaps& caps = {},
                      DpOrientation orientation = DpOrientation::Auto,
                      bool want_witness = true, int threads = 1);

// Witness with a required optimum value; throws std::logic_error if the
// solver disagrees with `expected_gamma`.
Labeling extract_witness(const CylinderSpec& spec, std::int64_t expected_gamma,
                         const SolverCaps& caps = {});

std::string solve_method_name(SolveMethod m);

}  // namespace oird
