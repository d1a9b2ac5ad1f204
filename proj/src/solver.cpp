#include "oird/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>
#include <vector>

namespace oird {
namespace {

constexpr std::int32_t kInf = 1 << 29;

// ---------------------------------------------------------------------------
// Layer labels.
//
// A layer is one column (path topology) or one row (cycle topology) of the
// cylinder.  A label assigns {0,1,2} to the `width` cells of a layer with no
// two adjacent 0s inside the layer.  A DP state is (label, pend) where pend
// marks the 0-cells that still need a 2 in the *next* layer: a 0 is excused
// as soon as a 2 sits beside it inside its own layer or in the previous one.
// pend is always a subset of pp = zeros without an in-layer 2 neighbor, so
// states are indexed per label by the pend bits compressed onto pp.
// ---------------------------------------------------------------------------

std::uint32_t extract_bits(std::uint32_t val, std::uint32_t mask) {
  std::uint32_t res = 0;
  for (int k = 0; mask; mask &= mask - 1, ++k)
    if (val & (mask & (~mask + 1))) res |= 1u << k;
  return res;
}

std::uint32_t deposit_bits(std::uint32_t val, std::uint32_t mask) {
  std::uint32_t res = 0;
  for (int k = 0; mask; mask &= mask - 1, ++k)
    if (val & (1u << k)) res |= mask & (~mask + 1);
  return res;
}

struct LabelSet {
  int width = 0;
  bool cyclic = false;
  std::vector<std::uint16_t> zeros, twos, pp;
  std::vector<std::int16_t> weight;
  std::vector<int> ppc;
  std::vector<std::int32_t> base;       // first state id of each label
  std::int32_t state_count = 0;
  std::vector<std::uint16_t> state_pend;  // pend mask per state
  std::vector<std::int32_t> state_label;  // owning label per state
  // transitions, CSR by source label; dest pend is independent of the
  // source pend so the destination state id is precomputed per edge
  std::vector<std::size_t> estart;
  std::vector<std::int32_t> e_dest;
  std::vector<std::uint16_t> e_treq;   // twos of the dest label
  std::vector<std::int16_t> e_w;       // weight of the dest label

  int label_count() const { return static_cast<int>(zeros.size()); }
};

LabelSet build_labels(int width, bool cyclic) {
  LabelSet ls;
  ls.width = width;
  ls.cyclic = cyclic;
  const std::uint32_t wm = (1u << width) - 1;
  std::int64_t total = 1;
  for (int k = 0; k < width; ++k) total *= 3;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    std::uint32_t z = 0, t = 0;
    for (int k = width - 1; k >= 0; --k) {
      int digit = static_cast<int>(c % 3);
      c /= 3;
      if (digit == 0) z |= 1u << k;
      if (digit == 2) t |= 1u << k;
    }
    if (z & (z << 1) & wm) continue;
    if (cyclic && width >= 2 && (z & 1) && (z >> (width - 1) & 1)) continue;
    std::uint32_t dom2 = ((t << 1) | (t >> 1)) & wm;
    if (cyclic && width >= 2) {
      if (t & 1) dom2 |= 1u << (width - 1);
      if (t >> (width - 1) & 1) dom2 |= 1u;
    }
    std::uint32_t ones = ~(z | t) & wm;
    ls.zeros.push_back(static_cast<std::uint16_t>(z));
    ls.twos.push_back(static_cast<std::uint16_t>(t));
    ls.pp.push_back(static_cast<std::uint16_t>(z & ~dom2));
    ls.weight.push_back(static_cast<std::int16_t>(2 * std::popcount(t) + std::popcount(ones)));
  }
  const int L = ls.label_count();
  ls.base.resize(L);
  for (int a = 0; a < L; ++a) {
    ls.ppc.push_back(std::popcount(static_cast<std::uint32_t>(ls.pp[a])));
    ls.base[a] = ls.state_count;
    ls.state_count += 1 << ls.ppc[a];
  }
  ls.state_pend.resize(ls.state_count);
  ls.state_label.resize(ls.state_count);
  for (int a = 0; a < L; ++a) {
    for (int c = 0; c < (1 << ls.ppc[a]); ++c) {
      ls.state_pend[ls.base[a] + c] =
          static_cast<std::uint16_t>(deposit_bits(c, ls.pp[a]));
      ls.state_label[ls.base[a] + c] = a;
    }
  }
  ls.estart.resize(L + 1, 0);
  for (int a = 0; a < L; ++a) {
    ls.estart[a] = ls.e_dest.size();
    for (int b = 0; b < L; ++b) {
      if (ls.zeros[a] & ls.zeros[b]) continue;
      std::uint32_t dest_pend = ls.pp[b] & ~ls.twos[a];
      ls.e_dest.push_back(ls.base[b] +
                          static_cast<std::int32_t>(extract_bits(dest_pend, ls.pp[b])));
      ls.e_treq.push_back(ls.twos[b]);
      ls.e_w.push_back(ls.weight[b]);
    }
  }
  ls.estart[L] = ls.e_dest.size();
  return ls;
}

// Exact min cost of appending r more layers starting from each state,
// ignoring the eventual wrap-around obligations.  Admissible estimate for
// pruning: dist + togo[r][state] can never beat an incumbent it exceeds.
std::vector<std::vector<std::int32_t>> build_togo(const LabelSet& ls, int rmax) {
  std::vector<std::vector<std::int32_t>> togo(rmax + 1);
  togo[0].assign(ls.state_count, 0);
  for (int r = 1; r <= rmax; ++r) {
    togo[r].assign(ls.state_count, kInf);
    auto& cur = togo[r];
    const auto& prev = togo[r - 1];
    for (int a = 0; a < ls.label_count(); ++a) {
      for (int c = 0; c < (1 << ls.ppc[a]); ++c) {
        std::int32_t src = ls.base[a] + c;
        std::uint16_t pm = ls.state_pend[src];
        std::int32_t best = kInf;
        for (std::size_t e = ls.estart[a]; e < ls.estart[a + 1]; ++e) {
          if (pm & ~ls.e_treq[e]) continue;
          std::int32_t v = ls.e_w[e] + prev[ls.e_dest[e]];
          if (v < best) best = v;
        }
        cur[src] = best;
      }
    }
  }
  return togo;
}

std::vector<std::uint8_t> label_digits(const LabelSet& ls, int a) {
  std::vector<std::uint8_t> d(ls.width, 1);
  for (int k = 0; k < ls.width; ++k) {
    if (ls.zeros[a] >> k & 1) d[k] = 0;
    if (ls.twos[a] >> k & 1) d[k] = 2;
  }
  return d;
}

struct Candidate {
  std::int64_t total = kInf;
  std::int64_t seam_rank = -1;
  std::int32_t end_state = -1;
  std::int32_t lane = -1;

  bool better_than(const Candidate& o) const {
    if (total != o.total) return total < o.total;
    if (seam_rank != o.seam_rank) return seam_rank < o.seam_rank;
    if (end_state != o.end_state) return end_state < o.end_state;
    return lane < o.lane;
  }
};

void atomic_min(std::atomic<std::int64_t>& target, std::int64_t v) {
  std::int64_t cur = target.load(std::memory_order_relaxed);
  while (v < cur &&
         !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// ---------------------------------------------------------------------------
// Column sweep (layers are paths of height n, advancing around the cycle).
// Every labeling of a fixed seam column is enumerated; the chain DP runs
// over the remaining m-1 columns and the closure charges both wrap edges
// (seam vs last column) plus the seam cells still waiting for a 2.
// Multiple wait-sets can be in flight, one lane per subset of the seam's
// own pending cells; a chain's lane is fixed by the first column's 2s.
// ---------------------------------------------------------------------------

struct PathSweep {
  const CylinderSpec& spec;
  const LabelSet& ls;
  const std::vector<std::vector<std::int32_t>>& togo;
  const std::vector<std::int32_t>& seam_order;
  std::atomic<std::int64_t>& best_total;

  // One seam's chain DP.  When `parents` is non-null the per-layer parent
  // states are recorded (witness reconstruction pass).
  Candidate run_seam(std::int64_t rank, std::vector<std::int32_t>* cur_buf,
                     std::vector<std::int32_t>* nxt_buf,
                     std::vector<std::vector<std::int32_t>>* parents,
                     SolveStats& st) const {
    const int m = spec.cols;
    const std::int32_t s = seam_order[rank];
    const int lanes = 1 << ls.ppc[s];
    const std::uint16_t pp_s = ls.pp[s], t_s = ls.twos[s], z_s = ls.zeros[s];
    const std::size_t sz = static_cast<std::size_t>(ls.state_count) * lanes;
    Candidate best_here;

    auto& cur = *cur_buf;
    auto& nxt = *nxt_buf;
    cur.assign(sz, kInf);
    std::int64_t snapshot = best_total.load(std::memory_order_relaxed);
    if (parents) {
      parents->assign(m, {});
    }

    // layer 1
    bool alive = false;
    for (int b = 0; b < ls.label_count(); ++b) {
      if (z_s & ls.zeros[b]) continue;
      std::int32_t d = ls.weight[s] + ls.weight[b];
      std::uint32_t pend1 = ls.pp[b] & ~t_s;
      std::int32_t stt = ls.base[b] + static_cast<std::int32_t>(extract_bits(pend1, ls.pp[b]));
      if (d + togo[m - 2][stt] > snapshot) continue;
      int lane = static_cast<int>(extract_bits(pp_s & ~ls.twos[b], pp_s));
      auto& slot = cur[static_cast<std::size_t>(stt) * lanes + lane];
      if (d < slot) {
        slot = d;
        alive = true;
      }
      ++st.transitions;
    }
    if (!alive) return best_here;

    std::vector<std::int32_t> lane_val(lanes);
    for (int j = 1; alive && j <= m - 2; ++j) {
      alive = false;
      snapshot = best_total.load(std::memory_order_relaxed);
      nxt.assign(sz, kInf);
      std::vector<std::int32_t>* par = nullptr;
      if (parents) {
        (*parents)[j + 1].assign(sz, -1);
        par = &(*parents)[j + 1];
      }
      const auto& rem = togo[m - 1 - j];  // layers still to add after layer j
      for (int a = 0; a < ls.label_count(); ++a) {
        const std::size_t e0 = ls.estart[a], e1 = ls.estart[a + 1];
        for (int c = 0; c < (1 << ls.ppc[a]); ++c) {
          const std::int32_t src = ls.base[a] + c;
          const std::size_t srcL = static_cast<std::size_t>(src) * lanes;
          bool any = false;
          for (int r = 0; r < lanes; ++r) {
            std::int32_t d = cur[srcL + r];
            if (d < kInf && d + rem[src] <= snapshot) {
              lane_val[r] = d;
              any = true;
            } else {
              lane_val[r] = kInf;
            }
          }
          if (!any) continue;
          ++st.states_explored;
          const std::uint16_t pm = ls.state_pend[src];
          for (std::size_t e = e0; e < e1; ++e) {
            if (pm & ~ls.e_treq[e]) continue;
            const std::size_t destL = static_cast<std::size_t>(ls.e_dest[e]) * lanes;
            const std::int32_t ew = ls.e_w[e];
            for (int r = 0; r < lanes; ++r) {
              if (lane_val[r] >= kInf) continue;
              std::int32_t nd = lane_val[r] + ew;
              if (nd < nxt[destL + r]) {
                nxt[destL + r] = nd;
                if (par) (*par)[destL + r] = src;
                alive = true;
              }
            }
          }
          st.transitions += e1 - e0;
        }
      }
      std::swap(cur, nxt);
    }
    if (!alive) return best_here;  // every chain died before the last column

    // closure against the seam
    for (int a = 0; a < ls.label_count(); ++a) {
      if (z_s & ls.zeros[a]) continue;
      const std::uint16_t t_a = ls.twos[a];
      for (int c = 0; c < (1 << ls.ppc[a]); ++c) {
        const std::int32_t src = ls.base[a] + c;
        if (ls.state_pend[src] & ~t_s) continue;
        const std::size_t srcL = static_cast<std::size_t>(src) * lanes;
        for (int r = 0; r < lanes; ++r) {
          std::int32_t d = cur[srcL + r];
          if (d >= kInf) continue;
          std::uint32_t waiting = deposit_bits(static_cast<std::uint32_t>(r), pp_s);
          if (waiting & ~t_a) continue;
          Candidate cand{d, rank, src, r};
          if (cand.better_than(best_here)) best_here = cand;
        }
      }
    }
    if (best_here.total < kInf) atomic_min(best_total, best_here.total);
    return best_here;
  }
};

// Reconstructs the labeling for the winning seam of the column sweep.
Labeling rebuild_path_witness(const CylinderSpec& spec, const LabelSet& ls,
                              const PathSweep& sweep, const Candidate& win,
                              SolveStats& st) {
  const int m = spec.cols;
  std::vector<std::int32_t> cur, nxt;
  std::vector<std::vector<std::int32_t>> parents;
  SolveStats scratch;
  Candidate again = sweep.run_seam(win.seam_rank, &cur, &nxt, &parents, scratch);
  if (!(again.total == win.total && again.end_state == win.end_state &&
        again.lane == win.lane))
    throw std::logic_error("solver: witness pass diverged from value pass");
  const std::int32_t s = sweep.seam_order[win.seam_rank];
  const int lanes = 1 << ls.ppc[s];
  std::vector<int> col_label(m, -1);
  col_label[0] = s;
  std::int32_t stt = win.end_state;
  for (int j = m - 1; j >= 1; --j) {
    col_label[j] = ls.state_label[stt];
    if (j >= 2) {
      std::int32_t p = parents[j][static_cast<std::size_t>(stt) * lanes + win.lane];
      if (p < 0) throw std::logic_error("solver: broken parent chain");
      stt = p;
    }
  }
  Labeling f(spec);
  for (int j = 0; j < m; ++j) {
    auto digits = label_digits(ls, col_label[j]);
    for (int i = 0; i < spec.rows; ++i) f.set(i, j, digits[i]);
  }
  st.states_explored += scratch.states_explored;
  st.transitions += scratch.transitions;
  return f;
}

SolveOutcome solve_path_layers(const CylinderSpec& spec, bool want_witness,
                               int threads) {
  SolveOutcome out;
  out.method = SolveMethod::DpPathLayers;
  const int m = spec.cols;
  LabelSet ls = build_labels(spec.rows, false);
  auto togo = build_togo(ls, m - 2);

  std::vector<std::int32_t> seam_order(ls.label_count());
  for (int i = 0; i < ls.label_count(); ++i) seam_order[i] = i;
  std::stable_sort(seam_order.begin(), seam_order.end(),
                   [&](int x, int y) { return ls.weight[x] < ls.weight[y]; });

  std::atomic<std::int64_t> best_total{kInf};
  PathSweep sweep{spec, ls, togo, seam_order, best_total};
  out.stats.seams = seam_order.size();

  Candidate global;
  std::mutex merge_mu;
  auto worker = [&](int tid, int stride) {
    std::vector<std::int32_t> cur, nxt;
    Candidate local;
    SolveStats st;
    for (std::int64_t rank = tid; rank < static_cast<std::int64_t>(seam_order.size());
         rank += stride) {
      Candidate c = sweep.run_seam(rank, &cur, &nxt, nullptr, st);
      if (c.better_than(local)) local = c;
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    if (local.better_than(global)) global = local;
    out.stats.states_explored += st.states_explored;
    out.stats.transitions += st.transitions;
  };
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }
  if (global.total >= kInf) throw std::logic_error("solver: no feasible labeling");
  out.gamma = global.total;
  if (want_witness)
    out.witness = rebuild_path_witness(spec, ls, sweep, global, out.stats);
  return out;
}

// ---------------------------------------------------------------------------
// Row sweep (layers are cycles of length m, advancing along the path).
// The path ends are free so no seam is needed: the first row starts with
// all its undominated 0s pending and the last row must have none left.
// ---------------------------------------------------------------------------

SolveOutcome solve_cycle_layers(const CylinderSpec& spec, bool want_witness) {
  SolveOutcome out;
  out.method = SolveMethod::DpCycleLayers;
  const int n = spec.rows;
  LabelSet ls = build_labels(spec.cols, true);
  const std::size_t sz = ls.state_count;

  std::vector<std::int32_t> cur(sz, kInf), nxt;
  std::vector<std::vector<std::int32_t>> parents(n + 1);
  for (int a = 0; a < ls.label_count(); ++a) {
    std::int32_t stt = ls.base[a] + (1 << ls.ppc[a]) - 1;  // pend = pp
    cur[stt] = ls.weight[a];
  }
  for (int j = 1; j <= n - 1; ++j) {
    nxt.assign(sz, kInf);
    std::vector<std::int32_t>* par = nullptr;
    if (want_witness) {
      parents[j + 1].assign(sz, -1);
      par = &parents[j + 1];
    }
    for (int a = 0; a < ls.label_count(); ++a) {
      const std::size_t e0 = ls.estart[a], e1 = ls.estart[a + 1];
      for (int c = 0; c < (1 << ls.ppc[a]); ++c) {
        const std::int32_t src = ls.base[a] + c;
        const std::int32_t d = cur[src];
        if (d >= kInf) continue;
        ++out.stats.states_explored;
        const std::uint16_t pm = ls.state_pend[src];
        for (std::size_t e = e0; e < e1; ++e) {
          if (pm & ~ls.e_treq[e]) continue;
          std::int32_t nd = d + ls.e_w[e];
          if (nd < nxt[ls.e_dest[e]]) {
            nxt[ls.e_dest[e]] = nd;
            if (par) (*par)[ls.e_dest[e]] = src;
          }
        }
        out.stats.transitions += e1 - e0;
      }
    }
    std::swap(cur, nxt);
  }

  std::int64_t best = kInf;
  std::int32_t end_state = -1;
  for (int a = 0; a < ls.label_count(); ++a) {
    std::int32_t stt = ls.base[a];  // pend = empty
    if (cur[stt] < best) {
      best = cur[stt];
      end_state = stt;
    }
  }
  if (best >= kInf) throw std::logic_error("solver: no feasible labeling");
  out.gamma = best;
  if (want_witness) {
    std::vector<int> row_label(n);
    std::int32_t stt = end_state;
    for (int j = n; j >= 1; --j) {
      row_label[j - 1] = ls.state_label[stt];
      if (j >= 2) {
        std::int32_t p = parents[j][stt];
        if (p < 0) throw std::logic_error("solver: broken parent chain");
        stt = p;
      }
    }
    Labeling f(spec);
    for (int i = 0; i < n; ++i) {
      auto digits = label_digits(ls, row_label[i]);
      for (int j = 0; j < spec.cols; ++j) f.set(i, j, digits[j]);
    }
    out.witness = std::move(f);
  }
  return out;
}

void verify_outcome(const SolveOutcome& out) {
  if (!out.witness) return;
  if (out.witness->weight() != out.gamma)
    throw std::logic_error("solver: witness weight mismatch");
  if (!validate(*out.witness).is_valid)
    throw std::logic_error("solver: witness is not a valid OIRDF");
}

}  // namespace

SolveOutcome brute_force(const CylinderSpec& spec, const SolverCaps& caps,
                         bool want_witness) {
  spec.check();
  auto t0 = std::chrono::steady_clock::now();
  if (spec.cell_count() > caps.brute_max_cells)
    throw SizeCapError("brute_force: " + std::to_string(spec.cell_count()) +
                       " cells exceeds cap " + std::to_string(caps.brute_max_cells));
  const int n = spec.rows, m = spec.cols;
  SolveOutcome out;
  out.method = SolveMethod::Brute;
  Labeling work(spec), best_f(spec);
  std::int64_t best = kInf;

  auto dominated = [&](int i, int j) {
    if (i > 0 && work.at(i - 1, j) == 2) return true;
    if (i + 1 < n && work.at(i + 1, j) == 2) return true;
    if (work.at(i, (j + m - 1) % m) == 2) return true;
    if (work.at(i, (j + 1) % m) == 2) return true;
    return false;
  };

  // Cells in row-major order, digits in order 0,1,2; the first optimum in
  // enumeration order is kept, which makes the witness deterministic.
  auto rec = [&](auto&& self, int idx, std::int64_t wsum) -> void {
    ++out.stats.states_explored;
    if (idx == n * m) {
      for (int j = 0; j < m; ++j)
        if (work.at(n - 1, j) == 0 && !dominated(n - 1, j)) return;
      if (wsum < best) {
        best = wsum;
        best_f = work;
      }
      return;
    }
    const int i = idx / m, j = idx % m;
    for (std::uint8_t v = 0; v <= 2; ++v) {
      if (wsum + v >= best) break;  // weights only grow along the row scan
      if (v == 0) {
        if (i > 0 && work.at(i - 1, j) == 0) continue;
        if (j > 0 && work.at(i, j - 1) == 0) continue;
        if (j == m - 1 && work.at(i, 0) == 0) continue;
      }
      work.set(i, j, v);
      ++out.stats.transitions;
      // placing (i,j) completes the neighborhood of (i-1,j)
      if (i > 0 && work.at(i - 1, j) == 0 && !dominated(i - 1, j)) continue;
      self(self, idx + 1, wsum + v);
    }
    work.set(i, j, 0);
  };
  rec(rec, 0, 0);
  if (best >= kInf) throw std::logic_error("brute_force: no valid labeling found");
  out.gamma = best;
  if (want_witness) out.witness = std::move(best_f);
  verify_outcome(out);
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

SolveOutcome solve_dp(const CylinderSpec& spec, const SolverCaps& caps,
                      DpOrientation orientation, bool want_witness, int threads) {
  spec.check();
  auto t0 = std::chrono::steady_clock::now();
  const int n = spec.rows, m = spec.cols;
  const bool can_cols = n <= caps.cycle_sweep_width_max && m <= caps.sweep_length_max;
  const bool can_rows = m <= caps.path_sweep_width_max && n <= caps.sweep_length_max;

  DpOrientation pick = orientation;
  if (pick == DpOrientation::Auto) {
    if (!can_cols && !can_rows)
      throw SizeCapError("solve_dp: " + std::to_string(n) + "x" + std::to_string(m) +
                         " exceeds both sweep caps");
    pick = (can_rows && (!can_cols || m <= n)) ? DpOrientation::CycleLayers
                                               : DpOrientation::PathLayers;
  } else if (pick == DpOrientation::PathLayers && !can_cols) {
    throw SizeCapError("solve_dp: column sweep needs rows <= " +
                       std::to_string(caps.cycle_sweep_width_max) + " and cols <= " +
                       std::to_string(caps.sweep_length_max));
  } else if (pick == DpOrientation::CycleLayers && !can_rows) {
    throw SizeCapError("solve_dp: row sweep needs cols <= " +
                       std::to_string(caps.path_sweep_width_max) + " and rows <= " +
                       std::to_string(caps.sweep_length_max));
  }

  SolveOutcome out = (pick == DpOrientation::PathLayers)
                         ? solve_path_layers(spec, want_witness, threads)
                         : solve_cycle_layers(spec, want_witness);
  verify_outcome(out);
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

Labeling extract_witness(const CylinderSpec& spec, std::int64_t expected_gamma,
                         const SolverCaps& caps) {
  SolveOutcome out = solve_dp(spec, caps, DpOrientation::Auto, true);
  if (out.gamma != expected_gamma)
    throw std::logic_error("extract_witness: solver value " + std::to_string(out.gamma) +
                           " does not match expected " + std::to_string(expected_gamma));
  return *out.witness;
}

std::string solve_method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Brute: return "brute";
    case SolveMethod::DpPathLayers: return "dp-path-layers";
    case SolveMethod::DpCycleLayers: return "dp-cycle-layers";
  }
  return "?";
}

}  // namespace oird
