#include "oird/certificates.hpp"

#include <stdexcept>

namespace oird {

SliceSums column_sums(const Labeling& f, SliceSums::Axis axis) {
  f.spec.check();
  SliceSums out;
  out.axis = axis;
  if (axis == SliceSums::Axis::Columns) {
    out.sums.assign(f.spec.cols, 0);
    for (int i = 0; i < f.spec.rows; ++i)
      for (int j = 0; j < f.spec.cols; ++j) out.sums[j] += f.at(i, j);
  } else {
    out.sums.assign(f.spec.rows, 0);
    for (int i = 0; i < f.spec.rows; ++i)
      for (int j = 0; j < f.spec.cols; ++j) out.sums[i] += f.at(i, j);
  }
  return out;
}

namespace {

void require_valid(const Labeling& f, int rows, const char* what) {
  if (f.spec.rows != rows)
    throw std::invalid_argument(std::string(what) + ": needs a " +
                                std::to_string(rows) + "-row cylinder");
  if (!validate(f).is_valid)
    throw std::invalid_argument(std::string(what) + ": labeling is not a valid OIRDF");
}

struct Bagger {
  int m;
  const std::vector<std::int64_t>& sums;
  std::vector<bool> marked;
  std::vector<Bag> bags;

  explicit Bagger(const SliceSums& s)
      : m(static_cast<int>(s.sums.size())), sums(s.sums), marked(m, false) {}

  int left(int j) const { return (j + m - 1) % m; }
  int right(int j) const { return (j + 1) % m; }

  void emit(BagCategory cat, std::vector<int> members) {
    Bag b;
    b.category = cat;
    b.sum = 0;
    for (int j : members) {
      marked[j] = true;
      b.sum += sums[j];
    }
    b.members = std::move(members);
    bags.push_back(std::move(b));
  }

  // appends unmarked sum-1 neighbors (left first) to a heavy column's bag
  std::vector<int> with_claimed_ones(int j) {
    std::vector<int> members{j};
    if (sums[left(j)] == 1 && !marked[left(j)]) members.push_back(left(j));
    if (sums[right(j)] == 1 && !marked[right(j)]) members.push_back(right(j));
    return members;
  }
};

BagPartition finish(int algorithm, Bagger& bg) {
  BagPartition out;
  out.algorithm = algorithm;
  out.bags = std::move(bg.bags);
  std::int64_t covered_members = 0;
  out.covered = true;
  for (bool mk : bg.marked) out.covered = out.covered && mk;
  out.bounds_ok = true;
  out.strict_ok = true;
  for (const auto& b : out.bags) {
    covered_members += static_cast<std::int64_t>(b.members.size());
    const std::int64_t k = static_cast<std::int64_t>(b.members.size());
    switch (b.category) {
      case BagCategory::B0: ++out.t0; break;
      case BagCategory::B1: ++out.t1; break;
      case BagCategory::B2: ++out.t2; break;
    }
    if (algorithm == 1) {
      int slack = b.category == BagCategory::B0 ? 0 : b.category == BagCategory::B1 ? 1 : 2;
      if (3 * b.sum < 4 * k + slack) out.bounds_ok = false;
    } else {
      int slack = b.category == BagCategory::B1 ? 1 : 0;
      if (b.sum < 2 * k + slack) out.bounds_ok = false;
    }
  }
  if (algorithm == 1)
    out.bound = (4 * covered_members + out.t1 + 2 * out.t2 + 2) / 3;  // ceil
  else
    out.bound = 2 * covered_members + out.t1;
  return out;
}

}  // namespace

BagPartition partition_algorithm1(const Labeling& f) {
  require_valid(f, 2, "partition_algorithm1");
  SliceSums s = column_sums(f, SliceSums::Axis::Columns);
  Bagger bg(s);
  const int m = bg.m;

  // heavy columns absorb their sum-1 neighbors
  for (int j = 0; j < m; ++j)
    if (!bg.marked[j] && bg.sums[j] >= 3) bg.emit(BagCategory::B2, bg.with_claimed_ones(j));
  // sum-2 columns: triple when flanked by free sum-1 columns, else pair, else alone
  for (int j = 0; j < m; ++j) {
    if (bg.marked[j] || bg.sums[j] != 2) continue;
    const int l = bg.left(j), r = bg.right(j);
    const bool lfree = bg.sums[l] == 1 && !bg.marked[l];
    const bool rfree = bg.sums[r] == 1 && !bg.marked[r];
    if (lfree && rfree)
      bg.emit(BagCategory::B0, {l, j, r});
    else if (lfree)
      bg.emit(BagCategory::B1, {l, j});
    else if (rfree)
      bg.emit(BagCategory::B1, {j, r});
    else
      bg.emit(BagCategory::B2, {j});
  }

  BagPartition out = finish(1, bg);
  // heavy-column bags meet the category inequality strictly
  for (const auto& b : out.bags) {
    if (b.category != BagCategory::B2 || b.members.empty()) continue;
    if (bg.sums[b.members.front()] < 3) continue;
    if (3 * b.sum <= 4 * static_cast<std::int64_t>(b.members.size()) + 2)
      out.strict_ok = false;
  }
  out.property_b = true;  // not used by this algorithm
  return out;
}

BagPartition partition_algorithm2(const Labeling& f) {
  require_valid(f, 3, "partition_algorithm2");
  SliceSums s = column_sums(f, SliceSums::Axis::Columns);
  Bagger bg(s);
  const int m = bg.m;

  for (int j = 0; j < m; ++j)
    if (!bg.marked[j] && bg.sums[j] >= 4) bg.emit(BagCategory::B1, bg.with_claimed_ones(j));
  for (int j = 0; j < m; ++j) {
    if (bg.marked[j] || bg.sums[j] != 3) continue;
    const int r = bg.right(j);
    if (bg.sums[r] == 1 && !bg.marked[r])
      bg.emit(BagCategory::B0, {j, r});
    else
      bg.emit(BagCategory::B1, {j});
  }
  for (int j = 0; j < m; ++j)
    if (!bg.marked[j] && bg.sums[j] == 2) bg.emit(BagCategory::B0, {j});

  BagPartition out = finish(2, bg);
  out.property_b = true;
  for (int j = 0; j < m; ++j) {
    if (s.sums[bg.left(j)] == 1 && s.sums[bg.right(j)] == 1 &&
        !(s.sums[j] >= 2 && s.sums[j] <= 3))
      out.property_b = false;
  }
  return out;
}

std::vector<PropertyCheck> check_proof_properties(const Labeling& f, Family family) {
  int need_rows = family == Family::P2Cm ? 2 : family == Family::P3Cm ? 3 : -1;
  if (need_rows > 0 && f.spec.rows != need_rows)
    throw std::invalid_argument("check_proof_properties: family expects " +
                                std::to_string(need_rows) + " rows");
  if (family == Family::PnC3 && f.spec.cols != 3)
    throw std::invalid_argument("check_proof_properties: family expects 3 columns");
  if (!validate(f).is_valid)
    throw std::invalid_argument("check_proof_properties: labeling is not a valid OIRDF");

  std::vector<PropertyCheck> out;
  auto add = [&](std::string name, bool mandatory) -> PropertyCheck& {
    out.push_back({std::move(name), mandatory, true, {}});
    return out.back();
  };
  auto fail = [](PropertyCheck& p, int idx) {
    p.pass = false;
    p.failures.push_back(idx);
  };

  if (family == Family::P2Cm || family == Family::P3Cm) {
    SliceSums s = column_sums(f, SliceSums::Axis::Columns);
    const int m = static_cast<int>(s.sums.size());
    auto at = [&](int j) { return s.sums[((j % m) + m) % m]; };

    auto& positive = add("every column sum is positive", true);
    for (int j = 0; j < m; ++j)
      if (at(j) < 1) fail(positive, j);

    if (family == Family::P2Cm) {
      auto& heavy = add("a sum-1 column has a neighbor of sum 2 or more", true);
      for (int j = 0; j < m; ++j)
        if (at(j) == 1 && at(j - 1) < 2 && at(j + 1) < 2) fail(heavy, j);
    } else {
      auto& rnbr = add("a sum-1 column is followed by a column of sum 2 or more", true);
      for (int j = 0; j < m; ++j)
        if (at(j) == 1 && at(j + 1) < 2) fail(rnbr, j);
      auto& six = add("the two neighbors of a sum-1 column sum to 6 or more", true);
      for (int j = 0; j < m; ++j)
        if (at(j) == 1 && at(j - 1) + at(j + 1) < 6) fail(six, j);
      auto& flank = add("a column flanked by sum-1 columns has sum 2 or 3", false);
      for (int j = 0; j < m; ++j)
        if (at(j - 1) == 1 && at(j + 1) == 1 && !(at(j) >= 2 && at(j) <= 3))
          fail(flank, j);
    }
  } else {
    SliceSums s = column_sums(f, SliceSums::Axis::Rows);
    const int n = static_cast<int>(s.sums.size());

    auto& two = add("every row sum is at least 2", true);
    for (int i = 0; i < n; ++i)
      if (s.sums[i] < 2) fail(two, i);

    auto& seven = add("any three consecutive rows sum to at least 7", true);
    for (int i = 1; i + 1 < n; ++i)
      if (s.sums[i - 1] + s.sums[i] + s.sums[i + 1] < 7) fail(seven, i);

    auto& five = add("the two rows at each end sum to at least 5", true);
    if (n >= 2) {
      if (s.sums[0] + s.sums[1] < 5) fail(five, 0);
      if (s.sums[n - 2] + s.sums[n - 1] < 5 && n > 2) fail(five, n - 2);
    }
  }
  return out;
}

std::string bag_category_name(BagCategory c) {
  switch (c) {
    case BagCategory::B0: return "B0";
    case BagCategory::B1: return "B1";
    case BagCategory::B2: return "B2";
  }
  return "?";
}

std::string family_name(Family fam) {
  switch (fam) {
    case Family::P2Cm: return "p2cm";
    case Family::P3Cm: return "p3cm";
    case Family::PnC3: return "pnc3";
  }
  return "?";
}

}  // namespace oird
