#include <vector>

#include "doctest.h"
#include "oird/certificates.hpp"
#include "oird/codec.hpp"
#include "oird/constructions.hpp"
#include "oird/solver.hpp"
#include "sampling.hpp"

using namespace oird;

namespace {

bool mandatory_pass(const std::vector<PropertyCheck>& checks) {
  for (const PropertyCheck& c : checks)
    if (c.mandatory && !c.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("slice sums along both axes") {
  Labeling two_rows = decode_grid("201010\n010201\n");
  SliceSums cols = column_sums(two_rows, SliceSums::Axis::Columns);
  CHECK(cols.sums == std::vector<std::int64_t>{2, 1, 1, 2, 1, 1});

  Labeling ones(CylinderSpec(3, 4), 1);
  CHECK(column_sums(ones, SliceSums::Axis::Columns).sums ==
        std::vector<std::int64_t>{3, 3, 3, 3});

  Labeling block = decode_grid("011\n201\n011\n101\n021\n101\n");
  CHECK(column_sums(block, SliceSums::Axis::Rows).sums ==
        std::vector<std::int64_t>{2, 3, 2, 2, 3, 2});
}

TEST_CASE("slice sums add up to the weight") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    Labeling f = testutil::repaired_labeling(rng, 2 + k % 4, 3 + k % 8);
    std::int64_t total = 0;
    for (auto s : column_sums(f, SliceSums::Axis::Columns).sums) total += s;
    CHECK(total == f.weight());
    total = 0;
    for (auto s : column_sums(f, SliceSums::Axis::Rows).sums) total += s;
    CHECK(total == f.weight());
  }
}

TEST_CASE("two-row bagging on the periodic construction") {
  BagPartition p = partition_algorithm1(construct_p2cm(6));
  CHECK(p.algorithm == 1);
  CHECK(p.t0 == 2);
  CHECK(p.t1 == 0);
  CHECK(p.t2 == 0);
  CHECK(p.covered);
  CHECK(p.bounds_ok);
  CHECK(p.bound == 8);
  CHECK(p.bound == construct_p2cm(6).weight());
  REQUIRE(p.bags.size() == 2);
  CHECK(p.bags[0].category == BagCategory::B0);
  CHECK(p.bags[0].members == std::vector<int>{5, 0, 1});
  CHECK(p.bags[1].members == std::vector<int>{2, 3, 4});
}

TEST_CASE("two-row bagging on the all-ones labeling") {
  BagPartition p = partition_algorithm1(Labeling(CylinderSpec(2, 3), 1));
  CHECK(p.t0 == 0);
  CHECK(p.t1 == 0);
  CHECK(p.t2 == 3);
  for (const Bag& b : p.bags) {
    CHECK(b.category == BagCategory::B2);
    CHECK(b.members.size() == 1);
  }
  CHECK(p.covered);
  CHECK(p.bounds_ok);
  CHECK(p.bound == 6);
}

TEST_CASE("two-row bagging on the m=9 tail construction") {
  Labeling f = construct_p2cm(9);
  BagPartition p = partition_algorithm1(f);
  CHECK(p.covered);
  CHECK(p.bounds_ok);
  CHECK(p.strict_ok);
  CHECK(p.t0 == 2);
  CHECK(p.t1 == 1);
  CHECK(p.t2 == 1);
  CHECK(p.bound == 13);
  CHECK(p.bound <= f.weight());
  REQUIRE(p.bags.size() == 4);
  CHECK(p.bags[0].category == BagCategory::B1);
  CHECK(p.bags[0].members == std::vector<int>{0, 1});
  CHECK(p.bags[3].category == BagCategory::B2);
  CHECK(p.bags[3].members == std::vector<int>{8});
}

TEST_CASE("two-row bagging rejects bad input") {
  CHECK_THROWS_AS(partition_algorithm1(Labeling(CylinderSpec(2, 4), 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_algorithm1(Labeling(CylinderSpec(3, 4), 1)),
                  std::invalid_argument);
}

TEST_CASE("two-row bag bound is exactly tight on every optimal witness") {
  for (int m = 3; m <= 64; ++m) {
    SolveOutcome out = solve_dp(CylinderSpec(2, m));
    BagPartition p = partition_algorithm1(*out.witness);
    CHECK(p.covered);
    CHECK(p.bounds_ok);
    CHECK(p.bound == out.gamma);
  }
}

TEST_CASE("three-row bagging on the even construction") {
  BagPartition p = partition_algorithm2(construct_p3cm(4));
  CHECK(p.algorithm == 2);
  CHECK(p.t1 == 0);
  CHECK(p.covered);
  CHECK(p.bounds_ok);
  CHECK(p.property_b);
  CHECK(p.bound == 8);
  CHECK(p.bound == construct_p3cm(4).weight());
}

TEST_CASE("three-row bagging on the odd construction") {
  Labeling f = construct_p3cm(5);
  BagPartition p = partition_algorithm2(f);
  CHECK(p.covered);
  CHECK(p.bounds_ok);
  CHECK(p.t1 == 1);
  CHECK(p.bound == 11);
  CHECK(p.bound <= f.weight());
  REQUIRE(!p.bags.empty());
  CHECK(p.bags[0].category == BagCategory::B1);
  CHECK(p.bags[0].members == std::vector<int>{4});
}

TEST_CASE("three-row bagging on the all-twos labeling") {
  BagPartition p = partition_algorithm2(Labeling(CylinderSpec(3, 3), 2));
  CHECK(p.t0 == 0);
  CHECK(p.t1 == 3);
  for (const Bag& b : p.bags) {
    CHECK(b.category == BagCategory::B1);
    CHECK(b.members.size() == 1);
  }
  CHECK(p.covered);
  CHECK(p.bounds_ok);
  CHECK(p.bound == 9);
}

TEST_CASE("three-row bagging withholds its bound when the premise fails") {
  // valid, but column 1 (sum 4) sits between two sum-1 columns
  Labeling f = decode_grid("0201\n1011\n0201\n");
  REQUIRE(validate(f).is_valid);
  CHECK(column_sums(f, SliceSums::Axis::Columns).sums ==
        std::vector<std::int64_t>{1, 4, 1, 3});
  BagPartition p = partition_algorithm2(f);
  CHECK(p.covered);
  CHECK_FALSE(p.property_b);
  CHECK_FALSE(p.bounds_ok);
  CHECK(p.bound == 10);
  CHECK(f.weight() == 9);
}

TEST_CASE("three-row bagging on optimal witnesses") {
  for (int m = 3; m <= 64; ++m) {
    SolveOutcome out = solve_dp(CylinderSpec(3, m));
    BagPartition p = partition_algorithm2(*out.witness);
    CHECK(p.covered);
    if (p.property_b) {
      CHECK(p.bounds_ok);
      CHECK(p.bound <= out.gamma);
    }
  }
}

TEST_CASE("proof properties hold on the constructions") {
  CHECK(mandatory_pass(check_proof_properties(construct_p3cm(7), Family::P3Cm)));
  CHECK(mandatory_pass(check_proof_properties(construct_pnc3(10), Family::PnC3)));
  CHECK(mandatory_pass(check_proof_properties(construct_p2cm(8), Family::P2Cm)));
}

TEST_CASE("proof properties hold on random valid labelings") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 10000; ++k) {
    Labeling f2 = testutil::repaired_labeling(rng, 2, 3 + k % 30);
    CHECK(mandatory_pass(check_proof_properties(f2, Family::P2Cm)));
  }
  for (int k = 0; k < 10000; ++k) {
    Labeling f3 = testutil::repaired_labeling(rng, 3, 3 + k % 30);
    CHECK(mandatory_pass(check_proof_properties(f3, Family::P3Cm)));
  }
  for (int k = 0; k < 10000; ++k) {
    Labeling fc = testutil::repaired_labeling(rng, 3 + k % 30, 3);
    CHECK(mandatory_pass(check_proof_properties(fc, Family::PnC3)));
  }
}

TEST_CASE("proof property checks reject mismatched families") {
  CHECK_THROWS_AS(check_proof_properties(construct_p3cm(5), Family::P2Cm),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_proof_properties(construct_p2cm(5), Family::PnC3),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      check_proof_properties(Labeling(CylinderSpec(2, 4), 0), Family::P2Cm),
      std::invalid_argument);
}
