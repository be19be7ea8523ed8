#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <og10/cyclic_character.hpp>
#include <og10/mukai_llv.hpp>

#include "oracles.hpp"

using og10::ComponentInvariants;
using og10::CyclicCharacter;
using og10::dim_v22;
using og10::dim_verbitsky;
using og10::graded_verbitsky_invariants;
using og10::h2_from_invariant_dim;
using og10::ManifoldProfile;
using og10::mukai_extend;
using og10::total_invariants;
using og10::v22_character;
using og10::verbitsky_character;

TEST_CASE("profile validation") {
  CHECK_NOTHROW(ManifoldProfile::og10().validate());
  ManifoldProfile p;
  p.second_betti = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = ManifoldProfile::og10();
  p.complex_dimension = 9;  // odd
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = ManifoldProfile::og10();
  p.total_euler = 176905;  // inconsistent with b2 = 24, dim 10
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  // A non-default profile passes exactly when the Euler number matches the
  // component count forced by b2 and the dimension: b2 = 7, m = 2 gives
  // N = 9, dim V_(2) = 45 - 1 = 44 and dim V_(2,2) = 666 - 45 - 126 = 495.
  ManifoldProfile fourfold;
  fourfold.second_betti = 7;
  fourfold.complex_dimension = 4;
  fourfold.total_euler = 539;
  CHECK_NOTHROW(fourfold.validate());
  fourfold.total_euler = 540;
  CHECK_THROWS_AS(fourfold.validate(), std::invalid_argument);
}

TEST_CASE("component dimensions at the default profile") {
  CHECK(dim_verbitsky() == 139230);
  CHECK(dim_v22() == 37674);
  CHECK(dim_verbitsky() + dim_v22() == 176904);
}

TEST_CASE("h2 sugar expands invariant dimensions") {
  CHECK(h2_from_invariant_dim(1, 24) == CyclicCharacter(1, {24}));
  CHECK(h2_from_invariant_dim(2, 7) == CyclicCharacter(2, {7, 17}));
  CHECK(h2_from_invariant_dim(3, 8) == CyclicCharacter(3, {8, 8, 8}));
  CHECK(h2_from_invariant_dim(3, 0) == CyclicCharacter(3, {0, 12, 12}));
  // Order 1 requires the full Betti number, order 3 requires matching parity.
  CHECK_THROWS_AS(h2_from_invariant_dim(1, 23), std::invalid_argument);
  CHECK_THROWS_AS(h2_from_invariant_dim(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(h2_from_invariant_dim(2, 25), std::invalid_argument);
  CHECK_THROWS_AS(h2_from_invariant_dim(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(h2_from_invariant_dim(4, 8), std::invalid_argument);  // no sugar
  CHECK_THROWS_AS(h2_from_invariant_dim(0, 0), std::invalid_argument);
}

TEST_CASE("mukai_extend adds two invariant directions and validates") {
  const CyclicCharacter h2(3, {10, 7, 7});
  const CyclicCharacter v = mukai_extend(h2);
  CHECK(v.order() == 3);
  CHECK(v.dimension() == 26);
  CHECK(v.eig(0) == 12);
  CHECK(v.eig(1) == 7);
  // Wrong dimension is rejected.
  CHECK_THROWS_AS(mukai_extend(CyclicCharacter(2, {3, 20})), std::invalid_argument);
  // Non-rational actions are rejected.
  CHECK_THROWS_AS(mukai_extend(CyclicCharacter(3, {10, 8, 6})), std::invalid_argument);
}

TEST_CASE("component characters certify non-negative and have the right size") {
  const CyclicCharacter mukai = mukai_extend(CyclicCharacter(3, {10, 7, 7}));
  const CyclicCharacter verb = verbitsky_character(mukai).certify_non_negative();
  const CyclicCharacter v22 = v22_character(mukai).certify_non_negative();
  CHECK(verb.dimension() == 139230);
  CHECK(v22.dimension() == 37674);
  CHECK(verb.is_rational());
  CHECK(v22.is_rational());
}

TEST_CASE("frozen fixed dimensions for published sample actions") {
  // Order 2, invariant dimension r on second cohomology.
  struct Row {
    std::int64_t r, verb, v22;
  };
  const Row order2[] = {
      {0, 35702, 28474},
      {1, 46793, 25415},
      {2, 54684, 23154},
      {24, 139230, 37674},
  };
  for (const Row& row : order2) {
    const ComponentInvariants inv = total_invariants(h2_from_invariant_dim(2, row.r));
    CHECK(inv.verbitsky_fixed == row.verb);
    CHECK(inv.v22_fixed == row.v22);
    CHECK(inv.total_case_a == row.verb + row.v22);
    REQUIRE(inv.total_case_b.has_value());
    CHECK(*inv.total_case_b == row.verb + 37674 - row.v22);
  }
  // Order 3, invariant dimension 2r on second cohomology.
  const Row order3[] = {
      {3, 46404, 12564},  // invariant dim 6: total 58968
      {4, 46422, 12546},  // invariant dim 8: total 58968 as well
      {12, 139230, 37674},
  };
  for (const Row& row : order3) {
    const ComponentInvariants inv = total_invariants(h2_from_invariant_dim(3, 2 * row.r));
    CHECK(inv.verbitsky_fixed == row.verb);
    CHECK(inv.v22_fixed == row.v22);
    CHECK(inv.total_case_a == row.verb + row.v22);
    CHECK_FALSE(inv.total_case_b.has_value());  // odd order: no sign ambiguity
  }
}

TEST_CASE("identity operator recovers the full cohomology") {
  const ComponentInvariants inv = total_invariants(h2_from_invariant_dim(1, 24));
  CHECK(inv.verbitsky_fixed == 139230);
  CHECK(inv.v22_fixed == 37674);
  CHECK(inv.total_case_a == 176904);
  CHECK_FALSE(inv.total_case_b.has_value());
}

TEST_CASE("case b flips the (2,2)-component sign") {
  // For even order the two cases bracket the v22 contribution symmetrically:
  // total_a + total_b == 2 * verbitsky + dim V_(2,2).
  for (std::int64_t r = 0; r <= 24; ++r) {
    const ComponentInvariants inv = total_invariants(h2_from_invariant_dim(2, r));
    REQUIRE(inv.total_case_b.has_value());
    CHECK(inv.total_case_a + *inv.total_case_b == 2 * inv.verbitsky_fixed + 37674);
  }
}

TEST_CASE("graded route equals harmonic route on rational inputs") {
  std::mt19937_64 rng(424242);
  int cases = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::int64_t order = 1 + (trial % 12);
    const CyclicCharacter h2 = oracles::random_rational_character_of_dim(rng, order, 24);
    REQUIRE(h2.is_rational());
    const std::int64_t graded = graded_verbitsky_invariants(h2);
    const std::int64_t harmonic =
        og10::VirtualCyclicCharacter(verbitsky_character(mukai_extend(h2))).eig(0);
    CHECK(graded == harmonic);
    ++cases;
  }
  CHECK(cases == 80);
}

TEST_CASE("graded parts for frozen examples") {
  // The graded route must reproduce the harmonic numbers exactly.
  CHECK(graded_verbitsky_invariants(CyclicCharacter(3, {8, 8, 8})) == 46422);
  CHECK(graded_verbitsky_invariants(CyclicCharacter(2, {0, 24})) == 35702);
  CHECK(graded_verbitsky_invariants(CyclicCharacter(1, {24})) == 139230);
}

TEST_CASE("non-rational second cohomology actions are rejected everywhere") {
  // (3, {10, 8, 6}) has the right dimension but unequal conjugate classes.
  REQUIRE_FALSE(CyclicCharacter(3, {10, 8, 6}).is_rational());
  CHECK_THROWS_AS(mukai_extend(CyclicCharacter(3, {10, 8, 6})), std::invalid_argument);
  CHECK_THROWS_AS(total_invariants(CyclicCharacter(3, {10, 8, 6})), std::invalid_argument);
  CHECK_THROWS_AS(graded_verbitsky_invariants(CyclicCharacter(3, {10, 8, 6})),
                  std::invalid_argument);
}

TEST_CASE("custom profile flows through the computation") {
  // A hypothetical fourfold-shaped profile: b2 = 7, m = 2.
  ManifoldProfile p;
  p.second_betti = 7;
  p.complex_dimension = 4;
  // dim V_(2) = Sym^2(9) - Sym^0(9) = 45 - 1 = 44;
  // dim V_(2,2) at N = 9: Sym^2 Lambda^2 - Sym^2 - Lambda^4 = 666 - 45 - 126 = 495.
  p.total_euler = 44 + 495;
  CHECK_NOTHROW(p.validate());
  CHECK(dim_verbitsky(p) == 44);
  CHECK(dim_v22(p) == 495);
  const ComponentInvariants inv = total_invariants(h2_from_invariant_dim(1, 7, p), p);
  CHECK(inv.total_case_a == p.total_euler);
}
