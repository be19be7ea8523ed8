#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <og10/cyclic_character.hpp>
#include <og10/weyl.hpp>

#include "oracles.hpp"

using og10::char_ext_power;
using og10::char_sym_power;
using og10::char_tensor;
using og10::CyclicCharacter;
using og10::decompose;
using og10::DominantCharacter;
using og10::dominant_representative;
using og10::irreducible_character;
using og10::is_dominant;
using og10::PlethysmCertificate;
using og10::torus_specialize;
using og10::vector_character;
using og10::verify_plethysm;
using og10::Weight;
using og10::weyl_dimension;
using og10::weyl_orbit;
using og10::weyl_orbit_size;
using og10::WorkCapExceeded;
using og10::WorkCounter;

namespace {

// Flattens the lazy orbit expansion into a multiset of weights.
std::map<Weight, std::int64_t> full_expansion(const DominantCharacter& c) {
  std::map<Weight, std::int64_t> out;
  for (const auto& [dom, mult] : c.mults()) {
    for (const Weight& w : weyl_orbit(dom)) out[w] += mult;
  }
  return out;
}

}  // namespace

TEST_CASE("dominance predicate and representative") {
  CHECK(is_dominant({3, 2, 1, -1}));
  CHECK(is_dominant({3, 2, 1, 1}));
  CHECK(is_dominant({0, 0, 0, 0}));
  CHECK_FALSE(is_dominant({1, 2, 0, 0}));
  CHECK_FALSE(is_dominant({2, 1, 1, -2}));  // |last| exceeds previous

  CHECK(dominant_representative({0, -2, 1, 0}) == Weight{2, 1, 0, 0});
  // Odd number of negatives among all-nonzero entries keeps the final sign.
  CHECK(dominant_representative({-1, 2, 3, 4}) == Weight{4, 3, 2, -1});
  CHECK(dominant_representative({-1, -2, 3, 4}) == Weight{4, 3, 2, 1});
  CHECK(dominant_representative({-1, -2, -3, -4}) == Weight{4, 3, 2, 1});
  CHECK(dominant_representative({5, -5, 0, 0}) == Weight{5, 5, 0, 0});
  // Idempotent on dominant input.
  CHECK(dominant_representative({3, 2, 1, -1}) == Weight{3, 2, 1, -1});
}

TEST_CASE("orbit enumeration matches the counting formula") {
  const std::vector<Weight> dominants = {
      {0, 0, 0},      {1, 0, 0},      {1, 1, 0},    {1, 1, 1},    {1, 1, -1},
      {2, 1, 0},      {2, 2, 0},      {2, 1, 1},    {3, 2, 1},    {3, 2, -1},
      {2, 2, 1, 0},   {1, 1, 1, 1},   {1, 1, 1, -1} };
  for (const Weight& d : dominants) {
    const std::vector<Weight> orbit = weyl_orbit(d);
    CHECK(static_cast<std::int64_t>(orbit.size()) == weyl_orbit_size(d));
    // No duplicates, every element maps back to the representative.
    const std::set<Weight> distinct(orbit.begin(), orbit.end());
    CHECK(distinct.size() == orbit.size());
    for (const Weight& w : orbit) CHECK(dominant_representative(w) == d);
  }
  // Spot sizes: all-nonzero weights only admit even sign flips.
  CHECK(weyl_orbit_size({1, 0, 0}) == 6);     // 3 positions * 2 signs
  CHECK(weyl_orbit_size({1, 1, 1}) == 4);     // even sign patterns only
  CHECK(weyl_orbit_size({1, 1, -1}) == 4);
  CHECK(weyl_orbit_size({2, 1, 0}) == 24);
  CHECK(weyl_orbit_size({0, 0, 0}) == 1);
}

TEST_CASE("weyl dimension formula: frozen values") {
  // Rank 13 (the 26-dimensional completion).
  CHECK(weyl_dimension(13, Weight{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 26);
  CHECK(weyl_dimension(13, Weight{2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 350);
  CHECK(weyl_dimension(13, Weight{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 325);
  CHECK(weyl_dimension(13, Weight{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 14950);
  CHECK(weyl_dimension(13, Weight{2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 37674);
  CHECK(weyl_dimension(13, Weight{5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 139230);
  CHECK(weyl_dimension(13, Weight{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 1);
  // Small ranks.
  CHECK(weyl_dimension(4, Weight{2, 2, 0, 0}) == 300);
  CHECK(weyl_dimension(5, Weight{2, 2, 0, 0, 0}) == 770);
  CHECK(weyl_dimension(4, Weight{1, 1, 1, 1}) == 35);
  CHECK(weyl_dimension(4, Weight{1, 1, 1, -1}) == 35);
  CHECK(weyl_dimension(4, Weight{2, 0, 0, 0}) == 35);
  CHECK_THROWS_AS(weyl_dimension(4, Weight{1, 2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dimension(4, Weight{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("Freudenthal characters expand to the Weyl dimension") {
  const std::vector<std::pair<int, Weight>> cases = {
      {3, {1, 0, 0}},    {3, {1, 1, 0}},  {3, {2, 0, 0}},  {3, {2, 2, 0}},
      {4, {2, 2, 0, 0}}, {4, {1, 1, 1, 1}}, {4, {1, 1, 1, -1}},
      {5, {2, 2, 0, 0, 0}},
  };
  for (const auto& [rank, hw] : cases) {
    const DominantCharacter c = irreducible_character(rank, hw);
    CHECK(c.expanded_dimension() == weyl_dimension(rank, hw));
    CHECK(c.multiplicity(hw) == 1);  // highest weight has multiplicity one
  }
}

TEST_CASE("frozen inner multiplicities of the rank-13 (2,2) irreducible") {
  const DominantCharacter c = irreducible_character(13, Weight{2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  auto w = [](std::vector<int> prefix) {
    prefix.resize(13, 0);
    return prefix;
  };
  CHECK(c.multiplicity(w({2, 2})) == 1);
  CHECK(c.multiplicity(w({2, 1, 1})) == 1);
  CHECK(c.multiplicity(w({1, 1, 1, 1})) == 2);
  CHECK(c.multiplicity(w({2})) == 11);
  CHECK(c.multiplicity(w({1, 1})) == 23);
  CHECK(c.multiplicity(w({})) == 156);
  CHECK(c.mults().size() == 6);
  // Orbit-size checksum: 312 + 6864 + 22880 + 286 + 7176 + 156 = 37674.
  CHECK(c.expanded_dimension() == 37674);

  const DominantCharacter s2 = irreducible_character(13, w({2}));
  CHECK(s2.multiplicity(w({2})) == 1);
  CHECK(s2.multiplicity(w({1, 1})) == 1);
  CHECK(s2.multiplicity(w({})) == 12);
  CHECK(s2.expanded_dimension() == 350);
}

TEST_CASE("vector character and tensor constructions at small rank") {
  WorkCounter counter(5'000'000);
  const DominantCharacter v3 = vector_character(3);
  CHECK(v3.expanded_dimension() == 6);
  CHECK(v3.multiplicity({1, 0, 0}) == 1);

  // Sym^2 V = V(2) + trivial; Lambda^2 V = V(1,1) = adjoint for D_3.
  const DominantCharacter sym2 = char_sym_power(v3, 2, counter);
  CHECK(sym2.expanded_dimension() == 21);
  const auto sym2_dec = decompose(sym2);
  REQUIRE(sym2_dec.size() == 2);
  CHECK(sym2_dec[0] == std::pair<Weight, std::int64_t>({2, 0, 0}, 1));
  CHECK(sym2_dec[1] == std::pair<Weight, std::int64_t>({0, 0, 0}, 1));

  const DominantCharacter lam2 = char_ext_power(v3, 2, counter);
  CHECK(lam2.expanded_dimension() == 15);
  const auto lam2_dec = decompose(lam2);
  REQUIRE(lam2_dec.size() == 1);
  CHECK(lam2_dec[0].first == Weight{1, 1, 0});

  // V (x) V = Sym^2 + Lambda^2 weightwise.
  const DominantCharacter vv = char_tensor(v3, v3, counter);
  CHECK(full_expansion(vv) == full_expansion([&] {
          DominantCharacter sum(3);
          for (const auto& [dom, mult] : sym2.mults()) sum.add(dom, mult);
          for (const auto& [dom, mult] : lam2.mults()) sum.add(dom, mult);
          return sum;
        }()));
  CHECK(counter.used() > 0);
}

TEST_CASE("character powers match the cyclic brute-force oracle via the torus") {
  // Any torus substitution turns a Weyl-side power into a cyclic-side power;
  // the cyclic module's brute oracle then validates the Weyl-side expansion.
  WorkCounter counter(5'000'000);
  const int rank = 3;
  const DominantCharacter v = vector_character(rank);
  const std::vector<std::int64_t> assignment = {0, 1, 2};
  const std::int64_t order = 4;
  const CyclicCharacter cv = torus_specialize(v, assignment, order);
  for (int k = 1; k <= 3; ++k) {
    CHECK(torus_specialize(char_sym_power(v, k, counter), assignment, order) ==
          oracles::brute_sym_power(cv, k));
    CHECK(torus_specialize(char_ext_power(v, k, counter), assignment, order) ==
          oracles::brute_ext_power(cv, k));
  }
}

TEST_CASE("greedy decomposition recovers built characters and rejects fakes") {
  DominantCharacter c(4);
  c.add({2, 2, 0, 0}, 1);
  c.add({1, 1, 1, -1}, 3);
  c.add({0, 0, 0, 0}, 2);
  // Build the genuine character sum and decompose it back.
  DominantCharacter sum(4);
  for (const auto& [hw, mult] : c.mults()) {
    const DominantCharacter irr = irreducible_character(4, hw);
    for (const auto& [dom, m] : irr.mults()) sum.add(dom, m * mult);
  }
  const auto dec = decompose(sum);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0] == std::pair<Weight, std::int64_t>({2, 2, 0, 0}, 1));
  CHECK(dec[1] == std::pair<Weight, std::int64_t>({1, 1, 1, -1}, 3));
  CHECK(dec[2] == std::pair<Weight, std::int64_t>({0, 0, 0, 0}, 2));

  // A bare orbit without its lower strata is not a character.
  DominantCharacter fake(4);
  fake.add({2, 2, 0, 0}, 1);
  CHECK_THROWS_AS(decompose(fake), std::logic_error);
}

TEST_CASE("torus specialization bridges to the cyclic module") {
  // The rank-13 vector representation specialized at an order-3 element with
  // five fixed coordinates gives the 26-dimensional completion character of
  // the order-3 action with invariant dimension 10 + 2.
  const DominantCharacter v = vector_character(13);
  const std::vector<std::int64_t> assignment = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1};
  const CyclicCharacter c = torus_specialize(v, assignment, 3);
  CHECK(c == CyclicCharacter(3, {10, 8, 8}));

  // Zero weights of Lambda^2 V: exactly `rank` of them per exterior square.
  WorkCounter counter(5'000'000);
  const DominantCharacter lam2 = char_ext_power(vector_character(4), 2, counter);
  const CyclicCharacter all_fixed = torus_specialize(lam2, {0, 0, 0, 0}, 1);
  CHECK(all_fixed.dimension() == 28);
  const CyclicCharacter generic = torus_specialize(lam2, {1, 2, 4, 8}, 1000);
  CHECK(generic.eig(0) == 4);  // the Cartan directions

  // Size validation: assignment length must equal the rank.
  CHECK_THROWS_AS(torus_specialize(v, {0, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(torus_specialize(v, assignment, 0), std::invalid_argument);
}

TEST_CASE("plethysm certificates at small rank") {
  WorkCounter c4(100'000'000);
  const PlethysmCertificate r4 = verify_plethysm(4, c4);
  CHECK(r4.rank == 4);
  CHECK(r4.dim_vector == 8);
  CHECK(r4.dim_sym2 == 36);
  CHECK(r4.dim_lambda4 == 70);
  CHECK(r4.dim_sym2lambda2 == 406);
  CHECK(r4.dim_v22 == 300);
  CHECK(r4.three_term_identity);
  // 406 = 300 + 35 + 35 + 35 + 1; the middle exterior power splits at rank 4.
  REQUIRE(r4.decomposition.size() == 5);
  CHECK(r4.decomposition[0].first == Weight{2, 2, 0, 0});
  CHECK(r4.decomposition_dims == std::vector<std::int64_t>{300, 35, 35, 35, 1});
  CHECK(r4.work_units == c4.used());

  WorkCounter c5(100'000'000);
  const PlethysmCertificate r5 = verify_plethysm(5, c5);
  CHECK(r5.dim_v22 == 770);
  CHECK(r5.three_term_identity);
  // Sym^2(45) = 1035 = 55 + 210 + 770 as the three-term split;
  // the greedy irreducible decomposition is 770 + 54 + 210 + 1.
  CHECK(r5.dim_sym2lambda2 == 1035);
  CHECK(r5.decomposition_dims == std::vector<std::int64_t>{770, 54, 210, 1});
  WorkCounter c1(100);
  CHECK_THROWS_AS(verify_plethysm(1, c1), std::invalid_argument);
}

TEST_CASE("work cap interrupts oversized expansions") {
  WorkCounter tiny(50);
  CHECK_THROWS_AS(verify_plethysm(4, tiny), WorkCapExceeded);
  CHECK(tiny.used() > tiny.cap());

  // The environment variable drives the default cap.
  const char* saved = std::getenv("OG10_WORK_CAP");
  const std::string saved_value = saved ? saved : "";
  setenv("OG10_WORK_CAP", "12345", 1);
  CHECK(WorkCounter::default_cap() == 12345);
  if (saved) {
    setenv("OG10_WORK_CAP", saved_value.c_str(), 1);
  } else {
    unsetenv("OG10_WORK_CAP");
    CHECK(WorkCounter::default_cap() == 100'000'000);
  }
}

TEST_CASE("DominantCharacter add validates input") {
  DominantCharacter c(4);
  CHECK_THROWS_AS(c.add({1, 2, 0, 0}, 1), std::invalid_argument);  // not dominant
  CHECK_THROWS_AS(c.add({1, 0, 0}, 1), std::invalid_argument);     // wrong rank
  CHECK_THROWS_AS(c.add({1, 0, 0, 0}, -1), std::logic_error);      // driven negative
  c.add({1, 0, 0, 0}, 2);
  c.add({1, 0, 0, 0}, 3);
  CHECK(c.multiplicity({1, 0, 0, 0}) == 5);
  CHECK(c.expanded_dimension() == 40);
}
