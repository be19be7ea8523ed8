#pragma once

#include <cstdint>
#include <optional>

#include "og10/cyclic_character.hpp"

namespace og10 {

// Numerical hypotheses about the manifold whose total cohomology carries the
// orthogonal-algebra action: second Betti number, total Euler characteristic
// (= total Betti number, no odd cohomology), and complex dimension. Defaults
// are the OG10 constants; only the default profile has shipped reference
// polynomial data attached.
struct ManifoldProfile {
  std::int64_t second_betti = 24;
  std::int64_t total_euler = 176904;
  std::int64_t complex_dimension = 10;

  static ManifoldProfile og10() { return ManifoldProfile{}; }

  bool is_default() const {
    return second_betti == 24 && total_euler == 176904 && complex_dimension == 10;
  }

  // Half the complex dimension: the top symmetric-power exponent of the
  // graded route and the defining exponent of the Verbitsky component.
  std::int64_t half_dimension() const { return complex_dimension / 2; }

  // Throws std::invalid_argument when structurally unusable (non-positive
  // entries, odd complex dimension) and when total_euler disagrees with the
  // dimension count dim V_(m) + dim V_(2,2) forced by the other two fields.
  void validate() const;
};

// Fixed-subspace dimensions of the two irreducible summands of total
// cohomology and their combinations. total_case_b is present only for even
// operator order: there the action on the second summand is determined only
// up to sign, so both sign cases are reported.
struct ComponentInvariants {
  std::int64_t verbitsky_fixed = 0;
  std::int64_t v22_fixed = 0;
  std::int64_t total_case_a = 0;
  std::optional<std::int64_t> total_case_b;

  friend bool operator==(const ComponentInvariants& a, const ComponentInvariants& b) {
    return a.verbitsky_fixed == b.verbitsky_fixed && a.v22_fixed == b.v22_fixed &&
           a.total_case_a == b.total_case_a && a.total_case_b == b.total_case_b;
  }
};

// Expands the single-integer input sugar into a rational second-cohomology
// character: order 1 -> (b2); order 2 -> (inv, b2-inv); order 3 -> invariant
// dimension must be even, (inv, (b2-inv)/2, (b2-inv)/2). Other orders need an
// explicit multiplicity vector. Throws std::invalid_argument on bad input.
CyclicCharacter h2_from_invariant_dim(std::int64_t order, std::int64_t invariant_dim,
                                      const ManifoldProfile& profile = ManifoldProfile::og10());

// Extends a second-cohomology action to the Mukai completion V = H^2 + U by
// two extra invariant directions (the hyperbolic plane is fixed). Validates
// dimension(h2) == profile.second_betti and rationality.
CyclicCharacter mukai_extend(const CyclicCharacter& h2,
                             const ManifoldProfile& profile = ManifoldProfile::og10());

// Character of the Verbitsky component on the Mukai completion: Sym^m V minus
// Sym^(m-2) V with m = profile.half_dimension() (the subtraction is
// equivariant because the embedding is multiplication by the invariant
// quadratic form). The result certifies non-negative for every rational
// orthogonal input.
VirtualCyclicCharacter verbitsky_character(const CyclicCharacter& mukai,
                                           const ManifoldProfile& profile = ManifoldProfile::og10());

// Character of the (2,2)-component: Sym^2 Lambda^2 V minus Sym^2 V minus
// Lambda^4 V (the three-term decomposition certified independently by the
// weyl module).
VirtualCyclicCharacter v22_character(const CyclicCharacter& mukai,
                                     const ManifoldProfile& profile = ManifoldProfile::og10());

// Dimensions of the two components at the given profile (identity operator).
std::int64_t dim_verbitsky(const ManifoldProfile& profile = ManifoldProfile::og10());
std::int64_t dim_v22(const ManifoldProfile& profile = ManifoldProfile::og10());

// Fixed-subspace dimensions for the operator induced by `h2` on total
// cohomology. Case a takes the canonical lift on both components; case b
// (even order only) flips the sign of the action on the (2,2)-component,
// contributing eig(negate_operator(v22), 0) instead.
ComponentInvariants total_invariants(const CyclicCharacter& h2,
                                     const ManifoldProfile& profile = ManifoldProfile::og10());

// Independent route to the Verbitsky fixed dimension that never builds the
// 26-dimensional completion: grade the component by symmetric powers of the
// second-cohomology action and close up with Poincare duality,
//   2 * sum_{k=0}^{m-1} eig(Sym^k h2, 0) + eig(Sym^m h2, 0).
// Must agree with eig(verbitsky_character(mukai_extend(h2)), 0) for every
// rational input; this is the artifact's strongest internal cross-check.
std::int64_t graded_verbitsky_invariants(const CyclicCharacter& h2,
                                         const ManifoldProfile& profile = ManifoldProfile::og10());

}  // namespace og10
