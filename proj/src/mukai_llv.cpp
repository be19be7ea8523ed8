#include "og10/mukai_llv.hpp"

#include <stdexcept>
#include <string>

#include "og10/rational.hpp"

namespace og10 {
namespace {

std::int64_t dim_verbitsky_of(std::int64_t v_dim, std::int64_t m) {
  // dim Sym^m - dim Sym^(m-2) on a v_dim-dimensional space.
  return checked_sub(binomial(v_dim + m - 1, m), binomial(v_dim + m - 3, m - 2));
}

std::int64_t dim_v22_of(std::int64_t v_dim) {
  const std::int64_t l2 = binomial(v_dim, 2);
  return checked_sub(checked_sub(binomial(l2 + 1, 2), binomial(v_dim + 1, 2)),
                     binomial(v_dim, 4));
}

}  // namespace

void ManifoldProfile::validate() const {
  if (second_betti < 1 || total_euler < 1 || complex_dimension < 2) {
    throw std::invalid_argument("manifold profile entries must be positive");
  }
  if (complex_dimension % 2 != 0) {
    throw std::invalid_argument("complex dimension must be even");
  }
  const std::int64_t v_dim = second_betti + 2;
  const std::int64_t expected =
      checked_add(dim_verbitsky_of(v_dim, half_dimension()), dim_v22_of(v_dim));
  if (expected != total_euler) {
    throw std::invalid_argument(
        "profile is inconsistent: component dimensions sum to " + std::to_string(expected) +
        ", not the declared total " + std::to_string(total_euler));
  }
}

CyclicCharacter h2_from_invariant_dim(std::int64_t order, std::int64_t invariant_dim,
                                      const ManifoldProfile& profile) {
  const std::int64_t b2 = profile.second_betti;
  if (invariant_dim < 0 || invariant_dim > b2) {
    throw std::invalid_argument("invariant dimension must lie in 0.." + std::to_string(b2));
  }
  switch (order) {
    case 1:
      if (invariant_dim != b2) {
        throw std::invalid_argument("order 1 forces invariant dimension " + std::to_string(b2));
      }
      return CyclicCharacter(1, {b2});
    case 2:
      return CyclicCharacter(2, {invariant_dim, b2 - invariant_dim});
    case 3: {
      if ((b2 - invariant_dim) % 2 != 0) {
        throw std::invalid_argument(
            "order 3 requires the non-invariant part to have even dimension (conjugate "
            "eigenspaces pair up)");
      }
      const std::int64_t rest = (b2 - invariant_dim) / 2;
      return CyclicCharacter(3, {invariant_dim, rest, rest});
    }
    default:
      throw std::invalid_argument(
          "invariant-dimension shorthand is defined for orders 1..3 only; pass the full "
          "multiplicity vector for order " +
          std::to_string(order));
  }
}

CyclicCharacter mukai_extend(const CyclicCharacter& h2, const ManifoldProfile& profile) {
  if (h2.dimension() != profile.second_betti) {
    throw std::invalid_argument("second-cohomology character has dimension " +
                                std::to_string(h2.dimension()) + ", expected " +
                                std::to_string(profile.second_betti));
  }
  if (!h2.is_rational()) {
    throw std::invalid_argument(
        "second-cohomology character is not Galois-rational; an integral operator has "
        "multiplicities constant on primitive-root classes");
  }
  std::vector<std::int64_t> mults = h2.mults();
  mults[0] = checked_add(mults[0], 2);
  return CyclicCharacter(h2.order(), std::move(mults));
}

VirtualCyclicCharacter verbitsky_character(const CyclicCharacter& mukai,
                                           const ManifoldProfile& profile) {
  if (mukai.dimension() != profile.second_betti + 2) {
    throw std::invalid_argument("completion character has dimension " +
                                std::to_string(mukai.dimension()) + ", expected " +
                                std::to_string(profile.second_betti + 2));
  }
  const std::int64_t m = profile.half_dimension();
  return VirtualCyclicCharacter(sym_power(mukai, m)) -
         VirtualCyclicCharacter(sym_power(mukai, m - 2));
}

VirtualCyclicCharacter v22_character(const CyclicCharacter& mukai,
                                     const ManifoldProfile& profile) {
  if (mukai.dimension() != profile.second_betti + 2) {
    throw std::invalid_argument("completion character has dimension " +
                                std::to_string(mukai.dimension()) + ", expected " +
                                std::to_string(profile.second_betti + 2));
  }
  const CyclicCharacter lambda2 = ext_power(mukai, 2);
  return VirtualCyclicCharacter(sym_power(lambda2, 2)) -
         VirtualCyclicCharacter(sym_power(mukai, 2)) -
         VirtualCyclicCharacter(ext_power(mukai, 4));
}

std::int64_t dim_verbitsky(const ManifoldProfile& profile) {
  return dim_verbitsky_of(profile.second_betti + 2, profile.half_dimension());
}

std::int64_t dim_v22(const ManifoldProfile& profile) {
  return dim_v22_of(profile.second_betti + 2);
}

ComponentInvariants total_invariants(const CyclicCharacter& h2, const ManifoldProfile& profile) {
  const CyclicCharacter mukai = mukai_extend(h2, profile);
  const CyclicCharacter verbitsky = verbitsky_character(mukai, profile).certify_non_negative();
  const CyclicCharacter v22 = v22_character(mukai, profile).certify_non_negative();

  ComponentInvariants out;
  out.verbitsky_fixed = verbitsky.eig(0);
  out.v22_fixed = v22.eig(0);
  out.total_case_a = checked_add(out.verbitsky_fixed, out.v22_fixed);
  if (h2.order() % 2 == 0) {
    out.total_case_b = checked_add(out.verbitsky_fixed, negate_operator(v22).eig(0));
  }
  return out;
}

std::int64_t graded_verbitsky_invariants(const CyclicCharacter& h2,
                                         const ManifoldProfile& profile) {
  if (h2.dimension() != profile.second_betti) {
    throw std::invalid_argument("second-cohomology character has dimension " +
                                std::to_string(h2.dimension()) + ", expected " +
                                std::to_string(profile.second_betti));
  }
  if (!h2.is_rational()) {
    throw std::invalid_argument("second-cohomology character is not Galois-rational");
  }
  const std::int64_t m = profile.half_dimension();
  std::int64_t below_middle = 0;
  for (std::int64_t k = 0; k < m; ++k) {
    below_middle = checked_add(below_middle, sym_power(h2, k).eig(0));
  }
  return checked_add(checked_mul(2, below_middle), sym_power(h2, m).eig(0));
}

}  // namespace og10
