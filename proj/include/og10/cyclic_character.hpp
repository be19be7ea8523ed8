#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace og10 {

class VirtualCyclicCharacter;

// Eigenvalue-multiplicity vector of a finite-order diagonalizable operator.
//
// `order` is the operator's order n; `mults[i]` is the multiplicity of the
// eigenvalue exp(2*pi*i*I/n). All eigenvalue bookkeeping is index arithmetic
// modulo n; the dimension of the underlying space is the sum of entries.
// Values are immutable; every operation below is pure.
class CyclicCharacter {
 public:
  // Validates order >= 1, mults.size() == order, entries >= 0.
  CyclicCharacter(std::int64_t order, std::vector<std::int64_t> mults);

  // The identity operator on a `dimension`-dimensional space (order 1).
  static CyclicCharacter identity(std::int64_t dimension);

  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& mults() const { return mults_; }

  // Multiplicity of exp(2*pi*k*I/n); k is reduced modulo the order, so
  // negative indices wrap. eig(0) is the fixed-subspace dimension.
  std::int64_t eig(std::int64_t k) const;

  std::int64_t dimension() const;

  // True iff the multiplicities are constant on Galois classes
  // {i : gcd(i, n) = d}: the eigenvalue profile of an operator defined over
  // the rationals.
  bool is_rational() const;

  // Same operator viewed at a multiple of its order (exponent rescaling).
  // `new_order` must be a positive multiple of order().
  CyclicCharacter lifted_to(std::int64_t new_order) const;

  std::string str() const;

  friend bool operator==(const CyclicCharacter& a, const CyclicCharacter& b) {
    return a.order_ == b.order_ && a.mults_ == b.mults_;
  }
  friend bool operator!=(const CyclicCharacter& a, const CyclicCharacter& b) {
    return !(a == b);
  }

 private:
  std::int64_t order_;
  std::vector<std::int64_t> mults_;
};

// Signed multiplicity vector: the difference of two genuine characters.
// Closed under addition and subtraction; `certify_non_negative` converts back
// to CyclicCharacter and throws std::logic_error if any entry is negative.
class VirtualCyclicCharacter {
 public:
  VirtualCyclicCharacter(std::int64_t order, std::vector<std::int64_t> mults);
  VirtualCyclicCharacter(const CyclicCharacter& c);  // NOLINT: implicit by design

  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& mults() const { return mults_; }
  std::int64_t eig(std::int64_t k) const;
  std::int64_t dimension() const;  // signed total

  VirtualCyclicCharacter lifted_to(std::int64_t new_order) const;

  CyclicCharacter certify_non_negative() const;

  friend VirtualCyclicCharacter operator+(const VirtualCyclicCharacter& a,
                                          const VirtualCyclicCharacter& b);
  friend VirtualCyclicCharacter operator-(const VirtualCyclicCharacter& a,
                                          const VirtualCyclicCharacter& b);

  friend bool operator==(const VirtualCyclicCharacter& a, const VirtualCyclicCharacter& b) {
    return a.order_ == b.order_ && a.mults_ == b.mults_;
  }
  friend bool operator!=(const VirtualCyclicCharacter& a, const VirtualCyclicCharacter& b) {
    return !(a == b);
  }

 private:
  std::int64_t order_;
  std::vector<std::int64_t> mults_;
};

// Binary operations accept mixed orders by lifting both operands to the lcm.
CyclicCharacter direct_sum(const CyclicCharacter& a, const CyclicCharacter& b);
CyclicCharacter tensor(const CyclicCharacter& a, const CyclicCharacter& b);

// Adams reindexing psi^j: sends each eigenvalue z to z^j, i.e.
// out[(i*j) mod n] += mults[i]. Defined for every integer j (j = -1 is dual).
CyclicCharacter adams(const CyclicCharacter& c, std::int64_t j);

// k-th symmetric / exterior power via the Newton recurrences
//   k*e_k = sum_{i=1..k} (-1)^(i-1) psi^i (x) e_{k-i},
//   k*h_k = sum_{i=1..k} psi^i (x) h_{k-i}.
// Divisions are checked to be exact and results non-negative; a violation
// throws std::logic_error (an implementation bug, not a user error).
CyclicCharacter sym_power(const CyclicCharacter& c, std::int64_t k);
CyclicCharacter ext_power(const CyclicCharacter& c, std::int64_t k);

// Independent second route for the same constructions: coefficient extraction
// from the generating-function product over the eigenvalue classes,
//   sym:  prod_i (1 - t*z^i)^(-m_i),   ext:  prod_i (1 + t*z^i)^(m_i),
// realized as a DP over (class, degree, residue). The two routes validate
// each other; tests cross-check them on every kind of input.
CyclicCharacter sym_power_by_product(const CyclicCharacter& c, std::int64_t k);
CyclicCharacter ext_power_by_product(const CyclicCharacter& c, std::int64_t k);

// Dual operator (inverse): out[i] = mults[-i mod n].
CyclicCharacter dual(const CyclicCharacter& c);

// Character of -g for an operator g: the order is lifted to lcm(n, 2) and all
// exponents shift by the half period. For even n, eig(negate(c), 0) equals
// eig(c, n/2).
CyclicCharacter negate_operator(const CyclicCharacter& c);

}  // namespace og10
