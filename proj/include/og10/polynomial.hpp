#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "og10/rational.hpp"

namespace og10 {

// Exact univariate polynomial with rational coefficients, stored in ascending
// degree with trailing zeros trimmed. The zero polynomial has no coefficients
// and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending_coefficients);

  static RationalPolynomial zero() { return RationalPolynomial(); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^k (zero beyond the stored degree).
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& x) const;

  // Evaluates at an integer argument and demands an integer value; throws
  // std::logic_error otherwise (used for counting polynomials, which must be
  // integer-valued on their admissible range).
  std::int64_t evaluate_integer(std::int64_t x) const;

  // Human-readable rendering in the variable `var`, exact fractions only,
  // highest degree first, e.g. "2/15*r^5 - 8*r^4 + 7202".
  std::string str(const std::string& var = "r") const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
    return !(a == b);
  }

  RationalPolynomial operator+(const RationalPolynomial& rhs) const;
  RationalPolynomial operator-(const RationalPolynomial& rhs) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Unique least-degree interpolant through the given points, in exact rational
// arithmetic (Newton divided differences). Requirements and guarantees:
//   - abscissae must be pairwise distinct (std::invalid_argument otherwise);
//   - the result reproduces every supplied point (verified afterwards);
//   - if `expected_max_degree` is given and the interpolant needs a higher
//     degree, throws std::logic_error: the sampled data is inconsistent with
//     the caller's model, which signals a computation bug upstream.
RationalPolynomial interpolate_exact(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& points,
    std::optional<int> expected_max_degree = std::nullopt);

}  // namespace og10
