#include "og10/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace og10 {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::int64_t RationalPolynomial::evaluate_integer(std::int64_t x) const {
  const Rational value = evaluate(Rational(x));
  if (!value.is_integer()) {
    throw std::logic_error("polynomial value " + value.str() + " at " + std::to_string(x) +
                           " is not an integer");
  }
  return value.as_integer();
}

std::string RationalPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coefficient(k);
    if (c.is_zero()) {
      continue;
    }
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) {
        os << "-";
      }
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1)) && k > 0;
    if (!unit) {
      os << mag.str();
    }
    if (k > 0) {
      if (!unit) {
        os << "*";
      }
      os << var;
      if (k > 1) {
        os << "^" << k;
      }
    }
  }
  if (first) {
    return "0";
  }
  return os.str();
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coefficient(static_cast<int>(i)) + rhs.coefficient(static_cast<int>(i));
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coefficient(static_cast<int>(i)) - rhs.coefficient(static_cast<int>(i));
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial interpolate_exact(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& points,
    std::optional<int> expected_max_degree) {
  if (points.empty()) {
    return RationalPolynomial::zero();
  }
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("duplicate interpolation abscissa " +
                                    std::to_string(points[i].first));
      }
    }
  }

  // Newton divided differences: table[j] holds f[x_{j-k},...,x_j] at stage k.
  std::vector<Rational> diffs(n);
  std::vector<Rational> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i] = Rational(points[i].second);
  }
  diffs[0] = table[0];
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = n - 1; j >= k; --j) {
      table[j] = (table[j] - table[j - 1]) /
                 (Rational(points[j].first) - Rational(points[j - k].first));
    }
    diffs[k] = table[k];
  }

  // Effective degree: last stage with a nonzero divided difference. Data
  // sampled from a degree-d polynomial has vanishing differences beyond
  // stage d, so the Newton form truncates there; expanding the full basis
  // over many abscissae would overflow while contributing nothing.
  std::size_t effective = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!diffs[k].is_zero()) {
      effective = k;
    }
  }
  if (expected_max_degree && effective > static_cast<std::size_t>(*expected_max_degree)) {
    throw std::logic_error("interpolated degree " + std::to_string(effective) +
                           " exceeds expected maximum " + std::to_string(*expected_max_degree) +
                           "; sampled values are inconsistent with the model");
  }

  // Expand the truncated Newton form into the monomial basis.
  std::vector<Rational> poly(effective + 1, Rational(0));
  std::vector<Rational> basis(effective + 1, Rational(0));  // prod_{j<k} (x - x_j)
  basis[0] = Rational(1);
  std::size_t basis_degree = 0;
  for (std::size_t k = 0; k <= effective; ++k) {
    if (!diffs[k].is_zero()) {
      for (std::size_t i = 0; i <= basis_degree; ++i) {
        poly[i] += diffs[k] * basis[i];
      }
    }
    if (k < effective) {
      const Rational xk(points[k].first);
      std::vector<Rational> next(basis_degree + 2, Rational(0));
      for (std::size_t i = 0; i <= basis_degree; ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * xk;
      }
      basis = std::move(next);
      ++basis_degree;
    }
  }

  RationalPolynomial result{std::move(poly)};

  for (const auto& [x, y] : points) {
    if (result.evaluate(Rational(x)) != Rational(y)) {
      throw std::logic_error("interpolant fails to reproduce supplied point (" +
                             std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  }
  return result;
}

}  // namespace og10
