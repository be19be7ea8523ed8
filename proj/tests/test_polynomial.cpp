#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "og10/polynomial.hpp"
#include "og10/rational.hpp"

using og10::interpolate_exact;
using og10::Rational;
using og10::RationalPolynomial;

namespace {

RationalPolynomial make(std::vector<Rational> coeffs) {
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("construction trims trailing zeros; zero polynomial has degree -1") {
  CHECK(make({Rational(1), Rational(2), Rational(0)}).degree() == 1);
  CHECK(make({}).degree() == -1);
  CHECK(make({Rational(0), Rational(0)}).degree() == -1);
  CHECK(RationalPolynomial::zero().degree() == -1);
  CHECK(make({Rational(5)}).degree() == 0);
}

TEST_CASE("evaluation is exact; integer evaluation guards integrality") {
  const RationalPolynomial p = make({Rational(3), Rational(0), Rational(1, 2)});  // 3 + x^2/2
  CHECK(p.evaluate(Rational(2)) == Rational(5));
  CHECK(p.evaluate(Rational(1)) == Rational(7, 2));
  CHECK(p.evaluate_integer(2) == 5);
  CHECK_THROWS_AS(p.evaluate_integer(1), std::logic_error);
}

TEST_CASE("rendering uses descending powers and exact fractions") {
  const RationalPolynomial p =
      make({Rational(303), Rational(-22), Rational(1)});  // r^2 - 22r + 303
  CHECK(p.str("r") == "r^2 - 22*r + 303");
  const RationalPolynomial q = make({Rational(28474), Rational(-10538, 3), Rational(1447, 3),
                                     Rational(-88, 3), Rational(2, 3)});
  CHECK(q.str("r") == "2/3*r^4 - 88/3*r^3 + 1447/3*r^2 - 10538/3*r + 28474");
  CHECK(RationalPolynomial::zero().str("r") == "0");
  CHECK(make({Rational(0), Rational(-1)}).str("x") == "-x");
}

TEST_CASE("addition and subtraction are coefficientwise") {
  const RationalPolynomial a = make({Rational(1), Rational(2)});
  const RationalPolynomial b = make({Rational(3), Rational(-2), Rational(5)});
  CHECK((a + b) == make({Rational(4), Rational(0), Rational(5)}));
  CHECK((b - a) == make({Rational(2), Rational(-4), Rational(5)}));
  CHECK((a - a).degree() == -1);
}

TEST_CASE("interpolation recovers x^2 from four points") {
  const RationalPolynomial p =
      interpolate_exact({{0, 0}, {1, 1}, {2, 4}, {3, 9}}, std::nullopt);
  CHECK(p == make({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("interpolation of 25 samples of a degree-5 integer-valued polynomial") {
  // f(x) = C(x, 5): integer-valued, leading coefficient 1/120. Oversampling
  // the full 0..24 range exercises the truncation of the Newton form (the
  // untruncated 25-point basis expansion would overflow int64).
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t x = 0; x <= 24; ++x) {
    std::int64_t value = 1;
    for (std::int64_t i = 0; i < 5; ++i) {
      value *= (x - i);
    }
    points.emplace_back(x, value / 120);
  }
  const RationalPolynomial p = interpolate_exact(points, 5);
  CHECK(p.degree() == 5);
  CHECK(p.coefficient(5) == Rational(1, 120));
  CHECK(p.evaluate_integer(30) == 142506);  // C(30, 5)
  for (const auto& [x, y] : points) {
    CHECK(p.evaluate(Rational(x)) == Rational(y));
  }
}

TEST_CASE("interpolation rejects duplicate abscissae") {
  CHECK_THROWS_AS(interpolate_exact({{1, 1}, {1, 2}}, std::nullopt), std::invalid_argument);
}

TEST_CASE("degree guard flags samples inconsistent with the declared model") {
  // Quadratic data with one corrupted sample: fitting under a max degree of 2
  // must fail loudly instead of producing a silently wrong closed form.
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t x = 0; x <= 6; ++x) {
    points.emplace_back(x, x * x);
  }
  points[4].second += 1;
  CHECK_THROWS_AS(interpolate_exact(points, 2), std::logic_error);
}

TEST_CASE("constant and empty inputs") {
  CHECK(interpolate_exact({{5, 7}}, std::nullopt) == make({Rational(7)}));
  CHECK(interpolate_exact({}, std::nullopt).degree() == -1);
}
