#include "og10/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace og10 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("int64 overflow in addition");
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("int64 overflow in subtraction");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("int64 overflow in multiplication");
  }
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) {
    return 0;
  }
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // Multiply before dividing; the running value stays integral because any
    // prefix of the product formula is itself a binomial coefficient.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) {
        throw std::invalid_argument("trailing characters");
      }
      return Rational(v);
    }
    const std::int64_t p = std::stoll(text.substr(0, slash), &used);
    if (used != slash) {
      throw std::invalid_argument("trailing characters in numerator");
    }
    const std::string den_text = text.substr(slash + 1);
    const std::int64_t q = std::stoll(den_text, &used);
    if (used != den_text.size()) {
      throw std::invalid_argument("trailing characters in denominator");
    }
    return Rational(p, q);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational literal out of int64 range: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::int64_t Rational::as_integer() const {
  if (den_ != 1) {
    throw std::logic_error("rational " + str() + " is not an integer");
  }
  return num_;
}

std::string Rational::str() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = checked_sub(0, num_);
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t scale = rhs.den_ / g;
  num_ = checked_add(checked_mul(num_, scale), checked_mul(rhs.num_, den_ / g));
  den_ = checked_mul(den_, scale);
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += (-rhs); }

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  num_ = checked_mul(num_ / g1, rhs.num_ / g2);
  den_ = checked_mul(den_ / g2, rhs.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) {
    throw std::domain_error("rational division by zero");
  }
  return *this *= Rational(rhs.den_, rhs.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  // a.num/a.den < b.num/b.den  <=>  a.num*b.den < b.num*a.den (dens > 0).
  return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace og10
