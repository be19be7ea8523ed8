#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace og10 {

// Exact rational number over overflow-checked 64-bit integers.
//
// Every arithmetic operation normalizes (gcd-reduced, positive denominator)
// and throws std::overflow_error if an intermediate product or sum would not
// fit in int64_t. The magnitudes in this artifact are tiny (dimensions up to
// ~2e5, coefficients with denominators up to 60), so the checked-int64
// representation is exact headroom-wise while keeping values trivially
// hashable, comparable and printable.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Parses "p", "-p", "p/q" (optionally signed); throws std::invalid_argument
  // on malformed input or zero denominator.
  static Rational parse(const std::string& text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  // Integer value; throws std::logic_error if not an integer.
  std::int64_t as_integer() const;

  // Lowest-terms rendering: "p" when integral, else "p/q".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void normalize();

  std::int64_t num_;
  std::int64_t den_;  // always > 0
};

// Overflow-checked int64 helpers shared across the library.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Binomial coefficient C(n, k) with overflow checking; 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace og10
