#pragma once

// Exact rationals and certified rational enclosures.
//
// Everything in this header is exact: there is no binary floating point on
// any path. Enclosures are closed rational intervals that are guaranteed to
// contain the real they stand for; every operation rounds outward (which,
// with rational endpoints, means it is simply exact interval arithmetic).

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace equisum::realnum {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "p/q" or a finite decimal such as "-0.125".
  static Rational parse(const std::string& text);
  /// 2^exp for any (possibly negative) exponent.
  static Rational pow2(long exp);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "p/q", or "p" for integers.
  std::string str() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
Rational min(const Rational& x, const Rational& y);
Rational max(const Rational& x, const Rational& y);

enum class Rounding { Down, Up };

/// Fixed-point decimal rendering with `fraction_digits` digits after the
/// point, rounded toward -inf (Down) or +inf (Up).
std::string to_decimal(const Rational& q, int fraction_digits, Rounding mode);

/// Closed interval [lo, hi] with rational endpoints, lo <= hi.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const Rational& point);
  Enclosure(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

Enclosure operator+(const Enclosure& x, const Enclosure& y);
Enclosure operator-(const Enclosure& x, const Enclosure& y);
Enclosure operator-(const Enclosure& x);
Enclosure operator*(const Enclosure& x, const Enclosure& y);
Enclosure operator*(const Rational& k, const Enclosure& x);
Enclosure operator+(const Rational& k, const Enclosure& x);
Enclosure operator-(const Rational& k, const Enclosure& x);
Enclosure square(const Enclosure& x);

/// Encloses sqrt(q) with width at most eps. Throws DomainError for q < 0 or
/// eps <= 0. Perfect squares come back as a point interval.
Enclosure enclose_sqrt(const Rational& q, const Rational& eps);

enum class Sign { Negative, Indeterminate, Positive };

std::string to_string(Sign s);

/// Outcome of a certified sign decision; `enclosure` is the last (tightest)
/// enclosure evaluated.
struct SignResult {
  Sign sign = Sign::Indeterminate;
  Enclosure enclosure;
  int rounds = 0;
};

struct RefinementSchedule {
  long start_exp = 20;   // first eps = 2^-start_exp
  long floor_exp = 200;  // give up once the enclosure is narrower than 2^-floor_exp

  Rational start_eps() const { return Rational::pow2(-start_exp); }
  Rational floor_eps() const { return Rational::pow2(-floor_exp); }
};

using EnclosureFn = std::function<Enclosure(const Rational& eps)>;

/// Decides the sign of the real enclosed by value_at(eps) by halving eps until
/// the enclosure excludes zero or gets narrower than eps_floor.
SignResult certified_sign(const EnclosureFn& value_at, const Rational& eps_floor);
SignResult certified_sign(const EnclosureFn& value_at, const RefinementSchedule& schedule = {});

}  // namespace equisum::realnum
