#include "equisum/realnum.hpp"

#include <algorithm>
#include <ostream>

namespace equisum::realnum {

namespace {

mpz_class floor_of(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_of(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool perfect_square_root(const mpz_class& n, mpz_class& root) {
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw DomainError("Rational::parse: empty string");
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      return Rational(mpz_class(text.substr(0, slash), 10), mpz_class(text.substr(slash + 1), 10));
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits == "-" || digits == "+" || digits.empty()) throw DomainError("Rational::parse: no digits");
      if (digits.front() == '+') digits.erase(0, 1);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
      return Rational(mpz_class(digits, 10), den);
    }
    std::string digits = text;
    if (digits.front() == '+') digits.erase(0, 1);
    return Rational(mpz_class(digits, 10), mpz_class(1));
  } catch (const std::invalid_argument&) {
    throw DomainError("Rational::parse: malformed '" + text + "'");
  }
}

Rational Rational::pow2(long exp) {
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exp < 0 ? -exp : exp));
  return exp < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }
Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

std::string to_decimal(const Rational& q, int fraction_digits, Rounding mode) {
  if (fraction_digits < 0) throw DomainError("to_decimal: negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(fraction_digits));
  const mpq_class scaled = q.raw() * scale;
  const mpz_class n = mode == Rounding::Down ? floor_of(scaled) : ceil_of(scaled);

  std::string digits = mpz_class(abs(n)).get_str();
  if (digits.size() <= static_cast<std::size_t>(fraction_digits)) {
    digits.insert(0, static_cast<std::size_t>(fraction_digits) + 1 - digits.size(), '0');
  }
  if (fraction_digits > 0) digits.insert(digits.size() - static_cast<std::size_t>(fraction_digits), 1, '.');
  return (n < 0 ? "-" : "") + digits;
}

Enclosure::Enclosure(const Rational& point) : lo_(point), hi_(point) {}

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("Enclosure: lo > hi");
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) { return os << '[' << e.lo() << ", " << e.hi() << ']'; }

Enclosure operator+(const Enclosure& x, const Enclosure& y) { return {x.lo() + y.lo(), x.hi() + y.hi()}; }

Enclosure operator-(const Enclosure& x, const Enclosure& y) { return {x.lo() - y.hi(), x.hi() - y.lo()}; }

Enclosure operator-(const Enclosure& x) { return {-x.hi(), -x.lo()}; }

Enclosure operator*(const Enclosure& x, const Enclosure& y) {
  const Rational p1 = x.lo() * y.lo();
  const Rational p2 = x.lo() * y.hi();
  const Rational p3 = x.hi() * y.lo();
  const Rational p4 = x.hi() * y.hi();
  return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

Enclosure operator*(const Rational& k, const Enclosure& x) {
  if (k.sign() >= 0) return {k * x.lo(), k * x.hi()};
  return {k * x.hi(), k * x.lo()};
}

Enclosure operator+(const Rational& k, const Enclosure& x) { return {k + x.lo(), k + x.hi()}; }

Enclosure operator-(const Rational& k, const Enclosure& x) { return {k - x.hi(), k - x.lo()}; }

Enclosure square(const Enclosure& x) {
  const Rational l2 = x.lo() * x.lo();
  const Rational h2 = x.hi() * x.hi();
  if (x.lo().sign() >= 0) return {l2, h2};
  if (x.hi().sign() <= 0) return {h2, l2};
  return {Rational(0), max(l2, h2)};
}

Enclosure enclose_sqrt(const Rational& q, const Rational& eps) {
  if (q.sign() < 0) throw DomainError("enclose_sqrt: negative radicand " + q.str());
  if (eps.sign() <= 0) throw DomainError("enclose_sqrt: eps must be positive");
  if (q.is_zero()) return Enclosure(Rational(0));

  mpz_class num_root;
  mpz_class den_root;
  if (perfect_square_root(q.numerator(), num_root) && perfect_square_root(q.denominator(), den_root)) {
    return Enclosure(Rational(num_root, den_root));
  }

  // Integer bracket: isqrt(floor q)^2 <= q <= ceil(sqrt(ceil q))^2.
  mpz_class lo_int;
  mpz_class hi_int;
  mpz_sqrt(lo_int.get_mpz_t(), floor_of(q.raw()).get_mpz_t());
  const mpz_class q_ceil = ceil_of(q.raw());
  mpz_sqrt(hi_int.get_mpz_t(), q_ceil.get_mpz_t());
  if (hi_int * hi_int < q_ceil) hi_int += 1;

  Rational lo(lo_int, mpz_class(1));
  Rational hi(hi_int, mpz_class(1));
  const Rational half(1, 2);
  while (hi - lo > eps) {
    Rational mid = (lo + hi) * half;
    if (mid * mid <= q) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {lo, hi};
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Positive: return "Positive";
    case Sign::Indeterminate: break;
  }
  return "Indeterminate";
}

namespace {

SignResult refine_until_signed(const EnclosureFn& value_at, Rational eps, const Rational& eps_floor) {
  if (eps_floor.sign() <= 0) throw DomainError("certified_sign: eps_floor must be positive");
  // value_at may shrink slower than eps; stop refining well past the floor.
  const Rational eps_stop = eps_floor * Rational::pow2(-64);
  const Rational half(1, 2);

  SignResult result;
  while (true) {
    result.enclosure = value_at(eps);
    ++result.rounds;
    if (result.enclosure.lo().sign() > 0) {
      result.sign = Sign::Positive;
      return result;
    }
    if (result.enclosure.hi().sign() < 0) {
      result.sign = Sign::Negative;
      return result;
    }
    if (result.enclosure.width() < eps_floor || eps < eps_stop) {
      result.sign = Sign::Indeterminate;
      return result;
    }
    eps *= half;
  }
}

}  // namespace

SignResult certified_sign(const EnclosureFn& value_at, const Rational& eps_floor) {
  return refine_until_signed(value_at, RefinementSchedule{}.start_eps(), eps_floor);
}

SignResult certified_sign(const EnclosureFn& value_at, const RefinementSchedule& schedule) {
  return refine_until_signed(value_at, schedule.start_eps(), schedule.floor_eps());
}

}  // namespace equisum::realnum
