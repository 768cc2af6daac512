#include "equisum/feasibility.hpp"

#include <array>
#include <utility>

#include "equisum/geometry.hpp"

namespace equisum::feasibility {

using geometry::circumradius_sq;
using realnum::Sign;

Parameters derive_parameters(long a, long b) {
  if (a < 2 || b <= a) {
    throw OutOfScopeError("derive_parameters: need b > a >= 2, got a=" + std::to_string(a) + ", b=" + std::to_string(b));
  }
  Parameters p;
  p.a = a;
  p.b = b;
  p.c = 1 + b / (a + 1);
  p.beta = b % (a + 1);
  p.alpha = a + 1 - p.beta;
  return p;
}

namespace {

constexpr std::array<std::pair<VerdictKind, const char*>, 6> kVerdictNames{{
    {VerdictKind::Prop1, "Prop1"},
    {VerdictKind::Prop2, "Prop2"},
    {VerdictKind::BetaTrivial, "BetaTrivial"},
    {VerdictKind::InequalityHolds, "InequalityHolds"},
    {VerdictKind::InequalityFails, "InequalityFails"},
    {VerdictKind::Indeterminate, "Indeterminate"},
}};

}  // namespace

std::string to_string(VerdictKind k) {
  for (const auto& [kind, name] : kVerdictNames) {
    if (kind == k) return name;
  }
  return "Indeterminate";
}

std::optional<VerdictKind> verdict_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kVerdictNames) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

Enclosure f_enclosure(long n, const Rational& eps) {
  if (n < 1) throw realnum::DomainError("f_enclosure: n must be >= 1");
  return Rational(1) - realnum::enclose_sqrt(Rational(n, n + 1), eps);
}

Rational g_radicand(long c) {
  if (c < 2) throw realnum::DomainError("g_radicand: c must be >= 2");
  return Rational(1, 2) * (Rational(c - 1, c) + Rational(c, c + 1));
}

Enclosure g_enclosure(long c, const Rational& eps) { return Rational(1) - realnum::enclose_sqrt(g_radicand(c), eps); }

Enclosure margin_enclosure(const Parameters& p, const Rational& eps) {
  const Enclosure g2 = realnum::square(g_enclosure(p.c, eps));
  const Enclosure f_prev2 = realnum::square(f_enclosure(p.c - 1, eps));
  const Enclosure f_cur2 = realnum::square(f_enclosure(p.c, eps));
  return g2 - circumradius_sq(p.alpha - 1) * f_prev2 - circumradius_sq(p.beta - 1) * f_cur2;
}

FeasibilityVerdict check_inequality(const Parameters& p, const RefinementSchedule& schedule) {
  if (p.beta < 0 || p.beta > p.a || p.c < 2) throw OutOfScopeError("check_inequality: parameters out of range");
  const SignResult s = realnum::certified_sign([&p](const Rational& eps) { return margin_enclosure(p, eps); }, schedule);

  FeasibilityVerdict v;
  v.params = p;
  v.margin = s.enclosure;
  if (s.sign == Sign::Positive || s.enclosure.lo().sign() >= 0) {
    v.kind = VerdictKind::InequalityHolds;
  } else if (s.sign == Sign::Negative) {
    v.kind = VerdictKind::InequalityFails;
  } else {
    v.kind = VerdictKind::Indeterminate;
  }
  return v;
}

FeasibilityVerdict classify(long a, long b, const RefinementSchedule& schedule) {
  if (a < 1 || b < 1) throw OutOfScopeError("classify: a and b must be positive");
  if (a == 1 || b == 1) {
    FeasibilityVerdict v;
    v.kind = VerdictKind::Prop1;
    v.swapped = a > b;
    return v;
  }
  if (a == b) {
    FeasibilityVerdict v;
    v.kind = VerdictKind::Prop2;
    return v;
  }
  if (a > b) {
    FeasibilityVerdict v = classify(b, a, schedule);
    v.swapped = true;
    return v;
  }

  const Parameters p = derive_parameters(a, b);
  if (p.beta == 0 || p.beta == 1 || p.beta == a) {
    FeasibilityVerdict v;
    v.kind = VerdictKind::BetaTrivial;
    v.params = p;
    return v;
  }
  return check_inequality(p, schedule);
}

bool lemma_applies(long a, long b) {
  if (a < 2) throw OutOfScopeError("lemma_applies: a must be >= 2");
  return b >= a * a + a;
}

std::optional<bool> LemmaCertificate::holds() const {
  if (ratio.sign == Sign::Indeterminate) return std::nullopt;
  return ratio.sign == Sign::Positive && d_bound_holds;
}

LemmaCertificate lemma_certificate(long a, const RefinementSchedule& schedule) {
  if (a < 2) throw OutOfScopeError("lemma_certificate: a must be >= 2");
  LemmaCertificate cert;
  cert.a = a;
  cert.bound = Rational(a - 1, a + 1);
  for (long beta = 2; beta <= a - 1; ++beta) {
    const long alpha = a + 1 - beta;
    cert.max_d_sum = realnum::max(cert.max_d_sum, circumradius_sq(alpha - 1) + circumradius_sq(beta - 1));
  }
  cert.d_bound_holds = cert.max_d_sum <= cert.bound;
  cert.ratio = realnum::certified_sign(
      [a, &cert](const Rational& eps) {
        return realnum::square(g_enclosure(a, eps)) - cert.bound * realnum::square(f_enclosure(a - 1, eps));
      },
      schedule);
  return cert;
}

SignResult beta_one_slack(long c, const RefinementSchedule& schedule) {
  if (c < 2) throw realnum::DomainError("beta_one_slack: c must be >= 2");
  return realnum::certified_sign(
      [c](const Rational& eps) {
        return Rational(2) * realnum::square(g_enclosure(c, eps)) - realnum::square(f_enclosure(c - 1, eps));
      },
      schedule);
}

SignResult f_decrease(long n, const RefinementSchedule& schedule) {
  return realnum::certified_sign(
      [n](const Rational& eps) { return f_enclosure(n, eps) - f_enclosure(n + 1, eps); }, schedule);
}

SignResult ratio_increase(long c, const RefinementSchedule& schedule) {
  if (c < 2) throw realnum::DomainError("ratio_increase: c must be >= 2");
  return realnum::certified_sign(
      [c](const Rational& eps) {
        return realnum::square(g_enclosure(c + 1, eps)) * realnum::square(f_enclosure(c - 1, eps)) -
               realnum::square(g_enclosure(c, eps)) * realnum::square(f_enclosure(c, eps));
      },
      schedule);
}

}  // namespace equisum::feasibility
