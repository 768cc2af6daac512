#pragma once

// Parameters (c, alpha, beta) of the block construction for b > a >= 2 and
// certified decisions of its realisability condition
//
//   d_{alpha-1}^2 f(c-1)^2 + d_{beta-1}^2 f(c)^2 <= g(c)^2,
//
// with f(n) = 1 - sqrt(n/(n+1)), g(c) = 1 - sqrt((1/2)((c-1)/c + c/(c+1)))
// and d_n^2 = n/(2n+2) exact.

#include <optional>
#include <stdexcept>
#include <string>

#include "equisum/realnum.hpp"

namespace equisum::feasibility {

using realnum::Enclosure;
using realnum::Rational;
using realnum::RefinementSchedule;
using realnum::SignResult;

class OutOfScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Parameters {
  long a = 0;
  long b = 0;
  long c = 0;
  long alpha = 0;
  long beta = 0;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

/// c = floor(1 + b/(a+1)), beta = b mod (a+1), alpha = a + 1 - beta.
/// Throws OutOfScopeError unless b > a >= 2.
Parameters derive_parameters(long a, long b);

enum class VerdictKind {
  Prop1,            // a = 1 or b = 1: simplex plus one point
  Prop2,            // a = b: cross-polytope plus apex
  BetaTrivial,      // beta in {0, 1, a}
  InequalityHolds,
  InequalityFails,
  Indeterminate,
};

std::string to_string(VerdictKind k);
std::optional<VerdictKind> verdict_kind_from_string(const std::string& s);

struct FeasibilityVerdict {
  VerdictKind kind = VerdictKind::Indeterminate;
  /// Set when the query had a > b and was answered for (b, a).
  bool swapped = false;
  std::optional<Parameters> params;
  /// Certified enclosure of RHS - LHS of the realisability condition.
  std::optional<Enclosure> margin;

  bool conclusive() const { return kind != VerdictKind::Indeterminate; }
  bool constructible() const { return conclusive() && kind != VerdictKind::InequalityFails; }
};

/// Encloses f(n) = 1 - sqrt(n/(n+1)), width <= eps. Requires n >= 1.
Enclosure f_enclosure(long n, const Rational& eps);

/// Encloses g(c) = 1 - sqrt((1/2)((c-1)/c + c/(c+1))), width <= eps. Requires c >= 2.
Enclosure g_enclosure(long c, const Rational& eps);

/// Exact radicand (1/2)((c-1)/c + c/(c+1)) of g(c).
Rational g_radicand(long c);

/// g(c)^2 - d_{alpha-1}^2 f(c-1)^2 - d_{beta-1}^2 f(c)^2 evaluated with
/// sqrt enclosures of width eps. d_n^2 is 0 for n <= 0 (empty or one-point
/// simplex), so the expression is defined for every beta in [0, a].
Enclosure margin_enclosure(const Parameters& p, const Rational& eps);

/// Certified decision of the realisability condition. Intended for
/// 2 <= beta <= a-1; other beta values are evaluated through the d_n^2 = 0
/// convention. A zero margin cannot be separated and comes back
/// Indeterminate.
FeasibilityVerdict check_inequality(const Parameters& p, const RefinementSchedule& schedule = {});

/// Full dispatch for any a, b >= 1.
FeasibilityVerdict classify(long a, long b, const RefinementSchedule& schedule = {});

/// b >= a^2 + a. Requires a >= 2.
bool lemma_applies(long a, long b);

struct LemmaCertificate {
  long a = 0;
  /// Sign of g(a)^2 - ((a-1)/(a+1)) f(a-1)^2.
  SignResult ratio;
  /// Exact max of d_{alpha-1}^2 + d_{beta-1}^2 over beta in [2, a-1]
  /// (0 when that range is empty).
  Rational max_d_sum;
  Rational bound;  // (a-1)/(a+1)
  bool d_bound_holds = false;

  /// nullopt when the ratio sign could not be certified.
  std::optional<bool> holds() const;
};

LemmaCertificate lemma_certificate(long a, const RefinementSchedule& schedule = {});

// Auxiliary inequalities used along the way; each returns the certified sign
// of a quantity that should be positive.

/// 2 g(c)^2 - f(c-1)^2, c >= 2: one extra point on an axis is realisable.
SignResult beta_one_slack(long c, const RefinementSchedule& schedule = {});
/// f(n) - f(n+1), n >= 1.
SignResult f_decrease(long n, const RefinementSchedule& schedule = {});
/// g(c+1)^2 f(c-1)^2 - g(c)^2 f(c)^2, c >= 2: (g(c)/f(c-1))^2 increases.
SignResult ratio_increase(long c, const RefinementSchedule& schedule = {});

}  // namespace equisum::feasibility
