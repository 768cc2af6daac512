#include "equisum/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "equisum/geometry.hpp"

namespace equisum::constructions {

using feasibility::FeasibilityVerdict;
using feasibility::Parameters;
using feasibility::VerdictKind;
using geometry::BlockLayout;
using geometry::Vector;
using mixednorm::MixedPoint;
using mixednorm::PointSet;

namespace {

std::string describe(const FeasibilityVerdict& v) {
  std::ostringstream os;
  os << "construction infeasible: " << feasibility::to_string(v.kind);
  if (v.params) os << " for a=" << v.params->a << ", b=" << v.params->b;
  return os.str();
}

double d_sq(long n) { return n <= 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(2 * n + 2); }

std::size_t to_size(long n) { return static_cast<std::size_t>(n); }

/// Copies v into coordinates [offset, offset + v.dim()) of a zero vector.
Vector embed(const Vector& v, std::size_t dim, std::size_t offset) {
  Vector out(dim);
  for (std::size_t i = 0; i < v.dim(); ++i) out[offset + i] = v[i];
  return out;
}

}  // namespace

InfeasibleConstruction::InfeasibleConstruction(FeasibilityVerdict verdict)
    : std::runtime_error(describe(verdict)), verdict_(std::move(verdict)) {}

double f_value(long n) { return 1.0 - std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1)); }

double g_value(long c) {
  const double cd = static_cast<double>(c);
  return 1.0 - std::sqrt(0.5 * ((cd - 1.0) / cd + cd / (cd + 1.0)));
}

ConstructionResult construct_prop1(long b) {
  if (b < 1) throw std::invalid_argument("construct_prop1: b must be >= 1");
  const std::size_t bs = to_size(b);
  PointSet s(1, bs, 1.0, "prop1(b=" + std::to_string(b) + ")");
  for (auto& y : geometry::regular_simplex(bs + 1, 1.0, bs)) s.add({Vector{0.0}, std::move(y)});
  const double d_b = std::sqrt(d_sq(b));
  s.add({Vector{1.0 - d_b}, Vector(bs)});
  return {std::move(s), std::nullopt, std::nullopt};
}

ConstructionResult construct_prop2(long a) {
  if (a < 2) throw std::invalid_argument("construct_prop2: a must be >= 2");
  const std::size_t as = to_size(a);
  const double side = 1.0 - 1.0 / std::sqrt(2.0);
  // The (a-1)-simplex fills the first a-1 coordinates; the apex sits on the last.
  const auto v = geometry::regular_simplex(as, side, as);
  PointSet s(as, as, 1.0, "prop2(a=" + std::to_string(a) + ")");
  for (std::size_t i = 0; i < as; ++i) {
    Vector plus(as);
    Vector minus(as);
    plus[i] = 0.5;
    minus[i] = -0.5;
    s.add({v[i], std::move(plus)});
    s.add({v[i], std::move(minus)});
  }
  const double r = side * std::sqrt(d_sq(a - 1));
  const double t = std::sqrt(0.25 - r * r);
  Vector apex(as);
  apex[as - 1] = t;
  s.add({std::move(apex), Vector(as)});
  return {std::move(s), t, std::nullopt};
}

ConstructionResult construct_theorem(long a, long b, const realnum::RefinementSchedule& schedule) {
  const Parameters p = feasibility::derive_parameters(a, b);
  const FeasibilityVerdict verdict = feasibility::classify(a, b, schedule);
  if (verdict.kind != VerdictKind::BetaTrivial && verdict.kind != VerdictKind::InequalityHolds) {
    throw InfeasibleConstruction(verdict);
  }

  const std::size_t as = to_size(a);
  const std::size_t bs = to_size(b);
  const std::size_t c = to_size(p.c);
  const std::size_t alpha = to_size(p.alpha);
  const std::size_t beta = to_size(p.beta);
  const double f_prev = f_value(p.c - 1);
  const double f_cur = f_value(p.c);
  const double g = g_value(p.c);

  // E^a side: w_1..w_alpha and z_1..z_beta.
  std::vector<Vector> w;
  std::vector<Vector> z;
  std::optional<double> zeta;
  if (beta == 0) {
    w = geometry::regular_simplex(as + 1, f_prev, as);
  } else if (beta == 1) {
    w = geometry::regular_simplex(as, f_prev, as);
    zeta = std::sqrt(std::max(0.0, g * g - d_sq(a - 1) * f_prev * f_prev));
    Vector apex(as);
    apex[as - 1] = *zeta;
    z.push_back(std::move(apex));
  } else if (beta == as) {
    z = geometry::regular_simplex(as, f_cur, as);
    zeta = std::sqrt(std::max(0.0, g * g - d_sq(a - 1) * f_cur * f_cur));
    Vector apex(as);
    apex[as - 1] = *zeta;
    w.push_back(std::move(apex));
  } else {
    // E^a = E^{alpha-1} + E^{beta-1} + E^1.
    zeta = std::sqrt(std::max(0.0, g * g - d_sq(p.alpha - 1) * f_prev * f_prev - d_sq(p.beta - 1) * f_cur * f_cur));
    for (const auto& pi : geometry::regular_simplex(alpha, f_prev, alpha - 1)) w.push_back(embed(pi, as, 0));
    for (const auto& qj : geometry::regular_simplex(beta, f_cur, beta - 1)) {
      Vector zj = embed(qj, as, alpha - 1);
      zj[as - 1] = *zeta;
      z.push_back(std::move(zj));
    }
  }

  // E^b side: alpha blocks of dim c-1, then beta blocks of dim c.
  std::vector<std::size_t> dims(alpha, c - 1);
  dims.insert(dims.end(), beta, c);
  const BlockLayout layout(std::move(dims));
  const auto u = geometry::regular_simplex(c, 1.0, c - 1);
  const auto v = geometry::regular_simplex(c + 1, 1.0, c);

  std::ostringstream prov;
  prov << "theorem(a=" << a << ",b=" << b << ",c=" << p.c << ",alpha=" << p.alpha << ",beta=" << p.beta << ")";
  PointSet s(as, bs, 1.0, prov.str());
  for (std::size_t i = 0; i < alpha; ++i) {
    for (const auto& uk : u) s.add({w[i], geometry::place_in_block(uk, layout, i)});
  }
  for (std::size_t j = 0; j < beta; ++j) {
    for (const auto& vl : v) s.add({z[j], geometry::place_in_block(vl, layout, alpha + j)});
  }
  return {std::move(s), zeta, p};
}

ConstructionResult construct(long a, long b, const realnum::RefinementSchedule& schedule) {
  if (a < 1 || b < 1) throw std::invalid_argument("construct: a and b must be positive");
  if (a > b) {
    ConstructionResult inner = construct(b, a, schedule);
    std::string prov = inner.point_set.provenance() + ";swapped";
    inner.point_set = inner.point_set.transposed(std::move(prov));
    return inner;
  }
  if (a == 1) return construct_prop1(b);
  if (a == b) return construct_prop2(a);
  return construct_theorem(a, b, schedule);
}

}  // namespace equisum::constructions
