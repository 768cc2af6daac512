#pragma once

// Explicit unit-distance equilateral sets in E^a (+)_1 E^b.

#include <optional>
#include <stdexcept>

#include "equisum/feasibility.hpp"
#include "equisum/mixednorm.hpp"

namespace equisum::constructions {

/// Thrown when the realisability condition fails or cannot be certified.
class InfeasibleConstruction : public std::runtime_error {
 public:
  explicit InfeasibleConstruction(feasibility::FeasibilityVerdict verdict);

  const feasibility::FeasibilityVerdict& verdict() const { return verdict_; }

 private:
  feasibility::FeasibilityVerdict verdict_;
};

struct ConstructionResult {
  mixednorm::PointSet point_set;
  /// Offset along the last E^a axis (apex height for the cross-polytope set).
  std::optional<double> zeta;
  std::optional<feasibility::Parameters> parameters;
};

/// b + 2 points in E^1 (+)_1 E^b: (0, y_i) for a unit regular b-simplex and
/// (1 - d_b, o).
ConstructionResult construct_prop1(long b);

/// 2a + 1 points in E^a (+)_1 E^a: (v_i, +-e_i/2) over a regular
/// (a-1)-simplex of side 1 - 1/sqrt(2), plus an apex (t e_a, o).
ConstructionResult construct_prop2(long a);

/// a + b + 1 points for b > a >= 2 built from alpha unit (c-1)-simplices and
/// beta unit c-simplices in orthogonal blocks of E^b, paired with a two-simplex
/// configuration in E^a. Throws InfeasibleConstruction unless the pair
/// classifies as BetaTrivial or InequalityHolds.
ConstructionResult construct_theorem(long a, long b, const realnum::RefinementSchedule& schedule = {});

/// Dispatches on classify(a, b); a > b is built as (b, a) and transposed.
ConstructionResult construct(long a, long b, const realnum::RefinementSchedule& schedule = {});

/// f(n) = 1 - sqrt(n/(n+1)) in binary64.
double f_value(long n);
/// g(c) in binary64.
double g_value(long c);

}  // namespace equisum::constructions
