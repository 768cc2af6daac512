#pragma once

// The space E^a (+)_1 E^b: R^a x R^b with ||(x, y)|| = ||x||_2 + ||y||_2.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equisum/geometry.hpp"

namespace equisum::mixednorm {

using geometry::Vector;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MixedPoint {
  Vector x;
  Vector y;

  friend bool operator==(const MixedPoint&, const MixedPoint&) = default;
};

/// ||p.x - q.x||_2 + ||p.y - q.y||_2.
double mixed_distance(const MixedPoint& p, const MixedPoint& q);

/// A labelled finite point set in E^a (+)_1 E^b with a target distance.
class PointSet {
 public:
  PointSet(std::size_t a, std::size_t b, double lambda, std::string provenance = {}, bool swapped = false);

  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  double lambda() const { return lambda_; }
  const std::string& provenance() const { return provenance_; }
  bool swapped() const { return swapped_; }
  const std::vector<MixedPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  void add(MixedPoint p);

  /// Exchanges the E^a and E^b factors of every point and toggles `swapped`.
  PointSet transposed(std::string provenance) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t a_;
  std::size_t b_;
  double lambda_;
  std::string provenance_;
  bool swapped_;
  std::vector<MixedPoint> points_;
};

inline constexpr double kDefaultRelTol = 1e-9;

struct VerificationReport {
  std::size_t n_points = 0;
  std::size_t n_pairs = 0;
  double lambda = 0.0;
  double rel_tol = kDefaultRelTol;
  double max_abs_deviation = 0.0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  bool pass = true;
};

/// Checks all pairwise mixed distances against lambda. The worst pair is the
/// lexicographically first pair attaining the maximum deviation. Sets with
/// fewer than two points pass vacuously.
VerificationReport verify_equilateral(const PointSet& s, double rel_tol = kDefaultRelTol);

/// PointSet JSON; doubles are written with 17 significant digits.
std::string to_json(const PointSet& s);
PointSet point_set_from_json(const std::string& text);

std::string to_json(const VerificationReport& r);

/// printf("%.17g") with negative zero folded to "0".
std::string format_double(double v);

}  // namespace equisum::mixednorm
