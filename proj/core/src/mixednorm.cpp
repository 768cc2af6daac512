#include "equisum/mixednorm.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace equisum::mixednorm {

using geometry::DimensionError;

double mixed_distance(const MixedPoint& p, const MixedPoint& q) {
  if (p.x.dim() != q.x.dim() || p.y.dim() != q.y.dim()) throw DimensionError("mixed_distance: dimension mismatch");
  return geometry::distance(p.x, q.x) + geometry::distance(p.y, q.y);
}

PointSet::PointSet(std::size_t a, std::size_t b, double lambda, std::string provenance, bool swapped)
    : a_(a), b_(b), lambda_(lambda), provenance_(std::move(provenance)), swapped_(swapped) {
  if (a == 0 || b == 0) throw DimensionError("PointSet: a and b must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DimensionError("PointSet: lambda must be positive");
}

void PointSet::add(MixedPoint p) {
  if (p.x.dim() != a_ || p.y.dim() != b_) {
    throw DimensionError("PointSet: point of dims (" + std::to_string(p.x.dim()) + ", " + std::to_string(p.y.dim()) +
                         ") in a set of dims (" + std::to_string(a_) + ", " + std::to_string(b_) + ")");
  }
  points_.push_back(std::move(p));
}

PointSet PointSet::transposed(std::string provenance) const {
  PointSet out(b_, a_, lambda_, std::move(provenance), !swapped_);
  out.points_.reserve(points_.size());
  for (const auto& p : points_) out.points_.push_back({p.y, p.x});
  return out;
}

VerificationReport verify_equilateral(const PointSet& s, double rel_tol) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("verify_equilateral: rel_tol must be positive");
  VerificationReport r;
  r.n_points = s.size();
  r.lambda = s.lambda();
  r.rel_tol = rel_tol;
  const auto& pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dev = std::abs(mixed_distance(pts[i], pts[j]) - s.lambda());
      if (r.n_pairs == 0 || dev > r.max_abs_deviation) {
        r.max_abs_deviation = dev;
        r.worst_pair = {i, j};
      }
      ++r.n_pairs;
    }
  }
  r.pass = r.max_abs_deviation <= rel_tol * s.lambda();
  return r;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_array(std::ostringstream& os, const Vector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << format_double(v[i]);
  }
  os << ']';
}

Vector read_vector(const nlohmann::json& arr, const char* name) {
  if (!arr.is_array()) throw ParseError(std::string("point field '") + name + "' is not an array");
  std::vector<double> coords;
  coords.reserve(arr.size());
  for (const auto& c : arr) {
    if (!c.is_number()) throw ParseError(std::string("non-numeric coordinate in '") + name + "'");
    coords.push_back(c.get<double>());
  }
  return Vector(std::move(coords));
}

}  // namespace

std::string to_json(const PointSet& s) {
  std::ostringstream os;
  os << "{\"a\": " << s.a() << ", \"b\": " << s.b() << ", \"lambda\": " << format_double(s.lambda())
     << ", \"swapped\": " << (s.swapped() ? "true" : "false") << ", \"provenance\": " << nlohmann::json(s.provenance()).dump()
     << ", \"points\": [";
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << (i ? ",\n  " : "\n  ") << "{\"x\": ";
    write_array(os, s.points()[i].x);
    os << ", \"y\": ";
    write_array(os, s.points()[i].y);
    os << '}';
  }
  os << (s.size() ? "\n]}\n" : "]}\n");
  return os.str();
}

PointSet point_set_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("point set must be a JSON object");
    const auto a = j.at("a").get<long long>();
    const auto b = j.at("b").get<long long>();
    if (a < 1 || b < 1) throw ParseError("a and b must be positive");
    const double lambda = j.at("lambda").get<double>();
    const bool swapped = j.value("swapped", false);
    const std::string provenance = j.value("provenance", std::string{});
    PointSet s(static_cast<std::size_t>(a), static_cast<std::size_t>(b), lambda, provenance, swapped);
    for (const auto& p : j.at("points")) {
      s.add({read_vector(p.at("x"), "x"), read_vector(p.at("y"), "y")});
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid point set: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("invalid point set: ") + e.what());
  }
}

std::string to_json(const VerificationReport& r) {
  std::ostringstream os;
  os << "{\"n_points\": " << r.n_points << ", \"n_pairs\": " << r.n_pairs << ", \"lambda\": " << format_double(r.lambda)
     << ", \"rel_tol\": " << format_double(r.rel_tol) << ", \"max_abs_deviation\": " << format_double(r.max_abs_deviation)
     << ", \"worst_pair\": [" << r.worst_pair.first << ", " << r.worst_pair.second << "]"
     << ", \"pass\": " << (r.pass ? "true" : "false") << "}\n";
  return os.str();
}

}  // namespace equisum::mixednorm
