#include "equisum/geometry.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace equisum::geometry {

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw DimensionError("Vector: non-finite coordinate");
  }
}

double dot(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) throw DimensionError("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

double distance(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) throw DimensionError("distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double d = u[i] - v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vector scaled(const Vector& v, double t) {
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = t * v[i];
  return out;
}

BlockLayout::BlockLayout(std::vector<std::size_t> block_dims) : block_dims_(std::move(block_dims)) {
  offsets_.reserve(block_dims_.size());
  for (std::size_t d : block_dims_) {
    if (d == 0) throw DimensionError("BlockLayout: blocks must be positive-dimensional");
    offsets_.push_back(total_dim_);
    total_dim_ += d;
  }
}

std::size_t BlockLayout::offset(std::size_t block_index) const {
  if (block_index >= block_dims_.size()) throw std::out_of_range("BlockLayout: block index out of range");
  return offsets_[block_index];
}

realnum::Rational circumradius_sq(long n) {
  if (n <= 0) return realnum::Rational(0);
  return realnum::Rational(n, 2 * n + 2);
}

std::vector<Vector> regular_simplex(std::size_t m, double side, std::size_t ambient_dim) {
  if (m == 0) throw DimensionError("regular_simplex: need at least one vertex");
  if (!(side > 0.0) || !std::isfinite(side)) throw DimensionError("regular_simplex: side must be positive");
  if (ambient_dim + 1 < m) {
    throw DimensionError("regular_simplex: " + std::to_string(m) + " vertices need ambient dimension >= " +
                         std::to_string(m - 1));
  }

  std::vector<Vector> vertices(m, Vector(ambient_dim));
  for (std::size_t k = 1; k < m; ++k) {
    const double kd = static_cast<double>(k);
    const double unit = side / std::sqrt(2.0 * kd * (kd + 1.0));
    for (std::size_t i = 0; i < k; ++i) vertices[i][k - 1] = unit;
    vertices[k][k - 1] = -kd * unit;
  }
  return vertices;
}

Vector place_in_block(const Vector& v, const BlockLayout& layout, std::size_t block_index) {
  if (block_index >= layout.block_count()) throw std::out_of_range("place_in_block: block index out of range");
  if (v.dim() != layout.block_dims()[block_index]) {
    throw DimensionError("place_in_block: vector of dim " + std::to_string(v.dim()) + " does not fit block of dim " +
                         std::to_string(layout.block_dims()[block_index]));
  }
  Vector out(layout.total_dim());
  const std::size_t off = layout.offset(block_index);
  for (std::size_t i = 0; i < v.dim(); ++i) out[off + i] = v[i];
  return out;
}

}  // namespace equisum::geometry
