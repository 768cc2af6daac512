#pragma once

// Euclidean primitives in binary64: vectors, regular simplices and the
// orthogonal block embeddings used to assemble the constructions.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "equisum/realnum.hpp"

namespace equisum::geometry {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite coordinate vector. A zero-dimensional vector is allowed and
/// stands for the origin of E^0.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim, 0.0) {}
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

double norm(const Vector& v);
double distance(const Vector& u, const Vector& v);
double dot(const Vector& u, const Vector& v);
Vector scaled(const Vector& v, double t);

/// Decomposition of E^total into consecutive, pairwise orthogonal
/// coordinate blocks of positive dimension.
class BlockLayout {
 public:
  explicit BlockLayout(std::vector<std::size_t> block_dims);

  std::span<const std::size_t> block_dims() const { return block_dims_; }
  std::size_t block_count() const { return block_dims_.size(); }
  std::size_t total_dim() const { return total_dim_; }
  std::size_t offset(std::size_t block_index) const;

 private:
  std::vector<std::size_t> block_dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_dim_ = 0;
};

/// Squared circumradius of the unit regular n-simplex, n/(2n+2); 0 for n = 0.
/// Negative n (the empty simplex) also yields 0.
realnum::Rational circumradius_sq(long n);

/// The m vertices of a regular (m-1)-simplex of the given side length,
/// centred on the origin and lying in the first m-1 coordinates of
/// E^ambient_dim.
///
/// Vertex i has coordinate k (1-based) equal to side/sqrt(2k(k+1)) when
/// i < k, -k*side/sqrt(2k(k+1)) when i = k, and 0 otherwise: the images of
/// side*e_i/sqrt(2) under the orthonormal Helmert basis of {sum x = 0}.
std::vector<Vector> regular_simplex(std::size_t m, double side, std::size_t ambient_dim);

/// Embeds v into the block `block_index` of `layout`.
Vector place_in_block(const Vector& v, const BlockLayout& layout, std::size_t block_index);

}  // namespace equisum::geometry
