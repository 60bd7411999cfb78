#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nahodge/matrix_core.hpp"

namespace nahodge {

/// Lower-convex polygonal line through (i, y_i), i = 0..n, with y_0 = 0.
/// Stored densely as the partial sums; vertices are the convexity breaks.
class Polygon {
 public:
  Polygon() : partial_sums_{Rational(0)} {}
  /// Partial sums y_0..y_n; throws NotSorted if the slopes decrease.
  explicit Polygon(std::vector<Rational> partial_sums);

  size_t length() const { return partial_sums_.size() - 1; }
  const std::vector<Rational>& partial_sums() const { return partial_sums_; }
  const Rational& y(size_t i) const { return partial_sums_.at(i); }
  /// Slopes y_i - y_{i-1}, non-decreasing.
  std::vector<Rational> slopes() const;
  /// Endpoints plus every x where the slope strictly increases.
  std::vector<std::pair<size_t, Rational>> vertices() const;
  bool has_vertex_at(size_t i) const;

  bool operator==(const Polygon& other) const = default;

 private:
  std::vector<Rational> partial_sums_;
};

/// y_i = s_1 + ... + s_i for a non-decreasing sequence s.
Polygon associated_polygon(const std::vector<Rational>& s);

/// Lower convex hull of (k, v(c_{n-k})), k = 0..n, of a monic polynomial.
/// The slopes are the valuations of the roots, ascending.
Polygon newton_polygon_of_poly(const PolynomialF& f);
Polygon newton_polygon_of_matrix(const MatrixF& a);
/// Associated polygon of the Smith normal form valuations.
Polygon hodge_polygon(const MatrixF& a);

bool lies_above(const Polygon& upper, const Polygon& lower);
/// Newton has a vertex at i that also lies on the Hodge polygon.
bool touches_at(const Polygon& newton, const Polygon& hodge, size_t i);

}  // namespace nahodge
