#include "nahodge/polygons.hpp"

#include "nahodge/dvr_linear.hpp"

namespace nahodge {

Polygon::Polygon(std::vector<Rational> partial_sums) : partial_sums_(std::move(partial_sums)) {
  if (partial_sums_.empty() || partial_sums_.front() != 0)
    fail(ErrorKind::NotSorted, "polygon must start at (0, 0)");
  for (size_t i = 2; i < partial_sums_.size(); ++i)
    if (partial_sums_[i] - partial_sums_[i - 1] < partial_sums_[i - 1] - partial_sums_[i - 2])
      fail(ErrorKind::NotSorted, "slopes must be non-decreasing");
}

std::vector<Rational> Polygon::slopes() const {
  std::vector<Rational> s;
  for (size_t i = 1; i < partial_sums_.size(); ++i)
    s.push_back(partial_sums_[i] - partial_sums_[i - 1]);
  return s;
}

bool Polygon::has_vertex_at(size_t i) const {
  if (i == 0 || i == length()) return true;
  if (i > length()) return false;
  return partial_sums_[i] - partial_sums_[i - 1] < partial_sums_[i + 1] - partial_sums_[i];
}

std::vector<std::pair<size_t, Rational>> Polygon::vertices() const {
  std::vector<std::pair<size_t, Rational>> v;
  for (size_t i = 0; i <= length(); ++i)
    if (has_vertex_at(i)) v.emplace_back(i, partial_sums_[i]);
  return v;
}

Polygon associated_polygon(const std::vector<Rational>& s) {
  std::vector<Rational> y{Rational(0)};
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] < s[i - 1])
      fail(ErrorKind::NotSorted, "sequence must be sorted non-decreasing");
    y.push_back(y.back() + s[i]);
  }
  return Polygon(std::move(y));
}

namespace {

struct Point {
  Rational x;
  Rational y;
};

// Lower hull of points with strictly increasing x.
std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> h;
  for (const auto& c : pts) {
    while (h.size() >= 2) {
      const Point& a = h[h.size() - 2];
      const Point& b = h.back();
      Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
      if (cross > 0) break;
      h.pop_back();
    }
    h.push_back(c);
  }
  return h;
}

Rational hull_at(const std::vector<Point>& h, const Rational& x) {
  for (size_t k = 1; k < h.size(); ++k)
    if (x <= h[k].x) return h[k - 1].y + (h[k].y - h[k - 1].y) * (x - h[k - 1].x) / (h[k].x - h[k - 1].x);
  return h.back().y;
}

}  // namespace

Polygon newton_polygon_of_poly(const PolynomialF& f) {
  const int n = f.degree();
  if (n < 0) fail(ErrorKind::SingularMatrix, "empty polynomial");
  if (!(f[n] == FieldElement::one(f.descriptor())))
    fail(ErrorKind::HypothesisViolated, "Newton polygon needs a monic polynomial");
  const FieldElement& c0 = f[0];
  if (c0.is_exact_zero()) fail(ErrorKind::SingularMatrix, "constant coefficient is zero");
  if (c0.is_zero())
    fail(ErrorKind::PrecisionExhausted,
         "constant coefficient vanishes modulo pi^" + std::to_string(c0.precision()));
  std::vector<Point> pts;
  std::vector<std::pair<int, Rational>> bounds;
  for (int k = 0; k <= n; ++k) {
    const FieldElement& c = f[n - k];
    if (c.is_exact_zero()) continue;
    if (c.is_zero()) {
      bounds.emplace_back(k, Rational(c.precision()));
      continue;
    }
    pts.push_back({Rational(k), Rational(c.order())});
  }
  const auto hull = lower_hull(pts);
  // A coefficient known only to vanish modulo pi^M is harmless when M already
  // lies on or above the hull.
  for (const auto& [k, m] : bounds)
    if (m < hull_at(hull, Rational(k)))
      fail(ErrorKind::PrecisionExhausted,
           "coefficient of x^" + std::to_string(n - k) + " is undetermined below the hull");
  std::vector<Rational> y;
  for (int k = 0; k <= n; ++k) y.push_back(hull_at(hull, Rational(k)));
  return Polygon(std::move(y));
}

Polygon newton_polygon_of_matrix(const MatrixF& a) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "Newton polygon needs a square matrix");
  return newton_polygon_of_poly(char_poly(a));
}

Polygon hodge_polygon(const MatrixF& a) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "Hodge polygon needs a square matrix");
  const SmithDecomposition snf = smith_normal_form(a);
  std::vector<Rational> s;
  for (const auto& c : snf.certificates) {
    if (c.is_infinite()) fail(ErrorKind::SingularMatrix, "matrix is singular");
    s.push_back(c.value());
  }
  return associated_polygon(s);
}

bool lies_above(const Polygon& upper, const Polygon& lower) {
  if (upper.length() != lower.length())
    fail(ErrorKind::LengthMismatch, "polygons of different length");
  for (size_t i = 0; i <= upper.length(); ++i)
    if (upper.y(i) < lower.y(i)) return false;
  return true;
}

bool touches_at(const Polygon& newton, const Polygon& hodge, size_t i) {
  if (newton.length() != hodge.length())
    fail(ErrorKind::LengthMismatch, "polygons of different length");
  if (i < 1 || i + 1 > newton.length())
    fail(ErrorKind::BadIndex, "index " + std::to_string(i) + " outside [1, n-1]");
  return newton.has_vertex_at(i) && newton.y(i) == hodge.y(i);
}

}  // namespace nahodge
