#include <doctest.h>

#include <algorithm>

#include "nahodge/invariance_harness.hpp"
#include "nahodge/polygons.hpp"

using namespace nahodge;

namespace {

const FieldDescriptor kP = FieldDescriptor::padic(3, 40);

MatrixF m(const std::vector<std::vector<std::string>>& rows) { return MatrixF::parse(kP, rows); }

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

PolynomialF poly(std::initializer_list<const char*> coeffs_low_to_high) {
  std::vector<FieldElement> c;
  for (const char* x : coeffs_low_to_high) c.push_back(parse_element(x, kP));
  return PolynomialF(kP, c);
}

}  // namespace

TEST_CASE("associated polygons") {
  Polygon flat = associated_polygon(q({"0", "0", "0"}));
  CHECK(flat.partial_sums() == q({"0", "0", "0", "0"}));
  CHECK(flat.vertices().size() == 2);

  Polygon p = associated_polygon(q({"0", "1"}));
  auto v = p.vertices();
  REQUIRE(v.size() == 3);
  CHECK(v[1] == std::pair<size_t, Rational>{1, 0});
  CHECK(v[2] == std::pair<size_t, Rational>{2, 1});

  Polygon half = associated_polygon(q({"1/2", "1/2"}));
  CHECK(half.vertices().size() == 2);
  CHECK_FALSE(half.has_vertex_at(1));
  CHECK(half.y(1) == Rational(1, 2));

  CHECK_THROWS_AS((void)associated_polygon(q({"1", "0"})), Error);
}

TEST_CASE("Newton polygons of polynomials") {
  // x^2 - (1+p)x + p
  Polygon a = newton_polygon_of_poly(poly({"3", "-4", "1"}));
  CHECK(a.slopes() == q({"0", "1"}));
  Polygon b = newton_polygon_of_poly(poly({"-3", "0", "1"}));
  CHECK(b.slopes() == q({"1/2", "1/2"}));
  Polygon c = newton_polygon_of_poly(poly({"-5", "1"}));
  CHECK(c.slopes() == q({"0"}));
  CHECK_THROWS_AS((void)newton_polygon_of_poly(poly({"0", "1", "1"})), Error);
}

TEST_CASE("Newton and Hodge polygons of matrices") {
  CHECK(newton_polygon_of_matrix(m({{"1", "0"}, {"0", "3"}})).partial_sums() == q({"0", "0", "1"}));
  CHECK(newton_polygon_of_matrix(m({{"1", "5", "7"}, {"0", "3", "2"}, {"0", "0", "9"}})).slopes() ==
        q({"0", "1", "2"}));
  Polygon n2 = newton_polygon_of_matrix(m({{"0", "3"}, {"1", "0"}}));
  CHECK(n2.slopes() == q({"1/2", "1/2"}));
  try {
    (void)newton_polygon_of_matrix(m({{"1", "2"}, {"2", "4"}}));
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }

  CHECK(hodge_polygon(MatrixF::identity(kP, 3)).partial_sums() == q({"0", "0", "0", "0"}));
  CHECK(hodge_polygon(m({{"1", "1"}, {"0", "3"}})).partial_sums() == q({"0", "0", "1"}));
  CHECK(hodge_polygon(m({{"9", "0"}, {"0", "3"}})).partial_sums() == q({"0", "1", "3"}));
  Polygon h2 = hodge_polygon(m({{"0", "3"}, {"1", "0"}}));
  CHECK(lies_above(n2, h2));
  CHECK_FALSE(lies_above(h2, n2));
  CHECK(lies_above(n2, n2));
  CHECK_THROWS_AS((void)lies_above(n2, associated_polygon(q({"0", "0", "0"}))), Error);
}

TEST_CASE("touching at an index") {
  MatrixF d = m({{"1", "0"}, {"0", "3"}});
  CHECK(touches_at(newton_polygon_of_matrix(d), hodge_polygon(d), 1));
  MatrixF s = m({{"0", "3"}, {"1", "0"}});
  CHECK_FALSE(touches_at(newton_polygon_of_matrix(s), hodge_polygon(s), 1));
  MatrixF scalar = m({{"3", "0", "0"}, {"0", "3", "0"}, {"0", "0", "3"}});
  for (size_t i = 1; i < 3; ++i)
    CHECK_FALSE(touches_at(newton_polygon_of_matrix(scalar), hodge_polygon(scalar), i));
  CHECK_THROWS_AS((void)touches_at(newton_polygon_of_matrix(d), hodge_polygon(d), 0), Error);
  CHECK_THROWS_AS((void)touches_at(newton_polygon_of_matrix(d), hodge_polygon(d), 2), Error);
}

TEST_CASE("polygon invariants on random matrices") {
  SplitMix64 rng(123);
  for (const auto& desc : {kP, FieldDescriptor::padic(2, 40), FieldDescriptor::laurent(40)})
    for (int t = 0; t < 25; ++t) {
      const size_t n = 2 + static_cast<size_t>(t % 4);
      MatrixF a = random_invertible_matrix(desc, n, rng);
      Polygon newton = newton_polygon_of_matrix(a), hodge = hodge_polygon(a);
      CHECK(lies_above(newton, hodge));
      CHECK(newton.y(n) == hodge.y(n));
      auto sl = newton.slopes();
      CHECK(std::is_sorted(sl.begin(), sl.end()));
      GlPair w = random_gl_o_pair(desc, n, rng);
      CHECK(newton_polygon_of_matrix(w.w * a * w.w_inv) == newton);
      // Similarity by a non-integral S = W * diag(pi^k) with exact inverse.
      GlPair w2 = random_gl_o_pair(desc, n, rng);
      std::vector<FieldElement> dk, dk_inv;
      for (size_t k = 0; k < n; ++k) {
        const int e = static_cast<int>(rng.uniform(0, 3));
        dk.push_back(FieldElement::monomial(desc, 1, e));
        dk_inv.push_back(FieldElement::monomial(desc, 1, -e));
      }
      MatrixF s = w2.w * MatrixF::diagonal(dk), s_inv = MatrixF::diagonal(dk_inv) * w2.w_inv;
      CHECK(newton_polygon_of_matrix(s * a * s_inv) == newton);
    }
}

TEST_CASE("wedge consistency on triangular matrices") {
  SplitMix64 rng(321);
  for (int t = 0; t < 20; ++t) {
    const size_t n = 2 + static_cast<size_t>(t % 3);
    MatrixF a = random_triangular_matrix(kP, n, rng);
    Polygon base = newton_polygon_of_matrix(a);
    for (size_t k = 1; k <= n; ++k) CHECK(newton_polygon_of_matrix(wedge_power(a, k)).y(1) == base.y(k));
  }
}
