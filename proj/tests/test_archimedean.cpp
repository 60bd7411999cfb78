#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nahodge/archimedean.hpp"
#include "oracles.hpp"

using namespace nahodge;

namespace {

ComplexMatrix diag_of(const std::vector<double>& s) {
  return ComplexMatrix::diagonal(std::vector<Complex>(s.begin(), s.end()));
}

ComplexMatrix unit_upper(size_t n, SplitMix64& rng) {
  ComplexMatrix w = ComplexMatrix::identity(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = r + 1; c < n; ++c) w(r, c) = Complex(standard_normal(rng), standard_normal(rng));
  return w;
}

}  // namespace

TEST_CASE("svd: fixed cases") {
  auto s = svd(ComplexMatrix::identity(4));
  for (double x : s.sigma) CHECK(x == doctest::Approx(1.0));
  s = svd(ComplexMatrix::diagonal({3.0, -4.0}));
  CHECK(s.sigma[0] == doctest::Approx(4.0));
  CHECK(s.sigma[1] == doctest::Approx(3.0));
  ComplexMatrix j(2);
  j(0, 0) = 1;
  j(0, 1) = 1;
  j(1, 1) = 1;
  s = svd(j);
  CHECK(s.sigma[0] == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  CHECK(s.sigma[1] == doctest::Approx((std::sqrt(5.0) - 1) / 2));
}

TEST_CASE("svd: residuals and the A*A oracle") {
  SplitMix64 rng(42);
  for (int t = 0; t < 60; ++t) {
    const size_t n = 2 + static_cast<size_t>(t % 11);
    ComplexMatrix a = random_complex_matrix(n, rng);
    auto s = svd(a);
    CHECK(std::is_sorted(s.sigma.rbegin(), s.sigma.rend()));
    CHECK((s.U * a * s.V - diag_of(s.sigma)).max_abs() <= 1e-10 * a.max_abs());
    CHECK(s.U.unitarity_defect() <= 1e-12 * static_cast<double>(n));
    CHECK(s.V.unitarity_defect() <= 1e-12 * static_cast<double>(n));
    auto ev = oracle::hermitian_eigenvalues(a.adjoint() * a);
    for (size_t k = 0; k < n; ++k) {
      const double expect = std::sqrt(std::max(0.0, ev[n - 1 - k]));
      CHECK(std::abs(s.sigma[k] - expect) <= 1e-9 * s.sigma[0]);
    }
  }
}

TEST_CASE("eigenvalues") {
  ComplexMatrix tri(3);
  tri(0, 0) = 1;
  tri(1, 1) = Complex(0, -3);
  tri(2, 2) = 2;
  tri(0, 2) = 5;
  auto ev = eigenvalues(tri);
  CHECK(std::abs(ev[0] - Complex(0, -3)) < 1e-12);
  CHECK(std::abs(ev[1] - Complex(2, 0)) < 1e-12);
  CHECK(std::abs(ev[2] - Complex(1, 0)) < 1e-12);

  ComplexMatrix swap(2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  ev = eigenvalues(swap);
  CHECK(std::abs(ev[0] - 1.0) < 1e-12);
  CHECK(std::abs(ev[1] + 1.0) < 1e-12);

  SplitMix64 rng(3);
  for (int t = 0; t < 30; ++t) {
    // Companion matrix of a random monic cubic versus Durand-Kerner.
    std::vector<Complex> c{{standard_normal(rng), standard_normal(rng)},
                           {standard_normal(rng), standard_normal(rng)},
                           {standard_normal(rng), standard_normal(rng)},
                           1.0};
    ComplexMatrix comp(3);
    comp(1, 0) = 1;
    comp(2, 1) = 1;
    for (size_t r = 0; r < 3; ++r) comp(r, 2) = -c[r];
    auto mine = eigenvalues(comp);
    auto ref = oracle::durand_kerner(c);
    for (const auto& z : ref) {
      double best = 1e300;
      for (const auto& w : mine) best = std::min(best, std::abs(z - w));
      CHECK(best <= 1e-8 * std::max(1.0, std::abs(z)));
    }
  }
  for (int t = 0; t < 30; ++t) {
    const size_t n = 2 + static_cast<size_t>(t % 11);
    ComplexMatrix a = random_complex_matrix(n, rng);
    auto e = eigenvalues(a);
    Complex prod = 1;
    for (const auto& z : e) prod *= z;
    const Complex det = determinant(a);
    CHECK(std::abs(prod - det) <= 1e-8 * std::abs(det));
    for (size_t k = 1; k < n; ++k) CHECK(std::abs(e[k - 1]) >= std::abs(e[k]));
    // Similarity invariance of the moduli. S = U + 2I is normal and well
    // conditioned, so its Schur form diagonalizes it.
    ComplexMatrix s = random_unitary(n, rng);
    for (size_t k = 0; k < n; ++k) s(k, k) += 2.0;
    SchurResult sf = schur(s);
    ComplexMatrix dinv(n);
    for (size_t k = 0; k < n; ++k) dinv(k, k) = 1.0 / sf.T(k, k);
    ComplexMatrix s_inv_a_s = sf.Q * dinv * sf.Q.adjoint() * a * s;
    auto e2 = eigenvalues(s_inv_a_s);
    for (size_t k = 0; k < n; ++k) CHECK(std::abs(std::abs(e2[k]) - std::abs(e[k])) <= 1e-7 * std::abs(e[0]));
  }
}

TEST_CASE("schur form") {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const size_t n = 2 + static_cast<size_t>(t % 8);
    ComplexMatrix a = random_complex_matrix(n, rng);
    SchurResult s = schur(a);
    order_schur(s);
    CHECK((s.Q * s.T * s.Q.adjoint() - a).max_abs() <= 1e-10 * a.max_abs());
    CHECK(s.Q.unitarity_defect() <= 1e-12 * static_cast<double>(n));
    for (size_t r = 1; r < n; ++r) CHECK(s.T.max_abs_in(r, 0, 1, r) <= 1e-12 * a.max_abs());
    for (size_t k = 1; k < n; ++k) CHECK(std::abs(s.T(k - 1, k - 1)) >= std::abs(s.T(k, k)) * (1 - 1e-12));
  }
}

TEST_CASE("Weyl report") {
  SplitMix64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const size_t n = 2 + static_cast<size_t>(t % 11);
    auto w = weyl_report(random_complex_matrix(n, rng));
    CHECK(w.chain_holds);
    CHECK(w.endpoint_equal);
    CHECK(w.endpoint_error <= 1e-8);
  }
  // Normal matrices: equality at every index.
  ComplexMatrix u = random_unitary(5, rng);
  ComplexMatrix normal = u * ComplexMatrix::diagonal({5.0, Complex(0, 3), -2.0, 1.5, 0.1}) * u.adjoint();
  auto w = weyl_report(normal);
  for (const auto& row : w.rows) CHECK(std::abs(row.log_sigma - row.log_lambda) <= 1e-10);
  // Jordan block: strict inequality at i = 1.
  ComplexMatrix j(2);
  j(0, 0) = 1;
  j(0, 1) = 1;
  j(1, 1) = 1;
  w = weyl_report(j);
  CHECK(w.sigma[0] > std::abs(w.eigenvalues[0]) + 0.5);
  CHECK(w.passed());
  // Singular input compares products.
  ComplexMatrix sing(3);
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  sing(2, 2) = 1;
  CHECK(weyl_report(sing).passed());
}

TEST_CASE("archimedean Hodge-Newton") {
  SplitMix64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const size_t n = 3 + static_cast<size_t>(t % 5), i = 1 + static_cast<size_t>(t) % (n - 1);
    std::vector<Complex> big, small;
    for (size_t k = 0; k < i; ++k) big.push_back(10.0 + 10.0 * static_cast<double>(rng.next() % 1000) / 1000.0);
    for (size_t k = i; k < n; ++k) small.push_back(0.5 + 1.5 * static_cast<double>(rng.next() % 1000) / 1000.0);
    ComplexMatrix b = random_unitary(i, rng) * ComplexMatrix::diagonal(big) * random_unitary(i, rng);
    ComplexMatrix d = random_unitary(n - i, rng) * ComplexMatrix::diagonal(small) * random_unitary(n - i, rng);
    ComplexMatrix blk(n);
    for (size_t r = 0; r < i; ++r)
      for (size_t c = 0; c < i; ++c) blk(r, c) = b(r, c);
    for (size_t r = 0; r < n - i; ++r)
      for (size_t c = 0; c < n - i; ++c) blk(i + r, i + c) = d(r, c);
    ComplexMatrix s = random_unitary(n, rng);
    ComplexMatrix a = s * blk * s.adjoint();
    ArchHnReport rep = arch_hn_check(a, i, 1e-6);
    CHECK(rep.passed);
    CHECK(std::max(rep.lower_left, rep.upper_right) <= 1e-8 * rep.norm);
    CHECK(rep.top_sigma_error <= 1e-8);
    CHECK(rep.U.unitarity_defect() <= 1e-12 * static_cast<double>(n));
  }
  // Normal matrix with gaps.
  ComplexMatrix u = random_unitary(4, rng);
  ComplexMatrix normal = u * ComplexMatrix::diagonal({8.0, Complex(0, -4), 1.0, 0.5}) * u.adjoint();
  for (size_t i = 1; i < 4; ++i) CHECK(arch_hn_check(normal, i, 1e-6).passed);
  // Generic matrix: the equality hypothesis fails.
  ComplexMatrix generic = random_complex_matrix(4, rng);
  try {
    (void)arch_hn_check(generic, 2, 1e-6);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
}

TEST_CASE("principal-minor Newton invariance") {
  SplitMix64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const size_t n = 2 + static_cast<size_t>(t % 7);
    ComplexMatrix w = unit_upper(n, rng);
    std::vector<Complex> d;
    for (size_t k = 0; k < n; ++k)
      d.push_back(std::polar(std::exp(standard_normal(rng)),
                             2 * std::numbers::pi * static_cast<double>(rng.next() % 1000) / 1000.0));
    ComplexMatrix u = random_unitary(n, rng);
    Prop45Report r = prop45_check(u, d, w * u.adjoint(), 1e-9);
    CHECK(r.passed);
    CHECK(r.polygons_match);
    CHECK(r.moduli_error <= 1e-7);
  }
  std::vector<Complex> d{2.0, Complex(0, 1)};
  CHECK(prop45_check(ComplexMatrix::identity(2), d, ComplexMatrix::identity(2), 1e-9).passed);
  try {
    (void)prop45_check(ComplexMatrix::identity(2), d, ComplexMatrix::diagonal({2.0, 0.5}), 1e-9);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
}

TEST_CASE("log-modulus Newton polygon") {
  Polygon flat = arch_newton_polygon({1.0, Complex(0, 1)});
  CHECK(flat.y(2) == 0);
  Polygon p = arch_newton_polygon({std::numbers::e, 1.0});
  CHECK(p.slopes() == std::vector<Rational>{-1, 0});
  try {
    (void)arch_newton_polygon({1.0, 0.0});
    FAIL("expected ZeroEigenvalue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroEigenvalue);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS((void)ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), Error);
  CHECK_THROWS_AS((void)ComplexMatrix::from_rows({{1.0, std::nan("")}, {3.0, 4.0}}), Error);
}
