#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "nahodge/archimedean.hpp"
#include "nahodge/matrix_core.hpp"

namespace oracle {

using nahodge::Complex;
using nahodge::ComplexMatrix;
using nahodge::FieldElement;
using nahodge::MatrixF;
using nahodge::Rational;
using nahodge::Valuation;

inline int permutation_sign(const std::vector<size_t>& perm) {
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

/// Sum over all permutations.
inline FieldElement leibniz_det(const MatrixF& a) {
  const size_t n = a.rows();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement sum = FieldElement::zero(a.descriptor());
  do {
    FieldElement term = FieldElement::one(a.descriptor());
    for (size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    if (permutation_sign(perm) < 0)
      sum -= term;
    else
      sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

inline std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<size_t> s;
    for (size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// For k = 1..n, the minimal valuation over all k x k minors (Leibniz).
/// Infinite when every minor of that size vanishes exactly.
inline std::vector<Valuation> minimal_minor_valuations(const MatrixF& a) {
  const size_t n = a.rows();
  std::vector<Valuation> out;
  for (size_t k = 1; k <= n; ++k) {
    Valuation best = Valuation::infinite();
    for (const auto& r : subsets(n, k))
      for (const auto& c : subsets(n, k)) best = Valuation::min(best, leibniz_det(a.select(r, c)).valuation());
    out.push_back(best);
  }
  return out;
}

/// Eigenvalues of a Hermitian matrix, ascending. Uses the real symmetric
/// embedding [[Re, -Im], [Im, Re]] (each eigenvalue appears twice) and
/// classical Jacobi rotations.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const size_t n = h.size(), m = 2 * n;
  std::vector<double> a(m * m);
  auto at = [&](size_t i, size_t j) -> double& { return a[i * m + j]; };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      at(i, j) = at(n + i, n + j) = h(i, j).real();
      at(n + i, j) = h(i, j).imag();
      at(i, n + j) = -h(i, j).imag();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0, diag = 0;
    for (size_t p = 0; p < m; ++p) {
      diag += at(p, p) * at(p, p);
      for (size_t q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
    }
    if (off <= 1e-32 * (1 + diag)) break;
    for (size_t p = 0; p < m; ++p)
      for (size_t q = p + 1; q < m; ++q) {
        if (at(p, q) == 0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (size_t k = 0; k < m; ++k) {
          const double kp = at(k, p), kq = at(k, q);
          at(k, p) = c * kp - s * kq;
          at(k, q) = s * kp + c * kq;
        }
        for (size_t k = 0; k < m; ++k) {
          const double pk = at(p, k), qk = at(q, k);
          at(p, k) = c * pk - s * qk;
          at(q, k) = s * pk + c * qk;
        }
      }
  }
  std::vector<double> all(m);
  for (size_t i = 0; i < m; ++i) all[i] = at(i, i);
  std::sort(all.begin(), all.end());
  std::vector<double> ev;
  for (size_t i = 0; i < m; i += 2) ev.push_back(all[i]);
  return ev;
}

/// Roots of a monic polynomial (coeffs[k] multiplies x^k) by Durand-Kerner.
inline std::vector<Complex> durand_kerner(const std::vector<Complex>& coeffs) {
  const size_t n = coeffs.size() - 1;
  auto eval = [&](Complex x) {
    Complex y = 0;
    for (size_t k = coeffs.size(); k-- > 0;) y = y * x + coeffs[k];
    return y;
  };
  std::vector<Complex> z(n);
  for (size_t k = 0; k < n; ++k) z[k] = std::pow(Complex(0.4, 0.9), static_cast<double>(k));
  for (int it = 0; it < 2000; ++it) {
    double delta = 0;
    for (size_t k = 0; k < n; ++k) {
      Complex denom = 1;
      for (size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      const Complex step = eval(z[k]) / denom;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15) break;
  }
  return z;
}

}  // namespace oracle
