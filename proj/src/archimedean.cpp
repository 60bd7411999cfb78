#include "nahodge/archimedean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace nahodge {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr size_t kMaxComplexDim = 16;

void require_size(size_t n) {
  if (n > kMaxComplexDim) fail(ErrorKind::DimensionMismatch, "complex routines support n <= 16");
}

}  // namespace

// ------------------------------------------------------------ ComplexMatrix

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const size_t n = rows.size();
  ComplexMatrix m(n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) fail(ErrorKind::ParseError, "complex matrix must be square");
    for (size_t j = 0; j < n; ++j) {
      const Complex z = rows[i][j];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail(ErrorKind::ParseError, "complex matrix entries must be finite");
      m(i, j) = z;
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
  ComplexMatrix m(n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<std::vector<Complex>> ComplexMatrix::rows() const {
  std::vector<std::vector<Complex>> out(n_, std::vector<Complex>(n_));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
  if (rows.size() != cols.size()) fail(ErrorKind::DimensionMismatch, "select needs equal counts");
  ComplexMatrix m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

double ComplexMatrix::max_abs_in(size_t r0, size_t c0, size_t nr, size_t nc) const {
  double m = 0;
  for (size_t i = r0; i < r0 + nr; ++i)
    for (size_t j = c0; j < c0 + nc; ++j) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorKind::DimensionMismatch, "complex product of different sizes");
  const size_t n = a.n_;
  ComplexMatrix c(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const Complex x = a(i, k);
      if (x == 0.0) continue;
      for (size_t j = 0; j < n; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorKind::DimensionMismatch, "complex difference of different sizes");
  ComplexMatrix c(a.n_);
  for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
  return c;
}

double ComplexMatrix::max_abs() const { return max_abs_in(0, 0, n_, n_); }

double ComplexMatrix::unitarity_defect() const {
  return (adjoint() * *this - identity(n_)).max_abs();
}

Complex determinant(const ComplexMatrix& a) {
  ComplexMatrix m = a;
  const size_t n = m.size();
  Complex det = 1.0;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    for (size_t r = k + 1; r < n; ++r)
      if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (size_t r = k + 1; r < n; ++r) {
      const Complex f = m(r, k) / m(k, k);
      for (size_t j = k; j < n; ++j) m(r, j) -= f * m(k, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------- SVD

SvdResult svd(const ComplexMatrix& a, int max_sweeps) {
  const size_t n = a.size();
  require_size(n);
  ComplexMatrix g = a;
  ComplexMatrix v = ComplexMatrix::identity(n);
  SvdResult out;

  auto col_dot = [&](size_t p, size_t q) {  // g_p^H g_q
    Complex s = 0;
    for (size_t r = 0; r < n; ++r) s += std::conj(g(r, p)) * g(r, q);
    return s;
  };
  bool rotated = true;
  while (rotated) {
    if (out.sweeps >= max_sweeps) fail(ErrorKind::NoConvergence, "Jacobi SVD exceeded the sweep cap");
    ++out.sweeps;
    rotated = false;
    for (size_t p = 0; p + 1 < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        const double alpha = col_dot(p, p).real();
        const double beta = col_dot(q, q).real();
        const Complex gamma = col_dot(p, q);
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // Rotate g_p and e^{-i phi} g_q, which have a real inner product.
        const Complex phase = gamma / mag;
        const double zeta = (beta - alpha) / (2 * mag);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = c * t;
        const Complex sp = s * std::conj(phase);
        for (ComplexMatrix* m : {&g, &v})
          for (size_t r = 0; r < n; ++r) {
            const Complex xp = (*m)(r, p), xq = (*m)(r, q);
            (*m)(r, p) = c * xp - sp * xq;
            (*m)(r, q) = s * xp + c * std::conj(phase) * xq;
          }
      }
  }

  std::vector<double> norms(n);
  for (size_t j = 0; j < n; ++j) norms[j] = std::sqrt(col_dot(j, j).real());
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return norms[x] > norms[y]; });

  ComplexMatrix uc(n), vs(n);
  out.sigma.resize(n);
  const double tiny = (norms.empty() ? 0.0 : norms[order[0]]) * kEps * static_cast<double>(n);
  std::vector<bool> filled(n, false);
  for (size_t k = 0; k < n; ++k) {
    const size_t j = order[k];
    out.sigma[k] = norms[j];
    for (size_t r = 0; r < n; ++r) vs(r, k) = v(r, j);
    if (norms[j] > tiny && norms[j] > 0) {
      for (size_t r = 0; r < n; ++r) uc(r, k) = g(r, j) / norms[j];
      filled[k] = true;
    }
  }
  // Complete the left factor for (numerically) zero singular values.
  for (size_t k = 0; k < n; ++k) {
    if (filled[k]) continue;
    double best = -1;
    std::vector<Complex> best_w;
    for (size_t e = 0; e < n; ++e) {
      std::vector<Complex> w(n, 0.0);
      w[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (size_t c = 0; c < n; ++c) {
          if (!filled[c]) continue;
          Complex d = 0;
          for (size_t r = 0; r < n; ++r) d += std::conj(uc(r, c)) * w[r];
          for (size_t r = 0; r < n; ++r) w[r] -= d * uc(r, c);
        }
      double nw = 0;
      for (const auto& z : w) nw += std::norm(z);
      if (nw > best) best = nw, best_w = w;
    }
    const double nw = std::sqrt(best);
    for (size_t r = 0; r < n; ++r) uc(r, k) = best_w[r] / nw;
    filled[k] = true;
  }
  out.U = uc.adjoint();
  out.V = vs;
  return out;
}

// -------------------------------------------------------------------- Schur

namespace {

// Rows k, k+1 of m times G = [[conj(c), conj(s)], [-s, c]], columns c0..n-1.
void rotate_rows(ComplexMatrix& m, size_t k, Complex c, Complex s, size_t c0) {
  for (size_t j = c0; j < m.size(); ++j) {
    const Complex x = m(k, j), y = m(k + 1, j);
    m(k, j) = std::conj(c) * x + std::conj(s) * y;
    m(k + 1, j) = -s * x + c * y;
  }
}

// Columns k, k+1 of m times G^H (G as in rotate_rows), rows 0..r1-1.
void rotate_cols(ComplexMatrix& m, size_t k, Complex c, Complex s, size_t r1) {
  for (size_t i = 0; i < r1; ++i) {
    const Complex x = m(i, k), y = m(i, k + 1);
    m(i, k) = x * c + y * s;
    m(i, k + 1) = -x * std::conj(s) + y * std::conj(c);
  }
}

void hessenberg(ComplexMatrix& h, ComplexMatrix& q) {
  const size_t n = h.size();
  for (size_t k = 0; k + 2 < n; ++k) {
    double tail = 0;
    for (size_t r = k + 2; r < n; ++r) tail += std::norm(h(r, k));
    if (tail == 0.0) continue;
    const double xnorm = std::sqrt(tail + std::norm(h(k + 1, k)));
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : Complex(1.0);
    std::vector<Complex> v(n, 0.0);
    v[k + 1] = x0 + phase * xnorm;
    for (size_t r = k + 2; r < n; ++r) v[r] = h(r, k);
    double vn = 0;
    for (const auto& z : v) vn += std::norm(z);
    vn = std::sqrt(vn);
    for (auto& z : v) z /= vn;
    for (size_t j = 0; j < n; ++j) {
      Complex s = 0;
      for (size_t r = k + 1; r < n; ++r) s += std::conj(v[r]) * h(r, j);
      for (size_t r = k + 1; r < n; ++r) h(r, j) -= 2.0 * v[r] * s;
    }
    for (ComplexMatrix* m : {&h, &q})
      for (size_t i = 0; i < n; ++i) {
        Complex s = 0;
        for (size_t r = k + 1; r < n; ++r) s += (*m)(i, r) * v[r];
        for (size_t r = k + 1; r < n; ++r) (*m)(i, r) -= 2.0 * s * std::conj(v[r]);
      }
    for (size_t r = k + 2; r < n; ++r) h(r, k) = 0.0;
  }
}

}  // namespace

SchurResult schur(const ComplexMatrix& a) {
  const size_t n = a.size();
  require_size(n);
  SchurResult s{ComplexMatrix::identity(n), a};
  ComplexMatrix& h = s.T;
  ComplexMatrix& q = s.Q;
  if (n == 0) return s;
  hessenberg(h, q);
  const double anorm = std::max(a.max_abs(), std::numeric_limits<double>::min());

  size_t hi = n - 1;
  int iter = 0, total = 0;
  while (hi > 0) {
    size_t lo = hi;
    while (lo > 0) {
      const double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (std::abs(h(lo, lo - 1)) <= kEps * (scale > 0 ? scale : anorm)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      iter = 0;
      continue;
    }
    if (++total > 60 * static_cast<int>(n)) fail(ErrorKind::NoConvergence, "shifted QR did not converge");
    ++iter;

    Complex mu;
    if (iter % 11 == 10) {
      mu = h(hi, hi) + 1.5 * std::abs(h(hi, hi - 1));
    } else {
      const Complex a11 = h(hi - 1, hi - 1), a12 = h(hi - 1, hi), a21 = h(hi, hi - 1), a22 = h(hi, hi);
      const Complex half_tr = (a11 + a22) / 2.0;
      const Complex disc = std::sqrt((a11 - a22) * (a11 - a22) / 4.0 + a12 * a21);
      const Complex m1 = half_tr + disc, m2 = half_tr - disc;
      mu = std::abs(m1 - a22) < std::abs(m2 - a22) ? m1 : m2;
    }

    for (size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    std::vector<std::pair<Complex, Complex>> rots;
    for (size_t k = lo; k < hi; ++k) {
      const Complex x = h(k, k), y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      Complex c = 1.0, sn = 0.0;
      if (r > 0) c = x / r, sn = y / r;
      rotate_rows(h, k, c, sn, k);
      h(k + 1, k) = 0.0;
      rots.emplace_back(c, sn);
    }
    for (size_t k = lo; k < hi; ++k) {
      const auto [c, sn] = rots[k - lo];
      rotate_cols(h, k, c, sn, std::min(k + 2, hi) + 1);
      rotate_cols(q, k, c, sn, n);
    }
    for (size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  for (size_t i = 1; i < n; ++i)
    for (size_t j = 0; j < i; ++j) h(i, j) = 0.0;
  return s;
}

void order_schur(SchurResult& s) {
  ComplexMatrix& t = s.T;
  const size_t n = t.size();
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (size_t k = 0; k + 1 < n; ++k) {
      const Complex a = t(k, k), b = t(k + 1, k + 1);
      if (!(std::abs(a) < std::abs(b))) continue;
      // First column of G spans the eigenvector (x, b - a) of b.
      const Complex x = t(k, k + 1), y = b - a;
      const double r = std::hypot(std::abs(x), std::abs(y));
      const Complex c = x / r, sn = y / r;
      // G = [[c, -conj(s)], [s, conj(c)]]; T <- G^H T G, Q <- Q G.
      rotate_rows(t, k, c, sn, 0);
      rotate_cols(t, k, c, sn, n);
      rotate_cols(s.Q, k, c, sn, n);
      t(k + 1, k) = 0.0;
      t(k, k) = b;
      t(k + 1, k + 1) = a;
      swapped = true;
    }
  }
}

namespace {

// Moduli equal up to rounding count as ties, broken by real then imaginary part.
void sort_by_modulus(std::vector<Complex>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const Complex& a, const Complex& b) { return std::abs(a) > std::abs(b); });
  const auto by_parts = [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  };
  size_t start = 0;
  for (size_t k = 1; k <= v.size(); ++k) {
    const bool tie = k < v.size() &&
                     std::abs(v[k - 1]) - std::abs(v[k]) <= 1e-12 * std::max(1.0, std::abs(v[start]));
    if (tie) continue;
    std::stable_sort(v.begin() + static_cast<std::ptrdiff_t>(start), v.begin() + static_cast<std::ptrdiff_t>(k), by_parts);
    start = k;
  }
}

}  // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
  const SchurResult s = schur(a);
  std::vector<Complex> ev;
  for (size_t k = 0; k < a.size(); ++k) ev.push_back(s.T(k, k));
  sort_by_modulus(ev);
  return ev;
}

SpectralData spectral_data(const ComplexMatrix& a) {
  SpectralData d;
  SvdResult sv = svd(a);
  d.singular_values = sv.sigma;
  d.U = std::move(sv.U);
  d.V = std::move(sv.V);
  SchurResult s = schur(a);
  order_schur(s);
  for (size_t k = 0; k < a.size(); ++k) d.eigenvalues.push_back(s.T(k, k));
  sort_by_modulus(d.eigenvalues);
  d.schur_T = std::move(s.T);
  d.schur_Q = std::move(s.Q);
  return d;
}

// ------------------------------------------------------------------ reports

WeylReport weyl_report(const ComplexMatrix& a) {
  const size_t n = a.size();
  WeylReport rep;
  rep.sigma = svd(a).sigma;
  rep.eigenvalues = eigenvalues(a);
  const double eps = 1e-8 * static_cast<double>(n);
  const double s1 = rep.sigma.empty() ? 0.0 : rep.sigma[0];
  double ls = 0, ll = 0, ps = 1, pl = 1;
  bool singular = false;
  rep.chain_holds = true;
  for (size_t i = 1; i <= n; ++i) {
    const double s = rep.sigma[i - 1], l = std::abs(rep.eigenvalues[i - 1]);
    ps *= s;
    pl *= l;
    if (s == 0.0 || l == 0.0) singular = true;
    if (!singular) {
      ls += std::log(s);
      ll += std::log(l);
    }
    WeylRow row{i, ls, ll, false};
    if (!singular) {
      row.holds = ls >= ll - eps;
    } else {
      row.log_sigma = s > 0 ? ls + std::log(s) : -INFINITY;
      row.log_lambda = l > 0 ? ll + std::log(l) : -INFINITY;
      row.holds = ps + eps * std::pow(s1, static_cast<double>(i)) >= pl;
    }
    rep.chain_holds = rep.chain_holds && row.holds;
    rep.rows.push_back(row);
  }
  if (n == 0) {
    rep.endpoint_equal = true;
    return rep;
  }
  if (!singular) {
    rep.endpoint_error = std::abs(std::expm1(ls - ll));
    rep.endpoint_equal = rep.endpoint_error <= 1e-8;
  } else {
    const double scale = std::pow(s1, static_cast<double>(n));
    rep.endpoint_error = scale > 0 ? std::abs(ps - pl) / scale : 0.0;
    rep.endpoint_equal = rep.endpoint_error <= 1e-8;
  }
  return rep;
}

ArchHnReport arch_hn_check(const ComplexMatrix& a, size_t i, double tol, double residual_tol) {
  const size_t n = a.size();
  if (i < 1 || i >= n) fail(ErrorKind::HypothesisViolated, "index outside [1, n-1]");
  const std::vector<double> sigma = svd(a).sigma;
  SchurResult s = schur(a);
  order_schur(s);
  std::vector<double> mod(n);
  for (size_t k = 0; k < n; ++k) mod[k] = std::abs(s.T(k, k));

  if (!(sigma[i - 1] > sigma[i] * (1 + tol)))
    fail(ErrorKind::HypothesisViolated, "sigma_i > sigma_{i+1} fails at i = " + std::to_string(i));
  if (!(mod[i - 1] > mod[i] * (1 + tol)))
    fail(ErrorKind::HypothesisViolated, "|lambda_i| > |lambda_{i+1}| fails at i = " + std::to_string(i));
  double excess = 0;
  for (size_t k = 0; k < i; ++k) {
    if (mod[k] == 0.0) fail(ErrorKind::HypothesisViolated, "zero eigenvalue among the first i");
    excess += std::log(sigma[k]) - std::log(mod[k]);
  }
  if (!(excess <= tol))
    fail(ErrorKind::HypothesisViolated,
         "sigma_1...sigma_i = |lambda_1...lambda_i| fails at i = " + std::to_string(i));

  ArchHnReport rep;
  rep.index = i;
  rep.U = s.Q;
  const ComplexMatrix t = s.Q.adjoint() * a * s.Q;
  rep.norm = a.max_abs();
  rep.lower_left = t.max_abs_in(i, 0, n - i, i);
  rep.upper_right = t.max_abs_in(0, i, i, n - i);
  ComplexMatrix b(i);
  for (size_t r = 0; r < i; ++r)
    for (size_t c = 0; c < i; ++c) b(r, c) = t(r, c);
  const std::vector<double> sb = svd(b).sigma;
  for (size_t k = 0; k < i; ++k)
    rep.top_sigma_error = std::max(rep.top_sigma_error, std::abs(sb[k] - sigma[k]) / std::max(sigma[0], 1e-300));
  rep.tolerance = residual_tol;
  const double bound = residual_tol * std::max(rep.norm, 1e-300);
  rep.passed = rep.lower_left <= bound && rep.upper_right <= bound && rep.top_sigma_error <= residual_tol;
  return rep;
}

namespace {

// c_k = (-1)^k * sum of principal k x k minors, k = 0..n, with the Hadamard
// bound of each sum alongside.
void principal_coefficients(const ComplexMatrix& m, std::vector<Complex>& c, std::vector<double>& scale) {
  const size_t n = m.size();
  c.assign(n + 1, 0.0);
  scale.assign(n + 1, 0.0);
  c[0] = 1.0;
  scale[0] = 1.0;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> idx;
    for (size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    const ComplexMatrix sub = m.select(idx, idx);
    const size_t k = idx.size();
    c[k] += (k % 2 ? -1.0 : 1.0) * determinant(sub);
    double bound = 1;
    for (size_t r = 0; r < k; ++r) {
      double row = 0;
      for (size_t j = 0; j < k; ++j) row += std::norm(sub(r, j));
      bound *= std::sqrt(row);
    }
    scale[k] += bound;
  }
}

}  // namespace

Prop45Report prop45_check(const ComplexMatrix& u, const std::vector<Complex>& d, const ComplexMatrix& v,
                          double tol) {
  const size_t n = d.size();
  if (u.size() != n || v.size() != n) fail(ErrorKind::DimensionMismatch, "U, D, V sizes differ");
  if (n > kMaxDimension) fail(ErrorKind::DimensionMismatch, "principal-minor enumeration supports n <= 8");
  const ComplexMatrix w = v * u;
  Prop45Report rep;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> idx;
    for (size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    rep.max_minor_deviation = std::max(rep.max_minor_deviation, std::abs(determinant(w.select(idx, idx)) - 1.0));
  }
  if (rep.max_minor_deviation > tol)
    fail(ErrorKind::HypothesisViolated, "a principal minor of V*U differs from 1");

  const ComplexMatrix dm = ComplexMatrix::diagonal(d);
  std::vector<Complex> cd, cdw;
  std::vector<double> sd, sdw;
  principal_coefficients(dm, cd, sd);
  principal_coefficients(dm * w, cdw, sdw);
  for (size_t k = 0; k <= n; ++k) {
    const double scale = std::max({sd[k], sdw[k], 1e-300});
    rep.coefficient_deviation = std::max(rep.coefficient_deviation, std::abs(cdw[k] - cd[k]) / scale);
  }

  const std::vector<Complex> ev = eigenvalues(u * dm * v);
  std::vector<Complex> dv = d;
  sort_by_modulus(dv);
  for (size_t k = 0; k < n; ++k) {
    const double ref = std::abs(dv[k]);
    rep.moduli_error = std::max(rep.moduli_error, std::abs(std::abs(ev[k]) - ref) / std::max(ref, 1e-300));
  }
  rep.newton_d = arch_newton_polygon(dv);
  rep.newton_udv = arch_newton_polygon(ev);
  double gap = 0;
  for (size_t k = 0; k <= n; ++k)
    gap = std::max(gap, std::abs(Rational(rep.newton_d.y(k) - rep.newton_udv.y(k)).get_d()));
  rep.polygons_match = gap <= 1e-7 * std::max(1.0, static_cast<double>(n));
  rep.passed = rep.coefficient_deviation <= tol && rep.moduli_error <= 1e-7 && rep.polygons_match;
  return rep;
}

Polygon arch_newton_polygon(const std::vector<Complex>& values) {
  std::vector<Rational> s;
  for (const auto& z : values) {
    const double m = std::abs(z);
    if (m == 0.0) fail(ErrorKind::ZeroEigenvalue, "Newton polygon of a zero eigenvalue");
    const double x = std::round(-std::log(m) * 1e9);
    Rational q(Integer(static_cast<long>(x)), Integer(1000000000L));
    q.canonicalize();
    s.push_back(q);
  }
  std::sort(s.begin(), s.end());
  return associated_polygon(s);
}

// --------------------------------------------------------------- generators

double standard_normal(SplitMix64& rng) {
  // 53-bit uniforms in (0, 1].
  const double u1 = (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
  return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

ComplexMatrix random_complex_matrix(size_t n, SplitMix64& rng) {
  ComplexMatrix m(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      m(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  return m;
}

ComplexMatrix random_unitary(size_t n, SplitMix64& rng) {
  ComplexMatrix m = random_complex_matrix(n, rng);
  for (size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (size_t k = 0; k < j; ++k) {
        Complex d = 0;
        for (size_t r = 0; r < n; ++r) d += std::conj(m(r, k)) * m(r, j);
        for (size_t r = 0; r < n; ++r) m(r, j) -= d * m(r, k);
      }
    double nrm = 0;
    for (size_t r = 0; r < n; ++r) nrm += std::norm(m(r, j));
    nrm = std::sqrt(nrm);
    for (size_t r = 0; r < n; ++r) m(r, j) /= nrm;
  }
  return m;
}

}  // namespace nahodge
