#include "nahodge/dvr_linear.hpp"

#include <algorithm>
#include <optional>

namespace nahodge {

namespace {

void swap_rows(MatrixF& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(MatrixF& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

SmithDecomposition smith_normal_form(const MatrixF& a, SmithOptions options) {
  const auto& desc = a.descriptor();
  const size_t n = a.rows();
  const size_t m = a.cols();
  MatrixF w = a;
  MatrixF u = MatrixF::identity(desc, n);
  MatrixF u_inv = MatrixF::identity(desc, n);
  MatrixF v = MatrixF::identity(desc, m);
  MatrixF v_inv = MatrixF::identity(desc, m);
  SmithDecomposition out;
  const size_t r = std::min(n, m);

  for (size_t t = 0; t < r; ++t) {
    // Globally minimal valuation in the remaining block; ties go to the
    // first entry in row-major order.
    std::optional<std::pair<size_t, size_t>> pivot;
    int best = 0;
    std::optional<int> noise;  // smallest precision among inexact zeros
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j) {
        const FieldElement& x = w(i, j);
        if (x.is_zero()) {
          if (!x.is_exact()) noise = std::min(noise.value_or(x.precision()), x.precision());
          continue;
        }
        if (!pivot || x.order() < best) {
          pivot = {i, j};
          best = x.order();
        }
      }
    if (!pivot || (noise && *noise <= best)) {
      if (!noise) {
        out.certificates.resize(r, Valuation::infinite());
        break;
      }
      if (!options.tolerate_precision_tail)
        fail(ErrorKind::PrecisionExhausted,
             "pivot " + std::to_string(t + 1) + " is not determined modulo pi^" +
                 std::to_string(*noise));
      out.certificates.resize(r, Valuation::above(Rational(*noise)));
      break;
    }
    auto [pi, pj] = *pivot;
    swap_rows(w, t, pi);
    swap_rows(u, t, pi);
    swap_cols(u_inv, t, pi);
    swap_cols(w, t, pj);
    swap_cols(v, t, pj);
    swap_rows(v_inv, t, pj);

    // Scale the pivot row so the pivot becomes pi^best.
    const FieldElement unit = w(t, t).unit_part();
    const FieldElement unit_inv = unit.inverse();
    for (size_t j = 0; j < m; ++j) w(t, j) *= unit_inv;
    for (size_t j = 0; j < n; ++j) u(t, j) *= unit_inv;
    for (size_t i = 0; i < n; ++i) u_inv(i, t) *= unit;

    const FieldElement pivot_inv = w(t, t).inverse();
    out.precision_loss = std::max(out.precision_loss, best);

    for (size_t i = t + 1; i < n; ++i) {
      if (w(i, t).is_exact_zero()) continue;
      const FieldElement q = w(i, t) * pivot_inv;
      for (size_t j = t + 1; j < m; ++j) w(i, j) -= q * w(t, j);
      w(i, t) = FieldElement::zero(desc);
      for (size_t j = 0; j < n; ++j) u(i, j) -= q * u(t, j);
      for (size_t k = 0; k < n; ++k) u_inv(k, t) += q * u_inv(k, i);
    }
    for (size_t j = t + 1; j < m; ++j) {
      if (w(t, j).is_exact_zero()) continue;
      const FieldElement q = w(t, j) * pivot_inv;
      w(t, j) = FieldElement::zero(desc);
      for (size_t k = 0; k < m; ++k) v(k, j) -= q * v(k, t);
      for (size_t k = 0; k < m; ++k) v_inv(t, k) += q * v_inv(j, k);
    }
    out.certificates.push_back(w(t, t).valuation());
    ++out.rank;
  }

  out.U = std::move(u);
  out.D = std::move(w);
  out.V = std::move(v);
  out.U_inv = std::move(u_inv);
  out.V_inv = std::move(v_inv);
  return out;
}

bool is_gl_o(const MatrixF& a) {
  if (!a.is_square()) return false;
  for (const auto& e : a.entries())
    if (!e.valuation().at_least(Rational(0))) return false;
  const Valuation d = determinant(a).valuation();
  return d.is_finite() && d.value() == 0;
}

bool congruent_identity_mod_m(const MatrixF& a) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "congruence test needs a square matrix");
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Rational r = a(i, j).residue();
      if (r != (i == j ? 1 : 0)) return false;
    }
  return true;
}

MatrixF saturate_lattice(const MatrixF& vectors) {
  const size_t n = vectors.rows();
  const size_t k = vectors.cols();
  if (k > n) fail(ErrorKind::RankDeficient, "more vectors than the ambient dimension");
  SmithDecomposition snf = smith_normal_form(vectors);
  if (snf.rank < k) fail(ErrorKind::RankDeficient, "input columns are dependent");
  // X = U^-1 [D; 0] V^-1, so the first k columns of U^-1 span the same
  // F-space and belong to a basis of o_F^n.
  return snf.U_inv.block(0, 0, n, k);
}

MatrixF extend_to_gl_o(const MatrixF& basis) {
  const size_t n = basis.rows();
  const size_t k = basis.cols();
  if (k > n) fail(ErrorKind::DimensionMismatch, "more columns than rows");
  for (const auto& e : basis.entries())
    if (!e.valuation().at_least(Rational(0)))
      fail(ErrorKind::NotSaturated, "basis has non-integral entries");
  SmithDecomposition snf = smith_normal_form(basis);
  for (const auto& c : snf.certificates)
    if (!(c.is_finite() && c.value() == 0))
      fail(ErrorKind::NotSaturated, "elementary divisor of valuation " + c.to_string());
  MatrixF u(basis.descriptor(), n, n);
  u.set_block(0, 0, basis);
  if (k < n) u.set_block(0, k, snf.U_inv.block(0, k, n, n - k));
  return u;
}

}  // namespace nahodge
