#include "nahodge/hodge_newton.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace nahodge {

bool DecompositionReport::all_passed() const { return first_failure() == nullptr; }

const ClauseResult* DecompositionReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

struct Hypotheses {
  Polygon newton;
  Polygon hodge;
};

Hypotheses check_hypotheses(const MatrixF& a, size_t i, bool want_diagonal) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "decomposition needs a square matrix");
  const size_t n = a.rows();
  if (i < 1 || i >= n) fail(ErrorKind::HypothesisViolated, "index " + std::to_string(i) + " outside [1, n-1]");
  Hypotheses h{newton_polygon_of_matrix(a), hodge_polygon(a)};
  if (!h.newton.has_vertex_at(i))
    fail(ErrorKind::HypothesisViolated, "newton_vertex: |lambda_i| > |lambda_{i+1}| fails at i = " + std::to_string(i));
  if (h.newton.y(i) != h.hodge.y(i))
    fail(ErrorKind::HypothesisViolated, "polygons_touch: Newton and Hodge differ at i = " + std::to_string(i));
  if (want_diagonal) {
    const auto s = h.hodge.slopes();
    if (!(s[i - 1] < s[i]))
      fail(ErrorKind::NoGap, "sigma_i > sigma_{i+1} fails at i = " + std::to_string(i));
  }
  return h;
}

std::vector<Rational> sorted_finite(const std::vector<Valuation>& vs) {
  std::vector<Rational> out;
  for (const auto& v : vs) out.push_back(v.value());
  std::sort(out.begin(), out.end());
  return out;
}

MatrixF unipotent_block(const FieldDescriptor& desc, size_t n, size_t i, const MatrixF& m) {
  MatrixF u = MatrixF::identity(desc, n);
  u.set_block(0, i, -m);
  return u;
}

// Attempt at a fixed working precision; returns false when precision ran
// out before the requested form was reached.
bool attempt(const MatrixF& a, size_t i, bool want_diagonal, const Hypotheses& hyp, int guard,
             Decomposition& d) {
  const auto& desc = a.descriptor();
  const int N = desc.precision;
  const size_t n = a.rows();
  const FieldDescriptor work = desc.with_precision(N + guard);
  const MatrixF aw = a.in_descriptor(work);
  d = Decomposition{};
  d.index = i;
  d.diagonal = want_diagonal;
  d.working_precision = N + guard;
  const auto hodge_slopes = hyp.hodge.slopes();
  d.hodge_slope_top = hodge_slopes[i - 1];
  d.hodge_slope_bottom = hodge_slopes[i];

  SlopeSplit split = slope_factorization(char_poly(aw), i);
  const MatrixF proj = spectral_projector(aw, split);

  SmithDecomposition psnf = smith_normal_form(proj, {.tolerate_precision_tail = true});
  if (psnf.rank != i) return false;
  const MatrixF image = psnf.U_inv.block(0, 0, n, i);
  const MatrixF basis = saturate_lattice(image);
  const MatrixF u0 = extend_to_gl_o(basis);

  const MatrixF t = inverse(u0) * aw * u0;
  const MatrixF b = t.block(0, 0, i, i);
  MatrixF c = t.block(0, i, i, n - i);
  const MatrixF dd = t.block(i, i, n - i, n - i);
  d.lower_left_valuation = operator_norm_valuation(t.block(i, 0, n - i, i));
  if (!d.lower_left_valuation.at_least(Rational(N))) return false;

  const MatrixF b_inv = inverse(b);
  d.b_inv_c_valuation = operator_norm_valuation(b_inv * c);
  if (!d.b_inv_c_valuation.at_least(Rational(0))) {
    if (d.b_inv_c_valuation.is_finite())
      fail(ErrorKind::IntegralityViolated,
           "B^-1 C has valuation " + d.b_inv_c_valuation.to_string());
    return false;
  }

  MatrixF u = u0;
  d.trace.push_back(operator_norm_valuation(c));
  if (want_diagonal) {
    const Rational gap = d.hodge_slope_bottom - d.hodge_slope_top;
    const Valuation& v0 = d.trace.front();
    Rational start = v0.is_finite() ? v0.value() : (v0.is_infinite() ? Rational(N) : v0.bound());
    Rational steps = (Rational(N) - start) / gap;
    mpz_class ceil_steps;
    mpz_cdiv_q(ceil_steps.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
    d.iteration_bound = static_cast<int>(std::max<long>(0, ceil_steps.get_si())) + 1;
    // C_{k+1} = B^-1 C_k D after conjugating by [[I, -B^-1 C_k], [0, I]].
    while (!d.trace.back().at_least(Rational(N))) {
      if (d.iterations >= d.iteration_bound) return false;
      const MatrixF m = b_inv * c;
      const MatrixF uk = unipotent_block(work, n, i, m);
      d.step_valuations.push_back(operator_norm_valuation(m));
      u = u * uk;
      c = m * dd;
      ++d.iterations;
      d.trace.push_back(operator_norm_valuation(c));
    }
  }

  MatrixF conj(work, n, n);
  conj.set_block(0, 0, b);
  conj.set_block(0, i, c);
  conj.set_block(i, i, dd);

  d.U = u.in_descriptor(desc);
  d.conjugated = conj.in_descriptor(desc);
  d.top_block = b.in_descriptor(desc);
  d.bottom_block = dd.in_descriptor(desc);
  d.off_diagonal_valuation = operator_norm_valuation(d.conjugated.block(0, i, i, n - i));
  split.P = split.P.in_descriptor(desc);
  split.Q = split.Q.in_descriptor(desc);
  split.B = split.B.in_descriptor(desc);
  split.C = split.C.in_descriptor(desc);
  d.split = std::move(split);
  d.report = verify_decomposition(a, d);
  return d.report.all_passed();
}

}  // namespace

Decomposition hodge_newton_decompose(const MatrixF& a, size_t i, bool want_diagonal) {
  const Hypotheses hyp = check_hypotheses(a, i, want_diagonal);
  const int N = a.descriptor().precision;
  Rational spread = 0;
  for (const auto& s : hyp.hodge.slopes()) spread = std::max(spread, Rational(abs(s)));
  for (const auto& s : hyp.newton.slopes()) spread = std::max(spread, Rational(abs(s)));
  int guard = 2 * static_cast<int>(a.rows()) * (static_cast<int>(std::ceil(spread.get_d())) + 1) + 8;
  Decomposition d;
  for (int tries = 0; tries < 3; ++tries, guard *= 2)
    if (attempt(a, i, want_diagonal, hyp, guard, d)) return d;
  if (d.U.rows() == 0)
    fail(ErrorKind::PrecisionExhausted, "decomposition did not converge at precision " + std::to_string(N));
  return d;
}

DecompositionReport verify_decomposition(const MatrixF& a, const Decomposition& d) {
  DecompositionReport rep;
  const auto& desc = a.descriptor();
  const Rational N(desc.precision);
  const size_t n = a.rows();
  const size_t i = d.index;

  auto clause = [&](const std::string& name, const std::function<ClauseResult()>& body) {
    ClauseResult r;
    try {
      r = body();
    } catch (const Error& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.name = name;
    rep.clauses.push_back(std::move(r));
  };
  auto residual_clause = [](const Valuation& v, const Rational& bound) {
    ClauseResult r;
    r.residual = v;
    r.passed = v.at_least(bound);
    r.detail = "valuation " + v.to_string() + " vs required " + to_string(bound);
    return r;
  };

  clause("hypothesis", [&] {
    check_hypotheses(a, i, d.diagonal);
    return ClauseResult{.name = {}, .passed = true, .detail = "Newton vertex on the Hodge polygon"};
  });
  clause("U_in_GL_o", [&] {
    return ClauseResult{.name = {}, .passed = is_gl_o(d.U), .detail = "entries integral, det a unit"};
  });
  clause("conjugation", [&] {
    const MatrixF t = inverse(d.U) * a * d.U;
    return residual_clause(operator_norm_valuation(t - d.conjugated), N);
  });
  clause("lower_left_zero", [&] {
    return residual_clause(operator_norm_valuation(d.conjugated.block(i, 0, n - i, i)), N);
  });
  clause("blocks_match", [&] {
    bool same = d.top_block == d.conjugated.block(0, 0, i, i) &&
                d.bottom_block == d.conjugated.block(i, i, n - i, n - i);
    return ClauseResult{.name = {}, .passed = same, .detail = "diagonal blocks of the conjugated matrix"};
  });
  if (d.diagonal)
    clause("off_diagonal_zero", [&] {
      return residual_clause(operator_norm_valuation(d.conjugated.block(0, i, i, n - i)), N);
    });
  clause("B_inv_C_integral", [&] { return residual_clause(d.b_inv_c_valuation, Rational(0)); });
  clause("top_char_poly", [&] {
    PolynomialF diff = char_poly(d.top_block) - d.split.P;
    return residual_clause(diff.gauss_valuation(), N - d.split.precision_loss);
  });
  clause("bottom_char_poly", [&] {
    PolynomialF diff = char_poly(d.bottom_block) - d.split.Q;
    return residual_clause(diff.gauss_valuation(), N - d.split.precision_loss);
  });
  clause("singular_valuations", [&] {
    auto whole = sorted_finite(smith_normal_form(a).certificates);
    auto top = smith_normal_form(d.top_block).certificates;
    auto bottom = smith_normal_form(d.bottom_block).certificates;
    top.insert(top.end(), bottom.begin(), bottom.end());
    bool same = sorted_finite(top) == whole;
    return ClauseResult{.name = {}, .passed = same, .detail = "SNF valuations of the blocks comprise those of A"};
  });
  clause("newton_slopes", [&] {
    auto whole = newton_polygon_of_matrix(a).slopes();
    auto top = newton_polygon_of_matrix(d.top_block).slopes();
    auto bottom = newton_polygon_of_matrix(d.bottom_block).slopes();
    top.insert(top.end(), bottom.begin(), bottom.end());
    std::sort(top.begin(), top.end());
    bool same = top == whole;
    return ClauseResult{.name = {}, .passed = same, .detail = "block eigenvalue valuations comprise those of A"};
  });
  if (d.diagonal)
    clause("iteration_bound", [&] {
      return ClauseResult{.name = {}, .passed = d.iterations <= d.iteration_bound,
                          .detail = std::to_string(d.iterations) + " <= " +
                                    std::to_string(d.iteration_bound)};
    });
  return rep;
}

std::vector<Decomposition> decompose_all(const MatrixF& a, bool want_diagonal) {
  const Polygon np = newton_polygon_of_matrix(a);
  const Polygon hp = hodge_polygon(a);
  std::vector<Decomposition> out;
  for (size_t i = 1; i < np.length(); ++i) {
    if (!touches_at(np, hp, i)) continue;
    const auto s = hp.slopes();
    if (want_diagonal && !(s[i - 1] < s[i])) continue;
    out.push_back(hodge_newton_decompose(a, i, want_diagonal));
  }
  return out;
}

}  // namespace nahodge
