#include "nahodge/slope_factor.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace nahodge {

namespace {

// Level to which a residual polynomial is known to vanish in the Gauss
// norm weighted by rho: min over j of ord(c_j) + rho * j, where ord is the
// valuation or, for a zero coefficient, its precision.
std::optional<Rational> weighted_level(const PolynomialF& p, const Rational& rho) {
  std::optional<Rational> level;
  for (int j = 0; j <= p.degree(); ++j) {
    const int o = p[j].effective_order();
    if (o == FieldElement::kExact) continue;
    Rational x = Rational(o) + rho * j;
    if (!level || x < *level) level = x;
  }
  return level;
}

int vanishing_level(const PolynomialF& p) {
  int level = FieldElement::kExact;
  for (const auto& c : p.coefficients()) level = std::min(level, c.effective_order());
  return level;
}

PolynomialF truncate_degree(const PolynomialF& p, int max_degree) {
  if (p.degree() <= max_degree) return p;
  return p.with_degree(max_degree);
}

struct LiftResult {
  PolynomialF g, h, s, t;
  int level = 0;
  int iterations = 0;
};

// Exact representative of x with the digits at and beyond pi^cap dropped.
FieldElement approximant(const FieldElement& x, int cap) {
  const auto& desc = x.descriptor();
  if (x.is_zero() || x.order() >= cap) return FieldElement::zero(desc);
  if (desc.is_padic()) {
    const int v = x.order();
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(desc.prime), static_cast<unsigned long>(cap - v));
    Integer u = x.padic_unit() % m;
    return FieldElement::padic_value(desc, u, v);
  }
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& [k, c] : x.laurent_terms())
    if (k < cap) terms.emplace_back(k, c);
  return FieldElement::laurent_series(desc, std::move(terms));
}

// Every inexact coefficient replaced by an exact representative of its known digits.
PolynomialF exact_representative(const PolynomialF& p) {
  std::vector<FieldElement> c;
  for (const auto& x : p.coefficients()) c.push_back(x.is_exact() ? x : approximant(x, x.precision()));
  return PolynomialF(p.descriptor(), std::move(c));
}

PolynomialF cut(const PolynomialF& p, int cap) {
  std::vector<FieldElement> c;
  for (const auto& x : p.coefficients()) c.push_back(approximant(x, cap));
  return PolynomialF(p.descriptor(), std::move(c));
}

// Truncates every coefficient to prec; a monic leading term stays exact.
PolynomialF mark_precision(const PolynomialF& p, int prec, bool monic = false) {
  std::vector<FieldElement> c;
  for (const auto& x : p.coefficients()) c.push_back(x.truncated(prec));
  if (monic && !c.empty()) c.back() = FieldElement::one(p.descriptor());
  return PolynomialF(p.descriptor(), std::move(c));
}

LiftResult lift(const PolynomialF& f, size_t i, const Rational& rho, int target, int max_steps,
                int slack) {
  const auto& desc = f.descriptor();
  const int n = f.degree();
  const int j0 = n - static_cast<int>(i);
  const int deg_g = static_cast<int>(i);
  const int deg_h = j0;

  // Top part (roots of small valuation) and normalized bottom part.
  std::vector<FieldElement> top(f.coefficients().begin() + j0, f.coefficients().end());
  PolynomialF g(desc, top);
  const FieldElement pivot_inv = f[j0].inverse();
  std::vector<FieldElement> bottom(f.coefficients().begin(), f.coefficients().begin() + j0 + 1);
  PolynomialF h = PolynomialF(desc, bottom).scaled(pivot_inv);
  h[deg_h] = FieldElement::one(desc);
  PolynomialF s = PolynomialF::constant(pivot_inv);
  PolynomialF t = PolynomialF(desc, {FieldElement::zero(desc)});

  // Convergence is quadratic in the rho-weighted norm, in which g is
  // dominated by its constant term and h by its leading term.
  const PolynomialF one = PolynomialF::constant(FieldElement::one(desc));
  LiftResult out;
  std::optional<Rational> previous;
  for (int step = 0; step <= max_steps; ++step) {
    const PolynomialF e = (f - g * h).with_degree(n - 1);
    const PolynomialF b0 = (s * g + t * h - one);
    out = {g, h, s, t, std::min(vanishing_level(e), vanishing_level(b0)), step};
    if (out.level >= target) return out;
    std::optional<Rational> we = weighted_level(e, rho), wb = weighted_level(b0, rho);
    std::optional<Rational> level = !we ? wb : (!wb ? we : std::optional<Rational>(std::min(*we, *wb)));
    if (!level) return out;
    if (previous && *level <= *previous) return out;
    previous = level;

    // Digits beyond what the next step can certify only inflate the
    // coefficients, so each step runs at about twice the current level on
    // exact approximants; the residual against f keeps the bookkeeping
    // honest.
    PolynomialF ec = e;
    const Rational want = 2 * *level + abs(rho) * (n + 1) + slack;
    if (want < desc.precision) {
      mpz_class c;
      mpz_cdiv_q(c.get_mpz_t(), want.get_num_mpz_t(), want.get_den_mpz_t());
      const int cap = static_cast<int>(c.get_si());
      g = cut(g, cap);
      h = cut(h, cap);
      s = cut(s, cap);
      t = cut(t, cap);
      ec = cut(e, cap);
    }

    // Factor update.
    auto [q, r] = (s * ec).divrem_monic(h);
    PolynomialF dg = truncate_degree(t * ec + q * g, deg_g - 1);
    PolynomialF g2 = g + dg.with_degree(deg_g);
    g2[deg_g] = FieldElement::one(desc);
    PolynomialF h2 = h + r.with_degree(deg_h);
    h2[deg_h] = FieldElement::one(desc);

    // Bezout update.
    const PolynomialF b = s * g2 + t * h2 - one;
    auto [c, d] = (s * b).divrem_monic(h2);
    PolynomialF s2 = truncate_degree(s - d, deg_h - 1);
    PolynomialF t2 = truncate_degree(t - t * b - c * g2, deg_g - 1);

    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
  }
  return out;
}

}  // namespace

std::vector<size_t> slope_breaks(const PolynomialF& f) {
  const Polygon np = newton_polygon_of_poly(f);
  std::vector<size_t> out;
  for (size_t i = 1; i < np.length(); ++i)
    if (np.has_vertex_at(i)) out.push_back(i);
  return out;
}

SlopeSplit slope_factorization(const PolynomialF& f, size_t i) {
  const Polygon np = newton_polygon_of_poly(f);
  if (i < 1 || i >= np.length() || !np.has_vertex_at(i))
    fail(ErrorKind::NoSlopeGap, "no Newton-polygon vertex at x = " + std::to_string(i));
  const auto& desc = f.descriptor();
  const int N = desc.precision;
  const auto slopes = np.slopes();
  const Rational rho = (slopes[i - 1] + slopes[i]) / 2;

  // Digits lost to the divisions scale with the spread of the polygon.
  Rational spread = 0;
  for (const auto& y : np.partial_sums()) spread = std::max(spread, Rational(abs(y)));
  for (const auto& sl : slopes) spread = std::max(spread, Rational(abs(sl) * static_cast<int>(np.length())));
  int guard = static_cast<int>(std::ceil(spread.get_d())) + 8;
  // Inexact input is lifted through an exact representative; the
  // perturbation is accounted for afterwards.
  const int input_prec = f.min_precision();
  const PolynomialF f_exact = exact_representative(f);

  for (int attempt = 0; attempt < 4; ++attempt, guard *= 2) {
    const FieldDescriptor work = desc.with_precision(N + guard);
    const PolynomialF fw = f_exact.in_descriptor(work);
    const int max_steps = 4 * (N + guard);
    LiftResult lr = lift(fw, i, rho, N + guard / 2, max_steps, guard);
    if (lr.level < N + guard / 2) continue;

    // kappa = -v(B, C) bounds how far a perturbation of f moves the factors.
    int kappa = 0;
    const Valuation vbc = Valuation::min(lr.s.gauss_valuation(), lr.t.gauss_valuation());
    if (vbc.is_finite() && vbc.value() < 0) {
      mpz_class c;
      mpz_cdiv_q(c.get_mpz_t(), vbc.value().get_num_mpz_t(), vbc.value().get_den_mpz_t());
      kappa = static_cast<int>(-c.get_si());
    }
    const bool exact_input = input_prec == FieldElement::kExact;
    const int prec_pq = exact_input ? N : std::min(N, input_prec - kappa);
    const int prec_bc = exact_input ? N : std::min(N, input_prec - 2 * kappa);

    SlopeSplit split;
    split.index = i;
    split.P = mark_precision(lr.g, prec_pq, true).in_descriptor(desc);
    split.Q = mark_precision(lr.h, prec_pq, true).in_descriptor(desc);
    split.B = mark_precision(lr.s, prec_bc).in_descriptor(desc);
    split.C = mark_precision(lr.t, prec_bc).in_descriptor(desc);
    split.iterations = lr.iterations;
    split.guard_digits = guard;
    split.precision_loss = N - prec_pq;
    split.bezout_loss = kappa;
    const PolynomialF one = PolynomialF::constant(FieldElement::one(desc));
    const PolynomialF e = (f - split.P * split.Q).with_degree(f.degree() - 1);
    const PolynomialF b = split.P * split.B + split.Q * split.C - one;
    Valuation residual = Valuation::min(e.gauss_valuation(), b.gauss_valuation());
    if (residual.at_least(Rational(N))) residual = Valuation::above(Rational(N));
    split.residual_valuation = residual;
    return split;
  }
  fail(ErrorKind::LiftStall, "Hensel lifting at x = " + std::to_string(i) +
                                 " did not reach precision " + std::to_string(N));
}

MatrixF spectral_projector(const MatrixF& a, const SlopeSplit& split) {
  if (!a.is_square() || static_cast<int>(a.rows()) != split.P.degree() + split.Q.degree())
    fail(ErrorKind::DimensionMismatch, "split does not match the matrix size");
  return evaluate_at(split.Q, a) * evaluate_at(split.C, a);
}

}  // namespace nahodge
