#include "nahodge/invariance_harness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nahodge {

uint64_t SplitMix64::mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(uint64_t seed, uint64_t index) {
  return SplitMix64(mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix(state_);
}

int64_t SplitMix64::uniform(int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(next() % span);
}

std::string trial_kind_name(TrialKind k) {
  switch (k) {
    case TrialKind::newton: return "newton";
    case TrialKind::hodge: return "hodge";
    case TrialKind::top_product: return "top_product";
    case TrialKind::weyl: return "weyl";
  }
  return "?";
}

TrialKind parse_trial_kind(const std::string& s) {
  for (auto k : {TrialKind::newton, TrialKind::hodge, TrialKind::top_product, TrialKind::weyl})
    if (trial_kind_name(k) == s) return k;
  fail(ErrorKind::ParseError, "unknown trial kind '" + s + "'");
}

// ---------------------------------------------------------------- generators

FieldElement random_integral_element(const FieldDescriptor& desc, SplitMix64& rng) {
  const int64_t r = rng.uniform(0, 5);
  const int k = r < 3 ? 0 : static_cast<int>(r - 2);
  if (desc.is_padic()) {
    const int64_t p = desc.prime;
    return FieldElement::padic_value(desc, Integer(static_cast<long>(rng.uniform(-2 * p, 2 * p))), k);
  }
  const long c0 = static_cast<long>(rng.uniform(-3, 3));
  const long c1 = static_cast<long>(rng.uniform(-3, 3));
  return FieldElement::laurent_series(desc, {{k, Rational(c0)}, {k + 1, Rational(c1)}});
}

MatrixF random_integral_matrix(const FieldDescriptor& desc, size_t n, SplitMix64& rng) {
  MatrixF m(desc, n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) m(r, c) = random_integral_element(desc, rng);
  return m;
}

MatrixF random_invertible_matrix(const FieldDescriptor& desc, size_t n, SplitMix64& rng) {
  for (;;) {
    MatrixF m = random_integral_matrix(desc, n, rng);
    if (!determinant(m).is_zero()) return m;
  }
}

namespace {

FieldElement nonzero_integral(const FieldDescriptor& desc, SplitMix64& rng) {
  for (;;) {
    FieldElement x = random_integral_element(desc, rng);
    if (!x.is_zero()) return x;
  }
}

// Units whose inverse is exact: +-1 in Z_p, nonzero rational constants in
// Q((t)).
FieldElement exact_unit(const FieldDescriptor& desc, SplitMix64& rng) {
  if (desc.is_padic()) return FieldElement::from_integer(desc, rng.uniform(0, 1) ? 1 : -1);
  static const long choices[] = {1, -1, 2, -2, 3, -3};
  return FieldElement::from_integer(desc, choices[rng.uniform(0, 5)]);
}

// Any unit, for diagonal entries that are never inverted.
FieldElement random_unit(const FieldDescriptor& desc, SplitMix64& rng) {
  if (desc.is_padic()) {
    const long p = desc.prime;
    long u;
    do u = static_cast<long>(rng.uniform(1, 3 * p));
    while (u % p == 0);
    return FieldElement::from_integer(desc, rng.uniform(0, 1) ? u : -u);
  }
  const long c0 = static_cast<long>(rng.uniform(1, 3)) * (rng.uniform(0, 1) ? 1 : -1);
  const long c1 = static_cast<long>(rng.uniform(-2, 2));
  return FieldElement::laurent_series(desc, {{0, Rational(c0)}, {1, Rational(c1)}});
}

// Inverse of an upper triangular matrix whose diagonal has exact inverses.
MatrixF upper_inverse(const MatrixF& r) {
  const size_t n = r.rows();
  MatrixF y(r.descriptor(), n, n);
  for (size_t i = n; i-- > 0;) {
    const FieldElement d_inv = r(i, i).inverse();
    y(i, i) = d_inv;
    for (size_t j = i + 1; j < n; ++j) {
      FieldElement s = FieldElement::zero(r.descriptor());
      for (size_t k = i + 1; k <= j; ++k) s += r(i, k) * y(k, j);
      y(i, j) = -(d_inv * s);
    }
  }
  return y;
}

}  // namespace

MatrixF random_triangular_matrix(const FieldDescriptor& desc, size_t n, SplitMix64& rng) {
  MatrixF m(desc, n, n);
  for (size_t r = 0; r < n; ++r) {
    m(r, r) = nonzero_integral(desc, rng);
    for (size_t c = r + 1; c < n; ++c) m(r, c) = random_integral_element(desc, rng);
  }
  return m;
}

GlPair random_gl_o_pair(const FieldDescriptor& desc, size_t n, SplitMix64& rng) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[rng.uniform(0, static_cast<int64_t>(k) - 1)]);
  MatrixF p(desc, n, n);
  for (size_t c = 0; c < n; ++c) p(perm[c], c) = FieldElement::one(desc);

  MatrixF l = MatrixF::identity(desc, n);
  MatrixF r(desc, n, n);
  for (size_t i = 0; i < n; ++i) {
    r(i, i) = exact_unit(desc, rng);
    for (size_t j = 0; j < i; ++j) l(i, j) = random_integral_element(desc, rng);
    for (size_t j = i + 1; j < n; ++j) r(i, j) = random_integral_element(desc, rng);
  }
  const MatrixF l_inv = upper_inverse(l.transpose()).transpose();
  const MatrixF r_inv = upper_inverse(r);
  return {p * l * r, r_inv * l_inv * p.transpose()};
}

MatrixF random_gl_o(const FieldDescriptor& desc, size_t n, uint64_t seed) {
  SplitMix64 rng(seed);
  return random_gl_o_pair(desc, n, rng).w;
}

MatrixF random_unipotent_mod_m(const FieldDescriptor& desc, size_t n, SplitMix64& rng) {
  MatrixF m = MatrixF::identity(desc, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) m(r, c) += random_integral_element(desc, rng).shifted(1);
  return m;
}

MatrixF random_unipotent_mod_m(const FieldDescriptor& desc, size_t n, uint64_t seed) {
  SplitMix64 rng(seed);
  return random_unipotent_mod_m(desc, n, rng);
}

namespace {

std::vector<Rational> draw_profile(size_t n, SplitMix64& rng) {
  std::vector<Rational> s(n);
  long level = static_cast<long>(rng.uniform(0, 1));
  bool jumped = false;
  for (size_t k = 0; k < n; ++k) {
    if (k > 0 && rng.uniform(0, 2) == 0) {
      level += static_cast<long>(rng.uniform(1, 2));
      jumped = true;
    }
    s[k] = level;
  }
  if (!jumped) {
    const size_t j = static_cast<size_t>(rng.uniform(1, static_cast<int64_t>(n) - 1));
    for (size_t k = j; k < n; ++k) s[k] += 1;
  }
  return s;
}

void validate_profile(const std::vector<Rational>& s, size_t n) {
  if (s.size() != n)
    fail(ErrorKind::BadProfile, "profile has " + std::to_string(s.size()) + " entries, need " + std::to_string(n));
  bool jump = false;
  for (size_t k = 0; k < n; ++k) {
    if (s[k].get_den() != 1) fail(ErrorKind::BadProfile, "profile entries must be integers");
    if (s[k] < 0) fail(ErrorKind::BadProfile, "profile entries must be non-negative");
    if (k > 0 && s[k] < s[k - 1]) fail(ErrorKind::BadProfile, "profile must be non-decreasing");
    if (k > 0 && s[k] > s[k - 1]) jump = true;
  }
  if (!jump) fail(ErrorKind::BadProfile, "profile needs at least two distinct values");
}

}  // namespace

HnInstance random_hn_instance(const TrialConfig& cfg, SplitMix64& rng) {
  const size_t n = cfg.n;
  if (n < 2 || n > kMaxDimension) fail(ErrorKind::BadProfile, "instance size must lie in [2, 8]");
  HnInstance inst;
  inst.profile = cfg.slope_profile.empty() ? draw_profile(n, rng) : cfg.slope_profile;
  validate_profile(inst.profile, n);
  const auto& desc = cfg.descriptor;
  for (const auto& s : inst.profile)
    if (s >= desc.precision) fail(ErrorKind::BadProfile, "profile entry beyond the session precision");

  std::vector<FieldElement> diag;
  for (const auto& s : inst.profile)
    diag.push_back(random_unit(desc, rng).shifted(static_cast<int>(s.get_num().get_si())));
  const GlPair w = random_gl_o_pair(desc, n, rng);
  inst.a = w.w * MatrixF::diagonal(diag) * w.w_inv;

  std::vector<size_t> jumps;
  for (size_t k = 1; k < n; ++k)
    if (inst.profile[k - 1] < inst.profile[k]) jumps.push_back(k);
  inst.index = jumps[rng.uniform(0, static_cast<int64_t>(jumps.size()) - 1)];
  return inst;
}

HnInstance random_hn_instance(const TrialConfig& cfg) {
  SplitMix64 rng = SplitMix64::for_trial(cfg.seed, 0);
  return random_hn_instance(cfg, rng);
}

// ------------------------------------------------------------------ checkers

namespace {

void require_unipotent(const MatrixF& a, const MatrixF& u, const MatrixF& v) {
  if (!a.is_square() || u.rows() != a.rows() || v.rows() != a.rows() || !u.is_square() || !v.is_square())
    fail(ErrorKind::DimensionMismatch, "A, U, V must be square of equal size");
  for (const MatrixF* m : {&u, &v}) {
    bool ok = false;
    try {
      ok = congruent_identity_mod_m(*m);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok)
      fail(ErrorKind::HypothesisViolated,
           std::string(m == &u ? "U" : "V") + " is not congruent to the identity modulo m");
  }
}

void require_break(const MatrixF& a, size_t i, bool allow_full) {
  const size_t n = a.rows();
  if (allow_full && i == n) return;
  if (i < 1 || i >= n) fail(ErrorKind::HypothesisViolated, "break index outside [1, n-1]");
  const Polygon np = newton_polygon_of_matrix(a);
  const Polygon hp = hodge_polygon(a);
  if (!touches_at(np, hp, i))
    fail(ErrorKind::HypothesisViolated, "Newton polygon has no vertex on the Hodge polygon at i = " + std::to_string(i));
  const auto s = hp.slopes();
  if (!(s[i - 1] < s[i]))
    fail(ErrorKind::HypothesisViolated, "no singular-value gap at i = " + std::to_string(i));
}

// The i-th wedge power of an exact matrix has determinant valuation
// C(n-1, i-1) * v(det A), which can exceed the session precision; exact
// inputs are carried into a descriptor with room for it.
MatrixF with_wedge_headroom(const MatrixF& m, size_t i, const Rational& det_valuation) {
  for (const auto& x : m.entries())
    if (!x.is_exact()) return m;
  const auto& desc = m.descriptor();
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), m.rows() - 1, i - 1);
  const Rational need = Rational(binom) * det_valuation + desc.precision;
  if (need <= desc.precision) return m;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
  return m.in_descriptor(desc.with_precision(static_cast<int>(c.get_si())));
}

}  // namespace

bool check_newton_invariance(const MatrixF& a, size_t i, const MatrixF& u, const MatrixF& v) {
  require_unipotent(a, u, v);
  require_break(a, i, false);
  return newton_polygon_of_matrix(u * a * v) == newton_polygon_of_matrix(a);
}

TopProductCheck check_top_product(const MatrixF& a, size_t i, const MatrixF& u, const MatrixF& v) {
  require_unipotent(a, u, v);
  require_break(a, i, true);
  const MatrixF uav = u * a * v;
  TopProductCheck out;
  const Polygon na = newton_polygon_of_matrix(a);
  out.partial_sums_equal = newton_polygon_of_matrix(uav).y(i) == na.y(i);
  const Rational vdet = na.y(a.rows());
  const Polygon wa = newton_polygon_of_matrix(wedge_power(with_wedge_headroom(a, i, vdet), i));
  const Polygon wuav = newton_polygon_of_matrix(wedge_power(with_wedge_headroom(uav, i, vdet), i));
  out.wedge_equal = wuav.y(1) == wa.y(1);
  out.strict_premise = wa.length() == 1 || wa.has_vertex_at(1);
  return out;
}

bool check_hodge_invariance(const MatrixF& a, const MatrixF& u, const MatrixF& v) {
  require_unipotent(a, u, v);
  const MatrixF uav = u * a * v;
  if (smith_normal_form(uav).certificates != smith_normal_form(a).certificates) return false;
  for (size_t k = 1; k <= a.rows(); ++k)
    if (!(operator_norm_valuation(wedge_power(uav, k)) == operator_norm_valuation(wedge_power(a, k))))
      return false;
  return true;
}

// -------------------------------------------------------------------- trials

namespace {

Json polygon_or_error(const std::function<Polygon()>& f) {
  try {
    return polygon_to_json(f());
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

Json dump(size_t trial, const std::string& reason, const MatrixF& a, size_t i, const MatrixF* u,
          const MatrixF* v) {
  Json j;
  j["trial"] = trial;
  j["reason"] = reason;
  if (i > 0) j["index"] = i;
  j["A"] = matrix_to_json(a);
  Json polys;
  polys["newton_A"] = polygon_or_error([&] { return newton_polygon_of_matrix(a); });
  polys["hodge_A"] = polygon_or_error([&] { return hodge_polygon(a); });
  if (u && v) {
    const MatrixF uav = *u * a * *v;
    j["U"] = matrix_to_json(*u);
    j["V"] = matrix_to_json(*v);
    j["UAV"] = matrix_to_json(uav);
    polys["newton_UAV"] = polygon_or_error([&] { return newton_polygon_of_matrix(uav); });
    polys["hodge_UAV"] = polygon_or_error([&] { return hodge_polygon(uav); });
  }
  j["polygons"] = std::move(polys);
  return j;
}

}  // namespace

TrialReport run_trials(const TrialConfig& cfg, TrialKind which) {
  TrialReport rep;
  rep.kind = which;
  rep.config = cfg;
  const auto& desc = cfg.descriptor;
  const size_t n = cfg.n;
  if (n < 1 || n > kMaxDimension) fail(ErrorKind::DimensionMismatch, "trial size must lie in [1, 8]");
  // A bad fixed profile is a configuration error, not a trial failure.
  if (!cfg.slope_profile.empty() && which != TrialKind::hodge && which != TrialKind::weyl)
    validate_profile(cfg.slope_profile, n);

  for (size_t t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = SplitMix64::for_trial(cfg.seed, t);
    MatrixF a, u, v;
    size_t i = 0;
    bool have_uv = false;
    bool passed = false;
    std::string reason;
    try {
      switch (which) {
        case TrialKind::newton:
        case TrialKind::top_product: {
          HnInstance inst = random_hn_instance(cfg, rng);
          a = std::move(inst.a);
          i = inst.index;
          u = random_unipotent_mod_m(desc, n, rng);
          v = random_unipotent_mod_m(desc, n, rng);
          have_uv = true;
          if (which == TrialKind::newton) {
            passed = check_newton_invariance(a, i, u, v);
            if (!passed) reason = "Newton polygons of A and UAV differ";
          } else {
            const TopProductCheck c = check_top_product(a, i, u, v);
            if (!c.strict_premise) ++rep.strictness_premise_missing;
            passed = c.holds();
            if (!c.partial_sums_equal) reason = "Newton partial sums at the break differ";
            else if (!c.wedge_equal) reason = "top wedge-power eigenvalue valuations differ";
          }
          break;
        }
        case TrialKind::hodge: {
          a = random_invertible_matrix(desc, n, rng);
          u = random_unipotent_mod_m(desc, n, rng);
          v = random_unipotent_mod_m(desc, n, rng);
          have_uv = true;
          passed = check_hodge_invariance(a, u, v);
          if (!passed) reason = "Hodge data of A and UAV differ";
          break;
        }
        case TrialKind::weyl: {
          a = random_invertible_matrix(desc, n, rng);
          const Polygon np = newton_polygon_of_matrix(a);
          const Polygon hp = hodge_polygon(a);
          passed = lies_above(np, hp) && np.y(n) == hp.y(n);
          if (!passed) reason = "Newton polygon is not above the Hodge polygon with equal endpoints";
          break;
        }
      }
    } catch (const Error& e) {
      passed = false;
      reason = e.what();
    }
    ++rep.trials_run;
    if (passed) {
      ++rep.passes;
    } else {
      ++rep.failures;
      if (!rep.first_failure) rep.first_failure = dump(t, reason, a, i, have_uv ? &u : nullptr, have_uv ? &v : nullptr);
    }
  }
  return rep;
}

Json trial_report_to_json(const TrialReport& r) {
  Json j;
  j["kind"] = trial_kind_name(r.kind);
  Json cfg;
  cfg["field"] = descriptor_to_json(r.config.descriptor);
  cfg["n"] = r.config.n;
  cfg["trials"] = r.config.trials;
  cfg["seed"] = r.config.seed;
  Json prof = Json::array();
  for (const auto& s : r.config.slope_profile) prof.push_back(to_string(s));
  cfg["slope_profile"] = std::move(prof);
  j["config"] = std::move(cfg);
  j["trials_run"] = r.trials_run;
  j["passes"] = r.passes;
  j["failures"] = r.failures;
  if (r.kind == TrialKind::top_product) j["strictness_premise_missing"] = r.strictness_premise_missing;
  j["first_failure"] = r.first_failure ? *r.first_failure : Json(nullptr);
  return j;
}

}  // namespace nahodge
