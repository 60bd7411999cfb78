#include <doctest.h>

#include "nahodge/hodge_newton.hpp"
#include "nahodge/invariance_harness.hpp"

using namespace nahodge;

namespace {

bool has_clause(const DecompositionReport& r, const std::string& name, bool passed) {
  for (const auto& c : r.clauses)
    if (c.name == name) return c.passed == passed;
  return false;
}

// -(1 + p + ... + p^(k-1)).
Integer neg_geometric(long p, int k) {
  Integer s = 0, pw = 1;
  for (int j = 0; j < k; ++j, pw *= p) s += pw;
  return -s;
}

}  // namespace

TEST_CASE("corner fixture [[1,1],[0,p]]") {
  for (long p : {2L, 3L, 5L, 7L}) {
    const auto d = FieldDescriptor::padic(p, 40);
    MatrixF a = MatrixF::parse(d, {{"1", "1"}, {"0", std::to_string(p)}});
    Decomposition dec = hodge_newton_decompose(a, 1, true);
    CHECK(dec.report.all_passed());
    CHECK(dec.off_diagonal_valuation.at_least(40));
    CHECK(dec.iterations <= dec.iteration_bound);
    CHECK(dec.iteration_bound <= 41);
    // U^-1 A U = diag(1, p) forces U(0,1)/U(1,1) = 1/(p - 1) = -(1 + p + p^2 + ...).
    FieldElement ratio = dec.U(0, 1) / dec.U(1, 1);
    const FieldElement expect = FieldElement::padic_value(d, neg_geometric(p, 39), 0);
    CHECK(ratio.agrees_to(expect, 39));
    CHECK(ratio.agrees_to(FieldElement::from_rational(d, Rational(1, p - 1)), 40));
    CHECK(dec.conjugated(0, 0).agrees_to(FieldElement::one(d), 40));
    CHECK(dec.conjugated(1, 1).agrees_to(FieldElement::from_integer(d, p), 40));
    // Decay of the off-diagonal block: one digit per step at gap 1.
    for (size_t k = 1; k < dec.trace.size(); ++k)
      if (dec.trace[k - 1].is_finite() && dec.trace[k].is_finite())
        CHECK(dec.trace[k].value() >= dec.trace[k - 1].value() + 1);
  }
}

TEST_CASE("already block diagonal input") {
  const auto d = FieldDescriptor::padic(3, 40);
  MatrixF a = MatrixF::parse(d, {{"1", "0"}, {"0", "3"}});
  Decomposition dec = hodge_newton_decompose(a, 1, true);
  CHECK(dec.report.all_passed());
  CHECK(dec.iterations <= 1);
  CHECK(dec.off_diagonal_valuation.at_least(40));
}

TEST_CASE("conjugated diagonal instance with repeated slope") {
  for (const auto& d : {FieldDescriptor::padic(3, 40), FieldDescriptor::laurent(40)}) {
    TrialConfig cfg;
    cfg.descriptor = d;
    cfg.n = 3;
    cfg.slope_profile = {0, 0, 1};
    cfg.seed = 5;
    HnInstance inst = random_hn_instance(cfg);
    REQUIRE(inst.index == 2);
    Decomposition dec = hodge_newton_decompose(inst.a, 2, true);
    CHECK(dec.report.all_passed());
    CHECK(dec.off_diagonal_valuation.at_least(40));
    // Independently of the split: the block char polys multiply back to chi_A
    // and carry the slopes of the profile.
    const PolynomialF top = char_poly(dec.top_block), bottom = char_poly(dec.bottom_block);
    CHECK((top * bottom - char_poly(inst.a)).gauss_valuation().at_least(40 - dec.split.precision_loss));
    CHECK(newton_polygon_of_poly(top).slopes() == std::vector<Rational>{0, 0});
    CHECK(newton_polygon_of_poly(bottom).slopes() == std::vector<Rational>{1});
  }
}

TEST_CASE("random instances: clauses, bound and U-step decay") {
  SplitMix64 rng(2718);
  for (const auto& d : {FieldDescriptor::padic(2, 40), FieldDescriptor::padic(5, 40), FieldDescriptor::laurent(40)})
    for (int t = 0; t < 5; ++t) {
      TrialConfig cfg;
      cfg.descriptor = d;
      cfg.n = 3 + static_cast<size_t>(t % 2);
      HnInstance inst = random_hn_instance(cfg, rng);
      for (bool diagonal : {false, true}) {
        Decomposition dec = hodge_newton_decompose(inst.a, inst.index, diagonal);
        INFO("profile size ", inst.profile.size(), " index ", inst.index);
        CHECK(dec.report.all_passed());
        CHECK(is_gl_o(dec.U));
        if (!diagonal) continue;
        CHECK(dec.off_diagonal_valuation.at_least(40));
        CHECK(dec.iterations <= dec.iteration_bound);
        for (size_t k = 0; k < dec.step_valuations.size(); ++k) {
          const Valuation& vs = dec.step_valuations[k];
          if (k > 0 && dec.step_valuations[k - 1].is_finite()) CHECK(vs.at_least(dec.step_valuations[k - 1].value()));
          if (dec.trace[k].is_finite()) CHECK(vs.at_least(dec.trace[k].value() - dec.hodge_slope_top));
        }
      }
    }
}

TEST_CASE("hypothesis errors") {
  const auto d = FieldDescriptor::padic(3, 40);
  MatrixF rot = MatrixF::parse(d, {{"0", "3"}, {"1", "0"}});
  try {
    (void)hodge_newton_decompose(rot, 1, false);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
  // Companion matrix of (x - 3)(x - 9): Newton vertex (1, 1), Hodge slopes (0, 3).
  MatrixF above = MatrixF::parse(d, {{"0", "-27"}, {"1", "12"}});
  try {
    (void)hodge_newton_decompose(above, 1, false);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
  // No Newton vertex at 1 for diag(1, 1, 3).
  MatrixF flat = MatrixF::parse(d, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "3"}});
  try {
    (void)hodge_newton_decompose(flat, 1, true);
    FAIL("expected HypothesisViolated or NoGap");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::HypothesisViolated || e.kind() == ErrorKind::NoGap));
  }
  CHECK_THROWS_AS((void)hodge_newton_decompose(rot, 2, false), Error);
}

TEST_CASE("verify_decomposition negative controls") {
  const auto d = FieldDescriptor::padic(3, 40);
  MatrixF a = MatrixF::parse(d, {{"1", "1"}, {"0", "3"}});
  Decomposition dec = hodge_newton_decompose(a, 1, true);
  REQUIRE(verify_decomposition(a, dec).all_passed());

  Decomposition tampered = dec;
  tampered.U(0, 1) += FieldElement::one(d);
  DecompositionReport r = verify_decomposition(a, tampered);
  CHECK_FALSE(r.all_passed());
  CHECK(has_clause(r, "conjugation", false));

  MatrixF rot = MatrixF::parse(d, {{"0", "3"}, {"1", "0"}});
  DecompositionReport h = verify_decomposition(rot, dec);
  CHECK(has_clause(h, "hypothesis", false));
}

TEST_CASE("decompose_all visits every admissible index") {
  const auto d = FieldDescriptor::padic(2, 40);
  TrialConfig cfg;
  cfg.descriptor = d;
  cfg.n = 4;
  cfg.slope_profile = {0, 1, 1, 3};
  cfg.seed = 11;
  HnInstance inst = random_hn_instance(cfg);
  auto all = decompose_all(inst.a, true);
  REQUIRE(all.size() == 2);
  CHECK(all[0].index == 1);
  CHECK(all[1].index == 3);
  for (const auto& dec : all) CHECK(dec.report.all_passed());
}
