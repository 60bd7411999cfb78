#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nahodge/json_io.hpp"
#include "nahodge/polygons.hpp"

namespace nahodge {

/// splitmix64. next(): state += 0x9E3779B97F4A7C15, then the output is
/// mix(state) where mix is the standard splitmix64 finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t state) : state_(state) {}
  /// Generator for trial `index` of a campaign seeded with `seed`:
  /// initial state mix(seed + 0x9E3779B97F4A7C15 * (index + 1)).
  static SplitMix64 for_trial(uint64_t seed, uint64_t index);
  static uint64_t mix(uint64_t z);
  uint64_t next();
  /// lo + next() mod (hi - lo + 1).
  int64_t uniform(int64_t lo, int64_t hi);
  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

struct TrialConfig {
  FieldDescriptor descriptor = FieldDescriptor::padic(3, kDefaultPrecision);
  size_t n = 4;
  size_t trials = 100;
  uint64_t seed = 0;
  /// Target eigenvalue valuations; empty means drawn per trial.
  std::vector<Rational> slope_profile;
};

enum class TrialKind { newton, hodge, top_product, weyl };
std::string trial_kind_name(TrialKind k);
TrialKind parse_trial_kind(const std::string& s);

struct TrialReport {
  TrialKind kind = TrialKind::newton;
  TrialConfig config;
  size_t trials_run = 0;
  size_t passes = 0;
  size_t failures = 0;
  /// Full dump of the first failing trial.
  std::optional<Json> first_failure;
  /// Trials where the strictness premise of the top-product argument was
  /// not met (reported, not counted as failures).
  size_t strictness_premise_missing = 0;
};

Json trial_report_to_json(const TrialReport& r);

// Generators. Entries are exact; each call consumes the generator.
FieldElement random_integral_element(const FieldDescriptor& desc, SplitMix64& rng);
MatrixF random_integral_matrix(const FieldDescriptor& desc, size_t n, SplitMix64& rng);
/// Integral with nonzero determinant.
MatrixF random_invertible_matrix(const FieldDescriptor& desc, size_t n, SplitMix64& rng);
/// Upper triangular integral with nonzero diagonal.
MatrixF random_triangular_matrix(const FieldDescriptor& desc, size_t n, SplitMix64& rng);

struct GlPair {
  MatrixF w;
  MatrixF w_inv;
};
/// Permutation * unit lower triangular * upper triangular with unit
/// diagonal; the exact inverse comes from the factors.
GlPair random_gl_o_pair(const FieldDescriptor& desc, size_t n, SplitMix64& rng);
MatrixF random_gl_o(const FieldDescriptor& desc, size_t n, uint64_t seed);
/// I + pi * (random integral matrix).
MatrixF random_unipotent_mod_m(const FieldDescriptor& desc, size_t n, SplitMix64& rng);
MatrixF random_unipotent_mod_m(const FieldDescriptor& desc, size_t n, uint64_t seed);

struct HnInstance {
  MatrixF a;
  size_t index = 0;
  std::vector<Rational> profile;
};
/// A = W * Diag * W^-1 with v(Diag) = profile and a break index at a jump.
HnInstance random_hn_instance(const TrialConfig& cfg, SplitMix64& rng);
HnInstance random_hn_instance(const TrialConfig& cfg);

// Checkers. HypothesisViolated when a premise fails.
bool check_newton_invariance(const MatrixF& a, size_t i, const MatrixF& u, const MatrixF& v);

struct TopProductCheck {
  bool partial_sums_equal = false;
  bool wedge_equal = false;
  /// The top eigenvalue of the i-th wedge power is strictly dominant.
  bool strict_premise = false;
  bool holds() const { return partial_sums_equal && wedge_equal; }
};
TopProductCheck check_top_product(const MatrixF& a, size_t i, const MatrixF& u, const MatrixF& v);

bool check_hodge_invariance(const MatrixF& a, const MatrixF& u, const MatrixF& v);

TrialReport run_trials(const TrialConfig& cfg, TrialKind which);

}  // namespace nahodge
