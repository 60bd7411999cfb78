#pragma once

#include <string>
#include <vector>

#include "nahodge/dvr_linear.hpp"
#include "nahodge/polygons.hpp"
#include "nahodge/slope_factor.hpp"

namespace nahodge {

struct ClauseResult {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Residual valuation backing the verdict, when the clause has one.
  Valuation residual = Valuation::infinite();
};

struct DecompositionReport {
  std::vector<ClauseResult> clauses;

  bool all_passed() const;
  /// First failing clause, or nullptr.
  const ClauseResult* first_failure() const;
};

/// U in GL_n(o_F) with U^-1 A U = [[B, C], [0, D]]; C vanishes to the
/// session precision when the block-diagonal form was requested.
struct Decomposition {
  size_t index = 0;
  bool diagonal = false;
  MatrixF U;
  MatrixF conjugated;
  MatrixF top_block;
  MatrixF bottom_block;
  /// Operator-norm valuation of the upper-right block of `conjugated`.
  Valuation off_diagonal_valuation;
  /// Valuation of the lower-left block of U0^-1 A U0 before it was zeroed.
  Valuation lower_left_valuation;
  /// Valuation of B^-1 C for the first block-triangular form.
  Valuation b_inv_c_valuation;
  int iterations = 0;
  int iteration_bound = 0;
  /// v(C_0), v(C_1), ... of the off-diagonal cleanup.
  std::vector<Valuation> trace;
  /// v(U_k - I) for k = 1, 2, ...
  std::vector<Valuation> step_valuations;
  /// Hodge slopes s_i and s_{i+1} at the split.
  Rational hodge_slope_top;
  Rational hodge_slope_bottom;
  SlopeSplit split;
  int working_precision = 0;
  DecompositionReport report;
};

/// Block decomposition at a Newton vertex lying on the Hodge polygon;
/// block-diagonal when want_diagonal (needs a Hodge slope gap at i).
Decomposition hodge_newton_decompose(const MatrixF& a, size_t i, bool want_diagonal);

/// Re-derives every invariant of d from a and reports each clause.
DecompositionReport verify_decomposition(const MatrixF& a, const Decomposition& d);

/// One decomposition per index where the hypotheses hold.
std::vector<Decomposition> decompose_all(const MatrixF& a, bool want_diagonal);

}  // namespace nahodge
