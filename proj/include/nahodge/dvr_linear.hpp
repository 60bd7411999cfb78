#pragma once

#include <vector>

#include "nahodge/matrix_core.hpp"

namespace nahodge {

/// U * A * V = D with U, V in GL(o_F) and D diagonal with non-decreasing
/// valuations. The inverses of both transforms are tracked alongside.
struct SmithDecomposition {
  MatrixF U;
  MatrixF D;
  MatrixF V;
  MatrixF U_inv;
  MatrixF V_inv;
  /// Valuations of the diagonal of D: s_1 <= s_2 <= ... (min(rows, cols)
  /// entries). Infinite marks an exact zero; above-precision appears only
  /// when the noise tail is tolerated.
  std::vector<Valuation> certificates;
  /// Number of definite (finite) certificates.
  size_t rank = 0;
  /// Largest valuation of a pivot used to divide, i.e. the digits the
  /// transforms may have lost.
  int precision_loss = 0;
};

struct SmithOptions {
  /// Stop instead of failing when the remaining block vanishes to the known
  /// precision; the tail is then reported as above-precision certificates.
  bool tolerate_precision_tail = false;
};

SmithDecomposition smith_normal_form(const MatrixF& a, SmithOptions options = {});

/// Entries integral and det a unit.
bool is_gl_o(const MatrixF& a);
/// residue(a_ij) = delta_ij for all i, j; NotIntegral if an entry has
/// negative valuation.
bool congruent_identity_mod_m(const MatrixF& a);

/// Columns spanning o_F^n intersected with the F-span of the input columns.
MatrixF saturate_lattice(const MatrixF& vectors);
/// U in GL_n(o_F) whose first k columns are the (saturated) input.
MatrixF extend_to_gl_o(const MatrixF& basis);

}  // namespace nahodge
