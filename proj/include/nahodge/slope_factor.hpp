#pragma once

#include <vector>

#include "nahodge/matrix_core.hpp"
#include "nahodge/polygons.hpp"

namespace nahodge {

/// chi = P * Q split at a Newton-polygon vertex: P (degree i) carries the
/// roots of smallest valuation (largest norm), Q the rest, and
/// P * B + Q * C = 1.
struct SlopeSplit {
  size_t index = 0;
  PolynomialF P;
  PolynomialF Q;
  PolynomialF B;
  PolynomialF C;
  /// min of the coefficient valuations of chi - PQ and PB + QC - 1.
  Valuation residual_valuation;
  /// Digits of chi - PQ below the session precision: input coefficients
  /// known to less than N, or P, Q carried to less than N.
  int precision_loss = 0;
  /// Further digits of PB + QC - 1 lost because B, C have negative
  /// valuation while P, Q are only known mod pi^N.
  int bezout_loss = 0;
  /// Hensel steps performed (last attempt).
  int iterations = 0;
  /// Extra digits carried internally to absorb division losses.
  int guard_digits = 0;
};

/// Interior x-coordinates where the Newton polygon of f has a vertex.
std::vector<size_t> slope_breaks(const PolynomialF& f);

/// Quadratic Hensel lifting of the factorization across the vertex at i.
SlopeSplit slope_factorization(const PolynomialF& f, size_t i);

/// Q(A) * C(A): the projector onto the generalized eigenspaces of the
/// roots of P, along those of Q.
MatrixF spectral_projector(const MatrixF& a, const SlopeSplit& split);

}  // namespace nahodge
