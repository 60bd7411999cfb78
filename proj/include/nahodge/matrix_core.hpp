#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nahodge/polynomial.hpp"
#include "nahodge/valued_field.hpp"

namespace nahodge {

/// Default cap on matrix size; wedge powers of an 8x8 matrix have
/// dimension at most 70.
inline constexpr size_t kMaxDimension = 8;

/// Sorted, strictly increasing, 0-based row or column indices.
using IndexSet = std::vector<size_t>;

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> k_subsets(size_t n, size_t k);

/// Dense row-major matrix over a valued field.
class MatrixF {
 public:
  MatrixF() = default;
  /// rows x cols matrix of exact zeros.
  MatrixF(const FieldDescriptor& desc, size_t rows, size_t cols);
  MatrixF(const FieldDescriptor& desc, size_t rows, size_t cols,
          std::vector<FieldElement> entries);

  static MatrixF identity(const FieldDescriptor& desc, size_t n);
  static MatrixF diagonal(const std::vector<FieldElement>& diag);
  /// Rows of entries written in the element grammar.
  static MatrixF parse(const FieldDescriptor& desc,
                       const std::vector<std::vector<std::string>>& rows);

  const FieldDescriptor& descriptor() const { return desc_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElement& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const FieldElement& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<FieldElement>& entries() const { return entries_; }

  MatrixF block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const MatrixF& b);
  MatrixF transpose() const;
  MatrixF select(const IndexSet& rows, const IndexSet& cols) const;

  MatrixF operator-() const;
  friend MatrixF operator+(const MatrixF& a, const MatrixF& b);
  friend MatrixF operator-(const MatrixF& a, const MatrixF& b);
  friend MatrixF operator*(const MatrixF& a, const MatrixF& b);
  MatrixF scaled(const FieldElement& c) const;

  FieldElement trace() const;
  /// Minimum absolute precision over the entries.
  int min_precision() const;
  MatrixF in_descriptor(const FieldDescriptor& desc) const;
  MatrixF truncated(int prec) const;

  bool operator==(const MatrixF& other) const = default;

 private:
  FieldDescriptor desc_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

MatrixF mat_mul(const MatrixF& a, const MatrixF& b);

/// Additive operator norm: min over entries of v(a_ij); infinite for the
/// zero matrix.
Valuation operator_norm_valuation(const MatrixF& a);

/// Determinant by division-free cofactor expansion over column subsets.
FieldElement determinant(const MatrixF& a);
/// Determinant of the submatrix addressed by (rows, cols).
FieldElement minor(const MatrixF& a, const IndexSet& rows, const IndexSet& cols);

/// Coefficient of x^(n-k) is (-1)^k times the sum of principal k x k minors.
PolynomialF char_poly_principal_minors(const MatrixF& a);
/// det(xI - A) expanded over F[x].
PolynomialF char_poly_det_expansion(const MatrixF& a);
/// Division-free Berkowitz recurrence, O(n^4); used above the principal-minor
/// size limit.
PolynomialF char_poly_berkowitz(const MatrixF& a);
/// Monic characteristic polynomial det(xI - A). Principal-minor route up to
/// dimension 10, Berkowitz beyond.
PolynomialF char_poly(const MatrixF& a);

/// Matrix of the k-th exterior power in the lexicographically ordered basis
/// e_S = e_{s1} ^ ... ^ e_{sk}; entry (S, T) is the minor A(S | T).
MatrixF wedge_power(const MatrixF& a, size_t k);

/// Inverse by Gauss-Jordan elimination with minimal-valuation pivots.
MatrixF inverse(const MatrixF& a);

/// p(A) by Horner's rule.
MatrixF evaluate_at(const PolynomialF& p, const MatrixF& a);

}  // namespace nahodge
