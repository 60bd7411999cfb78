#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nahodge/invariance_harness.hpp"
#include "nahodge/polygons.hpp"

namespace nahodge {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(size_t n) : n_(n), a_(n * n) {}
  /// Square rows with finite entries; ParseError otherwise.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static ComplexMatrix identity(size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  size_t size() const { return n_; }
  Complex& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }
  std::vector<std::vector<Complex>> rows() const;

  ComplexMatrix adjoint() const;
  /// Square submatrix on the given rows and columns (0-based, equal count).
  ComplexMatrix select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
  double max_abs_in(size_t r0, size_t c0, size_t nr, size_t nc) const;
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  double max_abs() const;
  /// Max entry of |A^H A - I|.
  double unitarity_defect() const;

 private:
  size_t n_ = 0;
  std::vector<Complex> a_;
};

Complex determinant(const ComplexMatrix& a);

struct SvdResult {
  /// Non-increasing.
  std::vector<double> sigma;
  /// U * A * V = diag(sigma).
  ComplexMatrix U, V;
  int sweeps = 0;
};
/// One-sided (Hestenes) Jacobi; NoConvergence past the sweep cap.
SvdResult svd(const ComplexMatrix& a, int max_sweeps = 60);

struct SchurResult {
  /// A = Q T Q^H, T upper triangular.
  ComplexMatrix Q, T;
};
/// Householder Hessenberg reduction and Wilkinson-shifted complex QR.
SchurResult schur(const ComplexMatrix& a);
/// Reorders so that diagonal moduli are non-increasing.
void order_schur(SchurResult& s);

/// Sorted by non-increasing modulus (ties by real, then imaginary part).
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

struct SpectralData {
  std::vector<double> singular_values;
  std::vector<Complex> eigenvalues;
  ComplexMatrix U, V;
  ComplexMatrix schur_T, schur_Q;
};
SpectralData spectral_data(const ComplexMatrix& a);

struct WeylRow {
  size_t i = 0;
  double log_sigma = 0;   // sum_{k<=i} log sigma_k
  double log_lambda = 0;  // sum_{k<=i} log |lambda_k|
  bool holds = false;
};
struct WeylReport {
  std::vector<double> sigma;
  std::vector<Complex> eigenvalues;
  std::vector<WeylRow> rows;
  bool chain_holds = false;
  /// Relative discrepancy of the products at i = n.
  double endpoint_error = 0;
  bool endpoint_equal = false;
  bool passed() const { return chain_holds && endpoint_equal; }
};
WeylReport weyl_report(const ComplexMatrix& a);

struct ArchHnReport {
  size_t index = 0;
  ComplexMatrix U;
  double norm = 0;
  double lower_left = 0;
  double upper_right = 0;
  /// max_k |sigma_k(top block) - sigma_k(A)| / sigma_1(A), k <= i.
  double top_sigma_error = 0;
  double tolerance = 0;
  bool passed = false;
};
/// Unitary block diagonalization at i from an ordered Schur form;
/// HypothesisViolated unless the singular and eigenvalue gaps and the
/// equality of the first i products hold within tol.
ArchHnReport arch_hn_check(const ComplexMatrix& a, size_t i, double tol, double residual_tol = 1e-6);

struct Prop45Report {
  double max_minor_deviation = 0;
  /// max_k |c_k(DW) - c_k(D)| / scale_k.
  double coefficient_deviation = 0;
  double moduli_error = 0;
  Polygon newton_d, newton_udv;
  bool polygons_match = false;
  bool passed = false;
};
/// W = V * U must have every principal minor equal to 1 within tol.
Prop45Report prop45_check(const ComplexMatrix& u, const std::vector<Complex>& d, const ComplexMatrix& v,
                          double tol);

/// Associated polygon of -log|lambda| sorted ascending, logs rounded to
/// multiples of 1e-9; ZeroEigenvalue for a zero value.
Polygon arch_newton_polygon(const std::vector<Complex>& values);

// Seeded generators (Box-Muller on SplitMix64).
double standard_normal(SplitMix64& rng);
ComplexMatrix random_complex_matrix(size_t n, SplitMix64& rng);
/// Gram-Schmidt of a complex Gaussian matrix.
ComplexMatrix random_unitary(size_t n, SplitMix64& rng);

}  // namespace nahodge
