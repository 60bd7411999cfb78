#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nahodge/valued_field.hpp"

namespace nahodge {

/// Dense univariate polynomial over F; coefficient index = degree. The
/// stored length fixes the nominal degree: leading coefficients are never
/// dropped implicitly, since an inexact zero is not known to vanish.
class PolynomialF {
 public:
  PolynomialF() = default;
  explicit PolynomialF(const FieldDescriptor& desc) : desc_(desc) {}
  PolynomialF(const FieldDescriptor& desc, std::vector<FieldElement> coeffs);

  static PolynomialF constant(const FieldElement& c);
  /// x - root
  static PolynomialF linear_monic(const FieldElement& root);
  static PolynomialF monomial(const FieldDescriptor& desc, int degree);

  const FieldDescriptor& descriptor() const { return desc_; }
  /// Nominal degree (length - 1); -1 for the empty polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  const FieldElement& operator[](size_t k) const { return coeffs_[k]; }
  FieldElement& operator[](size_t k) { return coeffs_[k]; }
  /// Coefficient of x^k, zero beyond the degree.
  FieldElement coeff(int k) const;

  bool is_monic() const;
  /// Drops leading exact zeros.
  PolynomialF trimmed() const;
  /// Resize to exactly degree d (padding with exact zeros / cutting).
  PolynomialF with_degree(int d) const;

  PolynomialF operator-() const;
  friend PolynomialF operator+(const PolynomialF& a, const PolynomialF& b);
  friend PolynomialF operator-(const PolynomialF& a, const PolynomialF& b);
  friend PolynomialF operator*(const PolynomialF& a, const PolynomialF& b);
  PolynomialF scaled(const FieldElement& c) const;

  /// Quotient and remainder by a monic divisor; the remainder has degree
  /// exactly deg(divisor) - 1.
  std::pair<PolynomialF, PolynomialF> divrem_monic(const PolynomialF& divisor) const;

  FieldElement evaluate(const FieldElement& x) const;

  /// Minimum over coefficients of the valuation (Gauss valuation).
  Valuation gauss_valuation() const;
  /// Minimum absolute precision over the coefficients.
  int min_precision() const;

  PolynomialF in_descriptor(const FieldDescriptor& desc) const;

  bool operator==(const PolynomialF& other) const = default;

  /// e.g. "x^2 + (-3)*x + (2)" with coefficients rendered in the element grammar.
  std::string to_string() const;

 private:
  FieldDescriptor desc_;
  std::vector<FieldElement> coeffs_;
};

}  // namespace nahodge
