#include "nahodge/polynomial.hpp"

#include <algorithm>

namespace nahodge {

PolynomialF::PolynomialF(const FieldDescriptor& desc, std::vector<FieldElement> coeffs)
    : desc_(desc), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.descriptor() == desc_))
      fail(ErrorKind::DescriptorMismatch, "polynomial coefficient in another field");
}

PolynomialF PolynomialF::constant(const FieldElement& c) {
  return PolynomialF(c.descriptor(), {c});
}

PolynomialF PolynomialF::linear_monic(const FieldElement& root) {
  return PolynomialF(root.descriptor(), {-root, FieldElement::one(root.descriptor())});
}

PolynomialF PolynomialF::monomial(const FieldDescriptor& desc, int degree) {
  std::vector<FieldElement> c(degree + 1, FieldElement::zero(desc));
  c[degree] = FieldElement::one(desc);
  return PolynomialF(desc, std::move(c));
}

FieldElement PolynomialF::coeff(int k) const {
  if (k < 0 || k > degree()) return FieldElement::zero(desc_);
  return coeffs_[k];
}

bool PolynomialF::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == FieldElement::one(desc_);
}

PolynomialF PolynomialF::trimmed() const {
  PolynomialF r = *this;
  while (!r.coeffs_.empty() && r.coeffs_.back().is_exact_zero()) r.coeffs_.pop_back();
  return r;
}

PolynomialF PolynomialF::with_degree(int d) const {
  PolynomialF r = *this;
  r.coeffs_.resize(d + 1, FieldElement::zero(desc_));
  return r;
}

PolynomialF PolynomialF::operator-() const {
  PolynomialF r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolynomialF operator+(const PolynomialF& a, const PolynomialF& b) {
  PolynomialF r(a.desc_);
  size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  r.coeffs_.reserve(n);
  for (size_t k = 0; k < n; ++k) r.coeffs_.push_back(a.coeff(k) + b.coeff(k));
  return r;
}

PolynomialF operator-(const PolynomialF& a, const PolynomialF& b) { return a + (-b); }

PolynomialF operator*(const PolynomialF& a, const PolynomialF& b) {
  PolynomialF r(a.desc_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.desc_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return r;
}

PolynomialF PolynomialF::scaled(const FieldElement& c) const {
  PolynomialF r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::pair<PolynomialF, PolynomialF> PolynomialF::divrem_monic(const PolynomialF& divisor) const {
  const int m = divisor.degree();
  if (m < 0) fail(ErrorKind::DivisionByZero, "division by the empty polynomial");
  PolynomialF rem = *this;
  const int n = degree();
  PolynomialF quot(desc_);
  if (n >= m) {
    quot.coeffs_.assign(n - m + 1, FieldElement::zero(desc_));
    for (int k = n; k >= m; --k) {
      FieldElement q = rem.coeffs_[k];
      quot.coeffs_[k - m] = q;
      if (q.is_exact_zero()) continue;
      for (int j = 0; j < m; ++j) rem.coeffs_[k - m + j] -= q * divisor.coeffs_[j];
      rem.coeffs_[k] = FieldElement::zero(desc_);
    }
  }
  return {quot, rem.with_degree(m - 1)};
}

FieldElement PolynomialF::evaluate(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(desc_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Valuation PolynomialF::gauss_valuation() const {
  Valuation v = Valuation::infinite();
  for (const auto& c : coeffs_) v = Valuation::min(v, c.valuation());
  return v;
}

int PolynomialF::min_precision() const {
  int p = FieldElement::kExact;
  for (const auto& c : coeffs_) p = std::min(p, c.precision());
  return p;
}

PolynomialF PolynomialF::in_descriptor(const FieldDescriptor& desc) const {
  PolynomialF r(desc);
  for (const auto& c : coeffs_) r.coeffs_.push_back(c.in_descriptor(desc));
  return r;
}

std::string PolynomialF::to_string() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k >= 1) out += k == 1 ? "*x" : "*x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace nahodge
