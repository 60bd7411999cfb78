#pragma once

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nahodge/errors.hpp"

namespace nahodge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form of a rational: "a" or "a/b" with b > 0.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline constexpr int kDefaultPrecision = 40;

enum class Backend { padic, laurent };

/// The field F together with the session precision N: every element is
/// known at most modulo pi^N.
struct FieldDescriptor {
  Backend backend = Backend::laurent;
  long prime = 0;  // p-adic backend only
  int precision = kDefaultPrecision;

  static FieldDescriptor padic(long p, int N = kDefaultPrecision);
  static FieldDescriptor laurent(int N = kDefaultPrecision);

  FieldDescriptor with_precision(int N) const;
  bool is_padic() const { return backend == Backend::padic; }
  /// "2" for Q_2, "t" for Q((t)).
  std::string uniformizer_name() const;
  /// Flag syntax: "padic:p=2,N=40" or "laurent:N=40".
  std::string to_string() const;

  bool operator==(const FieldDescriptor&) const = default;
};

FieldDescriptor parse_descriptor(std::string_view text);

/// Additive valuation. Besides finite values there are two distinguished
/// outcomes: the element is exactly zero (infinite), or it vanishes to the
/// known precision and only a lower bound is available.
class Valuation {
 public:
  enum class Kind { finite, above_precision, infinite };

  Valuation() : kind_(Kind::infinite) {}
  static Valuation finite(Rational v) { return Valuation(Kind::finite, std::move(v)); }
  static Valuation above(Rational bound) {
    return Valuation(Kind::above_precision, std::move(bound));
  }
  static Valuation infinite() { return Valuation(); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_above_precision() const { return kind_ == Kind::above_precision; }
  bool is_infinite() const { return kind_ == Kind::infinite; }

  /// Finite value; throws PrecisionExhausted otherwise.
  const Rational& value() const;
  /// Lower bound for above_precision.
  const Rational& bound() const { return value_; }

  /// True when the valuation is certainly >= k.
  bool at_least(const Rational& k) const;
  /// True when the valuation is certainly < k.
  bool below(const Rational& k) const { return is_finite() && value_ < k; }

  /// Sum of valuations (valuation of a product).
  Valuation operator+(const Valuation& other) const;
  Valuation operator-() const;

  /// Minimum in the ultrametric sense: an above-precision operand that could
  /// undercut a finite one makes the result a bound.
  static Valuation min(const Valuation& a, const Valuation& b);

  /// Exact structural equality (kind and value).
  bool operator==(const Valuation& other) const;

  /// "3", "1/2", ">=40", "inf".
  std::string to_string() const;

 private:
  Valuation(Kind kind, Rational v) : kind_(kind), value_(std::move(v)) {}

  Kind kind_;
  Rational value_;
};

/// Element of a complete discretely valued field at finite absolute
/// precision. An element is either exact (its stored value is the true
/// value) or known modulo pi^precision().
class FieldElement {
 public:
  static constexpr int kExact = INT_MAX;

  FieldElement() : FieldElement(FieldDescriptor::laurent()) {}
  explicit FieldElement(const FieldDescriptor& desc);

  static FieldElement zero(const FieldDescriptor& desc) { return FieldElement(desc); }
  static FieldElement one(const FieldDescriptor& desc);
  static FieldElement from_integer(const FieldDescriptor& desc, const Integer& n);
  static FieldElement from_rational(const FieldDescriptor& desc, const Rational& q);
  /// c * pi^k, exact.
  static FieldElement monomial(const FieldDescriptor& desc, const Rational& c, int k);
  /// Zero known modulo pi^prec.
  static FieldElement zero_to_precision(const FieldDescriptor& desc, int prec);
  /// Laurent backend: sum of c_k t^k with the given absolute precision.
  static FieldElement laurent_series(const FieldDescriptor& desc,
                                     std::vector<std::pair<int, Rational>> terms,
                                     int prec = kExact);
  /// p-adic backend: p^shift * x with the given absolute precision.
  static FieldElement padic_value(const FieldDescriptor& desc, const Integer& x,
                                  int shift, int prec = kExact);

  const FieldDescriptor& descriptor() const { return desc_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ == kExact; }
  /// Zero to the known precision (exact zero included).
  bool is_zero() const;
  bool is_exact_zero() const { return is_zero() && is_exact(); }

  Valuation valuation() const;
  /// Integer valuation of a nonzero element; throws PrecisionExhausted for
  /// zero.
  int order() const;
  /// Valuation if nonzero, precision if zero (kExact for exact zero); the
  /// quantity that drives precision propagation in products.
  int effective_order() const;

  /// Image in o_F / m_F: a rational for Laurent, an integer in [0, p) for
  /// p-adic.
  Rational residue() const;
  /// this / pi^order(), a unit.
  FieldElement unit_part() const;
  /// this * pi^k, exact shift.
  FieldElement shifted(int k) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

  FieldElement inverse() const;
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  /// Forget digits at and beyond pi^prec.
  FieldElement truncated(int prec) const;
  /// Same value in a session of different precision; precision is capped
  /// by the new N, exact elements stay exact where representable.
  FieldElement in_descriptor(const FieldDescriptor& desc) const;

  /// Structural equality: same descriptor, precision and stored digits.
  bool operator==(const FieldElement& other) const;
  /// True when v(this - other) is certainly >= k.
  bool agrees_to(const FieldElement& other, int k) const;

  std::string to_string() const;

  // Backend storage accessors (read-only).
  int padic_shift() const { return val_; }
  const Integer& padic_unit() const { return unit_; }
  const std::vector<std::pair<int, Rational>>& laurent_terms() const { return terms_; }

 private:
  void check_same(const FieldElement& b) const;
  void normalize_padic(Integer x, int shift, int prec);
  void normalize_laurent(int prec, bool truncated_high);

  FieldDescriptor desc_;
  int prec_ = kExact;
  // p-adic: value = p^val_ * unit_, unit_ coprime to p; zero iff unit_ == 0.
  // Inexact units are reduced into [0, p^(prec_ - val_)).
  int val_ = 0;
  Integer unit_ = 0;
  // Laurent: sorted exponents, nonzero coefficients, all exponents < prec_
  // and < N.
  std::vector<std::pair<int, Rational>> terms_;
};

/// Parse an element; grammar documented in README ("Element grammar").
FieldElement parse_element(std::string_view text, const FieldDescriptor& desc);
inline std::string render_element(const FieldElement& x) { return x.to_string(); }

enum class ArithOp { add, sub, mul };
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);
inline FieldElement field_inv(const FieldElement& a) { return a.inverse(); }
inline Rational residue(const FieldElement& a) { return a.residue(); }

}  // namespace nahodge
