#include "nahodge/valued_field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace nahodge {

namespace {

int sat_add(int a, int b) {
  if (a == FieldElement::kExact || b == FieldElement::kExact) return FieldElement::kExact;
  return a + b;
}

Integer ipow(long p, int k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

// Removes all factors p from x, returns how many.
int strip(Integer& x, long p) {
  if (x == 0) return 0;
  Integer pp = p;
  return static_cast<int>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

Integer mod_inverse(const Integer& u, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorKind::DivisionByZero, "unit not invertible modulo p^k");
  return r;
}

Integer mod_positive(const Integer& x, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

// ---------------------------------------------------------------- rationals

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  const Integer d{den};
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator");
  Rational q{Integer{num}, d};
  q.canonicalize();
  return q;
}

// --------------------------------------------------------------- descriptor

FieldDescriptor FieldDescriptor::padic(long p, int N) {
  FieldDescriptor d;
  d.backend = Backend::padic;
  d.prime = p;
  d.precision = N;
  if (p < 2 || mpz_probab_prime_p(Integer(p).get_mpz_t(), 25) == 0)
    fail(ErrorKind::ParseError, "p-adic backend needs a prime, got " + std::to_string(p));
  if (N < 1) fail(ErrorKind::PrecisionError, "precision must be >= 1");
  return d;
}

FieldDescriptor FieldDescriptor::laurent(int N) {
  FieldDescriptor d;
  d.backend = Backend::laurent;
  d.precision = N;
  if (N < 1) fail(ErrorKind::PrecisionError, "precision must be >= 1");
  return d;
}

FieldDescriptor FieldDescriptor::with_precision(int N) const {
  return is_padic() ? padic(prime, N) : laurent(N);
}

std::string FieldDescriptor::uniformizer_name() const {
  return is_padic() ? std::to_string(prime) : std::string("t");
}

std::string FieldDescriptor::to_string() const {
  if (is_padic())
    return "padic:p=" + std::to_string(prime) + ",N=" + std::to_string(precision);
  return "laurent:N=" + std::to_string(precision);
}

FieldDescriptor parse_descriptor(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  std::string kind = s.substr(0, colon);
  std::map<std::string, long> params;
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorKind::ParseError, "bad field option '" + item + "'");
      long value = 0;
      auto key = item.substr(0, eq);
      auto val = item.substr(eq + 1);
      auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
      if (ec != std::errc() || ptr != val.data() + val.size())
        fail(ErrorKind::ParseError, "bad field option '" + item + "'");
      params[key] = value;
    }
  }
  int N = params.count("N") ? static_cast<int>(params["N"]) : kDefaultPrecision;
  if (kind == "padic") {
    if (!params.count("p")) fail(ErrorKind::ParseError, "padic field needs p=");
    return FieldDescriptor::padic(params["p"], N);
  }
  if (kind == "laurent") return FieldDescriptor::laurent(N);
  fail(ErrorKind::ParseError, "unknown field backend '" + kind + "'");
}

// ---------------------------------------------------------------- valuation

const Rational& Valuation::value() const {
  if (!is_finite())
    fail(ErrorKind::PrecisionExhausted, "valuation is " + to_string() + ", not a definite value");
  return value_;
}

bool Valuation::at_least(const Rational& k) const {
  switch (kind_) {
    case Kind::infinite: return true;
    case Kind::above_precision: return value_ >= k;
    case Kind::finite: return value_ >= k;
  }
  return false;
}

Valuation Valuation::operator+(const Valuation& other) const {
  if (is_infinite() || other.is_infinite()) return infinite();
  if (is_finite() && other.is_finite()) return finite(value_ + other.value_);
  return above(value_ + other.value_);
}

Valuation Valuation::operator-() const {
  if (!is_finite()) fail(ErrorKind::PrecisionExhausted, "cannot negate " + to_string());
  return finite(-value_);
}

Valuation Valuation::min(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.is_finite() && b.is_finite()) return a.value_ <= b.value_ ? a : b;
  if (a.is_finite()) return a.value_ < b.value_ ? a : above(b.value_);
  if (b.is_finite()) return b.value_ < a.value_ ? b : above(a.value_);
  return above(std::min(a.value_, b.value_));
}

bool Valuation::operator==(const Valuation& other) const {
  if (kind_ != other.kind_) return false;
  return kind_ == Kind::infinite || value_ == other.value_;
}

std::string Valuation::to_string() const {
  switch (kind_) {
    case Kind::infinite: return "inf";
    case Kind::above_precision: return ">=" + nahodge::to_string(value_);
    case Kind::finite: return nahodge::to_string(value_);
  }
  return "?";
}

// ------------------------------------------------------------- construction

FieldElement::FieldElement(const FieldDescriptor& desc) : desc_(desc) {}

FieldElement FieldElement::one(const FieldDescriptor& desc) {
  return monomial(desc, Rational(1), 0);
}

FieldElement FieldElement::from_integer(const FieldDescriptor& desc, const Integer& n) {
  return from_rational(desc, Rational(n));
}

FieldElement FieldElement::from_rational(const FieldDescriptor& desc, const Rational& q) {
  return monomial(desc, q, 0);
}

FieldElement FieldElement::monomial(const FieldDescriptor& desc, const Rational& c, int k) {
  FieldElement e(desc);
  if (c == 0) return e;
  if (desc.is_padic()) {
    Integer num = c.get_num();
    Integer den = c.get_den();
    int shift = k + strip(num, desc.prime) - strip(den, desc.prime);
    if (den == 1) {
      e.normalize_padic(num, shift, kExact);
    } else {
      // Unit denominator other than 1: expand to the session precision.
      int prec = desc.precision;
      if (shift >= prec) return zero_to_precision(desc, prec);
      Integer m = ipow(desc.prime, prec - shift);
      e.normalize_padic(mod_positive(num * mod_inverse(den, m), m), shift, prec);
    }
    return e;
  }
  e.terms_.emplace_back(k, c);
  e.normalize_laurent(kExact, false);
  return e;
}

FieldElement FieldElement::zero_to_precision(const FieldDescriptor& desc, int prec) {
  FieldElement e(desc);
  e.prec_ = std::min(prec, desc.precision);
  return e;
}

FieldElement FieldElement::laurent_series(const FieldDescriptor& desc,
                                          std::vector<std::pair<int, Rational>> terms, int prec) {
  if (desc.is_padic()) fail(ErrorKind::DescriptorMismatch, "laurent_series on a p-adic field");
  FieldElement e(desc);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates
  for (auto& [k, c] : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == k)
      e.terms_.back().second += c;
    else
      e.terms_.emplace_back(k, c);
  }
  e.normalize_laurent(prec, false);
  return e;
}

FieldElement FieldElement::padic_value(const FieldDescriptor& desc, const Integer& x, int shift,
                                       int prec) {
  if (!desc.is_padic()) fail(ErrorKind::DescriptorMismatch, "padic_value on a Laurent field");
  FieldElement e(desc);
  e.normalize_padic(x, shift, prec);
  return e;
}

void FieldElement::normalize_padic(Integer x, int shift, int prec) {
  const int N = desc_.precision;
  val_ = 0;
  unit_ = 0;
  if (prec != kExact) prec = std::min(prec, N);
  if (x == 0) {
    prec_ = prec;
    return;
  }
  shift += strip(x, desc_.prime);
  if (prec == kExact) {
    if (shift >= N) {
      prec_ = N;
      return;
    }
    prec_ = kExact;
    val_ = shift;
    unit_ = std::move(x);
    return;
  }
  prec_ = prec;
  if (shift >= prec) return;
  val_ = shift;
  unit_ = mod_positive(x, ipow(desc_.prime, prec - shift));
}

void FieldElement::normalize_laurent(int prec, bool truncated_high) {
  const int N = desc_.precision;
  int limit = std::min(prec, N);
  bool dropped = truncated_high;
  std::erase_if(terms_, [&](const auto& t) {
    if (t.first >= limit) {
      if (t.second != 0) dropped = true;
      return true;
    }
    return t.second == 0;
  });
  if (prec == kExact)
    prec_ = dropped ? N : kExact;
  else
    prec_ = limit;
}

// ---------------------------------------------------------------- accessors

bool FieldElement::is_zero() const {
  return desc_.is_padic() ? unit_ == 0 : terms_.empty();
}

Valuation FieldElement::valuation() const {
  if (is_zero()) return is_exact() ? Valuation::infinite() : Valuation::above(Rational(prec_));
  return Valuation::finite(Rational(order()));
}

int FieldElement::order() const {
  if (is_zero()) fail(ErrorKind::PrecisionExhausted, "order of a zero element");
  return desc_.is_padic() ? val_ : terms_.front().first;
}

int FieldElement::effective_order() const { return is_zero() ? prec_ : order(); }

Rational FieldElement::residue() const {
  if (is_zero()) {
    if (prec_ <= 0) fail(ErrorKind::PrecisionExhausted, "residue of an element known only mod pi^" + std::to_string(prec_));
    return Rational(0);
  }
  int v = order();
  if (v < 0) fail(ErrorKind::NotIntegral, "residue of an element of valuation " + std::to_string(v));
  if (v > 0) return Rational(0);
  if (desc_.is_padic()) return Rational(mod_positive(unit_, Integer(desc_.prime)));
  return terms_.front().second;
}

FieldElement FieldElement::unit_part() const { return shifted(-order()); }

FieldElement FieldElement::shifted(int k) const {
  FieldElement r(desc_);
  int prec = sat_add(prec_, k);
  if (desc_.is_padic()) {
    if (is_zero()) {
      r.prec_ = prec == kExact ? kExact : std::min(prec, desc_.precision);
      return r;
    }
    r.normalize_padic(unit_, val_ + k, prec);
    return r;
  }
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.first += k;
  r.normalize_laurent(prec, false);
  return r;
}

void FieldElement::check_same(const FieldElement& b) const {
  if (!(desc_ == b.desc_))
    fail(ErrorKind::DescriptorMismatch, desc_.to_string() + " vs " + b.desc_.to_string());
}

// --------------------------------------------------------------- arithmetic

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (desc_.is_padic()) {
    if (unit_ == 0) return r;
    if (is_exact())
      r.unit_ = -unit_;
    else
      r.unit_ = mod_positive(-unit_, ipow(desc_.prime, prec_ - val_));
    return r;
  }
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same(b);
  int prec = std::min(prec_, b.prec_);
  if (desc_.is_padic()) {
    if (b.is_zero()) {
      if (!is_zero()) normalize_padic(unit_, val_, prec);
      else prec_ = prec;
      return *this;
    }
    if (is_zero()) {
      normalize_padic(b.unit_, b.val_, prec);
      return *this;
    }
    int m = std::min(val_, b.val_);
    Integer x = unit_ * ipow(desc_.prime, val_ - m) + b.unit_ * ipow(desc_.prime, b.val_ - m);
    normalize_padic(std::move(x), m, prec);
    return *this;
  }
  std::vector<std::pair<int, Rational>> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  normalize_laurent(prec, false);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) { return *this += -b; }

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same(b);
  if (is_exact_zero() || b.is_exact_zero()) {
    *this = FieldElement(desc_);
    return *this;
  }
  int prec = std::min(sat_add(prec_, b.effective_order()), sat_add(b.prec_, effective_order()));
  if (desc_.is_padic()) {
    if (is_zero() || b.is_zero()) {
      prec_ = std::min(prec, desc_.precision);
      unit_ = 0;
      val_ = 0;
      return *this;
    }
    normalize_padic(unit_ * b.unit_, val_ + b.val_, prec);
    return *this;
  }
  const int limit = std::min(prec, desc_.precision);
  std::map<int, Rational> acc;
  bool dropped = false;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      if (e >= limit) {
        dropped = true;
        break;  // exponents of b ascend
      }
      acc[e] += ca * cb;
    }
  }
  terms_.assign(acc.begin(), acc.end());
  normalize_laurent(prec, dropped && prec == kExact);
  if (is_zero() && prec == kExact && dropped) prec_ = desc_.precision;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_exact_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_zero())
    fail(ErrorKind::PrecisionExhausted,
         "inverse of an element known only mod pi^" + std::to_string(prec_));
  const int N = desc_.precision;
  const int v = order();
  // Absolute precision of the result: the relative precision is preserved.
  int prec = is_exact() ? N : std::min(prec_ - 2 * v, N);
  if (!is_exact() && prec <= -v)
    fail(ErrorKind::PrecisionExhausted, "inverse has no known digits");
  FieldElement r(desc_);
  if (desc_.is_padic()) {
    if (is_exact() && (unit_ == 1 || unit_ == -1)) {
      r.normalize_padic(unit_, -v, kExact);
      return r;
    }
    if (prec <= -v) fail(ErrorKind::PrecisionExhausted, "inverse has no known digits");
    Integer m = ipow(desc_.prime, prec + v);
    r.normalize_padic(mod_inverse(mod_positive(unit_, m), m), -v, prec);
    return r;
  }
  if (is_exact() && terms_.size() == 1) {
    r.terms_.emplace_back(-v, 1 / terms_.front().second);
    r.normalize_laurent(kExact, false);
    return r;
  }
  if (prec <= -v) fail(ErrorKind::PrecisionExhausted, "inverse has no known digits");
  // 1/(t^v * u(t)) = t^-v * sum b_k t^k, k < prec + v.
  const int count = prec + v;
  std::vector<Rational> c(count, Rational(0));
  for (const auto& [e, coef] : terms_)
    if (e - v < count) c[e - v] = coef;
  std::vector<Rational> inv(count);
  const Rational c0inv = 1 / c[0];
  inv[0] = c0inv;
  for (int k = 1; k < count; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j)
      if (c[j] != 0) s += c[j] * inv[k - j];
    inv[k] = -s * c0inv;
  }
  for (int k = 0; k < count; ++k)
    if (inv[k] != 0) r.terms_.emplace_back(k - v, inv[k]);
  r.normalize_laurent(prec, false);
  return r;
}

FieldElement FieldElement::truncated(int prec) const {
  if (prec >= prec_) return *this;
  FieldElement r(desc_);
  if (desc_.is_padic()) {
    if (is_zero()) {
      r.prec_ = prec;
      return r;
    }
    r.normalize_padic(unit_, val_, prec);
    return r;
  }
  r.terms_ = terms_;
  r.normalize_laurent(prec, false);
  return r;
}

FieldElement FieldElement::in_descriptor(const FieldDescriptor& desc) const {
  if (desc.backend != desc_.backend || desc.prime != desc_.prime)
    fail(ErrorKind::DescriptorMismatch, desc_.to_string() + " -> " + desc.to_string());
  FieldElement r(desc);
  if (desc.is_padic()) {
    if (is_zero()) {
      r.prec_ = prec_ == kExact ? kExact : std::min(prec_, desc.precision);
      return r;
    }
    r.normalize_padic(unit_, val_, prec_);
    return r;
  }
  r.terms_ = terms_;
  r.normalize_laurent(prec_, false);
  return r;
}

bool FieldElement::operator==(const FieldElement& other) const {
  return desc_ == other.desc_ && prec_ == other.prec_ && val_ == other.val_ &&
         unit_ == other.unit_ && terms_ == other.terms_;
}

bool FieldElement::agrees_to(const FieldElement& other, int k) const {
  return (*this - other).valuation().at_least(Rational(k));
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  return a;
}

// ---------------------------------------------------------------- rendering

std::string FieldElement::to_string() const {
  std::string out;
  const std::string pi = desc_.uniformizer_name();
  if (desc_.is_padic()) {
    if (!is_zero()) {
      Integer u = unit_;
      if (u < 0) {
        out += "-";
        u = -u;
      }
      if (val_ == 0) {
        out += u.get_str();
      } else {
        out += pi + "^" + std::to_string(val_);
        if (u != 1) out += "*" + u.get_str();
      }
    }
  } else {
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = abs(c);
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      first = false;
      if (e == 0) {
        out += nahodge::to_string(a);
        continue;
      }
      if (a != 1) out += nahodge::to_string(a) + "*";
      out += e == 1 ? pi : pi + "^" + std::to_string(e);
    }
  }
  if (!is_exact()) {
    if (!out.empty()) out += " + ";
    out += "O(" + pi + "^" + std::to_string(prec_) + ")";
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------ parsing

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const FieldDescriptor& desc)
      : text_(text), desc_(desc) {}

  FieldElement parse() {
    FieldElement sum(desc_);
    int prec = FieldElement::kExact;
    bool any = false;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    while (true) {
      skip_ws();
      if (starts_with("O(")) {
        pos_ += 2;
        int k = parse_power_of_uniformizer(/*require=*/true);
        skip_ws();
        expect(')');
        if (negative) error("O-term cannot be negated");
        if (k > desc_.precision)
          fail(ErrorKind::PrecisionError,
               "O(pi^" + std::to_string(k) + ") beyond session precision " +
                   std::to_string(desc_.precision));
        prec = std::min(prec, k);
      } else {
        FieldElement term = parse_term();
        sum += negative ? -term : term;
      }
      any = true;
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = get();
      if (c != '+' && c != '-') error(std::string("unexpected '") + c + "'");
      negative = c == '-';
    }
    if (!any) error("empty element");
    return prec == FieldElement::kExact ? sum : sum.truncated(prec);
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::ParseError, what + " in '" + std::string(text_) + "'");
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  void expect(char c) {
    if (get() != c) error(std::string("expected '") + c + "'");
  }

  Integer parse_digits() {
    skip_ws();
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    Integer d = parse_digits();
    if (!d.fits_sint_p()) error("exponent out of range");
    return neg ? -static_cast<int>(d.get_si()) : static_cast<int>(d.get_si());
  }

  Rational parse_number() {
    Integer num = parse_digits();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      Integer den = parse_digits();
      if (den == 0) error("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  // "t^k", "t", or for p-adic "p^k". Returns the exponent.
  int parse_power_of_uniformizer(bool require) {
    skip_ws();
    if (desc_.is_padic()) {
      Integer base = parse_digits();
      if (base != desc_.prime) error("expected the prime " + std::to_string(desc_.prime));
      skip_ws();
      if (peek() != '^') {
        if (require) return 1;
        return 1;
      }
      ++pos_;
      return parse_int();
    }
    if (get() != 't') error("expected 't'");
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    return parse_int();
  }

  void check_exponent(int k) {
    if (k >= desc_.precision)
      fail(ErrorKind::PrecisionError, "exponent " + std::to_string(k) +
                                          " >= session precision " +
                                          std::to_string(desc_.precision));
  }

  FieldElement make(const Rational& c, int k) {
    FieldElement e = FieldElement::monomial(desc_, c, k);
    if (c != 0 && !e.is_zero()) check_exponent(e.order());
    if (c != 0 && e.is_zero()) check_exponent(desc_.precision);
    return e;
  }

  FieldElement parse_term() {
    skip_ws();
    if (desc_.is_padic()) {
      Rational a = parse_number();
      skip_ws();
      if (peek() == '^') {
        if (a != desc_.prime) error("power base must be the prime " + std::to_string(desc_.prime));
        ++pos_;
        int k = parse_int();
        skip_ws();
        Rational u = 1;
        if (peek() == '*') {
          ++pos_;
          u = parse_number();
        }
        return make(u, k);
      }
      return make(a, 0);
    }
    if (peek() == 't') return make(Rational(1), parse_power_of_uniformizer(true));
    Rational c = parse_number();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      return make(c, parse_power_of_uniformizer(true));
    }
    return make(c, 0);
  }

  std::string_view text_;
  const FieldDescriptor& desc_;
  size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(std::string_view text, const FieldDescriptor& desc) {
  return ElementParser(text, desc).parse();
}

}  // namespace nahodge
