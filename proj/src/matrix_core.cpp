#include "nahodge/matrix_core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace nahodge {

namespace {

constexpr size_t kSubsetExpansionLimit = 16;
constexpr size_t kPrincipalMinorLimit = 10;

// Cofactor expansion over column subsets. Row r of the expansion is
// row_at(r); after `depth` rows, dp[mask] holds the minor with those rows and
// the columns in `mask` (ascending). Inserting column c into a set T
// contributes the sign (-1)^#{c' in T : c' > c}.
template <class T, class Entry>
std::vector<T> subset_expansion(size_t ncols, size_t depth, Entry entry, const T& zero,
                                const T& one, auto is_zero) {
  const size_t full = size_t{1} << ncols;
  std::vector<T> dp(full, zero);
  std::vector<bool> live(full, false);
  dp[0] = one;
  live[0] = true;
  for (size_t r = 0; r < depth; ++r) {
    for (size_t mask = 0; mask < full; ++mask) {
      if (!live[mask] || static_cast<size_t>(std::popcount(mask)) != r) continue;
      live[mask] = false;
      if (is_zero(dp[mask])) continue;
      for (size_t c = 0; c < ncols; ++c) {
        const size_t bit = size_t{1} << c;
        if (mask & bit) continue;
        const int greater = std::popcount(mask >> (c + 1));
        T term = entry(r, c) * dp[mask];
        const size_t next = mask | bit;
        if (!live[next]) {
          dp[next] = zero;
          live[next] = true;
        }
        if (greater % 2)
          dp[next] = dp[next] - term;
        else
          dp[next] = dp[next] + term;
      }
      dp[mask] = zero;
    }
  }
  for (size_t mask = 0; mask < full; ++mask)
    if (!live[mask]) dp[mask] = zero;
  return dp;
}

size_t mask_of(const IndexSet& s) {
  size_t m = 0;
  for (size_t i : s) m |= size_t{1} << i;
  return m;
}

void check_square(const MatrixF& a, const char* what) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, std::string(what) + " needs a square matrix");
}

}  // namespace

std::vector<IndexSet> k_subsets(size_t n, size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet s(k);
  for (size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    if (k == 0) break;
    size_t i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// ------------------------------------------------------------------ MatrixF

MatrixF::MatrixF(const FieldDescriptor& desc, size_t rows, size_t cols)
    : desc_(desc), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement::zero(desc)) {}

MatrixF::MatrixF(const FieldDescriptor& desc, size_t rows, size_t cols,
                 std::vector<FieldElement> entries)
    : desc_(desc), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    fail(ErrorKind::DimensionMismatch, "entry count does not match shape");
  for (const auto& e : entries_)
    if (!(e.descriptor() == desc_))
      fail(ErrorKind::DescriptorMismatch, "matrix entry in another field");
}

MatrixF MatrixF::identity(const FieldDescriptor& desc, size_t n) {
  MatrixF m(desc, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(desc);
  return m;
}

MatrixF MatrixF::diagonal(const std::vector<FieldElement>& diag) {
  if (diag.empty()) fail(ErrorKind::DimensionMismatch, "empty diagonal");
  MatrixF m(diag.front().descriptor(), diag.size(), diag.size());
  for (size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

MatrixF MatrixF::parse(const FieldDescriptor& desc,
                       const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) fail(ErrorKind::ParseError, "empty matrix");
  const size_t nc = rows.front().size();
  std::vector<FieldElement> entries;
  for (const auto& r : rows) {
    if (r.size() != nc) fail(ErrorKind::ParseError, "ragged matrix rows");
    for (const auto& s : r) entries.push_back(parse_element(s, desc));
  }
  return MatrixF(desc, rows.size(), nc, std::move(entries));
}

MatrixF MatrixF::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorKind::IndexOutOfRange, "block out of range");
  MatrixF b(desc_, nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void MatrixF::set_block(size_t r0, size_t c0, const MatrixF& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    fail(ErrorKind::IndexOutOfRange, "block out of range");
  for (size_t i = 0; i < b.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

MatrixF MatrixF::transpose() const {
  MatrixF t(desc_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatrixF MatrixF::select(const IndexSet& rows, const IndexSet& cols) const {
  MatrixF s(desc_, rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) fail(ErrorKind::IndexOutOfRange, "index out of range");
      s(i, j) = (*this)(rows[i], cols[j]);
    }
  return s;
}

MatrixF MatrixF::operator-() const {
  MatrixF r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

MatrixF operator+(const MatrixF& a, const MatrixF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "sum shape mismatch");
  MatrixF r = a;
  for (size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

MatrixF operator-(const MatrixF& a, const MatrixF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "difference shape mismatch");
  MatrixF r = a;
  for (size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

MatrixF operator*(const MatrixF& a, const MatrixF& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorKind::DimensionMismatch, "product of " + std::to_string(a.rows_) + "x" +
                                           std::to_string(a.cols_) + " and " +
                                           std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  if (!(a.desc_ == b.desc_)) fail(ErrorKind::DescriptorMismatch, "product across fields");
  MatrixF r(a.desc_, a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_exact_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

MatrixF MatrixF::scaled(const FieldElement& c) const {
  MatrixF r = *this;
  for (auto& e : r.entries_) e *= c;
  return r;
}

FieldElement MatrixF::trace() const {
  check_square(*this, "trace");
  FieldElement t = FieldElement::zero(desc_);
  for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

int MatrixF::min_precision() const {
  int p = FieldElement::kExact;
  for (const auto& e : entries_) p = std::min(p, e.precision());
  return p;
}

MatrixF MatrixF::in_descriptor(const FieldDescriptor& desc) const {
  MatrixF r(desc, rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].in_descriptor(desc);
  return r;
}

MatrixF MatrixF::truncated(int prec) const {
  MatrixF r = *this;
  for (auto& e : r.entries_) e = e.truncated(prec);
  return r;
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) { return a * b; }

Valuation operator_norm_valuation(const MatrixF& a) {
  Valuation v = Valuation::infinite();
  for (const auto& e : a.entries()) v = Valuation::min(v, e.valuation());
  return v;
}

// ------------------------------------------------------------- determinants

FieldElement minor(const MatrixF& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) fail(ErrorKind::DimensionMismatch, "minor needs |rows| = |cols|");
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= a.rows() || cols[i] >= a.cols())
      fail(ErrorKind::IndexOutOfRange, "minor index out of range");
    if (i > 0 && (rows[i] <= rows[i - 1] || cols[i] <= cols[i - 1]))
      fail(ErrorKind::IndexOutOfRange, "index sets must be strictly increasing");
  }
  const size_t k = rows.size();
  const auto& desc = a.descriptor();
  if (k == 0) return FieldElement::one(desc);
  if (k > kSubsetExpansionLimit) {
    PolynomialF chi = char_poly_berkowitz(a.select(rows, cols));
    return k % 2 ? -chi[0] : chi[0];
  }
  auto dp = subset_expansion<FieldElement>(
      k, k, [&](size_t r, size_t c) -> const FieldElement& { return a(rows[r], cols[c]); },
      FieldElement::zero(desc), FieldElement::one(desc),
      [](const FieldElement& x) { return x.is_exact_zero(); });
  return dp[(size_t{1} << k) - 1];
}

FieldElement determinant(const MatrixF& a) {
  check_square(a, "determinant");
  IndexSet all(a.rows());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return minor(a, all, all);
}

// ------------------------------------------------------ characteristic poly

PolynomialF char_poly_principal_minors(const MatrixF& a) {
  check_square(a, "char_poly");
  const size_t n = a.rows();
  const auto& desc = a.descriptor();
  std::vector<FieldElement> sums(n + 1, FieldElement::zero(desc));
  sums[0] = FieldElement::one(desc);
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    IndexSet s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) s.push_back(i);
    sums[s.size()] += minor(a, s, s);
  }
  std::vector<FieldElement> coeffs(n + 1, FieldElement::zero(desc));
  for (size_t k = 0; k <= n; ++k) coeffs[n - k] = k % 2 ? -sums[k] : sums[k];
  return PolynomialF(desc, std::move(coeffs));
}

PolynomialF char_poly_det_expansion(const MatrixF& a) {
  check_square(a, "char_poly");
  const size_t n = a.rows();
  const auto& desc = a.descriptor();
  if (n > kSubsetExpansionLimit) fail(ErrorKind::DimensionMismatch, "det expansion limited to n <= 16");
  // Entries of xI - A as polynomials.
  std::vector<PolynomialF> m;
  m.reserve(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PolynomialF p = PolynomialF::constant(-a(i, j));
      if (i == j) p = p + PolynomialF::monomial(desc, 1);
      m.push_back(p.trimmed());
    }
  auto dp = subset_expansion<PolynomialF>(
      n, n, [&](size_t r, size_t c) -> const PolynomialF& { return m[r * n + c]; },
      PolynomialF(desc), PolynomialF::constant(FieldElement::one(desc)),
      [](const PolynomialF& p) { return p.trimmed().degree() < 0; });
  return dp[(size_t{1} << n) - 1].with_degree(static_cast<int>(n));
}

PolynomialF char_poly_berkowitz(const MatrixF& a) {
  check_square(a, "char_poly");
  const size_t n = a.rows();
  const auto& desc = a.descriptor();
  // Coefficients highest degree first.
  std::vector<FieldElement> c = {FieldElement::one(desc)};
  if (n == 0) return PolynomialF(desc, c);
  c.push_back(-a(0, 0));
  for (size_t r = 1; r < n; ++r) {
    // Toeplitz column (1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S).
    std::vector<FieldElement> t;
    t.reserve(r + 2);
    t.push_back(FieldElement::one(desc));
    t.push_back(-a(r, r));
    std::vector<FieldElement> x(r);
    for (size_t i = 0; i < r; ++i) x[i] = a(i, r);
    for (size_t k = 0; k < r; ++k) {
      FieldElement dot = FieldElement::zero(desc);
      for (size_t i = 0; i < r; ++i) dot += a(r, i) * x[i];
      t.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<FieldElement> y(r, FieldElement::zero(desc));
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) y[i] += a(i, j) * x[j];
      x = std::move(y);
    }
    std::vector<FieldElement> next(r + 2, FieldElement::zero(desc));
    for (size_t j = 0; j < r + 2; ++j)
      for (size_t l = 0; l <= std::min(j, r); ++l) next[j] += t[j - l] * c[l];
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return PolynomialF(desc, std::move(c));
}

PolynomialF char_poly(const MatrixF& a) {
  check_square(a, "char_poly");
  if (a.rows() <= kPrincipalMinorLimit) return char_poly_principal_minors(a);
  return char_poly_berkowitz(a);
}

// ----------------------------------------------------------- exterior power

MatrixF wedge_power(const MatrixF& a, size_t k) {
  check_square(a, "wedge_power");
  const size_t n = a.rows();
  if (k < 1 || k > n)
    fail(ErrorKind::BadExponent, "wedge exponent " + std::to_string(k) + " outside [1, " +
                                     std::to_string(n) + "]");
  if (n > kSubsetExpansionLimit) fail(ErrorKind::DimensionMismatch, "wedge_power limited to n <= 16");
  const auto basis = k_subsets(n, k);
  const auto& desc = a.descriptor();
  MatrixF w(desc, basis.size(), basis.size());
  for (size_t s = 0; s < basis.size(); ++s) {
    const IndexSet& rows = basis[s];
    // One expansion yields every minor with these rows.
    auto dp = subset_expansion<FieldElement>(
        n, k, [&](size_t r, size_t c) -> const FieldElement& { return a(rows[r], c); },
        FieldElement::zero(desc), FieldElement::one(desc),
        [](const FieldElement& x) { return x.is_exact_zero(); });
    for (size_t t = 0; t < basis.size(); ++t) w(s, t) = dp[mask_of(basis[t])];
  }
  return w;
}

// ------------------------------------------------------------------ inverse

MatrixF inverse(const MatrixF& a) {
  check_square(a, "inverse");
  const size_t n = a.rows();
  const auto& desc = a.descriptor();
  MatrixF m = a;
  MatrixF inv = MatrixF::identity(desc, n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = n;
    int best = 0;
    bool saw_inexact_zero = false;
    for (size_t r = col; r < n; ++r) {
      const auto& x = m(r, col);
      if (x.is_zero()) {
        saw_inexact_zero |= !x.is_exact();
        continue;
      }
      if (pivot == n || x.order() < best) {
        pivot = r;
        best = x.order();
      }
    }
    if (pivot == n) {
      if (saw_inexact_zero) fail(ErrorKind::PrecisionExhausted, "no definite pivot in inverse");
      fail(ErrorKind::SingularMatrix, "matrix is singular");
    }
    if (pivot != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const FieldElement pinv = m(col, col).inverse();
    for (size_t j = 0; j < n; ++j) {
      m(col, j) *= pinv;
      inv(col, j) *= pinv;
    }
    m(col, col) = FieldElement::one(desc);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const FieldElement f = m(r, col);
      if (f.is_exact_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
      m(r, col) = FieldElement::zero(desc);
    }
  }
  return inv;
}

MatrixF evaluate_at(const PolynomialF& p, const MatrixF& a) {
  check_square(a, "evaluate_at");
  const auto& desc = a.descriptor();
  const size_t n = a.rows();
  MatrixF acc(desc, n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    for (size_t i = 0; i < n; ++i) acc(i, i) += p[k];
  }
  return acc;
}

}  // namespace nahodge
