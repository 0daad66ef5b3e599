#include "ellvb/laurent_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "ellvb/errors.hpp"

namespace ellvb {

LaurentMatrix::LaurentMatrix(int n) : n_(n) {
  if (n < 1) throw ShapeError("matrix size must be at least 1");
  entries_.resize(static_cast<size_t>(n) * n);
}

LaurentMatrix::LaurentMatrix(int n, std::vector<LaurentPoly> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw ShapeError("matrix size must be at least 1");
  if (entries_.size() != static_cast<size_t>(n) * n)
    throw ShapeError("entry count does not match n * n");
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1.0);
  return m;
}

LaurentMatrix LaurentMatrix::constant(const ConstMatrix& c) {
  if (c.rows() != c.cols()) throw ShapeError("constant matrix must be square");
  LaurentMatrix m(static_cast<int>(c.rows()));
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j) m(i, j) = LaurentPoly(c(i, j));
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(std::span<const LaurentPoly> diag) {
  LaurentMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = diag[i];
  return m;
}

LaurentMatrix LaurentMatrix::block_diagonal(std::span<const LaurentMatrix> blocks) {
  int total = 0;
  for (const auto& b : blocks) total += b.size();
  LaurentMatrix m(total);
  int at = 0;
  for (const auto& b : blocks) {
    m.set_block(at, at, b);
    at += b.size();
  }
  return m;
}

void LaurentMatrix::set_block(int row, int col, const LaurentMatrix& block) {
  if (row + block.n_ > n_ || col + block.n_ > n_)
    throw SizeMismatch("block does not fit");
  for (int i = 0; i < block.n_; ++i)
    for (int j = 0; j < block.n_; ++j) (*this)(row + i, col + j) = block(i, j);
}

LaurentMatrix LaurentMatrix::block(int row, int col, int n) const {
  if (row + n > n_ || col + n > n_) throw SizeMismatch("block out of range");
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (*this)(row + i, col + j);
  return m;
}

bool LaurentMatrix::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const LaurentPoly& p) { return p.is_constant(); });
}

bool LaurentMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

double LaurentMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& p : entries_) m = std::max(m, p.max_abs());
  return m;
}

ConstMatrix LaurentMatrix::constant_value() const {
  if (!is_constant()) throw ShapeError("matrix is not constant");
  ConstMatrix c(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c(i, j) = (*this)(i, j).coeff(0);
  return c;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

LaurentMatrix LaurentMatrix::substitute_scaled(Complex c) const {
  LaurentMatrix m(n_);
  for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].substitute_scaled(c);
  return m;
}

LaurentMatrix LaurentMatrix::pruned(double scale) const {
  LaurentMatrix m(n_);
  for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].pruned(scale);
  return m;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw SizeMismatch("matrix sum of different sizes");
  LaurentMatrix m(a.n_);
  for (size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.entries_[i] + b.entries_[i];
  return m;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw SizeMismatch("matrix difference of different sizes");
  LaurentMatrix m(a.n_);
  for (size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.entries_[i] - b.entries_[i];
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw SizeMismatch("matrix product of different sizes");
  const int n = a.n_;
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentPoly::Terms acc;
      double scale = 0.0;
      for (int k = 0; k < n; ++k) {
        scale = std::max(scale, a(i, k).max_abs() * b(k, j).max_abs());
        for (const auto& [e1, c1] : a(i, k).terms())
          for (const auto& [e2, c2] : b(k, j).terms()) acc[e1 + e2] += c1 * c2;
      }
      m(i, j) = LaurentPoly::from_terms(std::move(acc)).pruned(scale);
    }
  return m;
}

LaurentMatrix operator*(const LaurentPoly& c, const LaurentMatrix& a) {
  LaurentMatrix m(a.n_);
  for (size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = c * a.entries_[i];
  return m;
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) { return a * b; }

ConstMatrix eval_at(const LaurentMatrix& a, Complex u0) {
  if (u0 == Complex{}) throw DomainError("eval_at requires u0 != 0");
  const int n = a.size();
  ConstMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = a(i, j)(u0);
  return c;
}

namespace detail {

// Laplace expansion along the top remaining row, memoized on the set of
// columns still available. Cost O(2^n n) polynomial products.
LaurentPoly det_cofactor(const LaurentMatrix& a) {
  const int n = a.size();
  std::unordered_map<unsigned, LaurentPoly> memo;
  auto minor = [&](auto&& self, unsigned cols) -> LaurentPoly {
    const int k = std::popcount(cols);
    if (k == 0) return LaurentPoly(1.0);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const int row = n - k;
    LaurentPoly sum;
    int sign = 1;
    for (int j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!a(row, j).is_zero()) {
        LaurentPoly term = a(row, j) * self(self, cols & ~(1u << j));
        sum = sign > 0 ? sum + term : sum - term;
      }
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return minor(minor, (n >= 32) ? ~0u : ((1u << n) - 1u));
}

// Fraction-free (Bareiss) elimination over the Laurent ring with row pivoting.
LaurentPoly det_bareiss(const LaurentMatrix& a) {
  const int n = a.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
  LaurentPoly prev(1.0);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    double best = 0.0;
    for (int i = k; i < n; ++i) {
      const double v = m[i][k].max_abs();
      if (v > best) best = v, pivot = i;
    }
    if (pivot < 0) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

LaurentPoly mat_det(const LaurentMatrix& a) {
  return a.size() <= 8 ? detail::det_cofactor(a) : detail::det_bareiss(a);
}

LaurentMatrix adjugate(const LaurentMatrix& a) {
  const int n = a.size();
  LaurentMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = LaurentPoly(1.0);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentMatrix minor(n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      LaurentPoly d = mat_det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

LaurentMatrix inverse_monomial_det(const LaurentMatrix& a) {
  const LaurentPoly det = mat_det(a);
  if (!det.is_monomial())
    throw NotInvertibleInRing("determinant " + det.to_string() +
                              " is not a monomial; the inverse is not a Laurent polynomial");
  const auto [k, c] = *det.terms().begin();
  return LaurentPoly::monomial(1.0 / c, -k) * adjugate(a);
}

LaurentMatrix kronecker(const LaurentMatrix& a, const LaurentMatrix& b) {
  const int n = a.size();
  const int m = b.size();
  LaurentMatrix out(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) out(i * m + k, j * m + l) = a(i, j) * b(k, l);
    }
  return out;
}

bool sampled_invertible(const LaurentMatrix& a) {
  constexpr int kSamples = 16;
  const LaurentPoly det = mat_det(a);
  if (det.is_zero()) return false;
  // sum |c_k| bounds |det(u)| on the unit circle.
  double bound = 0.0;
  for (const auto& [k, c] : det.terms()) bound += std::abs(c);
  for (int j = 0; j < kSamples; ++j) {
    // Offset by half a step so that the samples avoid u = 1 and u = -1.
    const Complex u = std::polar(1.0, 2.0 * kPi * (j + 0.5) / kSamples);
    if (std::abs(det(u)) <= 1e-12 * bound) return false;
  }
  return true;
}

double max_coeff_diff(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("residual between different sizes");
  double m = 0.0;
  for (size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, max_coeff_diff(a.entries()[i], b.entries()[i]));
  return m;
}

double relative_residual(const LaurentMatrix& a, const LaurentMatrix& b) {
  return max_coeff_diff(a, b) / (1.0 + std::max(a.max_abs(), b.max_abs()));
}

}  // namespace ellvb
