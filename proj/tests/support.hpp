#pragma once

// Random inputs and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>
#include <vector>

#include "ellvb/laurent_matrix.hpp"

namespace ellvb::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng, double max_modulus = 1.0) {
  std::uniform_real_distribution<double> mod(0.1 * max_modulus, max_modulus);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * kPi);
  return std::polar(mod(rng), arg(rng));
}

inline Complex random_unit(Rng& rng) {
  std::uniform_real_distribution<double> arg(0.0, 2.0 * kPi);
  return std::polar(1.0, arg(rng));
}

/// Dense random Laurent polynomial with support in [lo, hi].
inline LaurentPoly random_laurent(Rng& rng, int lo, int hi, double max_modulus = 1.0) {
  LaurentPoly::Terms terms;
  std::bernoulli_distribution keep(0.7);
  for (int k = lo; k <= hi; ++k)
    if (keep(rng)) terms[k] = random_complex(rng, max_modulus);
  return LaurentPoly::from_terms(std::move(terms));
}

/// Random n x n Laurent matrix with monomial determinant, support in [-2, 2]:
/// a unitriangular factor with support in [-1, 1] times a diagonal of
/// monomials c u^k, |k| <= 1, in either order.
inline LaurentMatrix random_monomial_det(Rng& rng, int n) {
  std::uniform_int_distribution<int> expo(-1, 1);
  std::bernoulli_distribution upper(0.5);
  const bool is_upper = upper(rng);
  LaurentMatrix tri = LaurentMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (is_upper) tri(i, j) = random_laurent(rng, -1, 1);
      else tri(j, i) = random_laurent(rng, -1, 1);
    }
  std::vector<LaurentPoly> diag;
  std::uniform_real_distribution<double> mod(0.5, 1.5);
  for (int i = 0; i < n; ++i)
    diag.push_back(LaurentPoly::monomial(mod(rng) * random_unit(rng), expo(rng)));
  const LaurentMatrix d = LaurentMatrix::diagonal(diag);
  return is_upper ? tri * d : d * tri;
}

inline LaurentMatrix random_matrix(Rng& rng, int n, int lo, int hi) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_laurent(rng, lo, hi);
  return m;
}

/// Winding number of u -> p(u) around 0 along |u| = 1 by summing phase
/// increments over a fine grid (argument principle).
template <class F>
int winding_number(F&& value_at, int points = 4096) {
  double total = 0.0;
  Complex prev = value_at(Complex(1.0, 0.0));
  for (int i = 1; i <= points; ++i) {
    const Complex cur = value_at(std::polar(1.0, 2.0 * kPi * i / points));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

/// Exact rank of an integer matrix (fraction-free elimination in big ints).
inline int exact_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
  using boost::multiprecision::cpp_int;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const cpp_int f = m[r][c], g = m[rank][c];
      for (size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * g - m[rank][k] * f;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Jordan partition of an integer matrix N at eigenvalue 1, from exact
/// ranks of (N - I)^k.
inline std::vector<int> exact_unipotent_partition(const std::vector<std::vector<long long>>& n) {
  using boost::multiprecision::cpp_int;
  using Mat = std::vector<std::vector<cpp_int>>;
  const size_t dim = n.size();
  Mat shifted(dim, std::vector<cpp_int>(dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) shifted[i][j] = n[i][j] - (i == j ? 1 : 0);
  std::vector<int> ranks{static_cast<int>(dim)};
  Mat power = shifted;
  for (size_t k = 1; k <= dim + 1; ++k) {
    ranks.push_back(exact_rank(power));
    Mat next(dim, std::vector<cpp_int>(dim));
    for (size_t i = 0; i < dim; ++i)
      for (size_t l = 0; l < dim; ++l)
        for (size_t j = 0; j < dim; ++j) next[i][j] += power[i][l] * shifted[l][j];
    power = std::move(next);
  }
  std::vector<int> out;
  for (size_t j = 1; j <= dim; ++j) {
    const int blocks = ranks[j - 1] - 2 * ranks[j] + ranks[j + 1];
    for (int b = 0; b < blocks; ++b) out.push_back(static_cast<int>(j));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::vector<std::vector<long long>> jordan_block_int(int n) {
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    if (i + 1 < n) m[i][i + 1] = 1;
  }
  return m;
}

inline std::vector<std::vector<long long>> kron_int(const std::vector<std::vector<long long>>& a,
                                                    const std::vector<std::vector<long long>>& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<std::vector<long long>> out(n * m, std::vector<long long>(n * m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < m; ++k)
        for (size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return out;
}

/// Binomial-column matrix of S^n(A_2): entry (i, j) = C(j, i) in the basis
/// e_1^k e_2^{n-k}, k = n..0. Written from the closed form, not by expanding
/// products.
inline std::vector<std::vector<long long>> binomial_matrix(int n) {
  auto choose = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::vector<std::vector<long long>> m(n + 1, std::vector<long long>(n + 1, 0));
  // Column j is the image of e_1^{n-j} e_2^j = e_1^{n-j} (e_1 + e_2)^j, whose
  // e_1^{n-i} e_2^i coefficient is C(j, i).
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= j; ++i) m[i][j] = choose(j, i);
  return m;
}

}  // namespace ellvb::testing
