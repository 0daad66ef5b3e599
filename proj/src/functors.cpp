#include "ellvb/functors.hpp"

#include <map>

#include "ellvb/errors.hpp"

namespace ellvb {

namespace {

using Exponents = std::vector<int>;

void require_same_torus(const FactorOfAutomorphy& f, const FactorOfAutomorphy& g) {
  if (!f.torus().same_as(g.torus())) throw TorusMismatch("factors live on different tori");
}

// All alpha in N^dim with |alpha| = k, lexicographically descending.
std::vector<Exponents> monomial_basis(int dim, int k) {
  std::vector<Exponents> out;
  Exponents cur(dim, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == dim - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

FactorOfAutomorphy tensor(const FactorOfAutomorphy& f, const FactorOfAutomorphy& g) {
  require_same_torus(f, g);
  return FactorOfAutomorphy(f.torus(), kronecker(f.generator(), g.generator()));
}

LaurentMatrix sym_power_matrix(const LaurentMatrix& a, int k) {
  if (k < 0) throw DomainError("symmetric power needs k >= 0");
  const int dim = a.size();
  const auto basis = monomial_basis(dim, k);
  std::map<Exponents, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

  LaurentMatrix out(static_cast<int>(basis.size()));
  for (size_t col = 0; col < basis.size(); ++col) {
    // Expand prod_j (sum_i A_ij e_i)^{alpha_j} as a polynomial in e.
    std::map<Exponents, LaurentPoly> poly{{Exponents(dim, 0), LaurentPoly(1.0)}};
    for (int j = 0; j < dim; ++j)
      for (int rep = 0; rep < basis[col][j]; ++rep) {
        std::map<Exponents, LaurentPoly> next;
        for (const auto& [mono, c] : poly)
          for (int i = 0; i < dim; ++i) {
            if (a(i, j).is_zero()) continue;
            Exponents m = mono;
            ++m[i];
            next[m] = next[m] + c * a(i, j);
          }
        poly = std::move(next);
      }
    for (const auto& [mono, c] : poly) out(index.at(mono), static_cast<int>(col)) = c;
  }
  return out;
}

FactorOfAutomorphy sym_power(const FactorOfAutomorphy& f, int k) {
  return FactorOfAutomorphy(f.torus(), sym_power_matrix(f.generator(), k));
}

LaurentMatrix wedge_power_matrix(const LaurentMatrix& a, int k) {
  const int n = a.size();
  if (k < 0 || k > n) throw DomainError("exterior power degree must lie in [0, rank]");
  const auto sets = subsets(n, k);
  LaurentMatrix out(static_cast<int>(sets.size()));
  if (k == 0) {
    out(0, 0) = LaurentPoly(1.0);
    return out;
  }
  for (size_t r = 0; r < sets.size(); ++r)
    for (size_t c = 0; c < sets.size(); ++c) {
      LaurentMatrix minor(k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = a(sets[r][i], sets[c][j]);
      out(static_cast<int>(r), static_cast<int>(c)) = mat_det(minor);
    }
  return out;
}

FactorOfAutomorphy wedge_power(const FactorOfAutomorphy& f, int k) {
  return FactorOfAutomorphy(f.torus(), wedge_power_matrix(f.generator(), k));
}

FactorOfAutomorphy dual(const FactorOfAutomorphy& f) {
  return FactorOfAutomorphy(f.torus(), inverse_monomial_det(f.generator()).transpose());
}

std::vector<int> clebsch_gordan_F(int p, int q) {
  if (q < 1 || p < q) throw DomainError("clebsch_gordan_F requires p >= q >= 1");
  std::vector<int> out;
  for (int idx = p + q - 1; idx >= p - q + 1; idx -= 2) out.push_back(idx);
  return out;
}

}  // namespace ellvb
