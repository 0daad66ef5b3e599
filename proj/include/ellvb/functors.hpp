#pragma once

#include <vector>

#include "ellvb/cocycle.hpp"

namespace ellvb {

/// E(A) (x) E(B) = E(A (x) B), Kronecker product with row-major blocks.
FactorOfAutomorphy tensor(const FactorOfAutomorphy& f, const FactorOfAutomorphy& g);

/// Matrix of S^k(A(u)) acting on monomials e^alpha, |alpha| = k, ordered
/// lexicographically descending on alpha. For rank 2 this is the basis
/// e_1^j e_2^{k-j}, j = k..0. Column alpha holds the expansion of
/// prod_j (A e_j)^{alpha_j}.
LaurentMatrix sym_power_matrix(const LaurentMatrix& a, int k);
FactorOfAutomorphy sym_power(const FactorOfAutomorphy& f, int k);

/// k x k minors of A(u) indexed by sorted index sets, lexicographic order.
/// Throws DomainError for k > rank.
LaurentMatrix wedge_power_matrix(const LaurentMatrix& a, int k);
FactorOfAutomorphy wedge_power(const FactorOfAutomorphy& f, int k);

/// (A(u)^T)^{-1}; needs a monomial determinant (NotInvertibleInRing).
FactorOfAutomorphy dual(const FactorOfAutomorphy& f);

/// F-indices of F_p (x) F_q: p+q-1, p+q-3, ..., p-q+1. Requires p >= q >= 1.
std::vector<int> clebsch_gordan_F(int p, int q);

}  // namespace ellvb
