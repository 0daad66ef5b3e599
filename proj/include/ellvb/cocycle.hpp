#pragma once

#include <optional>

#include "ellvb/laurent_matrix.hpp"
#include "ellvb/torus.hpp"

namespace ellvb {

/// A C*-factor of automorphy: the bundle E(A) on C*/<q> given by its
/// generator A(u) = A(1, u). Construction checks that det A(u) does not
/// vanish at 16 points of |u| = 1; nonvanishing on all of C* remains the
/// caller's contract (see `is_monomial_det`).
class FactorOfAutomorphy {
 public:
  FactorOfAutomorphy(Torus torus, LaurentMatrix generator);

  const Torus& torus() const { return torus_; }
  const LaurentMatrix& generator() const { return generator_; }
  int rank() const { return generator_.size(); }

 private:
  Torus torus_;
  LaurentMatrix generator_;
};

/// B(u) with A(u) B(u) = B(q u) A'(u).
class EquivalenceWitness {
 public:
  explicit EquivalenceWitness(LaurentMatrix b);
  const LaurentMatrix& matrix() const { return b_; }

 private:
  LaurentMatrix b_;
};

bool is_monomial_det(const LaurentMatrix& a);

/// A(m, u). For m > 0 the product A(q^{m-1}u) ... A(qu) A(u); identity for
/// m = 0; for m < 0 the inverse of A(|m|, q^{-|m|} u), which exists in the
/// Laurent ring only for monomial det (NotInvertibleInRing otherwise).
LaurentMatrix iterate(const FactorOfAutomorphy& f, int m);

/// Residual of A(u) B(u) - B(qu) A'(u), scaled as in relative_residual.
double witness_residual(const FactorOfAutomorphy& f, const FactorOfAutomorphy& g,
                        const EquivalenceWitness& w);
bool check_witness(const FactorOfAutomorphy& f, const FactorOfAutomorphy& g,
                   const EquivalenceWitness& w);

/// For a 1x1 constant [[a]]: the nu with a = q^nu, |nu| <= nu_range, if any.
std::optional<int> is_trivial_rank1_constant(const FactorOfAutomorphy& f, int nu_range);

/// For [[1, a(u)], [0, 1]]: b with a(u) = b(qu) - b(u), when a_0 = 0.
std::optional<LaurentPoly> is_trivial_unipotent2(const FactorOfAutomorphy& f);

/// Constant S with A = S A' S^{-1}, when A and A' are similar.
std::optional<EquivalenceWitness> equivalent_constant(const ConstMatrix& a,
                                                      const ConstMatrix& a_prime);

}  // namespace ellvb
