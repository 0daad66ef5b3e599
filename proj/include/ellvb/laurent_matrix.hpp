#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "ellvb/laurent.hpp"

namespace ellvb {

using ConstMatrix = Eigen::MatrixXcd;

/// Square n x n matrix of Laurent polynomials, row-major. Represents the
/// generator A(u) of a factor of automorphy on C* / <q>.
///
/// Pruning is per entry, relative to the operands that produced it. Entries
/// of A(q^m u) legitimately span many orders of magnitude, so a cut relative
/// to the whole matrix would delete real coefficients.
class LaurentMatrix {
 public:
  /// n x n zero matrix; throws ShapeError when n < 1.
  explicit LaurentMatrix(int n);
  LaurentMatrix(int n, std::vector<LaurentPoly> entries);

  static LaurentMatrix identity(int n);
  static LaurentMatrix constant(const ConstMatrix& m);
  static LaurentMatrix diagonal(std::span<const LaurentPoly> diag);
  static LaurentMatrix block_diagonal(std::span<const LaurentMatrix> blocks);

  int size() const { return n_; }
  const LaurentPoly& operator()(int i, int j) const { return entries_[i * n_ + j]; }
  LaurentPoly& operator()(int i, int j) { return entries_[i * n_ + j]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  /// Copy `block` into rows/columns starting at (row, col).
  void set_block(int row, int col, const LaurentMatrix& block);
  LaurentMatrix block(int row, int col, int n) const;

  bool is_constant() const;
  bool is_upper_triangular() const;
  double max_abs() const;

  /// Requires is_constant().
  ConstMatrix constant_value() const;

  LaurentMatrix transpose() const;
  LaurentMatrix substitute_scaled(Complex c) const;
  /// Drops coefficients at or below kPruneRelative * scale in every entry.
  LaurentMatrix pruned(double scale) const;

  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentPoly& c, const LaurentMatrix& a);

 private:
  int n_;
  std::vector<LaurentPoly> entries_;
};

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentPoly mat_det(const LaurentMatrix& a);
ConstMatrix eval_at(const LaurentMatrix& a, Complex u0);

namespace detail {
LaurentPoly det_cofactor(const LaurentMatrix& a);
LaurentPoly det_bareiss(const LaurentMatrix& a);
}  // namespace detail

/// Matrix of signed cofactors transposed, so that A adj(A) = det(A) I.
LaurentMatrix adjugate(const LaurentMatrix& a);

/// A^{-1} = adj(A)/det(A), available exactly when det(A) is a monomial.
/// Throws NotInvertibleInRing otherwise.
LaurentMatrix inverse_monomial_det(const LaurentMatrix& a);

/// Kronecker product with row-major blocks: (A (x) B)[i m + k, j m + l] =
/// A[i,j] B[k,l].
LaurentMatrix kronecker(const LaurentMatrix& a, const LaurentMatrix& b);

/// det A(u) != 0 at 16 equally spaced points of |u| = 1 (relative to the
/// size of the determinant polynomial).
bool sampled_invertible(const LaurentMatrix& a);

/// max coefficient difference over all entries.
double max_coeff_diff(const LaurentMatrix& a, const LaurentMatrix& b);
/// max_coeff_diff(a, b) / (1 + max(|a|, |b|)).
double relative_residual(const LaurentMatrix& a, const LaurentMatrix& b);

}  // namespace ellvb
