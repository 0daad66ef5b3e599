#include "ellvb/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ellvb/errors.hpp"
#include "ellvb/jordan.hpp"

namespace ellvb {

FactorOfAutomorphy::FactorOfAutomorphy(Torus torus, LaurentMatrix generator)
    : torus_(torus), generator_(std::move(generator)) {
  if (!sampled_invertible(generator_))
    throw DomainError("generator is singular on |u| = 1; not a factor of automorphy");
}

EquivalenceWitness::EquivalenceWitness(LaurentMatrix b) : b_(std::move(b)) {
  if (!sampled_invertible(b_)) throw DomainError("witness is singular on |u| = 1");
}

bool is_monomial_det(const LaurentMatrix& a) {
  return mat_det(a).is_monomial();
}

LaurentMatrix iterate(const FactorOfAutomorphy& f, int m) {
  const Torus& t = f.torus();
  const LaurentMatrix& a = f.generator();
  if (m == 0) return LaurentMatrix::identity(a.size());
  const int steps = std::abs(m);
  LaurentMatrix acc = a;
  for (int i = 1; i < steps; ++i) acc = a.substitute_scaled(t.q_pow(i)) * acc;
  if (m > 0) return acc;
  return inverse_monomial_det(acc.substitute_scaled(t.q_pow(-steps)));
}

double witness_residual(const FactorOfAutomorphy& f, const FactorOfAutomorphy& g,
                        const EquivalenceWitness& w) {
  if (!f.torus().same_as(g.torus())) throw TorusMismatch("factors live on different tori");
  const LaurentMatrix& b = w.matrix();
  if (f.rank() != g.rank() || b.size() != f.rank())
    throw SizeMismatch("witness and factors must have equal size");
  const LaurentMatrix lhs = f.generator() * b;
  const LaurentMatrix rhs = b.substitute_scaled(f.torus().q()) * g.generator();
  return relative_residual(lhs, rhs);
}

bool check_witness(const FactorOfAutomorphy& f, const FactorOfAutomorphy& g,
                   const EquivalenceWitness& w) {
  return witness_residual(f, g, w) <= kIdentityTol;
}

std::optional<int> is_trivial_rank1_constant(const FactorOfAutomorphy& f, int nu_range) {
  const LaurentMatrix& a = f.generator();
  if (a.size() != 1 || !a.is_constant())
    throw ShapeError("expected a 1x1 constant factor [[a]]");
  const Complex value = a(0, 0).coeff(0);
  // |q| < 1 separates the powers, so at most one nu can match.
  for (int nu = -nu_range; nu <= nu_range; ++nu) {
    const Complex qn = f.torus().q_pow(nu);
    if (std::abs(value - qn) <= kIdentityTol * std::abs(qn)) return nu;
  }
  return std::nullopt;
}

std::optional<LaurentPoly> is_trivial_unipotent2(const FactorOfAutomorphy& f) {
  const LaurentMatrix& a = f.generator();
  const double scale = 1.0 + a.max_abs();
  auto near = [&](const LaurentPoly& p, Complex c) {
    return max_coeff_diff(p, LaurentPoly(c)) <= kIdentityTol * scale;
  };
  if (a.size() != 2 || !near(a(0, 0), 1.0) || !near(a(1, 1), 1.0) || !near(a(1, 0), 0.0))
    throw ShapeError("expected [[1, a(u)], [0, 1]]");
  const LaurentPoly& upper = a(0, 1);
  // Coefficientwise b_k (q^k - 1) = a_k; the k = 0 equation reads 0 = a_0.
  if (std::abs(upper.coeff(0)) > kIdentityTol * scale) return std::nullopt;
  LaurentPoly::Terms b;
  for (const auto& [k, c] : upper.terms())
    if (k != 0) b[k] = c / (f.torus().q_pow(k) - 1.0);
  return LaurentPoly::from_terms(std::move(b));
}

namespace {

bool same_jordan_structure(const ConstMatrix& a, const ConstMatrix& b) {
  auto sa = jordan_structure_triangular(a);
  auto sb = jordan_structure_triangular(b);
  if (sa.size() != sb.size()) return false;
  for (const auto& blk : sa) {
    auto it = std::find_if(sb.begin(), sb.end(), [&](const EigenBlock& o) {
      return std::abs(o.eigenvalue - blk.eigenvalue) <=
             1e-8 * std::max(1.0, std::abs(blk.eigenvalue));
    });
    if (it == sb.end() || it->partition != blk.partition) return false;
  }
  return true;
}

bool is_upper_triangular(const ConstMatrix& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (std::abs(m(i, j)) > 1e-12 * scale) return false;
  return true;
}

}  // namespace

std::optional<EquivalenceWitness> equivalent_constant(const ConstMatrix& a,
                                                      const ConstMatrix& a_prime) {
  if (a.rows() != a.cols() || a_prime.rows() != a_prime.cols() || a.rows() != a_prime.rows())
    throw ShapeError("equivalent_constant needs square matrices of one size");
  const Eigen::Index n = a.rows();
  const double scale = 1.0 + std::max(a.cwiseAbs().maxCoeff(), a_prime.cwiseAbs().maxCoeff());
  if ((a - a_prime).cwiseAbs().maxCoeff() <= kIdentityTol * scale)
    return EquivalenceWitness(LaurentMatrix::identity(static_cast<int>(n)));
  if (is_upper_triangular(a) && is_upper_triangular(a_prime) && !same_jordan_structure(a, a_prime))
    return std::nullopt;

  // Intertwiners S with A S = S A' form the kernel of I (x) A - A'^T (x) I
  // acting on vec(S). When A ~ A' a generic kernel element is invertible.
  const ConstMatrix id = ConstMatrix::Identity(n, n);
  ConstMatrix op(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      op.block(i * n, j * n, n, n) = (i == j ? a : ConstMatrix::Zero(n, n)) - a_prime(j, i) * id;
  Eigen::JacobiSVD<ConstMatrix> svd(op, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = 1e-9 * std::max(1.0, sv(0));
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  const ConstMatrix kernel = svd.matrixV().rightCols(n * n - rank);
  if (kernel.cols() == 0) return std::nullopt;

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::VectorXcd mix(kernel.cols());
    for (Eigen::Index i = 0; i < mix.size(); ++i) mix(i) = Complex(gauss(rng), gauss(rng));
    const Eigen::VectorXcd v = kernel * mix;
    ConstMatrix s(n, n);
    for (Eigen::Index j = 0; j < n; ++j) s.col(j) = v.segment(j * n, n);
    Eigen::JacobiSVD<ConstMatrix> check(s);
    const auto& ssv = check.singularValues();
    if (ssv(n - 1) <= 1e-8 * ssv(0)) continue;
    if ((a * s - s * a_prime).cwiseAbs().maxCoeff() > kIdentityTol * scale * s.cwiseAbs().maxCoeff())
      continue;
    return EquivalenceWitness(LaurentMatrix::constant(s));
  }
  return std::nullopt;
}

}  // namespace ellvb
