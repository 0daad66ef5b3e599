#include "ellvb/classify.hpp"

#include <cmath>
#include <numeric>

#include "ellvb/errors.hpp"
#include "ellvb/functors.hpp"
#include "ellvb/isogeny.hpp"
#include "ellvb/jordan.hpp"

namespace ellvb {

namespace {

// Number of steps nu such that a q^{-nu} lies in the fundamental annulus.
int reduction_steps(const Torus& t, Complex a) {
  const double ratio = std::log(std::abs(a)) / std::log(std::abs(t.q()));
  double nu = std::floor(ratio);
  if (ratio - nu > 1.0 - 1e-9) nu += 1.0;
  return static_cast<int>(nu);
}

}  // namespace

Complex reduce_param(const Torus& t, Complex a) {
  if (a == Complex{} || !is_finite(a)) throw DomainError("parameter must be a nonzero finite number");
  return a * t.q_pow(-reduction_steps(t, a));
}

LaurentMatrix jordan_block(int h, Complex a) {
  LaurentMatrix m(h);
  for (int i = 0; i < h; ++i) {
    m(i, i) = LaurentPoly(a);
    if (i + 1 < h) m(i, i + 1) = LaurentPoly(1.0);
  }
  return m;
}

LaurentPoly phi0_power(const Torus& t, int k) { return LaurentPoly::monomial(t.s_pow(-k), -k); }

FactorOfAutomorphy normal_form_deg0(const Torus& t, int r, Complex a) {
  if (a == Complex{}) throw DomainError("parameter a must be nonzero");
  if (r < 1) throw DomainError("rank must be positive");
  return FactorOfAutomorphy(t, jordan_block(r, a));
}

namespace {

struct Split {
  int h, r_prime, d_prime;
};

Split split_rank_degree(int r, int d) {
  if (r < 1) throw DomainError("rank must be positive");
  const int h = d == 0 ? r : std::gcd(r, std::abs(d));
  return {h, r / h, d / h};
}

}  // namespace

FactorOfAutomorphy normal_form(const Torus& t, int r, int d, Complex a) {
  if (a == Complex{}) throw DomainError("parameter a must be nonzero");
  const auto [h, r_prime, d_prime] = split_rank_degree(r, d);
  const LaurentMatrix twisted = phi0_power(t, d_prime) * jordan_block(h, a);
  return FactorOfAutomorphy(t, companion_block(twisted, r_prime));
}

FactorOfAutomorphy atiyah_construct(const Torus& t, int r, int d, Complex a) {
  if (a == Complex{}) throw DomainError("parameter a must be nonzero");
  const auto [h, r_prime, d_prime] = split_rank_degree(r, d);
  const IsogenyContext ctx(t, r_prime);
  const Torus& cover = ctx.cover();
  // L' = E(c) (x) E(phi_cover^{d'}) with the degree-0 twist c = s^{(r'-1)d'},
  // so that c * phi_cover^{d'} = phi_0^{d'} in base terms.
  const LaurentPoly line = t.s_pow((r_prime - 1) * d_prime) * phi0_power(cover, d_prime);
  const FactorOfAutomorphy l_prime(cover, LaurentMatrix::diagonal(std::span(&line, 1)));
  const FactorOfAutomorphy on_cover = tensor(l_prime, normal_form_deg0(cover, h, a));
  return pushforward(ctx, on_cover);
}

int degree(const FactorOfAutomorphy& f) {
  const LaurentPoly det = mat_det(f.generator());
  if (det.is_zero()) throw DetVanishesOnCstar("determinant is identically zero");
  if (det.is_monomial()) return -det.min_exponent();

  // det = u^min * P(u) with P(0) != 0; winding = min + #roots of P in |u| < 1.
  const int lo = det.min_exponent();
  const int deg = det.max_exponent() - lo;
  const Complex lead = det.coeff(det.max_exponent());
  ConstMatrix companion = ConstMatrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -det.coeff(lo + i) / lead;
  Eigen::ComplexEigenSolver<ConstMatrix> solver(companion, false);
  int inside = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double mod = std::abs(solver.eigenvalues()(i));
    if (mod >= 1e-6 && mod <= 1e6)
      throw DetVanishesOnCstar("determinant has a root of modulus " + std::to_string(mod));
    if (mod < 1.0) ++inside;
  }
  return -(lo + inside);
}

int rank(const FactorOfAutomorphy& f) { return f.rank(); }

std::optional<BundleDescriptor> recognize_deg0(const FactorOfAutomorphy& f, int nu_range) {
  const LaurentMatrix& gen = f.generator();
  if (!gen.is_constant()) throw ShapeError("recognize_deg0 expects a constant generator");
  const ConstMatrix m = gen.constant_value();
  std::vector<EigenBlock> structure;
  try {
    structure = jordan_structure_triangular(m);
  } catch (const ShapeError&) {
    return std::nullopt;
  }
  if (structure.size() != 1 || structure[0].partition.size() != 1) return std::nullopt;
  const Complex lambda = structure[0].eigenvalue;
  if (std::abs(reduction_steps(f.torus(), lambda)) > nu_range) return std::nullopt;
  return BundleDescriptor{gen.size(), 0, reduce_param(f.torus(), lambda)};
}

}  // namespace ellvb
