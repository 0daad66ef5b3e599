#pragma once

#include <optional>

#include "ellvb/cocycle.hpp"

namespace ellvb {

/// Names the point (r, d, a mod <q>) of Atiyah's moduli of indecomposable
/// bundles. `param` is kept in the fundamental annulus |q| < |a| <= 1.
struct BundleDescriptor {
  int rank = 1;
  int degree = 0;
  Complex param{1.0, 0.0};
};

/// Representative of a in C*/<q> with |q| < |a| <= 1. Points on the inner
/// boundary |a| = |q| are moved out to |a| = 1. Throws DomainError for a = 0.
Complex reduce_param(const Torus& t, Complex a);

/// h x h Jordan block A_h(a): a on the diagonal, 1 above it.
LaurentMatrix jordan_block(int h, Complex a);

/// phi_0(u)^k = (s^{-1} u^{-1})^k on the given torus.
LaurentPoly phi0_power(const Torus& t, int k);

/// E(A_r(a)), the indecomposable rank-r degree-0 bundle with parameter a.
FactorOfAutomorphy normal_form_deg0(const Torus& t, int r, Complex a);

/// With h = gcd(r, d) (h = r when d = 0), r' = r/h, d' = d/h: the generator
/// [[0, I_{(r'-1)h}], [phi_0^{d'} A_h(a), 0]], or phi_0^{d'} A_h(a) if r' = 1.
FactorOfAutomorphy normal_form(const Torus& t, int r, int d, Complex a);

/// Pushforward along the r'-isogeny of L' (x) E(A_h(a)), where L' is a
/// degree-d' line bundle on E_{r' tau} written with the cover's own phi_0.
/// Agrees entry for entry with normal_form.
FactorOfAutomorphy atiyah_construct(const Torus& t, int r, int d, Complex a);

/// Minus the winding number of det A(u) around |u| = 1. Monomial
/// determinants are handled exactly; otherwise the roots of the determinant
/// are located and DetVanishesOnCstar is raised if any has modulus in
/// [1e-6, 1e6].
int degree(const FactorOfAutomorphy& f);
int rank(const FactorOfAutomorphy& f);

/// For a constant upper-triangular generator with one eigenvalue and a
/// single Jordan block: (n, 0, reduce(lambda)). Absent when the generator is
/// outside that family or the reduction needs more than nu_range steps.
/// Throws ShapeError on a non-constant generator.
std::optional<BundleDescriptor> recognize_deg0(const FactorOfAutomorphy& f, int nu_range = 64);

}  // namespace ellvb
