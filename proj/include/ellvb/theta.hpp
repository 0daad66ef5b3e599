#pragma once

#include <cstdint>
#include <functional>

#include "ellvb/torus.hpp"

namespace ellvb {

/// xi = a tau + b.
struct ThetaCharacteristic {
  double a = 0.0;
  double b = 0.0;
};

inline constexpr int kDefaultThetaTerms = 40;

/// sum_{n=-terms}^{terms} exp(pi i (n+a)^2 tau) exp(2 pi i (n+a)(z+b)).
Complex theta_eval(const Torus& t, ThetaCharacteristic xi, Complex z,
                   int terms = kDefaultThetaTerms);

/// e_xi(gamma, z) = exp(2 pi i a gamma - pi i p^2 tau - 2 pi i p (z + xi))
/// for gamma = p tau + n.
Complex e_factor(const Torus& t, ThetaCharacteristic xi, int p, int n, Complex z);

/// f(p, n, z): a scalar factor of automorphy evaluated at gamma = p tau + n.
using ScalarFactor = std::function<Complex(int p, int n, Complex z)>;
using ScalarSection = std::function<Complex(Complex z)>;

struct ThetaReport {
  double max_residual = 0.0;
  int samples = 0;
  bool pass = false;
};

/// Checks s(gamma + z) = f(gamma, z) s(z) at `samples` random z in the
/// parallelogram {alpha + beta tau : alpha, beta in [0.05, 0.95]}, against
/// every gamma = p tau + n with |p|, |n| <= 2. The residual at each point is
/// |s(gamma + z) - f s(z)| / (1 + |f s(z)|).
ThetaReport verify_theta_function(const Torus& t, const ScalarFactor& f, const ScalarSection& s,
                                  int samples, std::uint64_t seed = 0, double tol = 1e-9);

}  // namespace ellvb
