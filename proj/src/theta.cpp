#include "ellvb/theta.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ellvb/errors.hpp"

namespace ellvb {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Complex theta_eval(const Torus& t, ThetaCharacteristic xi, Complex z, int terms) {
  if (terms < 1) throw DomainError("theta truncation needs terms >= 1");
  const Complex tau = t.tau();
  Complex sum{};
  for (int n = -terms; n <= terms; ++n) {
    const double m = n + xi.a;
    sum += std::exp(kPi * kI * m * m * tau + 2.0 * kPi * kI * m * (z + xi.b));
  }
  return sum;
}

Complex e_factor(const Torus& t, ThetaCharacteristic xi, int p, int n, Complex z) {
  const Complex tau = t.tau();
  const Complex gamma = static_cast<double>(p) * tau + static_cast<double>(n);
  const Complex xi_value = xi.a * tau + xi.b;
  const double pp = static_cast<double>(p);
  return std::exp(2.0 * kPi * kI * xi.a * gamma - kPi * kI * pp * pp * tau -
                  2.0 * kPi * kI * pp * (z + xi_value));
}

ThetaReport verify_theta_function(const Torus& t, const ScalarFactor& f, const ScalarSection& s,
                                  int samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.05, 0.95);
  ThetaReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const double alpha = coord(rng);
    const double beta = coord(rng);
    const Complex z = alpha + beta * t.tau();
    const Complex sz = s(z);
    for (int p = -2; p <= 2; ++p)
      for (int n = -2; n <= 2; ++n) {
        const Complex gamma = static_cast<double>(p) * t.tau() + static_cast<double>(n);
        const Complex expected = f(p, n, z) * sz;
        const double res = std::abs(s(gamma + z) - expected) / (1.0 + std::abs(expected));
        report.max_residual = std::max(report.max_residual, res);
      }
  }
  report.pass = report.max_residual <= tol;
  return report;
}

}  // namespace ellvb
