#include "ellvb/torus.hpp"

#include <cmath>
#include <sstream>

#include "ellvb/errors.hpp"

namespace ellvb {

namespace {
constexpr Complex kI{0.0, 1.0};
}

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Torus::Torus(Complex tau) : tau_(tau) {
  if (!is_finite(tau) || !(tau.imag() > 0.0)) {
    std::ostringstream os;
    os << "modulus tau = " << tau << " must have Im(tau) > 0";
    throw InvalidTorus(os.str());
  }
  q_ = std::exp(2.0 * kPi * kI * tau_);
  s_ = std::exp(kPi * kI * tau_);
}

Complex Torus::q_pow(int m) const {
  return std::exp(2.0 * kPi * kI * static_cast<double>(m) * tau_);
}

Complex Torus::s_pow(int m) const {
  return std::exp(kPi * kI * static_cast<double>(m) * tau_);
}

Torus Torus::scaled(int r) const {
  if (r < 1) throw DomainError("covering degree must be positive");
  return Torus(static_cast<double>(r) * tau_);
}

bool Torus::same_as(const Torus& other) const {
  return std::abs(tau_ - other.tau_) <= 1e-12 * (1.0 + std::abs(tau_));
}

}  // namespace ellvb
