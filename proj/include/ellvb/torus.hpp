#pragma once

#include <complex>

namespace ellvb {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Relative pruning threshold for Laurent coefficients.
inline constexpr double kPruneRelative = 1e-12;
/// Identity checks pass when residual <= kIdentityTol * (1 + scale).
inline constexpr double kIdentityTol = 1e-9;

bool is_finite(Complex z);

/// The elliptic curve C / (Z + tau Z), viewed multiplicatively as C* / <q>.
/// Keeps q = exp(2 pi i tau) and the fixed square root s = exp(pi i tau), so
/// half-integer powers of q are written as powers of s.
class Torus {
 public:
  /// Throws InvalidTorus unless Im(tau) > 0 and tau is finite.
  explicit Torus(Complex tau);

  Complex tau() const { return tau_; }
  Complex q() const { return q_; }
  Complex s() const { return s_; }

  /// q^m = exp(2 pi i m tau), evaluated directly rather than by repeated
  /// multiplication.
  Complex q_pow(int m) const;
  /// s^m = q^{m/2}.
  Complex s_pow(int m) const;

  /// The torus with modulus r * tau (nome q^r).
  Torus scaled(int r) const;

  bool same_as(const Torus& other) const;

 private:
  Complex tau_;
  Complex q_;
  Complex s_;
};

}  // namespace ellvb
