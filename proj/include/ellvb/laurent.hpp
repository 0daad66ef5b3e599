#pragma once

#include <map>
#include <optional>
#include <string>

#include "ellvb/torus.hpp"

namespace ellvb {

/// Finite Laurent polynomial sum_k c_k u^k with complex coefficients.
///
/// Exponents are exact; coefficients are doubles. Every arithmetic result is
/// pruned: a coefficient is dropped when its modulus is at most
/// kPruneRelative times the scale of the operation that produced it.
class LaurentPoly {
 public:
  using Terms = std::map<int, Complex>;

  LaurentPoly() = default;
  LaurentPoly(Complex constant);  // NOLINT: implicit scalar embedding
  static LaurentPoly monomial(Complex c, int k);
  /// Takes ownership of `terms`; exact zeros are removed, nothing else.
  static LaurentPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Exactly one nonzero term.
  bool is_monomial() const;
  Complex coeff(int k) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()
  double max_abs() const;

  Complex operator()(Complex u) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& r);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& r);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);
  friend LaurentPoly operator*(Complex c, const LaurentPoly& p);

  /// p(c u). Throws DomainError for c = 0.
  LaurentPoly substitute_scaled(Complex c) const;
  /// p(u) * u^k.
  LaurentPoly shifted(int k) const;

  /// Quotient p / d when d divides p in the Laurent ring (up to pruning
  /// tolerance). Throws NotInvertibleInRing when the remainder is not small.
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  /// Drop terms with modulus <= kPruneRelative * scale.
  LaurentPoly pruned(double scale) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly substitute_scaled(const LaurentPoly& p, Complex c);

/// max_k |p_k - r_k|.
double max_coeff_diff(const LaurentPoly& p, const LaurentPoly& r);

}  // namespace ellvb
