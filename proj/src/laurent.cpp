#include "ellvb/laurent.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ellvb/errors.hpp"

namespace ellvb {

LaurentPoly::LaurentPoly(Complex constant) {
  if (constant != Complex{}) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(Complex c, int k) {
  LaurentPoly p;
  if (c != Complex{}) p.terms_.emplace(k, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == Complex{}; });
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_monomial() const { return terms_.size() == 1; }

Complex LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Complex{} : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

double LaurentPoly::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Complex LaurentPoly::operator()(Complex u) const {
  if (u == Complex{}) throw DomainError("Laurent polynomial evaluated at u = 0");
  Complex sum{};
  for (const auto& [k, c] : terms_) sum += c * std::pow(u, k);
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& r) {
  LaurentPoly out = p;
  for (const auto& [k, c] : r.terms_) out.terms_[k] += c;
  return out.pruned(std::max(p.max_abs(), r.max_abs()));
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& r) { return p + (-r); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  LaurentPoly out;
  for (const auto& [i, a] : p.terms_)
    for (const auto& [j, b] : r.terms_) out.terms_[i + j] += a * b;
  return out.pruned(p.max_abs() * r.max_abs());
}

LaurentPoly operator*(Complex c, const LaurentPoly& p) {
  LaurentPoly out;
  if (c == Complex{}) return out;
  for (const auto& [k, a] : p.terms_) out.terms_.emplace(k, c * a);
  return out.pruned(0.0);
}

LaurentPoly LaurentPoly::substitute_scaled(Complex c) const {
  if (c == Complex{}) throw DomainError("substitute_scaled requires c != 0");
  LaurentPoly out;
  for (const auto& [k, a] : terms_) out.terms_.emplace(k, a * std::pow(c, k));
  return out.pruned(0.0);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, a] : terms_) out.terms_.emplace(e + k, a);
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw NotInvertibleInRing("division by the zero polynomial");
  if (is_zero()) return {};
  const int lo = min_exponent() - d.min_exponent();
  const int hi = max_exponent() - d.max_exponent();
  if (hi < lo) throw NotInvertibleInRing("polynomial division leaves a remainder");
  // Solve the convolution system d * x = p in the least-squares sense and
  // accept x only if the residual is negligible. Long division from either
  // end amplifies rounding by powers of |d_other / d_lead|.
  const int rows = max_exponent() - min_exponent() + 1;
  const int cols = hi - lo + 1;
  Eigen::MatrixXcd conv = Eigen::MatrixXcd::Zero(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (const auto& [e, c] : d.terms_) conv(e + lo + j - min_exponent(), j) = c;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
  for (const auto& [k, c] : terms_) rhs(k - min_exponent()) = c;
  const Eigen::VectorXcd x = conv.colPivHouseholderQr().solve(rhs);
  const double scale = max_abs();
  if ((conv * x - rhs).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + scale))
    throw NotInvertibleInRing("polynomial division leaves a remainder");
  Terms quot;
  for (int j = 0; j < cols; ++j) quot[lo + j] = x(j);
  return from_terms(std::move(quot)).pruned(scale / d.max_abs());
}

LaurentPoly LaurentPoly::pruned(double scale) const {
  const double cut = kPruneRelative * scale;
  LaurentPoly out;
  for (const auto& [k, c] : terms_)
    if (c != Complex{} && std::abs(c) > cut) out.terms_.emplace(k, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os << std::setprecision(6);
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    if (k == 1) os << "u";
    else if (k != 0) os << "u^" << k;
  }
  return os.str();
}

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
LaurentPoly substitute_scaled(const LaurentPoly& p, Complex c) {
  return p.substitute_scaled(c);
}

double max_coeff_diff(const LaurentPoly& p, const LaurentPoly& r) {
  double m = 0.0;
  for (const auto& [k, c] : p.terms()) m = std::max(m, std::abs(c - r.coeff(k)));
  for (const auto& [k, c] : r.terms())
    if (p.terms().find(k) == p.terms().end()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace ellvb
