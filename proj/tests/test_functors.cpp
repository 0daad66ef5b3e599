#include <doctest.h>

#include "ellvb/classify.hpp"
#include "ellvb/errors.hpp"
#include "ellvb/functors.hpp"
#include "ellvb/jordan.hpp"
#include "support.hpp"

using namespace ellvb;
using ellvb::testing::Rng;

namespace {
const Torus kTau(Complex(0.3, 1.1));

FactorOfAutomorphy constant(const ConstMatrix& m) {
  return FactorOfAutomorphy(kTau, LaurentMatrix::constant(m));
}

ConstMatrix to_const(const std::vector<std::vector<long long>>& m) {
  ConstMatrix out(m.size(), m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) out(i, j) = static_cast<double>(m[i][j]);
  return out;
}
}  // namespace

TEST_CASE("tensor") {
  Rng rng(31);
  const FactorOfAutomorphy f(kTau, testing::random_monomial_det(rng, 2));
  const auto unit = tensor(f, constant(ConstMatrix::Identity(1, 1)));
  CHECK(relative_residual(unit.generator(), f.generator()) == 0.0);

  const Complex a{0.5, 0.1}, b{-0.3, 0.8};
  const auto ab = tensor(constant(ConstMatrix::Constant(1, 1, a)), constant(ConstMatrix::Constant(1, 1, b)));
  CHECK(std::abs(ab.generator()(0, 0).coeff(0) - a * b) < 1e-15);

  const Complex c{0.7, -0.2};
  const auto jc = tensor(normal_form_deg0(kTau, 2, 1.0), constant(ConstMatrix::Constant(1, 1, c)));
  ConstMatrix expected(2, 2);
  expected << c, c, 0, c;
  CHECK((jc.generator().constant_value() - expected).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(tensor(f, FactorOfAutomorphy(Torus(Complex(0, 2)), f.generator())), TorusMismatch);
}

TEST_CASE("det of a Kronecker product") {
  Rng rng(32);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      const FactorOfAutomorphy f(kTau, testing::random_monomial_det(rng, n));
      const FactorOfAutomorphy g(kTau, testing::random_monomial_det(rng, m));
      LaurentPoly expected(1.0);
      const auto da = mat_det(f.generator()), db = mat_det(g.generator());
      for (int i = 0; i < m; ++i) expected = expected * da;
      for (int i = 0; i < n; ++i) expected = expected * db;
      const auto got = mat_det(tensor(f, g).generator());
      CHECK(max_coeff_diff(got, expected) <= 1e-8 * (1.0 + expected.max_abs()));
    }
}

TEST_CASE("sym_power") {
  Rng rng(33);
  const FactorOfAutomorphy f(kTau, testing::random_monomial_det(rng, 2));
  CHECK(relative_residual(sym_power(f, 1).generator(), f.generator()) == 0.0);
  CHECK(sym_power(f, 0).rank() == 1);

  const auto a2 = normal_form_deg0(kTau, 2, 1.0);
  for (int n = 1; n <= 9; ++n) {
    const ConstMatrix got = sym_power(a2, n).generator().constant_value();
    CHECK((got - to_const(testing::binomial_matrix(n))).cwiseAbs().maxCoeff() == 0.0);
  }
  // rank-3 input: dimension C(3 + k - 1, k).
  const FactorOfAutomorphy g(kTau, testing::random_monomial_det(rng, 3));
  CHECK(sym_power(g, 2).rank() == 6);
  CHECK(sym_power(g, 3).rank() == 10);
}

TEST_CASE("sym_power is functorial") {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const ConstMatrix a = ConstMatrix::Random(2, 2) + 2.0 * ConstMatrix::Identity(2, 2);
    const ConstMatrix b = ConstMatrix::Random(2, 2) + 2.0 * ConstMatrix::Identity(2, 2);
    for (int n = 1; n <= 3; ++n) {
      const auto lhs = sym_power_matrix(LaurentMatrix::constant(a * b), n);
      const auto rhs = sym_power_matrix(LaurentMatrix::constant(a), n) *
                       sym_power_matrix(LaurentMatrix::constant(b), n);
      CHECK(relative_residual(lhs, rhs) < 1e-12);
    }
  }
  // Non-constant generators expand symbolically, so the identity is exact on
  // exponents as well.
  const auto a = testing::random_monomial_det(rng, 2);
  const auto b = testing::random_monomial_det(rng, 2);
  CHECK(relative_residual(sym_power_matrix(a * b, 3), sym_power_matrix(a, 3) * sym_power_matrix(b, 3)) <
        1e-10);
}

TEST_CASE("S^{n-1}(A_2) is a single Jordan block") {
  const auto a2 = normal_form_deg0(kTau, 2, 1.0);
  for (int n = 2; n <= 10; ++n)
    CHECK(jordan_type_unipotent(sym_power(a2, n - 1).generator().constant_value(), 1.0) ==
          Partition{n});
}

TEST_CASE("wedge_power") {
  Rng rng(35);
  const FactorOfAutomorphy f(kTau, testing::random_monomial_det(rng, 3));
  CHECK(relative_residual(wedge_power(f, 1).generator(), f.generator()) == 0.0);
  const auto top = wedge_power(f, 3);
  REQUIRE(top.rank() == 1);
  CHECK(max_coeff_diff(top.generator()(0, 0), mat_det(f.generator())) < 1e-12);
  CHECK(wedge_power(f, 2).rank() == 3);
  const Complex a{0.5, 0.5}, b{2.0, -1.0};
  ConstMatrix d = ConstMatrix::Zero(2, 2);
  d(0, 0) = a;
  d(1, 1) = b;
  CHECK(std::abs(wedge_power(constant(d), 2).generator()(0, 0).coeff(0) - a * b) < 1e-15);
  CHECK_THROWS_AS(wedge_power(f, 4), DomainError);
}

TEST_CASE("dual") {
  const Complex c{0.4, -0.3};
  const auto d = dual(constant(ConstMatrix::Constant(1, 1, c)));
  CHECK(std::abs(d.generator()(0, 0).coeff(0) - 1.0 / c) < 1e-14);

  Rng rng(36);
  const FactorOfAutomorphy f(kTau, testing::random_monomial_det(rng, 3));
  CHECK(relative_residual(dual(dual(f)).generator(), f.generator()) < 1e-10);

  const auto phi = normal_form(kTau, 1, 1, 1.0);
  const auto dphi = dual(phi);
  CHECK(dphi.generator()(0, 0).is_monomial());
  CHECK(std::abs(dphi.generator()(0, 0).coeff(1) - kTau.s()) < 1e-14);
  CHECK(degree(dphi) == -degree(phi));
  CHECK(degree(dual(f)) == -degree(f));

  const LaurentPoly p = LaurentPoly(1.0) + LaurentPoly::monomial(0.5, 1);
  CHECK_THROWS_AS(dual(FactorOfAutomorphy(kTau, LaurentMatrix(1, {p}))), NotInvertibleInRing);
}

TEST_CASE("clebsch_gordan_F") {
  CHECK(clebsch_gordan_F(1, 1) == std::vector<int>{1});
  CHECK(clebsch_gordan_F(2, 2) == std::vector<int>{3, 1});
  CHECK(clebsch_gordan_F(3, 2) == std::vector<int>{4, 2});
  CHECK_THROWS_AS(clebsch_gordan_F(2, 3), DomainError);
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= p && p + q <= 9; ++q) {
      const auto idx = clebsch_gordan_F(p, q);
      int total = 0;
      for (int i : idx) total += i;
      CHECK(total == p * q);
    }
}
