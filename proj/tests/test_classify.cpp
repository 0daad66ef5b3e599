#include <doctest.h>

#include "ellvb/classify.hpp"
#include "ellvb/errors.hpp"
#include "ellvb/functors.hpp"
#include "support.hpp"

using namespace ellvb;
using ellvb::testing::Rng;

namespace {
const Torus kTauI(Complex(0.0, 1.0));
const Torus kTau(Complex(0.3, 1.1));

int winding_degree(const FactorOfAutomorphy& f) {
  return -testing::winding_number(
      [&](Complex u) { return eval_at(f.generator(), u).determinant(); });
}
}  // namespace

TEST_CASE("normal_form_deg0") {
  CHECK(relative_residual(normal_form_deg0(kTau, 1, 1.0).generator(), LaurentMatrix::identity(1)) == 0.0);
  const Complex a0{0.6, 0.3};
  ConstMatrix expected(3, 3);
  expected << a0, 1, 0, 0, a0, 1, 0, 0, a0;
  CHECK((normal_form_deg0(kTau, 3, a0).generator().constant_value() - expected).cwiseAbs().maxCoeff() == 0.0);
  ConstMatrix a2(2, 2);
  a2 << 1, 1, 0, 1;
  CHECK((normal_form_deg0(kTau, 2, 1.0).generator().constant_value() - a2).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(normal_form_deg0(kTau, 2, 0.0), DomainError);
}

TEST_CASE("normal_form") {
  const Complex a{0.8, -0.1};
  const auto line = normal_form(kTau, 1, 0, a);
  CHECK(std::abs(line.generator()(0, 0).coeff(0) - a) < 1e-15);

  const auto phi = normal_form(kTau, 1, 1, 1.0);
  CHECK(phi.generator()(0, 0).is_monomial());
  CHECK(std::abs(phi.generator()(0, 0).coeff(-1) - 1.0 / kTau.s()) < 1e-14 * std::abs(1.0 / kTau.s()));

  const auto f21 = normal_form(kTau, 2, 1, 1.0);
  LaurentMatrix expected(2);
  expected(0, 1) = LaurentPoly(1.0);
  expected(1, 0) = LaurentPoly::monomial(1.0 / kTau.s(), -1);
  CHECK(relative_residual(f21.generator(), expected) < 1e-15);

  CHECK_THROWS_AS(normal_form(kTau, 2, 1, 0.0), DomainError);
}

TEST_CASE("degree") {
  CHECK(degree(normal_form_deg0(kTau, 3, 2.0)) == 0);
  CHECK(degree(normal_form(kTau, 1, 1, 1.0)) == 1);
  Rng rng(51);
  for (int r = 1; r <= 5; ++r)
    for (int d = -5; d <= 5; ++d) {
      const auto f = normal_form(kTau, r, d, testing::random_complex(rng));
      CHECK(degree(f) == d);
      CHECK(winding_degree(f) == d);
      CHECK(rank(f) == r);
    }
}

TEST_CASE("degree of a non-monomial determinant") {
  // det = u^-1 (u - 1e-8)(u - 1e7): one root inside, one outside the annulus.
  const LaurentPoly det = LaurentPoly::monomial(1.0, -1) *
                          (LaurentPoly::monomial(1.0, 1) - LaurentPoly(1e-8)) *
                          (LaurentPoly::monomial(1.0, 1) - LaurentPoly(1e7));
  const FactorOfAutomorphy f(kTauI, LaurentMatrix(1, {det}));
  CHECK(degree(f) == winding_degree(f));
  CHECK(degree(f) == 0);

  const LaurentPoly bad = LaurentPoly::monomial(1.0, 1) - LaurentPoly(0.5);
  CHECK_THROWS_AS(degree(FactorOfAutomorphy(kTauI, LaurentMatrix(1, {bad}))), DetVanishesOnCstar);
}

TEST_CASE("degree is additive under tensor") {
  Rng rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = normal_form(kTau, 1 + trial % 3, trial % 5 - 2, testing::random_complex(rng));
    const FactorOfAutomorphy g(kTau, testing::random_monomial_det(rng, 1 + trial % 2));
    CHECK(degree(tensor(f, g)) == rank(g) * degree(f) + rank(f) * degree(g));
  }
}

TEST_CASE("atiyah_construct agrees with normal_form") {
  Rng rng(53);
  const Complex a{0.4, 0.7};
  CHECK(relative_residual(atiyah_construct(kTau, 3, 0, a).generator(),
                          normal_form_deg0(kTau, 3, a).generator()) == 0.0);
  for (int r = 1; r <= 6; ++r)
    for (int d = -6; d <= 6; ++d) {
      const Complex c = testing::random_complex(rng);
      const auto lhs = atiyah_construct(kTau, r, d, c);
      const auto rhs = normal_form(kTau, r, d, c);
      CHECK(lhs.torus().same_as(kTau));
      CHECK(relative_residual(lhs.generator(), rhs.generator()) <= 1e-10);
    }
  // r = 3, d = 2: h = 1, bottom-left block a s^-2 u^-2.
  const auto f = atiyah_construct(kTau, 3, 2, a);
  CHECK(std::abs(f.generator()(2, 0).coeff(-2) - a * kTau.s_pow(-2)) < 1e-12 * std::abs(kTau.s_pow(-2)));
}

TEST_CASE("reduce_param") {
  Rng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex a = testing::random_complex(rng, 10.0);
    const Complex r = reduce_param(kTau, a);
    CHECK(std::abs(r) <= 1.0 + 1e-12);
    CHECK(std::abs(r) > std::abs(kTau.q()));
    CHECK(std::abs(reduce_param(kTau, r * kTau.q_pow(3)) - r) < 1e-9);
  }
  // The inner boundary maps to the outer one.
  CHECK(std::abs(std::abs(reduce_param(kTau, kTau.q())) - 1.0) < 1e-12);
  CHECK_THROWS_AS(reduce_param(kTau, 0.0), DomainError);
}

TEST_CASE("Pic^0 group law and triviality") {
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = testing::random_complex(rng, 5.0), b = testing::random_complex(rng, 5.0);
    const Complex lhs = reduce_param(kTau, a * b);
    const Complex rhs = reduce_param(kTau, reduce_param(kTau, a) * reduce_param(kTau, b));
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
  const auto trivial = FactorOfAutomorphy(kTau, LaurentMatrix(1, {LaurentPoly(reduce_param(kTau, kTau.q_pow(4)))}));
  CHECK(is_trivial_rank1_constant(trivial, 0) == 0);
  const auto nontrivial = FactorOfAutomorphy(kTau, LaurentMatrix(1, {LaurentPoly(reduce_param(kTau, 0.5))}));
  CHECK_FALSE(is_trivial_rank1_constant(nontrivial, 0).has_value());
}

TEST_CASE("recognize_deg0") {
  const Complex a0{3.0, 1.0};
  const auto d = recognize_deg0(normal_form_deg0(kTau, 3, a0));
  REQUIRE(d.has_value());
  CHECK(d->rank == 3);
  CHECK(d->degree == 0);
  CHECK(std::abs(d->param - reduce_param(kTau, a0)) < 1e-12);

  ConstMatrix s2(3, 3);
  s2 << 1, 1, 1, 0, 1, 2, 0, 0, 1;
  const auto ds = recognize_deg0(FactorOfAutomorphy(kTau, LaurentMatrix::constant(s2)));
  REQUIRE(ds.has_value());
  CHECK(ds->rank == 3);
  CHECK(std::abs(ds->param - 1.0) < 1e-12);

  CHECK_FALSE(recognize_deg0(FactorOfAutomorphy(kTau, LaurentMatrix::constant(a0 * ConstMatrix::Identity(2, 2)))).has_value());
  CHECK_THROWS_AS(recognize_deg0(normal_form(kTau, 1, 1, 1.0)), ShapeError);

  Rng rng(56);
  for (int r = 1; r <= 8; ++r) {
    const Complex a = testing::random_complex(rng, 4.0);
    const auto got = recognize_deg0(normal_form_deg0(kTau, r, a));
    REQUIRE(got.has_value());
    CHECK(got->rank == r);
    CHECK(std::abs(got->param - reduce_param(kTau, a)) < 1e-9);
  }
}
