#include <doctest.h>

#include "hgstokes/levelt.hpp"
#include "hgstokes/numeric_monodromy.hpp"

using namespace hgs;

TEST_CASE("companion system coefficients, k = 2") {
  const CompanionSystem sys = companion_system(2, Plane::zeta);
  // (theta - 1/2)(theta - 1) = theta^2 - 3/2 theta + 1/2
  REQUIRE(sys.p.size() == 2);
  CHECK(sys.p[0] == Rational(1, 2));
  CHECK(sys.p[1] == Rational(-3, 2));
  REQUIRE(sys.singularities.size() == 2);

  const CompanionSystem lam = companion_system(2, Plane::lambda);
  // (theta - 1)(theta - 2) = theta^2 - 3 theta + 2
  CHECK(lam.p[0] == Rational(2));
  CHECK(lam.p[1] == Rational(-3));
  CHECK(lam.singularities.size() == 3);  // 0 and the two square roots of unity
}

TEST_CASE("loop that grazes a singular point is rejected") {
  const CompanionSystem sys = companion_system(2, Plane::zeta);
  LoopSpec loop;
  loop.center = {0.0, 0.0};
  loop.radius = 1.0;  // passes through zeta = 1
  loop.base_point = {-1.0, 0.0};
  CHECK_THROWS_AS((void)loop_monodromy(sys, loop, 1e-8), StepFailureError);
}

TEST_CASE("loop around the origin matches the exact local monodromy, k = 2") {
  const CompanionSystem sys = companion_system(2, Plane::zeta);
  LoopSpec loop;
  loop.center = {0.0, 0.0};
  loop.radius = 0.5;
  loop.base_point = {-0.5, 0.0};
  const NumericMatrix num = loop_monodromy(sys, loop, 1e-10);

  const auto cc = cp_char_coeffs(2);
  const Mat h0 = companion_h0(cc);
  const ComparisonReport rep = compare_invariants(num, h0, 1e-6);
  CHECK(rep.pass);
  CHECK(rep.max_deviation < 1e-6);
}

TEST_CASE("numeric characteristic polynomial matches the exact one") {
  CMat a = CMat::Zero(2, 2);
  a(0, 0) = Complex(1.0, 0.0);
  a(1, 1) = Complex(2.0, 0.0);
  const auto cp = charpoly_numeric(a);
  REQUIRE(cp.size() == 3);
  CHECK(std::abs(cp[0] - Complex(2.0, 0.0)) < 1e-12);
  CHECK(std::abs(cp[1] - Complex(-3.0, 0.0)) < 1e-12);
  CHECK(std::abs(cp[2] - Complex(1.0, 0.0)) < 1e-12);
}
