#include <doctest.h>

#include "hgstokes/matrix.hpp"

using namespace hgs;

TEST_CASE("rational helpers") {
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(parity_sign(3) == -1);
  CHECK(parity_sign(0) == 1);
  CHECK(int_pow(Int(3), 4) == 81);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(rational_from_string("-5/10") == Rational(-1, 2));
  CHECK(rational_from_string("42") == Rational(42));
  CHECK(snap_to_rational(0.5, Int(100)) == Rational(1, 2));
  CHECK(snap_to_rational(-2.0 / 3.0, Int(100)) == Rational(-2, 3));
}

TEST_CASE("exact linear algebra") {
  Mat a(3, 3);
  a << 2, 1, 0,
       1, 2, 1,
       0, 1, 2;
  CHECK(determinant(a) == 4);
  CHECK(rank(a) == 3);
  CHECK(to_mat(a * inverse(a)) == identity(3));

  Mat sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK(determinant(sing) == 0);
  CHECK_THROWS_AS((void)inverse(sing), SingularMatrixError);
  const auto kern = kernel_basis(sing);
  REQUIRE(kern.size() == 1);
  CHECK(to_vec(sing * kern.front()) == to_vec(Vec::Zero(2)));

  // charpoly of diag(1, 2): (t-1)(t-2) = t^2 - 3t + 2, constant term first
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  const auto cp = charpoly(d);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == 2);
  CHECK(cp[1] == -3);
  CHECK(cp[2] == 1);

  CHECK(mat_pow(d, 3)(1, 1) == 8);
  CHECK(mat_pow(d, -1)(1, 1) == Rational(1, 2));
  CHECK(mat_pow(d, 0) == identity(2));
}
