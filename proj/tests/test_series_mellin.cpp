#include <doctest.h>

#include <cmath>

#include "hgstokes/series_mellin.hpp"

using namespace hgs;

TEST_CASE("series coefficients, k = 2 golden values") {
  const SeriesCoeffs sc = series_coefficients(2, 4);
  REQUIRE(sc.coeffs.size() == 5);
  CHECK(sc.coeffs[0] == 1);
  CHECK(sc.coeffs[1] == 2);
  CHECK(sc.coeffs[2] == 6);
  CHECK(sc.coeffs[3] == 20);
  CHECK(sc.coeffs[4] == 70);
  CHECK_THROWS_AS((void)series_coefficients(1, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)series_coefficients(2, -1), std::invalid_argument);
}

TEST_CASE("operator annihilates the truncated series") {
  for (long k = 2; k <= 5; ++k) {
    const SeriesCoeffs sc = series_coefficients(k, 15);
    for (const Rational& r : apply_hg_operator(k, sc)) CHECK(r == 0);
  }
}

TEST_CASE("monomial-lattice matrix is unimodular with a banded integer inverse") {
  for (long k = 2; k <= 7; ++k) {
    const CayleyMatrix cm = cayley_L(k);
    CHECK(cm.l.rows() == k + 3);
    CHECK(determinant(cm.l) == 1);
    CHECK(to_mat(cm.l * cm.l_inv) == identity(k + 3));
  }
}

TEST_CASE("exponent forms, k = 2 symbolic golden values") {
  const auto forms = mellin_exponents(2);
  REQUIRE(forms.size() == 5);
  CHECK(forms[0].str() == "i0 - v2 + z + 1");
  CHECK(forms[4].str() == "z");
  // specialization i = 0, v1 = v2 = 1 gives (z, z, 1 - kz, 1 - z, z)
  const auto eval = [&](const AffineForm& f, const Rational& z) {
    Rational acc = f.constant;
    for (const auto& [sym, c] : f.coefficients) {
      if (sym == "z") acc += c * z;
      else if (sym == "v1" || sym == "v2") acc += c;
      // i_l terms evaluate to 0
    }
    return acc;
  };
  const Rational z(1, 3);
  CHECK(eval(forms[0], z) == z);
  CHECK(eval(forms[1], z) == z);
  CHECK(eval(forms[2], z) == Rational(1) - 2 * z);
  CHECK(eval(forms[3], z) == Rational(1) - z);
  CHECK(eval(forms[4], z) == z);
}

TEST_CASE("partial sums converge within the reported tail bound") {
  // k = 2, s = 1/8: the series sums to sqrt(2)
  const double target = std::sqrt(2.0);
  double prev_bound = 1e300;
  for (long n : {10L, 20L, 30L}) {
    const SeriesValue v = evaluate_I0(2, 0.125, n);
    CHECK(v.inside_radius);
    CHECK(std::abs(v.value - target) <= v.tail_bound);
    CHECK(v.tail_bound < prev_bound);
    prev_bound = v.tail_bound;
  }
  // outside the radius of convergence the bound is infinite
  const SeriesValue out = evaluate_I0(2, 0.5, 5);
  CHECK_FALSE(out.inside_radius);
  CHECK(std::isinf(out.tail_bound));
}
