#include <doctest.h>

#include "hgstokes/hg_group.hpp"

using namespace hgs;

TEST_CASE("closed-form characteristic coefficients") {
  const CharCoeffPair c = cp_char_coeffs(3);
  REQUIRE(c.a_coeffs.size() == 3);
  CHECK(c.a_coeffs[0] == 0);
  CHECK(c.a_coeffs[1] == 0);
  CHECK(c.a_coeffs[2] == -1);
  REQUIRE(c.b_coeffs.size() == 3);
  CHECK(c.b_coeffs[0] == -3);
  CHECK(c.b_coeffs[1] == 3);
  CHECK(c.b_coeffs[2] == -1);
  CHECK_THROWS_AS((void)cp_char_coeffs(1), std::invalid_argument);
}

TEST_CASE("numeric exponent snap agrees with the closed form") {
  for (long k : {2L, 3L, 5L}) {
    const auto exact = cp_char_coeffs(k);
    const auto snapped = char_coeffs_from_exponents(ExponentData::projective_preset(k));
    CHECK(snapped.a_coeffs == exact.a_coeffs);
    CHECK(snapped.b_coeffs == exact.b_coeffs);
  }
  // a multiset that is not closed under the cyclotomic Galois action
  ExponentData bad;
  bad.k = 2;
  bad.alpha = {Rational(1, 5), Rational(1, 2)};
  bad.beta = {Rational(0), Rational(0)};
  CHECK_THROWS_AS((void)char_coeffs_from_exponents(bad), SnapFailureError);
}

TEST_CASE("companion generators, k = 2 golden values") {
  const auto cc = cp_char_coeffs(2);
  const Mat h0 = companion_h0(cc);
  Mat h0_expect(2, 2);
  h0_expect << 0, 1, 1, 0;
  CHECK(h0 == h0_expect);

  const Mat hinf = companion_hinf(cc);
  Mat hinf_expect(2, 2);
  hinf_expect << 2, 1, -1, 0;
  CHECK(hinf == hinf_expect);

  const Mat h1 = h1_from(h0, hinf);
  Mat h1_expect(2, 2);
  h1_expect << -1, 0, 2, 1;
  CHECK(h1 == h1_expect);
  CHECK(is_pseudo_reflection(h1));
  CHECK(to_mat(h1 * h1) == identity(2));  // k even: a genuine reflection
}

TEST_CASE("generator structure for k = 2..6") {
  for (long k = 2; k <= 6; ++k) {
    const auto cc = cp_char_coeffs(k);
    const Mat h0 = companion_h0(cc);
    const Mat hinf = companion_hinf(cc);
    CHECK(mat_pow(h0, k) == identity(k));
    // charpoly(h0) = t^k - 1
    const auto cp0 = charpoly(h0);
    CHECK(cp0.front() == -1);
    CHECK(cp0.back() == 1);
    // charpoly(hinf) = (t-1)^k
    const auto cpi = charpoly(hinf);
    for (long i = 0; i <= k; ++i) {
      CHECK(cpi[static_cast<std::size_t>(i)] == Rational(parity_sign(k - i) * binomial(k, i)));
    }
    const Mat h1 = h1_from(h0, hinf);
    CHECK(rank(identity(k) - h1) == 1);
    CHECK(determinant(h1) == Rational(parity_sign(k + 1)));
  }
}

TEST_CASE("group presentation and the singular-point product") {
  for (long k = 2; k <= 6; ++k) {
    const GroupPresentation g = cp_generators(k);
    CHECK(g.m_omega.size() == static_cast<std::size_t>(k - 1));
    CHECK(g.labels.size() == static_cast<std::size_t>(k + 1));
    for (const Mat& m : g.m_omega) CHECK(is_pseudo_reflection(m));
    CHECK(verify_riemann_fuchs(g).holds);

    const auto info = classify_pseudo_reflection(g.m1);
    CHECK(info.pseudo_reflection);
    CHECK(info.reflection == (k % 2 == 0));
  }
}
