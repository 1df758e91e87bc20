#include <doctest.h>

#include "hgstokes/stokes.hpp"

using namespace hgs;

TEST_CASE("Gram closed form, k = 3 golden values") {
  const GramData gd = gram_closed_form(3, Rational(1));
  Mat expect(3, 3);
  expect << 2, -3, 3,
            -3, 2, -3,
            3, -3, 2;
  CHECK(gd.g == expect);
  CHECK(gd.t_diag == 2);
  CHECK(gd.odd_parity);
}

TEST_CASE("Gram from the invariant agrees with the closed form") {
  for (long k = 2; k <= 6; ++k) {
    const InvariantSpace inv = quadratic_invariant_space(generator_list(cp_generators(k)), k);
    const GramData gd = gram_from_invariant(inv, k);
    CHECK(gd.g == gram_closed_form(k, default_gram_r(k)).g);
    CHECK(gd.r == default_gram_r(k));
  }
}

TEST_CASE("reflections preserve the Gram form") {
  for (long k = 2; k <= 6; ++k) {
    const GramData gd = gram_closed_form(k, default_gram_r(k));
    const ReflectionSet rs = reflections_from_gram(gd);
    REQUIRE(rs.reflections.size() == static_cast<std::size_t>(k));
    for (const Mat& r : rs.reflections) {
      CHECK(is_pseudo_reflection(r));
      CHECK(to_mat(r * gd.g * to_mat(r.transpose())) == gd.g);
      if (k % 2 != 0) CHECK(to_mat(r * r) == identity(k));
    }
  }
}

TEST_CASE("Coxeter element: both routes agree") {
  for (long k = 2; k <= 6; ++k) {
    const ReflectionSet rs = reflections_from_gram(gram_closed_form(k, default_gram_r(k)));
    CHECK_NOTHROW((void)coxeter_element(rs));
  }
}

TEST_CASE("Stokes matrix, k = 3 golden values") {
  const StokesResult sr = stokes_matrix(3);
  Mat expect(3, 3);
  expect << 1, 0, 0,
            -3, 1, 0,
            3, -3, 1;
  CHECK(sr.s == expect);
  CHECK(sr.matches_closed_form);
  CHECK(sr.gram_identity);
  CHECK(sr.seifert_identity);
}

TEST_CASE("Stokes pipeline identities, k = 2..8") {
  for (long k = 2; k <= 8; ++k) {
    const StokesResult sr = stokes_matrix(k);
    CHECK(sr.s == binomial_stokes(k));
    CHECK(sr.seifert_identity);
    if (k % 2 != 0) {
      CHECK(sr.gram_identity);
      // the stored Gram has diagonal 2r: it is the doubled unit-diagonal Gram
      CHECK(to_mat(to_mat(sr.s.transpose()) + sr.s) == sr.gram.g);
    } else {
      CHECK(sr.even_degenerate);
      CHECK(sr.even_kernel.size() == k);
      CHECK(to_vec(to_mat(to_mat(sr.s.transpose()) + sr.s) * sr.even_kernel) == to_vec(Vec::Zero(k)));
    }
  }
}

TEST_CASE("even-rank degenerate variant has the alternating kernel vector") {
  for (long k : {2L, 4L, 6L}) {
    const EvenDegenerateReport rep = even_degenerate_variant(k);
    CHECK(rep.det_zero);
    CHECK(rep.alternating_kernel);
    CHECK(rep.r == Rational(1, int_pow(2, static_cast<unsigned>(k - 1)) - 1));
  }
  CHECK_THROWS_AS((void)even_degenerate_variant(3), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS((void)stokes_matrix(1), std::invalid_argument);
}
