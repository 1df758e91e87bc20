#include <doctest.h>

#include "hgstokes/euler_mutation.hpp"

using namespace hgs;

TEST_CASE("Euler pairing matrix golden values") {
  Mat chi2(2, 2);
  chi2 << 1, 0, 2, 1;
  CHECK(chi_matrix(2).chi == chi2);

  Mat chi3(3, 3);
  chi3 << 1, 0, 0,
          3, 1, 0,
          6, 3, 1;
  CHECK(chi_matrix(3).chi == chi3);
}

TEST_CASE("chi inverts the Stokes matrix") {
  for (long k = 2; k <= 8; ++k) {
    CHECK(to_mat(chi_matrix(k).chi * binomial_stokes(k)) == identity(k));
  }
}

TEST_CASE("single mutation step, k = 2 golden value") {
  const Mat chi = chi_matrix(2).chi;
  const Mat left = mutate(chi, 1, MutationDirection::left);
  Mat expect(2, 2);
  expect << 1, 0, -2, 1;
  CHECK(left == expect);
  // right mutation undoes the left mutation
  CHECK(mutate(left, 1, MutationDirection::right) == chi);
  CHECK_THROWS_AS((void)mutate(chi, 0, MutationDirection::left), std::out_of_range);
  CHECK_THROWS_AS((void)mutate(chi, 2, MutationDirection::left), std::out_of_range);
}

TEST_CASE("full-twist braid word shape") {
  const BraidWord w = full_twist_word(4);
  const std::vector<long> expect{1, 2, 1, 3, 2, 1};
  CHECK(w.letters == expect);
}

TEST_CASE("braid identity holds for both frozen mutation directions") {
  for (long k = 2; k <= 6; ++k) {
    const StokesResult sr = stokes_matrix(k);
    const ChiStokesReport rep = verify_chi_stokes(k, sr);
    CHECK(rep.chi_inverse_holds);
    CHECK(rep.braid_identity_holds);
    CHECK(rep.surviving_direction == "left+right");
  }
}

TEST_CASE("reordering permutation is an involution") {
  const Mat j = reorder_j(5);
  CHECK(to_mat(j * j) == identity(5));
  CHECK(j(0, 4) == 1);
  CHECK(j(4, 0) == 1);
}
