#pragma once

#include <string>
#include <vector>

#include "hgstokes/stokes.hpp"

namespace hgs {

// Euler pairing matrix of the standard exceptional collection on projective
// space: chi_{ij} = C(k+i-j-1, i-j) for i >= j, 0 above the diagonal.
struct ChiMatrix {
  long k = 0;
  Mat chi;
};

inline ChiMatrix chi_matrix(long k) {
  if (k < 2) throw std::invalid_argument("chi_matrix: k must be >= 2");
  ChiMatrix c;
  c.k = k;
  c.chi = Mat::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      c.chi(i, j) = Rational(binomial(k + i - j - 1, i - j));
    }
  }
  return c;
}

enum class MutationDirection { left, right };

// Braid generator acting on slots (i-1, i) of a unit-lower-triangular pairing
// matrix m, with pivot c = m(i, i-1). The left mutation is the basis change
// (E'_{i-1}, E'_i) = (-c E_{i-1} + E_i, E_{i-1}); the right mutation is its
// inverse, (E'_{i-1}, E'_i) = (E_i, E_{i-1} - c E_i). Both act by m -> P m P^T.
// The sign twist on the mutated object is what makes the braid word reproduce
// the transposed Stokes matrix; the untwisted variants fix chi and fail.
inline Mat mutate(const Mat& m, long i, MutationDirection direction) {
  const long k = m.rows();
  if (i < 1 || i >= k) throw std::out_of_range("mutate: slot index out of range");
  const Rational c = m(i, i - 1);
  Mat p = identity(k);
  if (direction == MutationDirection::left) {
    p(i - 1, i - 1) = -c;
    p(i - 1, i) = 1;
    p(i, i - 1) = 1;
    p(i, i) = 0;
  } else {
    p(i - 1, i - 1) = 0;
    p(i - 1, i) = 1;
    p(i, i - 1) = 1;
    p(i, i) = -c;
  }
  return to_mat(p * m * to_mat(p.transpose()));
}

// The distinguished braid word b_1 (b_2 b_1) ... (b_{k-1} ... b_1), applied
// innermost letter first.
struct BraidWord {
  std::vector<long> letters;
};

inline BraidWord full_twist_word(long k) {
  BraidWord w;
  for (long m = 1; m < k; ++m) {
    for (long i = m; i >= 1; --i) w.letters.push_back(i);
  }
  return w;
}

inline Mat apply_braid(Mat m, const BraidWord& w, MutationDirection direction) {
  for (long i : w.letters) m = mutate(m, i, direction);
  return m;
}

// Anti-diagonal reordering permutation delta_{i, k-1-i}.
inline Mat reorder_j(long k) {
  Mat j = Mat::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) j(i, k - 1 - i) = 1;
  return j;
}

struct ChiStokesReport {
  long k = 0;
  bool chi_inverse_holds = false;   // chi * S = id
  bool braid_identity_holds = false;  // tS = J beta(chi) J for the frozen direction
  std::string surviving_direction;  // which direction satisfies the braid identity
};

inline ChiStokesReport verify_chi_stokes(long k, const StokesResult& s) {
  ChiStokesReport rep;
  rep.k = k;
  const ChiMatrix c = chi_matrix(k);
  rep.chi_inverse_holds = (to_mat(c.chi * s.s) == identity(k));

  const Mat j = reorder_j(k);
  const Mat target = to_mat(s.s.transpose());
  const BraidWord w = full_twist_word(k);
  for (auto dir : {MutationDirection::left, MutationDirection::right}) {
    const Mat mutated = apply_braid(c.chi, w, dir);
    if (to_mat(j * mutated * j) == target) {
      rep.braid_identity_holds = true;
      if (!rep.surviving_direction.empty()) rep.surviving_direction += "+";
      rep.surviving_direction += (dir == MutationDirection::left ? "left" : "right");
    }
  }
  return rep;
}

}  // namespace hgs
