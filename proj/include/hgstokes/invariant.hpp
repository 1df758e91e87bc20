#pragma once

#include <string>
#include <vector>

#include "hgstokes/hg_group.hpp"

namespace hgs {

// Basis of the space of quadratic invariants X with g X g^T = X for all
// supplied generators g. Basis matrices are normalized so that the first
// nonzero entry in row-major order is +1.
struct InvariantSpace {
  long k = 0;
  std::vector<Mat> basis;
  long dimension = 0;
};

namespace detail {

inline Mat normalize_first_nonzero(Mat x) {
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (x(i, j) != 0) return x / x(i, j);
    }
  }
  return x;
}

// Linear map X -> g X g^T - X on row-major vectorized X, stacked per generator.
inline Mat invariant_constraint_matrix(const std::vector<Mat>& gens, long k) {
  const auto n = static_cast<Eigen::Index>(k);
  Mat sys = Mat::Zero(static_cast<Eigen::Index>(gens.size()) * n * n, n * n);
  Eigen::Index row0 = 0;
  for (const Mat& g : gens) {
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        const Eigen::Index row = row0 + a * n + b;
        for (Eigen::Index c = 0; c < n; ++c) {
          for (Eigen::Index d = 0; d < n; ++d) {
            sys(row, c * n + d) += g(a, c) * g(b, d);
          }
        }
        sys(row, a * n + b) -= 1;
      }
    }
    row0 += n * n;
  }
  return sys;
}

}  // namespace detail

inline InvariantSpace quadratic_invariant_space(const std::vector<Mat>& gens, long k) {
  const Mat sys = detail::invariant_constraint_matrix(gens, k);
  InvariantSpace space;
  space.k = k;
  for (const Vec& v : kernel_basis(sys)) {
    Mat x(k, k);
    for (Eigen::Index c = 0; c < k; ++c) {
      for (Eigen::Index d = 0; d < k; ++d) x(c, d) = v(c * k + d);
    }
    space.basis.push_back(detail::normalize_first_nonzero(std::move(x)));
  }
  space.dimension = static_cast<long>(space.basis.size());
  return space;
}

inline std::vector<Mat> generator_list(const GroupPresentation& g) {
  std::vector<Mat> gens{g.m1};
  gens.insert(gens.end(), g.m_omega.begin(), g.m_omega.end());
  gens.push_back(g.m_inf);
  return gens;
}

namespace detail {
// Two spaces spanned by basis matrices coincide iff stacking either basis onto
// the other does not increase rank.
inline bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b, long k) {
  const auto vec_rows = [&](const std::vector<Mat>& ms) {
    Mat rows(static_cast<Eigen::Index>(ms.size()), k * k);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (Eigen::Index c = 0; c < k; ++c) {
        for (Eigen::Index d = 0; d < k; ++d) {
          rows(static_cast<Eigen::Index>(i), c * k + d) = ms[i](c, d);
        }
      }
    }
    return rows;
  };
  const Mat ra = vec_rows(a);
  const Mat rb = vec_rows(b);
  Mat stacked(ra.rows() + rb.rows(), k * k);
  stacked << ra, rb;
  const auto r = rank(stacked);
  return r == rank(ra) && r == rank(rb);
}
}  // namespace detail

// Invariant space of the two Levelt generators alone; asserts it coincides with
// the invariant space of the full group.
inline InvariantSpace invariant_of_h0_hinf(long k) {
  const CharCoeffPair cc = cp_char_coeffs(k);
  const Mat h0 = companion_h0(cc);
  const Mat hinf = companion_hinf(cc);
  InvariantSpace sub = quadratic_invariant_space({h0, hinf}, k);
  const InvariantSpace full = quadratic_invariant_space(generator_list(cp_generators(k)), k);
  if (!detail::same_span(sub.basis, full.basis, k)) {
    throw std::logic_error("invariant_of_h0_hinf: two-generator space differs from full-group space");
  }
  return sub;
}

// Structure classification of a (normalized) invariant matrix: symmetry type,
// Toeplitz bands, and the binomial band identities.
struct StructureReport {
  long k = 0;
  bool symmetric = false;
  bool anti_symmetric = false;
  bool zero_diagonal = false;
  // k even: bands y_i of the matrix itself (upper bands positive index).
  bool bands_match_even_pattern = false;  // y_i + y_{-i} = 0 and y_i = (-1)^i C(k,i) y_0
  Rational y0;                            // scale solved from y_1 = -k * y_0
  // k odd, invertible input: inverse-Toeplitz structure.
  bool invertible = false;
  bool inverse_toeplitz = false;
  bool band_reflection_holds = false;  // x_{k-1-i} = sign * x_{-i-1}
  int band_reflection_sign = 0;        // the sign for which it holds (+1/-1/0)
  bool band_recurrence_holds = false;  // sum_j (-1)^j C(k,j) x_{j-1-i} = 0
  std::string first_failure;
};

inline StructureReport structure_report(const Mat& x, long k) {
  StructureReport rep;
  rep.k = k;
  rep.symmetric = (x == to_mat(x.transpose()));
  rep.anti_symmetric = (x == to_mat(-x.transpose()));
  rep.zero_diagonal = true;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (x(i, i) != 0) { rep.zero_diagonal = false; break; }
  }

  if (k % 2 == 0) {
    // Toeplitz band extraction: y_j = x(0, j) (upper), y_{-j} = x(j, 0).
    bool ok = rep.anti_symmetric && rep.zero_diagonal;
    if (ok && x(0, 1) != 0) {
      rep.y0 = x(0, 1) / Rational(-k);
      for (long i = 1; i < k && ok; ++i) {
        const Rational yi = x(0, i);
        const Rational ymi = x(i, 0);
        if (yi + ymi != 0 || yi != Rational(parity_sign(i) * binomial(k, i)) * rep.y0) {
          ok = false;
          rep.first_failure = "band " + std::to_string(i);
        }
        // constant diagonals
        for (long r = 1; r + i < k && ok; ++r) {
          if (x(r, r + i) != yi || x(r + i, r) != ymi) {
            ok = false;
            rep.first_failure = "band " + std::to_string(i) + " not constant";
          }
        }
      }
    } else if (ok) {
      ok = false;
      rep.first_failure = "band 1 is zero";
    } else {
      rep.first_failure = "not anti-symmetric with zero diagonal";
    }
    rep.bands_match_even_pattern = ok;
    return rep;
  }

  rep.invertible = (determinant(x) != 0);
  if (!rep.invertible) {
    rep.first_failure = "matrix not invertible";
    return rep;
  }
  const Mat xi = inverse(x);
  rep.inverse_toeplitz = true;
  for (Eigen::Index r = 0; r + 1 < k && rep.inverse_toeplitz; ++r) {
    for (Eigen::Index c = 0; c + 1 < k; ++c) {
      if (xi(r + 1, c + 1) != xi(r, c)) {
        rep.inverse_toeplitz = false;
        rep.first_failure = "inverse not Toeplitz";
        break;
      }
    }
  }
  if (!rep.inverse_toeplitz) return rep;

  const auto band = [&](long j) -> Rational {
    return j >= 0 ? xi(0, static_cast<Eigen::Index>(j)) : xi(static_cast<Eigen::Index>(-j), 0);
  };
  for (int sign : {+1, -1}) {
    bool ok = true;
    for (long i = 0; i + 1 < k && ok; ++i) {
      ok = (band(k - 1 - i) == Rational(sign) * band(-i - 1));
    }
    if (ok) {
      rep.band_reflection_holds = true;
      rep.band_reflection_sign = sign;
      break;
    }
  }
  rep.band_recurrence_holds = true;
  for (long i = 0; i + 1 < k && rep.band_recurrence_holds; ++i) {
    Rational acc = 0;
    for (long j = 0; j <= k; ++j) acc += Rational(parity_sign(j) * binomial(k, j)) * band(j - 1 - i);
    if (acc != 0) {
      rep.band_recurrence_holds = false;
      rep.first_failure = "band recurrence fails at shift " + std::to_string(i);
    }
  }
  return rep;
}

}  // namespace hgs
