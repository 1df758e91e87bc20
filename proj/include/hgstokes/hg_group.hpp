#pragma once

#include <string>
#include <vector>

#include "hgstokes/levelt.hpp"

namespace hgs {

// Monodromy generators of the rank-k hypergeometric group: one pseudo-reflection
// per finite singular point (the k-th roots of unity) plus the generator at
// infinity, each tagged with its singularity label.
struct GroupPresentation {
  long k = 0;
  Mat m1;                    // generator at the root-of-unity point 1
  std::vector<Mat> m_omega;  // generators at omega^i, i = 1..k-1
  Mat m_inf;                 // generator at infinity
  std::vector<std::string> labels;
};

inline GroupPresentation cp_generators(long k) {
  if (k < 2) throw std::invalid_argument("cp_generators: k must be >= 2");
  const CharCoeffPair cc = cp_char_coeffs(k);
  const Mat h0 = companion_h0(cc);
  const Mat hinf = companion_hinf(cc);
  const Mat h1 = h1_from(h0, hinf);

  if (mat_pow(h0, k) != identity(k)) {
    throw std::logic_error("cp_generators: h0^k != id");
  }

  GroupPresentation g;
  g.k = k;
  g.m1 = h1;
  g.labels.push_back("1");
  const Mat hinv = inverse(hinf);
  for (long i = 1; i < k; ++i) {
    Mat mi = mat_pow(hinv, i) * h1 * mat_pow(hinf, i);
    if (!is_pseudo_reflection(mi)) {
      throw PseudoReflectionError("generator at omega^" + std::to_string(i) +
                                  " is not a pseudo-reflection");
    }
    g.m_omega.push_back(std::move(mi));
    g.labels.push_back("omega^" + std::to_string(i));
  }
  g.m_inf = mat_pow(hinf, k);
  g.labels.push_back("inf");
  return g;
}

struct RelationReport {
  bool holds = false;
  Eigen::Index bad_row = -1;
  Eigen::Index bad_col = -1;
  Rational bad_value;
};

// Product over all singularities, M_inf * M_{omega^{k-1}} * ... * M_omega * M_1,
// which must be the identity.
inline RelationReport verify_riemann_fuchs(const GroupPresentation& g) {
  Mat p = g.m_inf;
  for (auto it = g.m_omega.rbegin(); it != g.m_omega.rend(); ++it) p = p * (*it);
  p = p * g.m1;
  RelationReport rep;
  rep.holds = (p == identity(g.k));
  if (!rep.holds) {
    const Mat diff = p - identity(g.k);
    for (Eigen::Index i = 0; i < diff.rows() && rep.bad_row < 0; ++i) {
      for (Eigen::Index j = 0; j < diff.cols(); ++j) {
        if (diff(i, j) != 0) {
          rep.bad_row = i;
          rep.bad_col = j;
          rep.bad_value = p(i, j);
          break;
        }
      }
    }
  }
  return rep;
}

struct PseudoReflectionInfo {
  bool pseudo_reflection = false;
  bool reflection = false;  // additionally m^2 = id
};

inline PseudoReflectionInfo classify_pseudo_reflection(const Mat& m) {
  PseudoReflectionInfo info;
  info.pseudo_reflection = is_pseudo_reflection(m);
  info.reflection = info.pseudo_reflection && (m * m == identity(m.rows()));
  return info;
}

}  // namespace hgs
