#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hgstokes/matrix.hpp"

namespace hgs {

// Local exponent data of the rank-k hypergeometric equation. The projective
// preset uses alpha_l = l/k (l = 1..k) and beta_l = 0.
struct ExponentData {
  long k = 0;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  static ExponentData projective_preset(long k) {
    ExponentData e;
    e.k = k;
    for (long l = 1; l <= k; ++l) {
      e.alpha.emplace_back(l, k);
      e.beta.emplace_back(0);
    }
    return e;
  }
};

// Coefficients A_1..A_k of prod(t - e^{2 pi i alpha_l}) = t^k + A_1 t^{k-1} + ...
// and B_1..B_k of the analogous beta product.
struct CharCoeffPair {
  long k = 0;
  std::vector<Rational> a_coeffs;
  std::vector<Rational> b_coeffs;
};

struct SnapFailureError : std::runtime_error {
  explicit SnapFailureError(const std::string& what) : std::runtime_error(what) {}
};

struct PseudoReflectionError : std::runtime_error {
  explicit PseudoReflectionError(const std::string& what) : std::runtime_error(what) {}
};

// Closed-form coefficient pair for the projective preset: t^k - 1 and (t-1)^k.
inline CharCoeffPair cp_char_coeffs(long k) {
  if (k < 2) throw std::invalid_argument("cp_char_coeffs: k must be >= 2");
  CharCoeffPair c;
  c.k = k;
  c.a_coeffs.assign(static_cast<std::size_t>(k), Rational(0));
  c.a_coeffs.back() = -1;
  for (long i = 1; i <= k; ++i) {
    c.b_coeffs.emplace_back(parity_sign(i) * binomial(k, i));
  }
  return c;
}

namespace detail {

// The multiset {e^{2 pi i a}} has rational coefficients iff the residues of the
// exponents mod 1 are closed under a -> m*a for every m coprime to the common
// denominator (stability under the cyclotomic Galois action).
inline bool galois_stable(const std::vector<Rational>& exps) {
  Int d = 1;
  for (const auto& a : exps) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(a));
  std::vector<Int> residues;
  for (const auto& a : exps) {
    Int num = boost::multiprecision::numerator(a) * (d / boost::multiprecision::denominator(a));
    Int r = num % d;
    if (r < 0) r += d;
    residues.push_back(r);
  }
  std::sort(residues.begin(), residues.end());
  for (Int m = 2; m < d; ++m) {
    if (boost::multiprecision::gcd(m, d) != 1) continue;
    std::vector<Int> mapped;
    for (const auto& r : residues) mapped.push_back((r * m) % d);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != residues) return false;
  }
  return true;
}

inline std::vector<Rational> snap_product(const std::vector<Rational>& exps, int precision,
                                          const Int& max_den) {
  using C = std::complex<long double>;
  const long double tau = 6.283185307179586476925286766559005768L;
  std::vector<C> poly{C(1.0L, 0.0L)};
  for (const auto& a : exps) {
    const long double x =
        static_cast<long double>(boost::multiprecision::numerator(a).convert_to<long long>()) /
        static_cast<long double>(boost::multiprecision::denominator(a).convert_to<long long>());
    const C root = std::polar(1.0L, tau * x);
    std::vector<C> next(poly.size() + 1, C(0.0L, 0.0L));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] * root;
    }
    poly = std::move(next);
  }
  const double tol = std::pow(10.0, -precision / 2.0);
  std::vector<Rational> coeffs;
  // poly[0] = leading coefficient 1; emit A_1..A_k in degree-descending order.
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const double re = static_cast<double>(poly[i].real());
    const double im = static_cast<double>(poly[i].imag());
    if (std::abs(im) > tol) throw SnapFailureError("coefficient has non-real part beyond tolerance");
    const Rational snapped = snap_to_rational(re, max_den);
    if (std::abs(static_cast<double>(snapped.convert_to<double>()) - re) > tol) {
      throw SnapFailureError("coefficient is not rational within tolerance");
    }
    coeffs.push_back(snapped);
  }
  return coeffs;
}

}  // namespace detail

// Expand both exponent products numerically and snap to exact rationals.
// Rejects exponent multisets that are not stable under the Galois action.
inline CharCoeffPair char_coeffs_from_exponents(const ExponentData& e, int precision = 20,
                                                const Int& max_den = Int(1000000)) {
  if (!detail::galois_stable(e.alpha) || !detail::galois_stable(e.beta)) {
    throw SnapFailureError("exponent multiset is not Galois-stable; only the numeric path applies");
  }
  CharCoeffPair c;
  c.k = e.k;
  c.a_coeffs = detail::snap_product(e.alpha, precision, max_den);
  c.b_coeffs = detail::snap_product(e.beta, precision, max_den);
  return c;
}

namespace detail {
// Companion matrix of t^k + c_1 t^{k-1} + ... + c_k: sub-diagonal 1s and last
// column (-c_k, -c_{k-1}, ..., -c_1) top to bottom.
inline Mat companion(const std::vector<Rational>& c) {
  const auto k = static_cast<Eigen::Index>(c.size());
  Mat m = Mat::Zero(k, k);
  for (Eigen::Index i = 1; i < k; ++i) m(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < k; ++i) m(i, k - 1) = -c[static_cast<std::size_t>(k - 1 - i)];
  return m;
}
}  // namespace detail

inline Mat companion_h0(const CharCoeffPair& c) { return detail::companion(c.a_coeffs); }

// The companion form encodes h_inf^{-1}; the monodromy generator is its inverse.
inline Mat companion_hinf(const CharCoeffPair& c) {
  if (c.b_coeffs.empty() || c.b_coeffs.back() == 0) {
    throw SingularMatrixError();
  }
  return inverse(detail::companion(c.b_coeffs));
}

inline bool is_pseudo_reflection(const Mat& m) {
  return rank(identity(m.rows()) - m) == 1;
}

inline Mat h1_from(const Mat& h0, const Mat& hinf) {
  Mat h1 = inverse(h0 * hinf);
  if (!is_pseudo_reflection(h1)) {
    throw PseudoReflectionError("h1 = (h0*hinf)^{-1} is not a pseudo-reflection: rank(id - h1) != 1");
  }
  return h1;
}

}  // namespace hgs
