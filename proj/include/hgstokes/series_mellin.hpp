#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "hgstokes/matrix.hpp"

namespace hgs {

// Taylor coefficients c_m = (km)!/(m!)^k of the holomorphic solution at s = 0.
struct SeriesCoeffs {
  long k = 0;
  std::vector<Int> coeffs;
};

inline SeriesCoeffs series_coefficients(long k, long n) {
  if (k < 2) throw std::invalid_argument("series_coefficients: k must be >= 2");
  if (n < 0) throw std::invalid_argument("series_coefficients: n must be >= 0");
  SeriesCoeffs sc;
  sc.k = k;
  sc.coeffs.push_back(1);
  for (long m = 1; m <= n; ++m) {
    // m^k c_m = (km)(km-1)...(km-k+1) c_{m-1}
    Int rising = 1;
    for (long t = 0; t < k; ++t) rising *= Int(k * m - t);
    Int cm = sc.coeffs.back() * rising;
    const Int mk = int_pow(Int(m), static_cast<unsigned>(k));
    if (cm % mk != 0) throw std::logic_error("series_coefficients: recurrence not integral");
    cm /= mk;
    // closed form cross-check
    if (cm * int_pow(factorial(static_cast<unsigned>(m)), static_cast<unsigned>(k)) !=
        factorial(static_cast<unsigned>(k * m))) {
      throw std::logic_error("series_coefficients: closed form violated");
    }
    sc.coeffs.push_back(std::move(cm));
  }
  return sc;
}

// Apply theta^k - k^k s prod_{l=1..k}(theta + l/k) to sum c_m s^m; with
// theta s^m = m s^m the degree-m residual is
//   m^k c_m - k^k c_{m-1} prod_l (m - 1 + l/k)   (m >= 1).
// Returns the residual coefficients for degrees 0..N.
inline std::vector<Rational> apply_hg_operator(long k, const SeriesCoeffs& sc) {
  std::vector<Rational> residual;
  residual.emplace_back(0);  // theta^k annihilates the constant term
  for (std::size_t m = 1; m < sc.coeffs.size(); ++m) {
    Rational first = Rational(int_pow(Int(m), static_cast<unsigned>(k))) * Rational(sc.coeffs[m]);
    Rational prod = 1;
    for (long l = 1; l <= k; ++l) prod *= Rational(Int(m) - 1) + Rational(l, k);
    Rational second =
        Rational(int_pow(Int(k), static_cast<unsigned>(k))) * Rational(sc.coeffs[m - 1]) * prod;
    residual.push_back(first - second);
  }
  return residual;
}

// Unimodular monomial change of variables of the exponential-integral
// reformulation: rows are the torus monomials T_0..T_{k+2} over the variable
// order (x_0..x_{k-1}, s, y_1, y_2).
struct CayleyMatrix {
  long k = 0;
  Mat l;
  Mat l_inv;
};

inline CayleyMatrix cayley_L(long k) {
  if (k < 2) throw std::invalid_argument("cayley_L: k must be >= 2");
  const long n = k + 3;
  const Eigen::Index s_col = k, y1_col = k + 1, y2_col = k + 2;
  CayleyMatrix cm;
  cm.k = k;
  cm.l = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < k; ++i) {
    cm.l(i, i) = 1;        // T_i = y_1 x_i
    cm.l(i, y1_col) = 1;
  }
  cm.l(k, y1_col) = 1;     // T_k = y_1
  for (Eigen::Index j = 0; j < k; ++j) cm.l(k + 1, j) = 1;  // T_{k+1} = y_2 x_0...x_{k-1}
  cm.l(k + 1, y2_col) = 1;
  cm.l(k + 2, s_col) = 1;  // T_{k+2} = s y_2
  cm.l(k + 2, y2_col) = 1;

  cm.l_inv = inverse(cm.l);

  // Pinned inverse pattern.
  Mat expected = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < k; ++i) {
    expected(i, i) = 1;
    expected(i, k) = -1;
  }
  for (Eigen::Index j = 0; j < k; ++j) expected(k, j) = 1;
  expected(k, k) = -k;
  expected(k, k + 1) = -1;
  expected(k, k + 2) = 1;
  expected(k + 1, k) = 1;
  for (Eigen::Index j = 0; j < k; ++j) expected(k + 2, j) = -1;
  expected(k + 2, k) = k;
  expected(k + 2, k + 1) = 1;
  if (cm.l_inv != expected) throw std::logic_error("cayley_L: inverse does not match the banded pattern");
  return cm;
}

// Exact affine-linear form in the symbols i_0..i_{k-1}, z, v1, v2.
struct AffineForm {
  Rational constant;
  std::map<std::string, Rational> coefficients;

  bool operator==(const AffineForm& other) const {
    if (constant != other.constant) return false;
    for (const auto& [sym, c] : coefficients) {
      const auto it = other.coefficients.find(sym);
      const Rational oc = (it == other.coefficients.end()) ? Rational(0) : it->second;
      if (c != oc) return false;
    }
    for (const auto& [sym, c] : other.coefficients) {
      if (coefficients.find(sym) == coefficients.end() && c != 0) return false;
    }
    return true;
  }

  std::string str() const {
    std::string out;
    auto append = [&](const Rational& c, const std::string& sym) {
      if (c == 0) return;
      if (!out.empty()) out += (c > 0 ? " + " : " - ");
      else if (c < 0) out += "-";
      const Rational a = boost::multiprecision::abs(c);
      if (sym.empty()) out += to_string(a);
      else if (a == 1) out += sym;
      else out += to_string(a) + "*" + sym;
    };
    for (const auto& [sym, c] : coefficients) append(c, sym);
    append(constant, "");
    return out.empty() ? "0" : out;
  }
};

// Gamma-factor exponents: the row vector (i_0+1, ..., i_{k-1}+1, z, v1, v2)
// pushed through L^{-1}. Asserts the closed forms
//   L_l     = z + i_l + 1 - v2                       (0 <= l < k)
//   L_k     = -(sum_l (i_l + 1)) + v1 + k (v2 - z)
//   L_{k+1} = -z + v2
//   L_{k+2} = z.
inline std::vector<AffineForm> mellin_exponents(long k) {
  const CayleyMatrix cm = cayley_L(k);
  const long n = k + 3;

  // symbolic row vector: entry -> (constant, coefficient map)
  std::vector<AffineForm> xi(n);
  for (long l = 0; l < k; ++l) {
    xi[l].constant = 1;  // measure shift from the monomial numerator
    xi[l].coefficients["i" + std::to_string(l)] = 1;
  }
  xi[k].coefficients["z"] = 1;
  xi[k + 1].coefficients["v1"] = 1;
  xi[k + 2].coefficients["v2"] = 1;

  std::vector<AffineForm> forms(n);
  for (long col = 0; col < n; ++col) {
    AffineForm f;
    for (long row = 0; row < n; ++row) {
      const Rational& c = cm.l_inv(row, col);
      if (c == 0) continue;
      f.constant += c * xi[row].constant;
      for (const auto& [sym, coeff] : xi[row].coefficients) f.coefficients[sym] += c * coeff;
    }
    forms[col] = std::move(f);
  }

  for (long l = 0; l < k; ++l) {
    AffineForm expect;
    expect.constant = 1;
    expect.coefficients["i" + std::to_string(l)] = 1;
    expect.coefficients["z"] = 1;
    expect.coefficients["v2"] = -1;
    if (!(forms[l] == expect)) throw std::logic_error("mellin_exponents: form " + std::to_string(l));
  }
  {
    AffineForm expect;
    expect.constant = -k;
    for (long l = 0; l < k; ++l) expect.coefficients["i" + std::to_string(l)] = -1;
    expect.coefficients["v1"] = 1;
    expect.coefficients["v2"] = k;
    expect.coefficients["z"] = -k;
    if (!(forms[k] == expect)) throw std::logic_error("mellin_exponents: form k");
  }
  {
    AffineForm expect;
    expect.coefficients["z"] = -1;
    expect.coefficients["v2"] = 1;
    if (!(forms[k + 1] == expect)) throw std::logic_error("mellin_exponents: form k+1");
  }
  {
    AffineForm expect;
    expect.coefficients["z"] = 1;
    if (!(forms[k + 2] == expect)) throw std::logic_error("mellin_exponents: form k+2");
  }
  return forms;
}

// Partial sum of the holomorphic solution with a ratio-test tail bound.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  bool inside_radius = false;  // |s| < k^{-k}
};

inline SeriesValue evaluate_I0(long k, double s, long n) {
  const SeriesCoeffs sc = series_coefficients(k, n);
  SeriesValue out;
  const double radius = std::pow(static_cast<double>(k), -static_cast<double>(k));
  out.inside_radius = std::abs(s) < radius;
  double term_abs = 0.0;
  double spow = 1.0;
  for (long m = 0; m <= n; ++m) {
    const double cm = sc.coeffs[static_cast<std::size_t>(m)].convert_to<double>();
    out.value += cm * spow;
    term_abs = std::abs(cm * spow);
    spow *= s;
  }
  if (out.inside_radius) {
    // |c_{m+1} s^{m+1}| <= |c_m s^m| * q with q = k^k |s| < 1; geometric tail.
    const double q = std::pow(static_cast<double>(k), static_cast<double>(k)) * std::abs(s);
    out.tail_bound = term_abs * q / (1.0 - q);
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace hgs
