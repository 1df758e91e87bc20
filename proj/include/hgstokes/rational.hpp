#pragma once

#include <iterator>

// libstdc++'s iterator_traits<void> has no member typedefs, and boost 1.74's
// is_byte_container trait dereferences it in a non-SFINAE context whenever a
// type with a void const_iterator (any two-dimensional Eigen expression) is
// probed for convertibility to a multiprecision backend. Give it an inert
// value_type so the trait evaluates to false instead of a hard error.
namespace std {
template <>
struct iterator_traits<void> {
  using value_type = struct _hgs_not_a_byte {};
};
}  // namespace std

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hgs {

// Expression templates are disabled: a lazy scalar expression such as
// a(r,c)/a(c,c) holds references into the matrix and would re-evaluate
// mid-way through an aliased Eigen row update.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n, m) for integer n >= 0; returns 0 when m < 0 or m > n.
inline Int binomial(long n, long m) {
  if (m < 0 || m > n) return 0;
  if (m > n - m) m = n - m;
  Int r = 1;
  for (long i = 0; i < m; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// Canonical "p/q" rendering: integers render without the "/q" suffix.
inline std::string to_string(const Rational& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// Best rational approximation of a double with denominator <= max_den
// (continued-fraction convergents).
inline Rational snap_to_rational(double value, const Int& max_den) {
  if (max_den < 1) throw std::invalid_argument("snap_to_rational: max_den < 1");
  const bool neg = value < 0;
  double x = neg ? -value : value;
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fa = std::floor(x);
    if (fa > 9.0e18) break;
    const Int a = static_cast<long long>(fa);
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = x - fa;
    if (frac < 1e-18) break;
    x = 1.0 / frac;
  }
  Rational r(p1, q1 == 0 ? Int(1) : q1);
  return neg ? Rational(-r) : r;
}

}  // namespace hgs
