#pragma once

#include <boost/numeric/odeint.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgstokes/matrix.hpp"

namespace hgs {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

enum class Plane { zeta, lambda };

// First-order companion system W' = A(z) W / z for the order-k operator in the
// theta basis W = (v, theta v, ..., theta^{k-1} v). In the zeta plane the
// right-hand side is prod_{l=1..k}(theta - l/k) against zeta theta^k; in the
// lambda plane prod_{l=1..k}(theta - l) against lambda^k theta^k.
struct CompanionSystem {
  long k = 0;
  Plane plane = Plane::zeta;
  std::vector<Rational> p;  // low-order coefficients p_0..p_{k-1} of the theta polynomial
  std::vector<Complex> singularities;  // finite singular points (infinity implicit)

  CMat coefficient(Complex z) const {
    CMat a = CMat::Zero(k, k);
    for (Eigen::Index j = 0; j + 1 < k; ++j) a(j, j + 1) = 1.0;
    const Complex denom = (plane == Plane::zeta) ? (z - 1.0) : (std::pow(z, static_cast<double>(k)) - 1.0);
    for (Eigen::Index j = 0; j < k; ++j) {
      a(k - 1, j) = Complex(p[static_cast<std::size_t>(j)].convert_to<double>(), 0.0) / denom;
    }
    return a / z;
  }
};

inline CompanionSystem companion_system(long k, Plane plane) {
  if (k < 2) throw std::invalid_argument("companion_system: k must be >= 2");
  CompanionSystem sys;
  sys.k = k;
  sys.plane = plane;
  // Expand prod_{l=1..k}(theta - rho_l) = theta^k + sum_{j<k} p_j theta^j with
  // rho_l = l/k (zeta plane) or l (lambda plane); the solved form moves the
  // low-order part to the right-hand side with denominator (z - 1) or (z^k - 1).
  std::vector<Rational> poly{Rational(1)};
  for (long l = 1; l <= k; ++l) {
    const Rational rho = (plane == Plane::zeta) ? Rational(l, k) : Rational(l);
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= rho * poly[i];
    }
    poly = std::move(next);
  }
  // The theta^k coefficient of the right-hand side cancels against the
  // left-hand side, leaving theta^k = sum_j p_j theta^j / (z - 1) resp.
  // / (z^k - 1); the p_j are the low-order coefficients unchanged.
  sys.p.assign(poly.begin(), poly.end() - 1);
  if (plane == Plane::zeta) {
    sys.singularities = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
  } else {
    sys.singularities.emplace_back(0.0, 0.0);
    const double tau = 6.283185307179586;
    for (long i = 0; i < k; ++i) {
      sys.singularities.emplace_back(std::cos(tau * i / k), std::sin(tau * i / k));
    }
  }
  return sys;
}

struct LoopSpec {
  Complex base_point{-1.0, 0.0};
  Complex center{0.0, 0.0};
  double radius = 0.5;
  long samples = 0;  // 0: adaptive only
};

struct NumericMatrix {
  CMat m;
  double estimated_error = 0.0;
};

struct StepFailureError : std::runtime_error {
  explicit StepFailureError(const std::string& what) : std::runtime_error(what) {}
};

// Integrate the fundamental matrix once around the circular loop.
inline NumericMatrix loop_monodromy(const CompanionSystem& sys, const LoopSpec& loop, double tol) {
  for (const Complex& s : sys.singularities) {
    const double dist = std::abs(std::abs(s - loop.center) - loop.radius);
    if (dist < loop.radius / 10.0) {
      throw StepFailureError("loop passes too near a singular point");
    }
  }
  const long k = sys.k;
  using State = std::vector<Complex>;
  const double tau = 6.283185307179586476925287;
  const double theta0 = std::arg(loop.base_point - loop.center);

  auto rhs = [&](const State& w, State& dwdt, double t) {
    const Complex z = loop.center + loop.radius * std::polar(1.0, theta0 + t);
    const Complex dz = loop.radius * std::polar(1.0, theta0 + t) * Complex(0.0, 1.0);
    const CMat a = sys.coefficient(z) * dz;
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        Complex acc(0.0, 0.0);
        for (Eigen::Index l = 0; l < k; ++l) {
          acc += a(i, l) * w[static_cast<std::size_t>(l * k + j)];
        }
        dwdt[static_cast<std::size_t>(i * k + j)] = acc;
      }
    }
  };

  State w(static_cast<std::size_t>(k * k), Complex(0.0, 0.0));
  for (Eigen::Index i = 0; i < k; ++i) w[static_cast<std::size_t>(i * k + i)] = 1.0;

  namespace ode = boost::numeric::odeint;
  using Stepper = ode::runge_kutta_fehlberg78<State>;
  const std::size_t steps = ode::integrate_adaptive(ode::make_controlled<Stepper>(tol, tol), rhs, w,
                                                    0.0, tau, tau / 1024.0);
  NumericMatrix out;
  out.m = CMat(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) out.m(i, j) = w[static_cast<std::size_t>(i * k + j)];
  }
  out.estimated_error = tol * static_cast<double>(steps + 1);
  return out;
}

// Monic characteristic polynomial coefficients of a complex matrix (constant
// term first), by the same division-free recurrence as the exact kernel.
inline std::vector<Complex> charpoly_numeric(const CMat& a) {
  const Eigen::Index n = a.rows();
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1.0;
  CMat m = CMat::Zero(n, n);
  for (Eigen::Index i = 1; i <= n; ++i) {
    m = a * m + c[static_cast<std::size_t>(n - i + 1)] * CMat::Identity(n, n);
    c[static_cast<std::size_t>(n - i)] = -(a * m).trace() / static_cast<double>(i);
  }
  return c;
}

struct ComparisonReport {
  double max_deviation = 0.0;
  double trace_deviation = 0.0;
  double det_deviation = 0.0;
  bool pass = false;
};

// Frame-free comparison: trace, determinant, characteristic polynomial.
inline ComparisonReport compare_invariants(const NumericMatrix& num, const Mat& exact, double tol) {
  if (num.m.rows() != exact.rows()) throw std::invalid_argument("compare_invariants: dimension mismatch");
  ComparisonReport rep;
  const auto cp_num = charpoly_numeric(num.m);
  const auto cp_exact = charpoly(exact);
  for (std::size_t i = 0; i < cp_exact.size(); ++i) {
    const double dev = std::abs(cp_num[i] - Complex(cp_exact[i].convert_to<double>(), 0.0));
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  rep.trace_deviation =
      std::abs(num.m.trace() - Complex(Rational(exact.trace()).convert_to<double>(), 0.0));
  rep.det_deviation = std::abs(num.m.determinant() - Complex(determinant(exact).convert_to<double>(), 0.0));
  rep.max_deviation = std::max({rep.max_deviation, rep.trace_deviation, rep.det_deviation});
  rep.pass = rep.max_deviation < tol;
  return rep;
}

}  // namespace hgs
