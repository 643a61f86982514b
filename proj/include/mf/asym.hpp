#pragma once
// Limiting merit-factor function phi_nu(R, T) of the rotation fraction R and
// truncation fraction T, its T = 1 closed form, and its global maximum
// computed from the two cubic polynomials that characterize the optimum.

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "mf/error.hpp"

namespace mf {

struct PhiResult {
  double value = 0.0;
  bool infinite = false;  // set when the reciprocal series is <= 0
};

struct MaxResult {
  double phi_max = 0.0;
  double T_opt = 0.0;
  double R_opt = 0.0;  // 3/4 - T_opt/2 reduced into [0, 1/2)
};

namespace detail {

inline double reduce_mod_half(double R) {
  double r = R - 0.5 * std::floor(R / 0.5);
  if (r >= 0.5) r -= 0.5;  // guard the floating floor edge
  if (r < 0.0) r += 0.5;
  return r;
}

inline PhiResult phi_from_reciprocal(double recip) {
  if (!(recip > 0.0)) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {1.0 / recip, false};
}

}  // namespace detail

// 1/phi_nu(R,T) = 1 - 2(1+nu)T/3 + 4*Sum_{m>=1} max(0, 1-m/T)^2
//               + nu*Sum_{m in Z} max(0, 1 - |1+(2R-m)/T|)^2.
// Both sums are finite: the first runs over m < T, the second over the m
// with 2R < m < 2R + 2T. Periodic in R with period 1/2.
inline PhiResult phi(double nu, double R, double T) {
  if (!(T > 0.0)) fail("BadT", "need T > 0");
  double Rr = detail::reduce_mod_half(R);
  double recip = 1.0 - 2.0 * (1.0 + nu) * T / 3.0;
  for (int64_t m = 1; static_cast<double>(m) < T; ++m) {
    double d = 1.0 - static_cast<double>(m) / T;
    recip += 4.0 * d * d;
  }
  int64_t m_lo = static_cast<int64_t>(std::floor(2.0 * Rr)) ;
  int64_t m_hi = static_cast<int64_t>(std::ceil(2.0 * Rr + 2.0 * T)) + 1;
  for (int64_t m = m_lo; m <= m_hi; ++m) {
    double d = 1.0 - std::abs(1.0 + (2.0 * Rr - static_cast<double>(m)) / T);
    if (d > 0.0) recip += nu * d * d;
  }
  return detail::phi_from_reciprocal(recip);
}

// Closed form at T = 1: 1/phi = (2-nu)/6 + 8*nu*(R-1/4)^2 with R reduced
// modulo 1/2.
inline PhiResult phi_T1(double nu, double R) {
  double Rr = detail::reduce_mod_half(R);
  double recip = (2.0 - nu) / 6.0 + 8.0 * nu * (Rr - 0.25) * (Rr - 0.25);
  return detail::phi_from_reciprocal(recip);
}

// Coefficients {a3, a2, a1, a0} of the cubic whose largest root is the
// global maximum of phi_nu.
inline std::array<double, 4> phi_max_cubic(double nu) {
  double n2 = nu * nu, n3 = n2 * nu, n4 = n3 * nu;
  return {n4 - 2.0 * n3 - 3.0 * n2 - 50.0 * nu + 112.0,
          12.0 * n3 + 36.0 * n2 - 18.0 * nu - 528.0,
          24.0 * n2 + 282.0 * nu + 528.0,
          -(6.0 * nu + 48.0)};
}

// Coefficients of the cubic whose middle root is the optimal T.
inline std::array<double, 4> t_opt_cubic(double nu) {
  return {2.0 * nu + 2.0, 0.0, -(6.0 * nu + 24.0), 3.0 * nu + 24.0};
}

namespace detail {

inline double eval_cubic(const std::array<double, 4>& c, double x) {
  return ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
}

inline double refine_root(const std::array<double, 4>& c, double lo,
                          double hi) {
  double flo = eval_cubic(c, lo);
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = eval_cubic(c, mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 6; ++it) {
    double fx = eval_cubic(c, x);
    double dfx = (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2];
    if (dfx == 0.0) break;
    double nx = x - fx / dfx;
    if (nx < lo || nx > hi) break;
    x = nx;
  }
  return x;
}

// All roots of the cubic inside [0, 10], found by a deterministic sign scan
// at step 1e-3 refined by bisection and Newton polishing.
inline std::vector<double> cubic_roots_in_0_10(const std::array<double, 4>& c) {
  std::vector<double> roots;
  const double step = 1e-3;
  double prev_x = 0.0;
  double prev_f = eval_cubic(c, prev_x);
  if (prev_f == 0.0) roots.push_back(prev_x);
  for (int64_t i = 1; i <= 10000; ++i) {
    double x = static_cast<double>(i) * step;
    double fx = eval_cubic(c, x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (prev_f != 0.0 && (prev_f < 0.0) != (fx < 0.0)) {
      roots.push_back(refine_root(c, prev_x, x));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

}  // namespace detail

// Global maximum of phi_nu over (R, T): the largest root of phi_max_cubic,
// attained at T_opt (middle root of t_opt_cubic; it is the smaller of the
// two positive roots, since the roots sum to zero and their product is
// negative, so exactly one root is negative) and R_opt = 3/4 - T_opt/2.
inline MaxResult phi_max(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) fail("OutOfRange", "need nu in [0,1]");
  std::vector<double> pr = detail::cubic_roots_in_0_10(phi_max_cubic(nu));
  std::vector<double> tr = detail::cubic_roots_in_0_10(t_opt_cubic(nu));
  if (pr.empty() || tr.empty()) {
    fail("PrecisionLoss", "cubic root isolation failed (internal bug)");
  }
  MaxResult out;
  out.phi_max = pr.back();
  out.T_opt = tr.front();
  out.R_opt = detail::reduce_mod_half(0.75 - out.T_opt / 2.0);
  PhiResult at_opt = phi(nu, out.R_opt, out.T_opt);
  if (at_opt.infinite || std::abs(at_opt.value - out.phi_max) > 1e-9) {
    fail("PrecisionLoss", "series value at the optimum disagrees with the cubic root");
  }
  return out;
}

}  // namespace mf
