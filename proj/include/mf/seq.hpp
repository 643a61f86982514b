#pragma once
// +/-1 sequences cut from the periodic membership indicator of a subset:
// coefficient j of the (rotation r, length t) sequence is +1 exactly when
// position (j + r) mod n belongs to the set. Exact aperiodic
// autocorrelations, merit factors, and (R, T) grid sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mf/dft.hpp"
#include "mf/error.hpp"
#include "mf/parallel.hpp"
#include "mf/sets.hpp"

namespace mf {

struct LittlewoodSeq {
  std::vector<std::int8_t> coeffs;  // entries in {-1, +1}, length t
  std::string family;
  int64_t n = 0;  // period of the underlying indicator
  int64_t q = 0;
  int64_t m = 0;  // cyclotomy order for additive families, else 0
  int64_t r = 0;
  int64_t t = 0;
};

struct MeritReport {
  std::string family;
  int64_t n = 0;
  int64_t q = 0;
  int64_t r = 0;
  int64_t t = 0;
  int64_t sum_sq_acf = 0;    // exact Sum_{u>=1} c_u^2
  double merit_factor = 0.0; // t^2 / (2 * sum_sq_acf)
  std::vector<int64_t> acf;  // optional: c_1 .. c_{t-1} when requested
};

struct SweepCell {
  double R = 0.0;
  double T = 0.0;
  int64_t r = 0;
  int64_t t = 0;
  std::optional<double> F;  // empty when the denominator degenerates
};

// Deterministic round-half-up used for grid realization.
inline int64_t round_half_up(double x) {
  return static_cast<int64_t>(std::floor(x + 0.5));
}

inline LittlewoodSeq realize(const SubsetOfGroup& D, int64_t r, int64_t t) {
  if (t < 1) fail("BadT", "sequence length must be at least 1");
  LittlewoodSeq f;
  f.family = D.family;
  f.n = D.n;
  f.q = D.q;
  f.m = D.m;
  f.r = ((r % D.n) + D.n) % D.n;
  f.t = t;
  f.coeffs.resize(static_cast<std::size_t>(t));
  for (int64_t j = 0; j < t; ++j) {
    int64_t pos = (j + f.r) % D.n;
    f.coeffs[static_cast<std::size_t>(j)] =
        D.membership[static_cast<std::size_t>(pos)] ? int8_t{1} : int8_t{-1};
  }
  return f;
}

// Exact quadratic-time path: returns c_1 .. c_{t-1}.
inline std::vector<int64_t> acf(const LittlewoodSeq& f) {
  int64_t t = f.t;
  std::vector<int64_t> c(static_cast<std::size_t>(t > 0 ? t - 1 : 0), 0);
  for (int64_t u = 1; u < t; ++u) {
    int64_t s = 0;
    const std::int8_t* a = f.coeffs.data();
    for (int64_t j = 0; j + u < t; ++j) {
      s += static_cast<int64_t>(a[j]) * static_cast<int64_t>(a[j + u]);
    }
    c[static_cast<std::size_t>(u - 1)] = s;
  }
  return c;
}

// Transform path: power spectrum of the zero-padded sequence, rounded back
// to integers. Any rounding residual above 0.25 aborts rather than silently
// corrupting the exact values.
inline std::vector<int64_t> acf_fft(const LittlewoodSeq& f) {
  int64_t t = f.t;
  if (t < 2) fail("BadT", "transform path needs t >= 2");
  int64_t M = next_pow2(2 * t);
  std::vector<cdouble> x(static_cast<std::size_t>(M), cdouble{0.0, 0.0});
  for (int64_t j = 0; j < t; ++j) {
    x[static_cast<std::size_t>(j)] =
        cdouble(static_cast<double>(f.coeffs[static_cast<std::size_t>(j)]), 0.0);
  }
  fft_pow2(x, -1);
  for (auto& z : x) z = cdouble(std::norm(z), 0.0);
  fft_pow2(x, +1);
  std::vector<int64_t> c(static_cast<std::size_t>(t - 1), 0);
  double scale = 1.0 / static_cast<double>(M);
  for (int64_t u = 1; u < t; ++u) {
    double raw = x[static_cast<std::size_t>(u)].real() * scale;
    double r = std::floor(raw + 0.5);
    if (std::abs(raw - r) > 0.25) {
      fail("PrecisionLoss", "autocorrelation rounding residual above 0.25");
    }
    c[static_cast<std::size_t>(u - 1)] = static_cast<int64_t>(r);
  }
  return c;
}

namespace detail {

// Direct path for short sequences, transform path above; the transform path
// falls back to the exact path if rounding ever degrades at moderate sizes.
inline std::vector<int64_t> acf_best(const LittlewoodSeq& f) {
  if (f.t <= 4096) return acf(f);
  try {
    return acf_fft(f);
  } catch (const Error& e) {
    if (std::string(e.name()) == "PrecisionLoss" && f.t <= (int64_t{1} << 16)) {
      return acf(f);
    }
    throw;
  }
}

}  // namespace detail

inline MeritReport merit_factor(const LittlewoodSeq& f, bool keep_acf = false) {
  std::vector<int64_t> c = detail::acf_best(f);
  unsigned __int128 sum = 0;
  for (int64_t v : c) {
    unsigned __int128 sq = static_cast<unsigned __int128>(v < 0 ? -v : v);
    sum += sq * sq;
    if (sum >> 126) fail("TooLarge", "autocorrelation energy overflowed");
  }
  if (sum == 0) {
    fail("DegenerateDenominator", "all nonzero-lag autocorrelations vanish");
  }
  MeritReport rep;
  rep.family = f.family;
  rep.n = f.n;
  rep.q = f.q;
  rep.r = f.r;
  rep.t = f.t;
  rep.sum_sq_acf = static_cast<int64_t>(sum);
  double tt = static_cast<double>(f.t);
  rep.merit_factor = tt * tt / (2.0 * static_cast<double>(rep.sum_sq_acf));
  if (keep_acf) rep.acf = std::move(c);
  return rep;
}

inline MeritReport merit_factor(const SubsetOfGroup& D, int64_t r, int64_t t,
                                bool keep_acf = false) {
  return merit_factor(realize(D, r, t), keep_acf);
}

// Grid sweep, R outer and T inner, rows in grid order regardless of the
// execution schedule. Degenerate cells carry an empty F instead of failing
// the whole sweep.
inline std::vector<SweepCell> sweep(const SubsetOfGroup& D,
                                    const std::vector<double>& R_grid,
                                    const std::vector<double>& T_grid) {
  if (R_grid.empty() || T_grid.empty()) fail("BadT", "empty sweep grid");
  for (double T : T_grid) {
    if (!(T > 0.0)) fail("BadT", "sweep needs T > 0");
  }
  std::vector<SweepCell> rows(R_grid.size() * T_grid.size());
  int64_t total = static_cast<int64_t>(rows.size());
  parallel_blocks(total, [&](int, int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i) {
      std::size_t ri = static_cast<std::size_t>(i) / T_grid.size();
      std::size_t ti = static_cast<std::size_t>(i) % T_grid.size();
      SweepCell& cell = rows[static_cast<std::size_t>(i)];
      cell.R = R_grid[ri];
      cell.T = T_grid[ti];
      cell.r = round_half_up(cell.R * static_cast<double>(D.n));
      cell.t = std::max<int64_t>(1, round_half_up(cell.T * static_cast<double>(D.n)));
      try {
        cell.F = merit_factor(D, cell.r, cell.t).merit_factor;
      } catch (const Error& e) {
        if (std::string(e.name()) != "DegenerateDenominator") throw;
      }
    }
  });
  return rows;
}

}  // namespace mf
