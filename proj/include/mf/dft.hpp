#pragma once
// Discrete Fourier transforms used throughout: an iterative radix-2 FFT for
// power-of-two sizes (with a reusable precomputed plan for hot loops) and a
// Bluestein chirp transform for arbitrary sizes. All transforms are
// unnormalized: dft(x, sign)[k] = sum_j x[j] * exp(sign * 2*pi*i * j*k / N).
// Everything here is single-threaded and deterministic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "mf/error.hpp"

namespace mf {

using cdouble = std::complex<double>;

inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Reusable radix-2 plan for a fixed power-of-two size: bit-reversal
// permutation plus one twiddle table shared by all stages (twiddles for
// stage length L live at offsets L/2..L-1, a standard packing).
class FftPlan {
 public:
  explicit FftPlan(std::size_t n) : n_(n) {
    if (!is_pow2(n_)) fail("TooLarge", "FFT plan size must be a power of two");
    bitrev_.assign(n_, 0);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n_) ++log2n;
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < log2n; ++b) {
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
      }
      bitrev_[i] = r;
    }
    tw_.assign(std::max<std::size_t>(n_, 2), cdouble(1.0, 0.0));
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(j) /
                     static_cast<double>(len);
        tw_[len / 2 + j] = std::polar(1.0, ang);
      }
    }
  }

  std::size_t size() const { return n_; }

  // In-place unnormalized transform with exponent sign `sign` (+1 or -1).
  void run(cdouble* a, int sign) const {
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t j = bitrev_[i];
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      std::size_t half = len / 2;
      const cdouble* w = &tw_[half];
      for (std::size_t base = 0; base < n_; base += len) {
        for (std::size_t j = 0; j < half; ++j) {
          cdouble tw = (sign > 0) ? w[j] : std::conj(w[j]);
          cdouble u = a[base + j];
          cdouble v = a[base + j + half] * tw;
          a[base + j] = u + v;
          a[base + j + half] = u - v;
        }
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> bitrev_;
  std::vector<cdouble> tw_;
};

// One-shot power-of-two transform (builds a throwaway plan).
inline void fft_pow2(std::vector<cdouble>& a, int sign) {
  FftPlan plan(a.size());
  plan.run(a.data(), sign);
}

// Unnormalized DFT of arbitrary size via the Bluestein chirp transform:
// out[k] = sum_j x[j] exp(sign*2*pi*i*j*k/n). Chirp phases are reduced
// modulo 2n in exact integer arithmetic before the trig call, so accuracy
// does not degrade with n.
inline std::vector<cdouble> dft(const std::vector<cdouble>& x, int sign) {
  std::size_t n = x.size();
  if (n == 0) return {};
  if (n == 1) return x;
  if (is_pow2(n)) {
    std::vector<cdouble> a = x;
    fft_pow2(a, sign);
    return a;
  }
  // chirp[m] = exp(sign*pi*i*m^2/n), with m^2 taken mod 2n exactly.
  std::vector<cdouble> chirp(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::uint64_t m2 = (static_cast<std::uint64_t>(m) * m) %
                       (2 * static_cast<std::uint64_t>(n));
    double ang = std::numbers::pi * static_cast<double>(m2) /
                 static_cast<double>(n);
    chirp[m] = std::polar(1.0, sign > 0 ? ang : -ang);
  }
  std::size_t m_len = next_pow2(2 * n - 1);
  FftPlan plan(m_len);
  std::vector<cdouble> a(m_len, cdouble(0.0, 0.0));
  std::vector<cdouble> b(m_len, cdouble(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
  for (std::size_t m = 0; m < n; ++m) {
    cdouble c = std::conj(chirp[m]);
    b[m] = c;
    if (m != 0) b[m_len - m] = c;
  }
  plan.run(a.data(), -1);
  plan.run(b.data(), -1);
  for (std::size_t i = 0; i < m_len; ++i) a[i] *= b[i];
  plan.run(a.data(), +1);
  double scale = 1.0 / static_cast<double>(m_len);
  std::vector<cdouble> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
  return out;
}

}  // namespace mf
