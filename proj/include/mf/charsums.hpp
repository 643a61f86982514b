#pragma once
// Multiplicative-character machinery over GF(q): character evaluation, the
// table of Gauss sums (computed in one DFT over the exponent domain), Jacobi
// sums, Eisenstein sums over the trace-one hyperplane, and the bilinear
// Gauss-sum bound check.
//
// A character is identified by its exponent j modulo q-1: chi_j(theta^u) =
// exp(2*pi*i*j*u/(q-1)). At zero the usual convention applies: chi(0) = 1 for
// the trivial character and 0 otherwise.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "mf/dft.hpp"
#include "mf/error.hpp"
#include "mf/field.hpp"

namespace mf {

inline int64_t char_mod(const FieldCtx& F, int64_t j) {
  int64_t m = j % (F.q() - 1);
  return m < 0 ? m + F.q() - 1 : m;
}

inline bool char_trivial(const FieldCtx& F, int64_t j) {
  return char_mod(F, j) == 0;
}

// chi_j(x) with the zero convention described above.
inline cdouble char_eval(const FieldCtx& F, int64_t j, int64_t x) {
  int64_t jm = char_mod(F, j);
  if (x == 0) return jm == 0 ? cdouble(1.0, 0.0) : cdouble(0.0, 0.0);
  double ang = 2.0 * std::numbers::pi * static_cast<double>(jm) *
               static_cast<double>(F.dlog(x)) / static_cast<double>(F.q() - 1);
  return std::polar(1.0, ang);
}

struct GaussTable {
  int64_t q = 0;
  std::vector<cdouble> g;  // g[j] = G(chi_j), j in [0, q-1)
};

// All q-1 Gauss sums at once. Writing y = theta^u turns
// G(chi_j) = sum_y chi_j(y) e(tr(y)/p) into the length-(q-1) DFT
// sum_u e(+2*pi*i*j*u/(q-1)) * e(tr(theta^u)/p), evaluated here with the
// chirp transform since q-1 is rarely a power of two.
inline GaussTable gauss_table(const FieldCtx& F) {
  if (F.q() > (int64_t{1} << 20)) {
    fail("TooLarge", "gauss table limited to q <= 2^20");
  }
  int64_t n = F.q() - 1;
  std::vector<cdouble> b(static_cast<std::size_t>(n));
  for (int64_t u = 0; u < n; ++u) {
    int64_t tr = F.absolute_trace(F.exp(u));  // residue in [0, p)
    double ang = 2.0 * std::numbers::pi * static_cast<double>(tr) /
                 static_cast<double>(F.p());
    b[static_cast<std::size_t>(u)] = std::polar(1.0, ang);
  }
  GaussTable t;
  t.q = F.q();
  t.g = dft(b, +1);
  return t;
}

// O(q) reference evaluation of a single Gauss sum.
inline cdouble gauss_direct(const FieldCtx& F, int64_t j) {
  cdouble acc(0.0, 0.0);
  for (int64_t u = 0; u < F.q() - 1; ++u) {
    int64_t y = F.exp(u);
    int64_t tr = F.absolute_trace(y);
    double ang = 2.0 * std::numbers::pi * static_cast<double>(tr) /
                 static_cast<double>(F.p());
    acc += char_eval(F, j, y) * std::polar(1.0, ang);
  }
  return acc;
}

// J(psi, chi) = sum over all y in GF(q) of psi(y) chi(1-y), zero conventions
// included. Direct O(q) sum.
inline cdouble jacobi(const FieldCtx& F, int64_t j_psi, int64_t j_chi) {
  cdouble acc(0.0, 0.0);
  for (int64_t y = 0; y < F.q(); ++y) {
    acc += char_eval(F, j_psi, y) * char_eval(F, j_chi, F.sub(1, y));
  }
  return acc;
}

// Jacobi sum from the Gauss table: for nontrivial psi and chi,
// J(psi,chi) = G(psi) G(chi) conj(G(psi*chi)) / q (valid whether or not
// psi*chi is trivial, since G(trivial) = -1 and G(chi)conj(G(chi)) = q); with
// a trivial factor the sum collapses to 0 (exactly one trivial) or q (both).
inline cdouble jacobi_from_table(const FieldCtx& F, const GaussTable& t,
                                 int64_t j_psi, int64_t j_chi) {
  int64_t jp = char_mod(F, j_psi), jc = char_mod(F, j_chi);
  if (jp == 0 && jc == 0) return cdouble(static_cast<double>(F.q()), 0.0);
  if (jp == 0 || jc == 0) return cdouble(0.0, 0.0);
  cdouble prod = t.g[static_cast<std::size_t>(jp)] *
                 t.g[static_cast<std::size_t>(jc)] *
                 std::conj(t.g[static_cast<std::size_t>(char_mod(F, jp + jc))]);
  return prod / static_cast<double>(F.q());
}

// E(chi) = sum of chi(a) over the affine hyperplane {a : Tr_{q,s}(a) = 1}.
// Direct O(q) sum; requires a proper subfield order s and nontrivial chi.
inline cdouble eisenstein(const FieldCtx& F, int64_t sub_order, int64_t j) {
  int d = F.subfield_degree(sub_order);
  if (d == F.k()) fail("NotSubfield", "subfield must be proper");
  if (char_trivial(F, j)) fail("TrivialChar", "Eisenstein sum needs chi != 1");
  cdouble acc(0.0, 0.0);
  for (int64_t a = 1; a < F.q(); ++a) {
    if (F.trace(sub_order, a) == 1) acc += char_eval(F, j, a);
  }
  return acc;
}

// Gauss-sum form of the Eisenstein sum: E(chi) = G(chi)/G(chi*) when the
// restriction chi* of chi to GF(s)^* is nontrivial, and -G(chi)/s when chi*
// is trivial (which happens exactly when (s-1) | j). chi* acts on GF(s)^* =
// <Theta>, Theta = theta^((q-1)/(s-1)), as chi*(Theta^u) = e(j*u/(s-1)), and
// G(chi*) is assembled in the big field via the subfield trace down to GF(p).
inline cdouble eisenstein_predicted(const FieldCtx& F, const GaussTable& t,
                                    int64_t sub_order, int64_t j) {
  int d = F.subfield_degree(sub_order);
  if (d == F.k()) fail("NotSubfield", "subfield must be proper");
  int64_t jm = char_mod(F, j);
  if (jm == 0) fail("TrivialChar", "Eisenstein sum needs chi != 1");
  cdouble g_big = t.g[static_cast<std::size_t>(jm)];
  int64_t s = sub_order;
  if (jm % (s - 1) == 0) {
    return -g_big / static_cast<double>(s);
  }
  int64_t step = (F.q() - 1) / (s - 1);
  cdouble g_sub(0.0, 0.0);
  for (int64_t u = 0; u < s - 1; ++u) {
    int64_t a = F.exp(u * step);  // Theta^u, runs over GF(s)^*
    // Trace from GF(s) down to GF(p): d Frobenius powers, evaluated inside
    // the big field. The result is a constant polynomial, i.e. index < p.
    int64_t tr = a, y = a;
    for (int i = 1; i < d; ++i) {
      y = F.pow(y, F.p());
      tr = F.add(tr, y);
    }
    if (tr >= F.p()) {
      fail("NoGenerator", "subfield trace left GF(p) (internal bug)");
    }
    double ang =
        2.0 * std::numbers::pi *
        (static_cast<double>(jm % (s - 1)) * static_cast<double>(u) /
             static_cast<double>(s - 1) +
         static_cast<double>(tr) / static_cast<double>(F.p()));
    g_sub += std::polar(1.0, ang);
  }
  return g_big / g_sub;
}

struct KatzResult {
  double lhs = 0.0;
  double bound = 0.0;
};

// | sum over all characters chi of prod_i G(chi * alpha_i) *
//   prod_j conj(G(chi * beta_j)) |  against the bound
// max(r, s) * q^((r+s+1)/2). Requires the two exponent multisets to differ.
inline KatzResult katz_check(const FieldCtx& F, const GaussTable& t,
                             std::vector<int64_t> alphas,
                             std::vector<int64_t> betas) {
  if (F.q() > (int64_t{1} << 12)) {
    fail("TooLarge", "bilinear Gauss bound check limited to q <= 2^12");
  }
  if (alphas.size() + betas.size() > 8) {
    fail("TooLarge", "at most 8 characters total");
  }
  for (auto& a : alphas) a = char_mod(F, a);
  for (auto& b : betas) b = char_mod(F, b);
  std::vector<int64_t> sa = alphas, sb = betas;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa == sb) {
    fail("PermutedMultisets",
         "character multisets must differ for the bound to apply");
  }
  cdouble acc(0.0, 0.0);
  for (int64_t c = 0; c < F.q() - 1; ++c) {
    cdouble term(1.0, 0.0);
    for (int64_t a : alphas) {
      term *= t.g[static_cast<std::size_t>(char_mod(F, c + a))];
    }
    for (int64_t b : betas) {
      term *= std::conj(t.g[static_cast<std::size_t>(char_mod(F, c + b))]);
    }
    acc += term;
  }
  KatzResult r;
  r.lhs = std::abs(acc);
  double rr = static_cast<double>(alphas.size());
  double ss = static_cast<double>(betas.size());
  r.bound = std::max(rr, ss) *
            std::pow(static_cast<double>(F.q()), (rr + ss + 1.0) / 2.0);
  return r;
}

}  // namespace mf
