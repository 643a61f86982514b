#pragma once
// Difference-set and almost-difference-set families over finite fields:
// cyclotomic unions (including the quadratic-residue and Hall sextic-residue
// special cases), trace-based product sets over GF(2^k) with an inner set B
// from a subfield, and the quadratic shifted-square construction over odd q.
//
// A subset lives in either the multiplicative group of GF(q) (order n = q-1,
// positions indexed by exponent with respect to the pinned generator) or the
// additive group of GF(p) (order n = p, positions indexed by residue).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mf/dft.hpp"
#include "mf/error.hpp"
#include "mf/field.hpp"

namespace mf {

enum class GroupKind { Multiplicative, Additive };

struct SubsetOfGroup {
  GroupKind group = GroupKind::Additive;
  int64_t n = 0;          // group order: q-1 (multiplicative) or p (additive)
  int64_t q = 0;          // ambient field order
  int64_t generator = 0;  // element index of the pinned generator
  std::string family;     // "cyclotomic", "paley", "hall", "gmw", "sidelnikov"
  int64_t m = 0;                 // cyclotomy order (additive families)
  std::vector<int64_t> classes;  // selected class indices S
  int64_t s = 0;                 // subfield order (gmw)
  std::string inner;             // inner-set description (gmw)
  std::vector<std::uint8_t> membership;  // length n, by exponent/residue

  int64_t size() const {
    return std::accumulate(membership.begin(), membership.end(), int64_t{0});
  }

  // Positions (exponents or residues) of the members, ascending.
  std::vector<int64_t> member_positions() const {
    std::vector<int64_t> out;
    for (int64_t i = 0; i < n; ++i) {
      if (membership[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
  }
};

struct DiffSetCheck {
  int64_t n = 0;
  int64_t k = 0;
  int64_t lambda_min = 0;
  int64_t lambda_max = 0;
  bool is_difference_set = false;
  bool is_hadamard = false;  // difference set with n + 1 = 4(k - lambda)
};

namespace detail {

// Exhaustive pairwise count of position differences modulo n.
inline std::vector<int64_t> diff_counts_pairwise(const SubsetOfGroup& D) {
  int64_t n = D.n;
  std::vector<int64_t> count(static_cast<std::size_t>(n), 0);
  std::vector<int64_t> pos = D.member_positions();
  for (int64_t x : pos) {
    for (int64_t y : pos) {
      int64_t d = x - y;
      if (d < 0) d += n;
      ++count[static_cast<std::size_t>(d)];
    }
  }
  return count;
}

// Same counts through the cyclic autocorrelation of the membership bitset,
// rounded back to integers with a strict residual guard.
inline std::vector<int64_t> diff_counts_fft(const SubsetOfGroup& D) {
  int64_t n = D.n;
  std::vector<int64_t> count(static_cast<std::size_t>(n), 0);
  std::vector<cdouble> v(static_cast<std::size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] =
        cdouble(static_cast<double>(D.membership[static_cast<std::size_t>(i)]),
                0.0);
  }
  std::vector<cdouble> V = dft(v, -1);
  for (auto& z : V) z *= std::conj(z);
  std::vector<cdouble> c = dft(V, +1);
  for (int64_t u = 0; u < n; ++u) {
    double raw = c[static_cast<std::size_t>(u)].real() /
                 static_cast<double>(n);
    double r = std::floor(raw + 0.5);
    if (std::abs(raw - r) > 0.25) {
      fail("PrecisionLoss", "difference-count convolution did not round");
    }
    count[static_cast<std::size_t>(u)] = static_cast<int64_t>(r);
  }
  return count;
}

}  // namespace detail

// Multiplicity profile of the nonzero differences (additive) or quotients
// (multiplicative); both reduce to the cyclic autocorrelation of the
// membership bitset over Z_n. Pairwise enumeration for n <= 2^12, exact
// rounded convolution above.
inline DiffSetCheck diff_check(const SubsetOfGroup& D) {
  int64_t n = D.n;
  if (n > (int64_t{1} << 20)) fail("TooLarge", "group order above 2^20");
  std::vector<int64_t> count = (n <= (int64_t{1} << 12))
                                   ? detail::diff_counts_pairwise(D)
                                   : detail::diff_counts_fft(D);
  DiffSetCheck out;
  out.n = n;
  out.k = count[0];  // lag zero counts the |D| coincidences
  out.lambda_min = n > 1 ? count[1] : 0;
  out.lambda_max = out.lambda_min;
  for (int64_t u = 1; u < n; ++u) {
    out.lambda_min = std::min(out.lambda_min, count[static_cast<std::size_t>(u)]);
    out.lambda_max = std::max(out.lambda_max, count[static_cast<std::size_t>(u)]);
  }
  out.is_difference_set = (out.lambda_min == out.lambda_max) && n > 1;
  out.is_hadamard = out.is_difference_set &&
                    n + 1 == 4 * (out.k - out.lambda_min);
  return out;
}

// Max over nontrivial characters chi of Z_n of | |chi(D)|^2 - k(n-k)/(n-1) |.
// For a difference set the character values all share the same squared
// magnitude k - lambda = k(n-k)/(n-1), so this deviation is numerically zero.
inline double char_value_check(const SubsetOfGroup& D) {
  int64_t n = D.n;
  if (n > (int64_t{1} << 20)) fail("TooLarge", "group order above 2^20");
  std::vector<cdouble> v(static_cast<std::size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] =
        cdouble(static_cast<double>(D.membership[static_cast<std::size_t>(i)]),
                0.0);
  }
  std::vector<cdouble> V = dft(v, -1);
  double k = static_cast<double>(D.size());
  double target = k * (static_cast<double>(n) - k) /
                  (static_cast<double>(n) - 1.0);
  double max_dev = 0.0;
  for (int64_t u = 1; u < n; ++u) {
    double mag2 = std::norm(V[static_cast<std::size_t>(u)]);
    max_dev = std::max(max_dev, std::abs(mag2 - target));
  }
  return max_dev;
}

// Union of the cyclotomic classes C_s, s in S, of order m over GF(p):
// x is a member iff dlog(x) mod m lies in S. Requires p = 1 (mod m),
// |S| = m/2, and S within range.
inline SubsetOfGroup build_cyclotomic(const FieldCtx& F, int64_t m,
                                      std::vector<int64_t> S) {
  if (F.k() != 1) fail("NotPrime", "cyclotomic sets live over a prime field");
  int64_t p = F.p();
  if (m < 2 || m % 2 != 0 || (p - 1) % m != 0) {
    fail("BadModulus", "need even m with p = 1 (mod m)");
  }
  std::sort(S.begin(), S.end());
  if (static_cast<int64_t>(S.size()) != m / 2) {
    fail("BadS", "need exactly m/2 class indices");
  }
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i] < 0 || S[i] >= m) fail("BadS", "class index out of range");
    if (i > 0 && S[i] == S[i - 1]) fail("BadS", "repeated class index");
  }
  std::vector<std::uint8_t> in_s(static_cast<std::size_t>(m), 0);
  for (int64_t s : S) in_s[static_cast<std::size_t>(s)] = 1;
  SubsetOfGroup D;
  D.group = GroupKind::Additive;
  D.n = p;
  D.q = p;
  D.generator = F.generator();
  D.family = (m == 2) ? "paley" : "cyclotomic";
  D.m = m;
  D.classes = std::move(S);
  D.membership.assign(static_cast<std::size_t>(p), 0);
  for (int64_t u = 0; u < p - 1; ++u) {
    if (in_s[static_cast<std::size_t>(u % m)]) {
      D.membership[static_cast<std::size_t>(F.exp(u))] = 1;
    }
  }
  return D;
}

// Sextic-residue construction: valid for primes p = x^2 + 27 with (p-1)/6
// odd (any prime of that shape automatically has x even). Exactly one of
// C0 u C1 u C3 and C0 u C1 u C4 is then a perfect difference set; which one
// depends on the pinned primitive root, so both are tried.
inline SubsetOfGroup build_hall(const FieldCtx& F) {
  if (F.k() != 1) fail("NotPrime", "Hall sets live over a prime field");
  int64_t p = F.p();
  bool square = false;
  if (p > 27) {
    int64_t x = static_cast<int64_t>(std::llround(std::sqrt(
        static_cast<double>(p - 27))));
    for (int64_t cand = std::max<int64_t>(0, x - 2); cand <= x + 2; ++cand) {
      if (cand * cand == p - 27) square = true;
    }
  }
  if (!square || (p - 1) % 6 != 0 || ((p - 1) / 6) % 2 != 1) {
    fail("NotHallPrime",
         "need p = x^2 + 27 with (p-1)/6 odd; p = " + std::to_string(p));
  }
  for (std::vector<int64_t> S : {std::vector<int64_t>{0, 1, 3},
                                 std::vector<int64_t>{0, 1, 4}}) {
    SubsetOfGroup D = build_cyclotomic(F, 6, S);
    if (diff_check(D).is_difference_set) {
      D.family = "hall";
      return D;
    }
  }
  fail("NeitherIsDiffSet",
       "no sextic union is a difference set (internal bug)");
}

// {x in GF(q)^* : x + 1 is zero or a nonzero square}; q odd. Membership via
// the discrete-log parity of x + 1, with the x = -1 case included.
inline SubsetOfGroup build_sidelnikov(const FieldCtx& F) {
  if (F.p() == 2) fail("EvenCharacteristic", "construction needs odd q");
  SubsetOfGroup D;
  D.group = GroupKind::Multiplicative;
  D.n = F.q() - 1;
  D.q = F.q();
  D.generator = F.generator();
  D.family = "sidelnikov";
  D.membership.assign(static_cast<std::size_t>(D.n), 0);
  for (int64_t u = 0; u < D.n; ++u) {
    int64_t y = F.add(F.exp(u), 1);
    if (y == 0 || F.dlog(y) % 2 == 0) {
      D.membership[static_cast<std::size_t>(u)] = 1;
    }
  }
  return D;
}

// {x in GF(q)^* : absolute trace of x is 1}, q = 2^k. For k >= 2 this is a
// (q-1, q/2, q/4) difference set; for q = 2 it is the singleton {1}. Also
// serves as the canonical inner set of the product construction below.
inline SubsetOfGroup build_trace_one(const FieldCtx& F) {
  if (F.p() != 2) fail("WrongForm", "trace-one sets used over GF(2^k) only");
  SubsetOfGroup D;
  D.group = GroupKind::Multiplicative;
  D.n = F.q() - 1;
  D.q = F.q();
  D.generator = F.generator();
  D.family = (F.q() == 2) ? "trivial" : "singer";
  D.membership.assign(static_cast<std::size_t>(D.n), 0);
  for (int64_t u = 0; u < D.n; ++u) {
    if (F.absolute_trace(F.exp(u)) == 1) {
      D.membership[static_cast<std::size_t>(u)] = 1;
    }
  }
  return D;
}

// {a*b : Tr_{q,s}(a) = 1, b in B} inside GF(q)^*, q = 2^k. B is a subset of
// GF(s)^* of size s/2 which must itself be a difference set when s > 2 (for
// s = 2 the only choice is B = {1}). B's positions are exponents with respect
// to GF(s)'s own generator theta_s; the product uses the exponent embedding
// theta_s^e -> Theta^e with Theta = theta^((q-1)/(s-1)), which is a group
// isomorphism GF(s)^* -> <Theta> and therefore preserves the difference-set
// property of B.
inline SubsetOfGroup build_gmw(const FieldCtx& F, int64_t s,
                               const SubsetOfGroup& B) {
  if (F.p() != 2) fail("WrongForm", "construction defined over GF(2^k)");
  int d = F.subfield_degree(s);
  if (d == F.k()) fail("NotSubfield", "subfield must be proper");
  int64_t q = F.q();
  if (B.group != GroupKind::Multiplicative || B.q != s ||
      B.n != s - 1) {
    fail("BadB", "inner set must live in the multiplicative group of GF(s)");
  }
  if (B.size() != s / 2) fail("BadB", "inner set must have size s/2");
  if (s > 2 && !diff_check(B).is_difference_set) {
    fail("BadB", "inner set is not a difference set");
  }
  if (s == 2 && !B.membership[0]) fail("BadB", "for s = 2 the inner set is {1}");
  SubsetOfGroup D;
  D.group = GroupKind::Multiplicative;
  D.n = q - 1;
  D.q = q;
  D.generator = F.generator();
  D.family = "gmw";
  D.s = s;
  D.inner = B.family.empty() ? "explicit" : B.family;
  D.membership.assign(static_cast<std::size_t>(D.n), 0);
  int64_t step = (q - 1) / (s - 1);
  std::vector<int64_t> b_exponents;
  for (int64_t e = 0; e < s - 1; ++e) {
    if (B.membership[static_cast<std::size_t>(e)]) {
      b_exponents.push_back(e * step);
    }
  }
  for (int64_t a = 1; a < q; ++a) {
    if (F.trace(s, a) != 1) continue;
    int64_t ea = F.dlog(a);
    for (int64_t eb : b_exponents) {
      int64_t pos = (ea + eb) % (q - 1);
      if (D.membership[static_cast<std::size_t>(pos)]) {
        fail("BadB", "product map collided (internal bug)");
      }
      D.membership[static_cast<std::size_t>(pos)] = 1;
    }
  }
  return D;
}

// Limit parameter of the asymptotic merit-factor prediction for an additive
// family: 1 when (p-1)/m is even, else (4N/m - 1)^2 where N counts ordered
// pairs in S x S whose difference is m/2 modulo m. Multiplicative families
// (gmw, sidelnikov) predict with 0.
inline double family_nu(const SubsetOfGroup& D) {
  if (D.group == GroupKind::Multiplicative) return 0.0;
  int64_t p = D.q;
  int64_t m = D.m;
  if (((p - 1) / m) % 2 == 0) return 1.0;
  int64_t N = 0;
  for (int64_t a : D.classes) {
    for (int64_t b : D.classes) {
      if (((a - b) % m + m) % m == m / 2) ++N;
    }
  }
  double ratio = 4.0 * static_cast<double>(N) / static_cast<double>(m) - 1.0;
  return ratio * ratio;
}

}  // namespace mf
