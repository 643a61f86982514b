#pragma once
// Finite fields GF(p) and GF(p^k) with full exp/dlog tables.
//
// Element encoding: an element is the integer index sum(c_i * p^i) of its
// coordinate vector (c_0, ..., c_{k-1}) over GF(p) in the polynomial basis of
// the pinned reduction polynomial (little-endian base-p digits). Index 0 is
// the additive zero, index 1 the multiplicative one, and for prime fields the
// index equals the residue.
//
// Generator choice is pinned for reproducibility: the smallest primitive root
// for prime fields, and the element of smallest index with full multiplicative
// order for extension fields.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mf/error.hpp"
#include "mf/reduction_polys.hpp"

namespace mf {

using std::int64_t;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, static_cast<std::uint64_t>(n));
    if (x == 1 || x == static_cast<std::uint64_t>(n) - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, static_cast<std::uint64_t>(n));
      if (x == static_cast<std::uint64_t>(n) - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Distinct prime factors by trial division (inputs stay below 2^25 here).
inline std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

class FieldCtx {
 public:
  static constexpr int64_t kMaxOrder = int64_t{1} << 24;

  // GF(p), p prime. Generator = smallest primitive root mod p.
  static FieldCtx prime_field(int64_t p) {
    if (!is_prime(p)) fail("NotPrime", "p = " + std::to_string(p));
    if (p > kMaxOrder) fail("TooLarge", "field order exceeds 2^24");
    FieldCtx F;
    F.p_ = p;
    F.k_ = 1;
    F.q_ = p;
    F.gen_ = F.find_prime_generator();
    F.build_tables_prime();
    return F;
  }

  // GF(p^k), k >= 2, over the pinned reduction polynomial for (p, k).
  static FieldCtx ext_field(int64_t p, int k) {
    if (!is_prime(p)) fail("NotPrime", "p = " + std::to_string(p));
    if (k < 2) fail("BadDegree", "extension degree must be at least 2");
    int64_t q = 1;
    for (int i = 0; i < k; ++i) {
      if (q > kMaxOrder / p) fail("TooLarge", "field order exceeds 2^24");
      q *= p;
    }
    FieldCtx F;
    F.p_ = p;
    F.k_ = k;
    F.q_ = q;
    F.red_ = pinned_reduction_poly(p, k);
    F.verify_irreducible();
    F.gen_ = F.find_ext_generator();
    F.build_tables_ext();
    return F;
  }

  int64_t p() const { return p_; }
  int k() const { return k_; }
  int64_t q() const { return q_; }
  int64_t generator() const { return gen_; }
  // Reduction polynomial coefficients c_0..c_k (empty for prime fields).
  const std::vector<int64_t>& reduction_poly() const { return red_; }

  int64_t add(int64_t a, int64_t b) const {
    if (k_ == 1) {
      int64_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    int64_t out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
      int64_t s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      out += s * mult;
      mult *= p_;
      a /= p_;
      b /= p_;
    }
    return out;
  }

  int64_t neg(int64_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    int64_t out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
      int64_t d = a % p_;
      out += (d == 0 ? 0 : p_ - d) * mult;
      mult *= p_;
      a /= p_;
    }
    return out;
  }

  int64_t sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

  int64_t mul(int64_t a, int64_t b) const {
    if (a == 0 || b == 0) return 0;
    int64_t e = dlog_[a] + dlog_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }

  int64_t inv(int64_t a) const {
    if (a == 0) fail("DegenerateDenominator", "inverse of zero");
    int64_t e = dlog_[a];
    return exp_[e == 0 ? 0 : q_ - 1 - e];
  }

  // a^e for e >= 0 (0^0 = 1 by convention).
  int64_t pow(int64_t a, int64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    int64_t r = (dlog_[a] % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[r];
  }

  // theta^u for any integer u (reduced mod q-1).
  int64_t exp(int64_t u) const {
    int64_t m = u % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
  }

  // Discrete log base theta; requires a != 0.
  int64_t dlog(int64_t a) const {
    if (a == 0) fail("DegenerateDenominator", "dlog of zero");
    return dlog_[a];
  }

  // Trace into the subfield of order sub_order = p^d (requires d | k):
  // sum_{i=0}^{k/d - 1} x^(sub_order^i). The result is fixed by the
  // Frobenius power x -> x^sub_order, i.e. lies in the subfield.
  int64_t trace(int64_t sub_order, int64_t x) const {
    int d = subfield_degree(sub_order);
    int64_t acc = x, y = x;
    for (int i = 1; i < k_ / d; ++i) {
      y = pow(y, sub_order);
      acc = add(acc, y);
    }
    return acc;
  }

  // Absolute trace into GF(p); the result index is a residue in [0, p).
  int64_t absolute_trace(int64_t x) const { return trace(p_, x); }

  // Degree d of the subfield GF(sub_order) inside this field; NotSubfield if
  // sub_order is not p^d for some d dividing k.
  int subfield_degree(int64_t sub_order) const {
    int64_t s = sub_order;
    int d = 0;
    while (s > 1 && s % p_ == 0) {
      s /= p_;
      ++d;
    }
    if (s != 1 || d == 0 || k_ % d != 0) {
      fail("NotSubfield",
           std::to_string(sub_order) + " is not a subfield order of GF(" +
               std::to_string(q_) + ")");
    }
    return d;
  }

 private:
  FieldCtx() = default;

  int64_t p_ = 0;
  int k_ = 0;
  int64_t q_ = 0;
  int64_t gen_ = 0;
  std::vector<int64_t> red_;          // c_0..c_k, monic; k >= 2 only
  std::vector<std::int32_t> exp_;     // exp_[u] = index of theta^u, u < q-1
  std::vector<std::int32_t> dlog_;    // dlog_[idx]; dlog_[0] = -1 sentinel

  static std::vector<int64_t> pinned_reduction_poly(int64_t p, int k) {
    for (int i = 0; i < kReductionPolyCount; ++i) {
      if (kReductionPolys[i].p == p && kReductionPolys[i].k == k) {
        std::uint64_t enc = kReductionPolys[i].enc;
        std::vector<int64_t> c(static_cast<std::size_t>(k) + 1, 0);
        for (int j = 0; j <= k; ++j) {
          c[j] = static_cast<int64_t>(enc % static_cast<std::uint64_t>(p));
          enc /= static_cast<std::uint64_t>(p);
        }
        return c;
      }
    }
    fail("TooLarge", "no pinned reduction polynomial for GF(" +
                         std::to_string(p) + "^" + std::to_string(k) + ")");
  }

  // --- dense polynomial arithmetic over GF(p), construction-time only ---

  std::vector<int64_t> to_digits(int64_t idx) const {
    std::vector<int64_t> d(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      d[i] = idx % p_;
      idx /= p_;
    }
    return d;
  }

  int64_t from_digits(const std::vector<int64_t>& d) const {
    int64_t idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + d[i];
    return idx;
  }

  // (a * b) mod reduction polynomial, schoolbook.
  std::vector<int64_t> poly_mul_mod(const std::vector<int64_t>& a,
                                    const std::vector<int64_t>& b) const {
    std::vector<int64_t> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
    for (int i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < k_; ++j) {
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
      }
    }
    for (int i = 2 * k_ - 2; i >= k_; --i) {
      int64_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (int j = 0; j < k_; ++j) {
        // red_ is monic, so x^k = -sum(red_[j] x^j).
        prod[i - k_ + j] = ((prod[i - k_ + j] - c * red_[j]) % p_ + p_) % p_;
      }
    }
    prod.resize(static_cast<std::size_t>(k_));
    return prod;
  }

  std::vector<int64_t> poly_pow_mod(std::vector<int64_t> base,
                                    int64_t e) const {
    std::vector<int64_t> r(static_cast<std::size_t>(k_), 0);
    r[0] = 1;
    while (e > 0) {
      if (e & 1) r = poly_mul_mod(r, base);
      base = poly_mul_mod(base, base);
      e >>= 1;
    }
    return r;
  }

  // --- construction ---

  void verify_irreducible() {
    if (red_[static_cast<std::size_t>(k_)] != 1) {
      fail("NoGenerator", "pinned reduction polynomial is not monic");
    }
    if (k_ <= 3) {
      // A quadratic or cubic is irreducible iff it has no root.
      for (int64_t x = 0; x < p_; ++x) {
        int64_t v = 0;
        for (int i = k_; i >= 0; --i) v = (v * x + red_[i]) % p_;
        if (v == 0) {
          fail("NoGenerator", "pinned reduction polynomial has a root");
        }
      }
      return;
    }
    // Degree >= 4: f is irreducible iff x^(p^k) == x (mod f) and
    // gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k.
    std::vector<int64_t> x(static_cast<std::size_t>(k_), 0);
    x[1] = 1;
    std::vector<int64_t> frob = x;  // x^(p^i) after i steps
    std::vector<std::vector<int64_t>> frob_at(static_cast<std::size_t>(k_) + 1);
    for (int i = 1; i <= k_; ++i) {
      frob = poly_pow_mod(frob, p_);
      frob_at[static_cast<std::size_t>(i)] = frob;
    }
    if (frob_at[static_cast<std::size_t>(k_)] != x) {
      fail("NoGenerator", "reduction polynomial fails x^(p^k) = x");
    }
    for (int64_t l : prime_factors(k_)) {
      std::vector<int64_t> g = frob_at[static_cast<std::size_t>(k_ / l)];
      g[1] = ((g[1] - 1) % p_ + p_) % p_;  // x^(p^(k/l)) - x
      if (!poly_coprime_with_red(g)) {
        fail("NoGenerator", "reduction polynomial has a proper factor");
      }
    }
  }

  // gcd(g, red_) == constant?
  bool poly_coprime_with_red(std::vector<int64_t> g) const {
    std::vector<int64_t> a = red_;  // degree k
    std::vector<int64_t> b = std::move(g);
    auto deg = [](const std::vector<int64_t>& v) {
      for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
        if (v[i] != 0) return i;
      }
      return -1;
    };
    auto inv_mod_p = [this](int64_t a0) {
      int64_t r = 1, base = a0 % p_, e = p_ - 2;
      while (e > 0) {
        if (e & 1) r = r * base % p_;
        base = base * base % p_;
        e >>= 1;
      }
      return r;
    };
    while (true) {
      int db = deg(b);
      if (db < 0) return deg(a) <= 0;
      if (db == 0) return true;
      int da = deg(a);
      if (da < db) {
        std::swap(a, b);
        continue;
      }
      // a -= lead(a)/lead(b) * x^(da-db) * b
      int64_t f = a[static_cast<std::size_t>(da)] *
                  inv_mod_p(b[static_cast<std::size_t>(db)]) % p_;
      for (int i = 0; i <= db; ++i) {
        std::size_t ia = static_cast<std::size_t>(da - db + i);
        a[ia] = ((a[ia] - f * b[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
      }
    }
  }

  int64_t find_prime_generator() const {
    if (p_ == 2) return 1;  // trivial multiplicative group
    std::vector<int64_t> fac = prime_factors(p_ - 1);
    for (int64_t g = 2; g < p_; ++g) {
      bool ok = true;
      for (int64_t l : fac) {
        if (detail::powmod_u64(static_cast<std::uint64_t>(g),
                               static_cast<std::uint64_t>((p_ - 1) / l),
                               static_cast<std::uint64_t>(p_)) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    fail("NoGenerator", "no primitive root found (internal bug)");
  }

  int64_t find_ext_generator() const {
    std::vector<int64_t> fac = prime_factors(q_ - 1);
    std::vector<int64_t> one(static_cast<std::size_t>(k_), 0);
    one[0] = 1;
    for (int64_t c = 2; c < q_; ++c) {
      std::vector<int64_t> cand = to_digits(c);
      bool ok = true;
      for (int64_t l : fac) {
        if (poly_pow_mod(cand, (q_ - 1) / l) == one) {
          ok = false;
          break;
        }
      }
      if (ok) return c;
    }
    fail("NoGenerator", "no multiplicative generator found (internal bug)");
  }

  void build_tables_prime() {
    exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
    dlog_.assign(static_cast<std::size_t>(q_), -1);
    int64_t cur = 1;
    for (int64_t u = 0; u < q_ - 1; ++u) {
      exp_[static_cast<std::size_t>(u)] = static_cast<std::int32_t>(cur);
      dlog_[static_cast<std::size_t>(cur)] = static_cast<std::int32_t>(u);
      cur = cur * gen_ % p_;
    }
    if (cur != 1) fail("NoGenerator", "generator order mismatch (internal bug)");
  }

  void build_tables_ext() {
    exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
    dlog_.assign(static_cast<std::size_t>(q_), -1);
    std::vector<int64_t> gen_digits = to_digits(gen_);
    std::vector<int64_t> cur(static_cast<std::size_t>(k_), 0);
    cur[0] = 1;
    for (int64_t u = 0; u < q_ - 1; ++u) {
      int64_t idx = from_digits(cur);
      exp_[static_cast<std::size_t>(u)] = static_cast<std::int32_t>(idx);
      dlog_[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(u);
      cur = poly_mul_mod(cur, gen_digits);
    }
    if (from_digits(cur) != 1) {
      fail("NoGenerator", "generator order mismatch (internal bug)");
    }
    for (int64_t i = 1; i < q_; ++i) {
      if (dlog_[static_cast<std::size_t>(i)] < 0) {
        fail("NoGenerator", "dlog table is not a bijection (internal bug)");
      }
    }
  }
};

}  // namespace mf
