#pragma once
// Self-contained verification suites: character-sum identities, set-family
// parameter counts, spectral deviation bounds, and the residue-correlation
// tables. Each suite returns named pass/fail checks; callers aggregate.
//
// The sampled checks use a fixed-seed linear congruential generator so that
// every run examines exactly the same tuples.

#include <cstdint>
#include <string>
#include <vector>

#include "mf/charsums.hpp"
#include "mf/error.hpp"
#include "mf/field.hpp"
#include "mf/seq.hpp"
#include "mf/sets.hpp"
#include "mf/spectral.hpp"

namespace mf::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::uint64_t lcg(std::uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 33;
}

inline std::vector<std::pair<int64_t, int>> prime_powers_upto(int64_t qmax) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p <= qmax; ++p) {
    if (!is_prime(p)) continue;
    int64_t q = p;
    int k = 1;
    while (q <= qmax) {
      out.push_back({p, k});
      if (q > qmax / p) break;
      q *= p;
      ++k;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int64_t qa = 1, qb = 1;
    for (int i = 0; i < a.second; ++i) qa *= a.first;
    for (int i = 0; i < b.second; ++i) qb *= b.first;
    return qa < qb;
  });
  return out;
}

inline FieldCtx make_field(int64_t p, int k) {
  return k == 1 ? FieldCtx::prime_field(p) : FieldCtx::ext_field(p, k);
}

}  // namespace detail

// Gauss magnitudes and conjugation, Jacobi identities, Eisenstein
// evaluations, and the character-sum bound, over every prime power q <= qmax.
// All tolerances are 1e-9 scaled by the identity's natural magnitude.
inline std::vector<Check> charsums_suite(int64_t qmax) {
  std::vector<Check> checks;
  for (auto [p, k] : detail::prime_powers_upto(qmax)) {
    FieldCtx F = detail::make_field(p, k);
    const int64_t q = F.q();
    const double qd = static_cast<double>(q);
    const double sq = std::sqrt(qd);
    const double tol_q = 1e-9 * qd;
    const double tol_sq = 1e-9 * sq;
    const double tol_q32 = 1e-9 * qd * sq;
    GaussTable t = gauss_table(F);
    int64_t neg1 = F.neg(1);
    std::string base = "q=" + std::to_string(q) + "/";

    {
      Check c{base + "gauss", true, ""};
      if (std::abs(t.g[0] - cdouble(-1.0, 0.0)) > tol_q) {
        c.pass = false;
        c.detail = "trivial character sum is not -1";
      }
      for (int64_t j = 1; j < q - 1 && c.pass; ++j) {
        if (std::abs(std::abs(t.g[static_cast<std::size_t>(j)]) - sq) > tol_q) {
          c.pass = false;
          c.detail = "magnitude at j=" + std::to_string(j);
        }
        cdouble lhs = t.g[static_cast<std::size_t>(j)] *
                      t.g[static_cast<std::size_t>(q - 1 - j)];
        cdouble rhs = char_eval(F, j, neg1) * qd;
        if (std::abs(lhs - rhs) > tol_q) {
          c.pass = false;
          c.detail = "conjugation identity at j=" + std::to_string(j);
        }
      }
      for (int64_t j : {int64_t{0}, int64_t{1}, (q - 1) / 2, q - 2}) {
        if (j < 0 || j >= q - 1 || !c.pass) continue;
        if (std::abs(gauss_direct(F, j) - t.g[static_cast<std::size_t>(j)]) >
            tol_q) {
          c.pass = false;
          c.detail = "direct evaluation at j=" + std::to_string(j);
        }
      }
      checks.push_back(std::move(c));
    }

    {
      Check c{base + "jacobi", true, ""};
      std::vector<std::pair<int64_t, int64_t>> pairs;
      if (q <= 64) {
        for (int64_t a = 0; a < q - 1; ++a) {
          for (int64_t b = 0; b < q - 1; ++b) pairs.push_back({a, b});
        }
      } else {
        pairs = {{0, 0}, {0, 1}, {1, 0}};
        if (q > 3) pairs.push_back({1, q - 2});
        std::uint64_t st = 0x243F6A8885A308D3ULL ^ static_cast<std::uint64_t>(q);
        for (int i = 0; i < 200; ++i) {
          int64_t a = static_cast<int64_t>(detail::lcg(st) % static_cast<std::uint64_t>(q - 1));
          int64_t b = static_cast<int64_t>(detail::lcg(st) % static_cast<std::uint64_t>(q - 1));
          pairs.push_back({a, b});
        }
      }
      for (auto [a, b] : pairs) {
        if (!c.pass) break;
        cdouble J = jacobi(F, a, b);
        bool ta = char_trivial(F, a), tb = char_trivial(F, b);
        auto flag = [&](const std::string& what) {
          c.pass = false;
          c.detail = what + " at (" + std::to_string(a) + "," +
                     std::to_string(b) + ")";
        };
        if (ta && tb) {
          if (std::abs(J - cdouble(qd, 0.0)) > tol_q) flag("trivial pair value");
          continue;
        }
        if (ta != tb) {
          if (std::abs(J) > tol_sq) flag("mixed pair should vanish");
          continue;
        }
        int64_t ab = (a + b) % (q - 1);
        if (char_trivial(F, ab)) {
          if (std::abs(std::abs(J) - 1.0) > tol_sq) flag("unit magnitude");
        } else {
          if (std::abs(std::abs(J) - sq) > tol_sq) flag("sqrt(q) magnitude");
          cdouble J2 = jacobi(F, (q - 1 - a) % (q - 1), ab);
          cdouble rhs = char_eval(F, a, neg1) * qd;
          if (std::abs(J * J2 - rhs) > tol_q) flag("paired product identity");
        }
        cdouble gg = t.g[static_cast<std::size_t>(a)] *
                     t.g[static_cast<std::size_t>(b)] *
                     std::conj(t.g[static_cast<std::size_t>(ab)]);
        if (std::abs(J * qd - gg) > tol_q32) flag("Gauss product identity");
        if (std::abs(jacobi_from_table(F, t, a, b) - J) > tol_q) {
          flag("table path disagrees with direct path");
        }
      }
      checks.push_back(std::move(c));
    }

    if (k > 1) {
      Check c{base + "eisenstein", true, ""};
      for (int d = 1; d < k && c.pass; ++d) {
        if (k % d != 0) continue;
        int64_t s = 1;
        for (int i = 0; i < d; ++i) s *= p;
        for (int64_t j = 1; j < q - 1; ++j) {
          cdouble direct = eisenstein(F, s, j);
          cdouble pred = eisenstein_predicted(F, t, s, j);
          if (std::abs(direct - pred) > tol_q) {
            c.pass = false;
            c.detail = "s=" + std::to_string(s) + " j=" + std::to_string(j);
            break;
          }
        }
      }
      checks.push_back(std::move(c));
    }

    if (q >= 3 && q <= 4096) {
      Check c{base + "katz", true, ""};
      std::uint64_t st = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(q);
      for (int i = 0; i < 200 && c.pass; ++i) {
        int r = 1 + static_cast<int>(detail::lcg(st) % 3);
        int s = 1 + static_cast<int>(detail::lcg(st) % 3);
        std::vector<int64_t> alphas, betas;
        for (int j = 0; j < r; ++j) {
          alphas.push_back(static_cast<int64_t>(
              detail::lcg(st) % static_cast<std::uint64_t>(q - 1)));
        }
        for (int j = 0; j < s; ++j) {
          betas.push_back(static_cast<int64_t>(
              detail::lcg(st) % static_cast<std::uint64_t>(q - 1)));
        }
        try {
          KatzResult kr = katz_check(F, t, alphas, betas);
          if (!(kr.lhs <= kr.bound + 1e-6)) {
            c.pass = false;
            c.detail = "bound violated at tuple " + std::to_string(i);
          }
        } catch (const Error& e) {
          if (std::string(e.name()) != "PermutedMultisets") {
            c.pass = false;
            c.detail = e.what();
          }
        }
      }
      checks.push_back(std::move(c));
    }
  }
  return checks;
}

// Difference-set parameter counts for every family at desk scale.
inline std::vector<Check> sets_suite() {
  std::vector<Check> checks;
  for (int k = 2; k <= 10; ++k) {
    int64_t q = int64_t{1} << k;
    FieldCtx F = FieldCtx::ext_field(2, k);
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      int64_t s = int64_t{1} << d;
      FieldCtx Fs = d == 1 ? FieldCtx::prime_field(2) : FieldCtx::ext_field(2, d);
      SubsetOfGroup B = build_trace_one(Fs);
      SubsetOfGroup D = build_gmw(F, s, B);
      DiffSetCheck dc = diff_check(D);
      Check c{"gmw/q=" + std::to_string(q) + "/s=" + std::to_string(s), true, ""};
      if (!dc.is_difference_set || dc.n != q - 1 || dc.k != q / 2 ||
          dc.lambda_min != q / 4) {
        c.pass = false;
        c.detail = "expected (" + std::to_string(q - 1) + "," +
                   std::to_string(q / 2) + "," + std::to_string(q / 4) + ")";
      }
      if (c.pass && char_value_check(D) > 1e-6 * static_cast<double>(q - 1)) {
        c.pass = false;
        c.detail = "character magnitudes deviate";
      }
      checks.push_back(std::move(c));
    }
  }
  for (int64_t p : {31, 43, 127, 223, 283}) {
    Check c{"hall/p=" + std::to_string(p), true, ""};
    try {
      SubsetOfGroup D = build_hall(FieldCtx::prime_field(p));
      DiffSetCheck dc = diff_check(D);
      if (!dc.is_hadamard || dc.k != (p - 1) / 2 || dc.lambda_min != (p - 3) / 4) {
        c.pass = false;
        c.detail = "not a Hadamard difference set";
      }
    } catch (const Error& e) {
      c.pass = false;
      c.detail = e.what();
    }
    checks.push_back(std::move(c));
  }
  for (auto [p, k] : std::vector<std::pair<int64_t, int>>{
           {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}, {7, 2}}) {
    FieldCtx F = detail::make_field(p, k);
    int64_t q = F.q();
    SubsetOfGroup D = build_sidelnikov(F);
    DiffSetCheck dc = diff_check(D);
    Check c{"sidelnikov/q=" + std::to_string(q), true, ""};
    if (D.size() != (q - 1) / 2 || dc.is_difference_set ||
        dc.lambda_max - dc.lambda_min < 1) {
      c.pass = false;
      c.detail = "expected an almost difference set of size (q-1)/2";
    }
    checks.push_back(std::move(c));
  }
  for (int64_t p : {7, 11, 19, 23, 31, 43, 47}) {
    SubsetOfGroup D = build_cyclotomic(FieldCtx::prime_field(p), 2, {0});
    DiffSetCheck dc = diff_check(D);
    Check c{"paley/p=" + std::to_string(p), true, ""};
    if (!dc.is_hadamard || dc.k != (p - 1) / 2) {
      c.pass = false;
      c.detail = "expected a Hadamard difference set";
    }
    checks.push_back(std::move(c));
  }
  for (int64_t p : {13, 17, 29}) {
    SubsetOfGroup D = build_cyclotomic(FieldCtx::prime_field(p), 2, {0});
    DiffSetCheck dc = diff_check(D);
    Check c{"paley/p=" + std::to_string(p), true, ""};
    if (dc.is_difference_set || dc.lambda_max - dc.lambda_min < 1 ||
        dc.k != (p - 1) / 2) {
      c.pass = false;
      c.detail = "expected an almost difference set";
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

// Deviation-vs-bound and imaginary-residue checks for one built family.
inline std::vector<Check> spectral_suite(const SubsetOfGroup& D) {
  std::vector<Check> checks;
  SpectralReport rep = lf_deviation(D);
  std::string base = rep.family + "/n=" + std::to_string(rep.n) + "/";
  {
    Check c{base + "bound", true, ""};
    if (!rep.bound) {
      c.pass = false;
      c.detail = "no bound applies to this family";
    } else if (!(rep.max_dev <= *rep.bound + 1e-6)) {
      c.pass = false;
      c.detail = "max_dev " + std::to_string(rep.max_dev) + " exceeds bound " +
                 std::to_string(*rep.bound);
    }
    checks.push_back(std::move(c));
  }
  {
    Check c{base + "imag", true, ""};
    if (!(rep.max_imag < 1e-9 * static_cast<double>(rep.n))) {
      c.pass = false;
      c.detail = "imaginary residue too large";
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

inline std::vector<Check> tables_suite(int64_t m,
                                       const std::vector<int64_t>& primes) {
  std::vector<Check> checks;
  for (int64_t p : primes) {
    Check c{"table/m=" + std::to_string(m) + "/p=" + std::to_string(p), true, ""};
    try {
      TableCheckReport rep = table_check(FieldCtx::prime_field(p), m);
      if (!rep.pass) {
        c.pass = false;
        c.detail = "neither sign of y reproduces the table";
      }
    } catch (const Error& e) {
      c.pass = false;
      c.detail = e.what();
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace mf::verify
