#pragma once

// Shared helpers for the test binaries: prime-power factorization into a
// field context, family construction from the oracle tags, and the same
// fixed-seed generator the verification suites use.

#include <cstdint>
#include <string>
#include <vector>

#include "mf/field.hpp"
#include "mf/seq.hpp"
#include "mf/sets.hpp"

namespace mf::test {

inline std::uint64_t lcg(std::uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 33;
}

inline FieldCtx field_of_order(int64_t q) {
  for (int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    int k = 0;
    int64_t v = q;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    return FieldCtx::ext_field(p, k);
  }
  return FieldCtx::prime_field(q);
}

// Families keyed the way the oracle tables key them. "cyc2"/"cyc4"/"cyc6"
// are the canonical class unions {0}, {0,1}, {0,1,3}; "paley" and
// "paley_sweep" are the quadratic-residue set; "gmw" is the s = 2 instance
// with the trivial inner set.
inline SubsetOfGroup build_tag(const std::string& tag, int64_t size) {
  if (tag == "paley" || tag == "paley_sweep" || tag == "cyc2") {
    return build_cyclotomic(FieldCtx::prime_field(size), 2, {0});
  }
  if (tag == "cyc4") {
    return build_cyclotomic(FieldCtx::prime_field(size), 4, {0, 1});
  }
  if (tag == "cyc6") {
    return build_cyclotomic(FieldCtx::prime_field(size), 6, {0, 1, 3});
  }
  if (tag == "cyclotomic") {
    return build_cyclotomic(FieldCtx::prime_field(size), 4, {0, 1});
  }
  if (tag == "hall") {
    return build_hall(FieldCtx::prime_field(size));
  }
  if (tag == "sidelnikov") {
    return build_sidelnikov(field_of_order(size));
  }
  if (tag == "gmw") {
    FieldCtx F = field_of_order(size);
    return build_gmw(F, 2, build_trace_one(FieldCtx::prime_field(2)));
  }
  fail("UnknownFamily", "no builder for tag " + tag);
}

// A +/-1 sequence of length t from the fixed-seed generator.
inline LittlewoodSeq random_seq(std::uint64_t& state, int64_t t) {
  LittlewoodSeq f;
  f.family = "random";
  f.n = t;
  f.t = t;
  f.coeffs.resize(static_cast<std::size_t>(t));
  for (auto& a : f.coeffs) a = (lcg(state) & 1) ? 1 : -1;
  return f;
}

}  // namespace mf::test
