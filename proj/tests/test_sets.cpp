#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "frozen.hpp"
#include "helpers.hpp"
#include "mf/sets.hpp"

using mf::FieldCtx;
using mf::SubsetOfGroup;

TEST_CASE("product construction hits (q-1, q/2, q/4) for every subfield",
          "[sets]") {
  for (const auto& row : mf::fixtures::kGmwRows) {
    INFO("q=" << row.q << " s=" << row.s);
    FieldCtx F = mf::test::field_of_order(row.q);
    FieldCtx Fs = mf::test::field_of_order(row.s);
    SubsetOfGroup B = mf::build_trace_one(Fs);
    SubsetOfGroup D = mf::build_gmw(F, row.s, B);
    CHECK(D.family == "gmw");
    CHECK(D.s == row.s);
    CHECK(D.inner == (row.s == 2 ? "trivial" : "singer"));
    mf::DiffSetCheck dc = mf::diff_check(D);
    CHECK(dc.n == row.q - 1);
    CHECK(dc.k == row.k);
    CHECK(dc.lambda_min == row.lmin);
    CHECK(dc.lambda_max == row.lmax);
    CHECK(dc.is_difference_set);
    CHECK(dc.is_hadamard);
    CHECK(mf::char_value_check(D) < 1e-6 * static_cast<double>(D.n));
  }
}

TEST_CASE("s = 2 product set coincides with the trace-one set", "[sets]") {
  for (int k = 2; k <= 10; ++k) {
    FieldCtx F = FieldCtx::ext_field(2, k);
    SubsetOfGroup direct = mf::build_trace_one(F);
    SubsetOfGroup product =
        mf::build_gmw(F, 2, mf::build_trace_one(FieldCtx::prime_field(2)));
    CHECK(product.membership == direct.membership);
  }
}

TEST_CASE("product construction validates its inner set", "[sets]") {
  FieldCtx F = FieldCtx::ext_field(2, 6);
  FieldCtx F8 = FieldCtx::ext_field(2, 3);

  SubsetOfGroup small = mf::build_trace_one(F8);
  small.membership[static_cast<std::size_t>(
      small.member_positions().front())] = 0;
  CHECK_THROWS_WITH(mf::build_gmw(F, 8, small),
                    Catch::Matchers::StartsWith("BadB"));

  SubsetOfGroup skew;  // exponents {0,1,2,3}: differences are not balanced
  skew.group = mf::GroupKind::Multiplicative;
  skew.n = 7;
  skew.q = 8;
  skew.membership = {1, 1, 1, 1, 0, 0, 0};
  CHECK_THROWS_WITH(mf::build_gmw(F, 8, skew),
                    Catch::Matchers::StartsWith("BadB"));

  SubsetOfGroup not2;  // for s = 2 the only valid inner set is {1}
  not2.group = mf::GroupKind::Multiplicative;
  not2.n = 1;
  not2.q = 2;
  not2.membership = {0};
  CHECK_THROWS_WITH(mf::build_gmw(F, 2, not2),
                    Catch::Matchers::StartsWith("BadB"));

  CHECK_THROWS_WITH(mf::build_gmw(F, 64, mf::build_trace_one(F)),
                    Catch::Matchers::StartsWith("NotSubfield"));
  FieldCtx F27 = FieldCtx::ext_field(3, 3);
  CHECK_THROWS_WITH(
      mf::build_gmw(F27, 3, mf::build_trace_one(FieldCtx::prime_field(2))),
      Catch::Matchers::StartsWith("WrongForm"));
}

TEST_CASE("sextic unions over x^2 + 27 primes", "[sets]") {
  for (const auto& row : mf::fixtures::kHallRows) {
    INFO("p=" << row.p);
    FieldCtx F = FieldCtx::prime_field(row.p);
    mf::DiffSetCheck c013 =
        mf::diff_check(mf::build_cyclotomic(F, 6, {0, 1, 3}));
    mf::DiffSetCheck c014 =
        mf::diff_check(mf::build_cyclotomic(F, 6, {0, 1, 4}));
    CHECK(c013.lambda_min == row.l013_min);
    CHECK(c013.lambda_max == row.l013_max);
    CHECK(c014.lambda_min == row.l014_min);
    CHECK(c014.lambda_max == row.l014_max);
    if (row.which >= 0) {
      SubsetOfGroup D = mf::build_hall(F);
      CHECK(D.family == "hall");
      std::vector<int64_t> expect =
          row.which == 0 ? std::vector<int64_t>{0, 1, 3}
                         : std::vector<int64_t>{0, 1, 4};
      CHECK(D.classes == expect);
      CHECK(mf::diff_check(D).is_hadamard);
    } else {
      CHECK_THROWS_WITH(mf::build_hall(F),
                        Catch::Matchers::StartsWith("NotHallPrime"));
    }
  }
  for (int64_t p : {5, 7, 53, 61}) {
    CHECK_THROWS_WITH(mf::build_hall(FieldCtx::prime_field(p)),
                      Catch::Matchers::StartsWith("NotHallPrime"));
  }
}

TEST_CASE("shifted-square sets are almost difference sets", "[sets]") {
  for (const auto& row : mf::fixtures::kSidRows) {
    INFO("q=" << row.q);
    FieldCtx F = mf::test::field_of_order(row.q);
    SubsetOfGroup D = mf::build_sidelnikov(F);
    CHECK(D.size() == row.size);
    CHECK(D.size() == (row.q - 1) / 2);
    mf::DiffSetCheck dc = mf::diff_check(D);
    CHECK(dc.lambda_min == row.lmin);
    CHECK(dc.lambda_max == row.lmax);
    CHECK_FALSE(dc.is_difference_set);
    CHECK(dc.lambda_max - dc.lambda_min >= 1);
    if (!row.members.empty()) {
      std::vector<int64_t> elems;
      for (int64_t u : D.member_positions()) elems.push_back(F.exp(u));
      std::sort(elems.begin(), elems.end());
      std::vector<int64_t> want(row.members.begin(), row.members.end());
      CHECK(elems == want);
    }
  }
  CHECK_THROWS_WITH(mf::build_sidelnikov(FieldCtx::ext_field(2, 4)),
                    Catch::Matchers::StartsWith("EvenCharacteristic"));
}

TEST_CASE("cyclotomic construction validates and tags", "[sets]") {
  FieldCtx F13 = FieldCtx::prime_field(13);
  SubsetOfGroup P = mf::build_cyclotomic(F13, 2, {0});
  CHECK(P.family == "paley");
  CHECK(P.m == 2);
  CHECK(P.size() == 6);
  CHECK(P.membership[0] == 0);  // zero never belongs

  SubsetOfGroup C = mf::build_cyclotomic(F13, 4, {1, 0});
  CHECK(C.family == "cyclotomic");
  CHECK(C.classes == std::vector<int64_t>{0, 1});  // sorted on the way in

  CHECK_THROWS_WITH(mf::build_cyclotomic(FieldCtx::prime_field(7), 4, {0, 1}),
                    Catch::Matchers::StartsWith("BadModulus"));
  CHECK_THROWS_WITH(mf::build_cyclotomic(F13, 3, {0}),
                    Catch::Matchers::StartsWith("BadModulus"));
  CHECK_THROWS_WITH(mf::build_cyclotomic(F13, 4, {0}),
                    Catch::Matchers::StartsWith("BadS"));
  CHECK_THROWS_WITH(mf::build_cyclotomic(F13, 4, {0, 4}),
                    Catch::Matchers::StartsWith("BadS"));
  CHECK_THROWS_WITH(mf::build_cyclotomic(F13, 4, {1, 1}),
                    Catch::Matchers::StartsWith("BadS"));
  CHECK_THROWS_WITH(mf::build_cyclotomic(FieldCtx::ext_field(3, 2), 2, {0}),
                    Catch::Matchers::StartsWith("NotPrime"));
}

TEST_CASE("translating the class indices scales the set", "[sets]") {
  for (int64_t p : {13, 29, 37, 61}) {
    FieldCtx F = FieldCtx::prime_field(p);
    for (int64_t m : {2, 4, 6}) {
      if ((p - 1) % m != 0) continue;
      std::vector<int64_t> S;
      for (int64_t i = 0; i < m / 2; ++i) S.push_back((i * i + i) % m);
      std::sort(S.begin(), S.end());
      S.erase(std::unique(S.begin(), S.end()), S.end());
      while (static_cast<int64_t>(S.size()) < m / 2) {
        for (int64_t c = 0; c < m; ++c) {
          if (std::find(S.begin(), S.end(), c) == S.end()) {
            S.push_back(c);
            break;
          }
        }
      }
      std::sort(S.begin(), S.end());
      SubsetOfGroup D0 = mf::build_cyclotomic(F, m, S);
      for (int64_t h = 1; h < m; ++h) {
        std::vector<int64_t> Sh;
        for (int64_t s : S) Sh.push_back((s + h) % m);
        SubsetOfGroup Dh = mf::build_cyclotomic(F, m, Sh);
        int64_t winv = F.exp(p - 1 - h);  // omega^{-h}
        for (int64_t x = 1; x < p; ++x) {
          REQUIRE(Dh.membership[static_cast<std::size_t>(x)] ==
                  D0.membership[static_cast<std::size_t>(F.mul(x, winv))]);
        }
      }
    }
  }
}

TEST_CASE("difference counting paths are identical", "[sets]") {
  std::uint64_t state = 0xC0FFEE123456789AULL;
  for (int i = 0; i < 100; ++i) {
    int64_t n = 4 + static_cast<int64_t>(mf::test::lcg(state) % 4093);
    SubsetOfGroup D;
    D.n = n;
    D.q = n;
    D.membership.resize(static_cast<std::size_t>(n));
    for (auto& b : D.membership) {
      b = static_cast<std::uint8_t>(mf::test::lcg(state) & 1);
    }
    REQUIRE(mf::detail::diff_counts_pairwise(D) ==
            mf::detail::diff_counts_fft(D));
  }
  SubsetOfGroup big;
  big.n = (int64_t{1} << 20) + 1;
  CHECK_THROWS_WITH(mf::diff_check(big),
                    Catch::Matchers::StartsWith("TooLarge"));
}

TEST_CASE("asymptotic family parameter", "[sets]") {
  FieldCtx F13 = FieldCtx::prime_field(13);
  CHECK(mf::family_nu(mf::build_cyclotomic(F13, 2, {0})) == 1.0);
  CHECK(mf::family_nu(mf::build_cyclotomic(F13, 4, {0, 1})) == 1.0);
  // {0,2} differs by the half-period on both pairs: same limit as {0}
  CHECK(mf::family_nu(mf::build_cyclotomic(F13, 4, {0, 2})) == 1.0);
  CHECK(mf::family_nu(mf::build_hall(FieldCtx::prime_field(31))) ==
        Catch::Approx(1.0 / 9.0).margin(1e-15));
  CHECK(mf::family_nu(mf::build_sidelnikov(FieldCtx::prime_field(11))) == 0.0);
  FieldCtx F16 = FieldCtx::ext_field(2, 4);
  CHECK(mf::family_nu(mf::build_gmw(
            F16, 2, mf::build_trace_one(FieldCtx::prime_field(2)))) == 0.0);
  // (p-1)/m even forces the parameter to 1 regardless of the classes
  FieldCtx F17 = FieldCtx::prime_field(17);
  CHECK(mf::family_nu(mf::build_cyclotomic(F17, 4, {0, 2})) == 1.0);
}
