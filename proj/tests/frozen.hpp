#pragma once

// Frozen reference fixtures computed by an independent implementation:
// residue-correlation table profiles with their quadratic-form data, Hall
// lambda ranges, product-construction parameter counts, shifted-square set
// members and lambda spreads, and character-sum spot values.

#include <cstdint>
#include <vector>

namespace mf::fixtures {

// One residue-class profile row: p = x^2 + coef*y^2 with the sign of y that
// reproduced every union, and the per-class periodic values for each union.
struct TableRow {
  std::int64_t p, x, y;
  int sign;
  std::vector<std::vector<std::int64_t>> profiles;  // one per listed union
};

// m = 4, (p-1)/4 even; the single union is C0 u C1.
inline const std::vector<TableRow> kTable1Even = {
    {17, 1, 2, +1, {{1, -7, 5, -3}}},
    {41, 5, 2, +1, {{1, -7, 5, -3}}},
    {73, 3, 4, +1, {{5, -11, 9, -7}}},
    {89, 5, 4, +1, {{5, -11, 9, -7}}},
    {97, 9, 2, -1, {{-7, 1, -3, 5}}},
    {113, 7, 4, +1, {{5, -11, 9, -7}}},
};

// m = 4, (p-1)/4 odd.
inline const std::vector<TableRow> kTable1Odd = {
    {5, 1, 1, -1, {{1, -3, 1, -3}}},
    {13, 3, 1, -1, {{1, -3, 1, -3}}},
    {29, 5, 1, -1, {{1, -3, 1, -3}}},
    {37, 1, 3, +1, {{-7, 5, -7, 5}}},
    {53, 7, 1, -1, {{1, -3, 1, -3}}},
    {61, 5, 3, +1, {{-7, 5, -7, 5}}},
    {101, 1, 5, -1, {{9, -11, 9, -11}}},
};

// m = 6, (p-1)/6 odd; unions C0uC1uC2, C0uC1uC3, C0uC2uC3 in that order.
inline const std::vector<TableRow> kTable2 = {
    {31, 2, 1, +1,
     {{7, -1, -9, 7, -1, -9}, {-1, -1, -1, -1, -1, -1},
      {-5, 3, -1, -5, 3, -1}}},
    {43, 4, 1, +1,
     {{7, -1, -9, 7, -1, -9}, {-1, -1, -1, -1, -1, -1},
      {-5, 3, -1, -5, 3, -1}}},
    {127, 10, 1, +1,
     {{7, -1, -9, 7, -1, -9}, {-1, -1, -1, -1, -1, -1},
      {-5, 3, -1, -5, 3, -1}}},
    {223, 14, 1, +1,
     {{7, -1, -9, 7, -1, -9}, {-1, -1, -1, -1, -1, -1},
      {-5, 3, -1, -5, 3, -1}}},
    {283, 16, 1, +1,
     {{7, -1, -9, 7, -1, -9}, {-1, -1, -1, -1, -1, -1},
      {-5, 3, -1, -5, 3, -1}}},
    {307, 8, 3, +1,
     {{23, -1, -25, 23, -1, -25}, {3, -1, -5, 3, -1, -5},
      {-9, 7, -1, -9, 7, -1}}},
    {439, 14, 3, +1,
     {{23, -1, -25, 23, -1, -25}, {3, -1, -5, 3, -1, -5},
      {-9, 7, -1, -9, 7, -1}}},
    {499, 16, 3, +1,
     {{23, -1, -25, 23, -1, -25}, {3, -1, -5, 3, -1, -5},
      {-9, 7, -1, -9, 7, -1}}},
};

// m = 6, (p-1)/6 even; same union order.
inline const std::vector<TableRow> kTable3 = {
    {109, 1, 2, -1,
     {{-19, -3, 13, -15, 1, 17}, {-15, 5, -3, 1, -7, 13},
      {-7, 5, -11, 9, -11, 9}}},
    {157, 7, 2, -1,
     {{-19, -3, 13, -15, 1, 17}, {-15, 5, -3, 1, -7, 13},
      {-7, 5, -11, 9, -11, 9}}},
    {229, 11, 2, -1,
     {{-19, -3, 13, -15, 1, 17}, {-15, 5, -3, 1, -7, 13},
      {-7, 5, -11, 9, -11, 9}}},
    {277, 13, 2, +1,
     {{13, -3, -19, 17, 1, -15}, {9, -11, 5, -7, 9, -11},
      {1, -3, 5, -15, 13, -7}}},
    {397, 17, 2, +1,
     {{13, -3, -19, 17, 1, -15}, {9, -11, 5, -7, 9, -11},
      {1, -3, 5, -15, 13, -7}}},
    {433, 1, 4, +1,
     {{29, -3, -35, 33, 1, -31}, {21, -19, 9, -11, 17, -23},
      {5, -7, 13, -27, 25, -15}}},
    {457, 5, 4, +1,
     {{29, -3, -35, 33, 1, -31}, {21, -19, 9, -11, 17, -23},
      {5, -7, 13, -27, 25, -15}}},
};

// Sextic unions over primes of the form x^2 + 27 y^2 with (p-1)/6 odd:
// lambda ranges of C0uC1uC3 and C0uC1uC4, and which union (if either) is a
// perfect difference set. Only the y = 1 cases admit one.
struct HallRow {
  std::int64_t p;
  int which;  // 0: C0uC1uC3 is perfect, 1: C0uC1uC4, -1: neither
  std::int64_t l013_min, l013_max, l014_min, l014_max;
};

inline const std::vector<HallRow> kHallRows = {
    {31, 0, 7, 7, 6, 8},          {43, 0, 10, 10, 9, 11},
    {127, 0, 31, 31, 30, 32},     {223, 0, 55, 55, 54, 56},
    {283, 0, 70, 70, 69, 71},     {307, -1, 75, 77, 74, 78},
    {439, -1, 108, 110, 107, 111}, {499, -1, 123, 125, 122, 126},
    {1051, 0, 262, 262, 261, 263}, {1327, -1, 328, 334, 327, 335},
    {1399, -1, 347, 351, 348, 350}, {1423, -1, 352, 358, 351, 359},
    {1459, -1, 361, 367, 362, 366}, {1471, 0, 367, 367, 366, 368},
    {1579, -1, 391, 397, 390, 398}, {1627, 0, 406, 406, 405, 407},
    {1699, -1, 421, 427, 422, 426},
};

// Every proper-subfield instance of the product construction up to q = 2^10
// with the trace-one inner set; all are (q-1, q/2, q/4).
struct GmwRow {
  std::int64_t q, s, k, lmin, lmax;
};

inline const std::vector<GmwRow> kGmwRows = {
    {4, 2, 2, 1, 1},        {8, 2, 4, 2, 2},       {16, 2, 8, 4, 4},
    {16, 4, 8, 4, 4},       {32, 2, 16, 8, 8},     {64, 2, 32, 16, 16},
    {64, 4, 32, 16, 16},    {64, 8, 32, 16, 16},   {128, 2, 64, 32, 32},
    {256, 2, 128, 64, 64},  {256, 4, 128, 64, 64}, {256, 16, 128, 64, 64},
    {512, 2, 256, 128, 128}, {512, 8, 256, 128, 128},
    {1024, 2, 512, 256, 256}, {1024, 4, 512, 256, 256},
    {1024, 32, 512, 256, 256},
};

// Shifted-square sets: size, lambda spread, and (for small q) the members as
// field-element labels (residues for prime q, packed polynomial coefficients
// for prime powers).
struct SidRow {
  std::int64_t q, size, lmin, lmax;
  std::vector<std::int64_t> members;  // empty when not frozen
};

inline const std::vector<SidRow> kSidRows = {
    {7, 3, 1, 2, {1, 3, 6}},
    {9, 4, 1, 2, {1, 2, 5, 8}},
    {11, 5, 2, 3, {2, 3, 4, 8, 10}},
    {27, 13, 6, 7, {}},
    {81, 40, 19, 20, {}},
    {103, 51, 25, 26, {}},
    {121, 60, 29, 30, {}},
};

// Character-sum spot values.
inline constexpr double kGaussGf5J2Re = 2.23606797749979;  // +sqrt(5)

struct EisensteinRow {
  std::int64_t q, s, j;
  double re, im;
};

inline const std::vector<EisensteinRow> kEisensteinRows = {
    {16, 2, 1, -0.5000000000000009, -1.9364916731037078},
    {16, 4, 1, 0.5, 1.9364916731037085},
    {64, 8, 1, -2.8256025858453846, -0.1263725716438392},
    {81, 9, 1, -2.22296044593222, 2.0145587248379795},
};

struct KatzRow {
  std::int64_t q;
  std::vector<std::int64_t> alphas, betas;
  double lhs, bound;
};

inline const std::vector<KatzRow> kKatzRows = {
    {7, {0, 1}, {2, 3}, 111.12155506471281, 259.2836284843299},
    {9, {1}, {3}, 2.1965868457847176e-14, 27.0},
};

}  // namespace mf::fixtures
