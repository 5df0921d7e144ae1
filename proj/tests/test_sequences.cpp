#include <doctest.h>

#include <numeric>
#include <vector>

#include "qdyck/generation.hpp"
#include "qdyck/sequences.hpp"
#include "qdyck/validity.hpp"

using namespace qdyck;

namespace {

std::vector<Count> counts(std::initializer_list<long long> values) {
  return std::vector<Count>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("generalized Fibonacci values") {
  CHECK(gfib_table(2, 5) == counts({1, 1, 2, 3, 5, 8}));
  CHECK(gfib(3, 4) == 7);
  CHECK(gfib(2, 0) == 1);
  CHECK(gfib(5, 0) == 1);
  CHECK(gfib(2, -3) == 0);
  CHECK(gfib_table(4, 4) == counts({1, 1, 2, 4, 8}));
  CHECK_THROWS_AS(gfib(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(gfib_table(2, 100, 50), CapExceeded);
}

TEST_CASE("unit-slope recurrence values") {
  CHECK(w_unit(2, 3) == 3);
  CHECK(w_unit_table(2, 8) == counts({1, 1, 2, 3, 4, 6, 9, 13, 19}));
  for (int s = 1; s <= 5; ++s) {
    for (int n = 1; n <= s + 1; ++n) CHECK(w_unit(s, n) == n);
    CHECK(w_unit(s, 0) == 1);
  }
  for (int n = 0; n <= 20; ++n) CHECK(w_unit(1, n) == gfib(2, n));
}

TEST_CASE("general-slope recurrence values") {
  CHECK(w_general(RationalSlope(4, 5), 4) == 5);
  CHECK(w_general_table(RationalSlope(4, 5), 4) == counts({1, 1, 2, 3, 5}));
  // first departure from the Fibonacci numbers for q = 4/5 is at n = 10
  CHECK(w_general_table(RationalSlope(4, 5), 10) ==
        counts({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 88}));
}

TEST_CASE("recurrence reduction identities") {
  for (int s = 1; s <= 5; ++s) {
    const auto general = w_general_table(RationalSlope(1, s), 50);
    const auto unit = w_unit_table(s, 50);
    CHECK(general == unit);
  }
  for (int q = 1; q <= 4; ++q) {
    const auto general = w_general_table(RationalSlope(q, 1), 50);
    const auto fib = gfib_table(q + 1, 50);
    CHECK(general == fib);
  }
}

TEST_CASE("sequence values count the generated sets") {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      if (std::gcd(r, s) != 1) continue;
      const RationalSlope slope(r, s);
      const auto w = w_general_table(slope, 10);
      for (int n = 0; n <= 10; ++n) {
        CHECK(Count(generate_general(n, slope).members.size()) == w[n]);
        CHECK(Count(brute_force(n, slope).members.size()) == w[n]);
      }
    }
  }
}

TEST_CASE("tables are monotone and self-consistent") {
  for (int r = 1; r <= 5; ++r) {
    for (int s = 1; s <= 5; ++s) {
      if (std::gcd(r, s) != 1) continue;
      const auto table = w_general_table(RationalSlope(r, s), 60);
      for (int n = 1; n <= 60; ++n) CHECK(table[n] >= table[n - 1]);
    }
  }

  const RationalSlope slope(4, 5);
  const auto w = w_general_table(slope, 80);

  // recompute every entry beyond the band from its predecessors
  std::vector<int> quota;
  for (int p = 1; p <= slope.r; ++p) quota.push_back(required_valleys(p, slope));
  for (int n = slope.r + slope.s + 1; n <= 80; ++n) {
    Count sum = w[n - 1];
    for (int p = 1; p <= slope.r; ++p) sum += w[n - p - quota[p - 1]];
    CHECK(sum == w[n]);
  }

  // scalar evaluation agrees with the table
  CHECK(w_general(slope, 80) == w[80]);
  CHECK(w_general(slope, 0) == 1);
}

TEST_CASE("seq_table carries its parameter") {
  const SequenceTable rational = seq_table(RationalSlope(4, 5), 4);
  CHECK_FALSE(rational.integer_form);
  CHECK(rational.values == counts({1, 1, 2, 3, 5}));

  const SequenceTable fib = seq_table(2, 10);
  CHECK(fib.integer_form);
  CHECK(fib.slope == RationalSlope(1, 1));
  CHECK(fib.values == counts({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
  CHECK_THROWS_AS(seq_table(RationalSlope(1, 2), 200, 100), CapExceeded);
}
