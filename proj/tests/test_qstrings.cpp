#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "qdyck/qstrings.hpp"
#include "qdyck/sequences.hpp"

using namespace qdyck;

namespace {

// Independent oracle for |B_n(1^k)|: filter all strings by direct run scan.
long long brute_avoiding(int n, int k) {
  long long count = 0;
  for (unsigned long long x = 0; x < (1ULL << n); ++x) {
    int run = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      run = (x >> i) & 1 ? run + 1 : 0;
      if (run >= k) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("decomposition into maximal factors") {
  const auto d = decompose("110001");
  CHECK(d.leading_ones == 2);
  CHECK(d.factors == std::vector<std::pair<int, int>>{{3, 1}});

  const auto d2 = decompose("0011");
  CHECK(d2.leading_ones == 0);
  CHECK(d2.factors == std::vector<std::pair<int, int>>{{2, 2}});

  const auto d3 = decompose("");
  CHECK(d3.leading_ones == 0);
  CHECK(d3.factors.empty());

  CHECK(decompose("1010").factors == std::vector<std::pair<int, int>>{{1, 1}, {1, 0}});
  CHECK_THROWS_AS(decompose("01x"), std::invalid_argument);
}

TEST_CASE("q-decreasing membership") {
  CHECK_FALSE(is_q_decreasing("01", RationalSlope(1, 1)));
  CHECK(is_q_decreasing("001", RationalSlope(1, 1)));
  CHECK(is_q_decreasing("111", RationalSlope(1, 1)));
  CHECK(is_q_decreasing("111", RationalSlope(1, 5)));
  CHECK(is_q_decreasing("", RationalSlope(2, 3)));
  CHECK_FALSE(is_q_decreasing("001", RationalSlope(1, 2)));  // needs a > 2b
  CHECK(is_q_decreasing("001", RationalSlope(4, 5)));        // 4*2 > 5*1
}

TEST_CASE("counting q-decreasing strings") {
  CHECK(count_q_decreasing(2, RationalSlope(1, 1)) == 3);
  CHECK(count_q_decreasing(3, RationalSlope(1, 1)) == 5);
  CHECK(count_q_decreasing(2, RationalSlope(1, 2)) == 3);
  CHECK(count_q_decreasing(0, RationalSlope(3, 4)) == 1);

  CHECK(enumerate_q_decreasing(3, RationalSlope(1, 1)) ==
        std::vector<std::string>{"000", "001", "100", "110", "111"});
  CHECK_THROWS_AS(enumerate_q_decreasing(30, RationalSlope(1, 1)), CapExceeded);
}

TEST_CASE("run-length DP agrees with exhaustive counting") {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      if (std::gcd(r, s) != 1) continue;
      const RationalSlope slope(r, s);
      for (int n = 0; n <= 14; ++n) {
        REQUIRE(count_q_decreasing(n, slope) == count_q_decreasing_brute(n, slope));
      }
    }
  }
}

TEST_CASE("avoiding k consecutive ones") {
  CHECK(count_avoiding_ones_run(2, 2) == 3);
  CHECK(count_avoiding_ones_run(0, 2) == 1);
  CHECK(count_avoiding_ones_run(0, 5) == 1);
  CHECK(count_avoiding_ones_run(3, 3) == 7);
  CHECK_THROWS_AS(count_avoiding_ones_run(3, 1), std::invalid_argument);

  for (int k = 2; k <= 5; ++k) {
    for (int n = 0; n <= 16; ++n) {
      REQUIRE(count_avoiding_ones_run(n, k) == Count(brute_avoiding(n, k)));
    }
  }
}

TEST_CASE("string counts shadow the path-counting sequences") {
  // |B_n(1^{q+1})| = f_{n+1}
  for (int q = 1; q <= 4; ++q) {
    for (int n = 0; n <= 20; ++n) {
      CHECK(count_avoiding_ones_run(n, q + 1) == gfib(q + 1, n + 1));
    }
  }
  // |W_n^{r/s}| = w_{n+1}
  for (int r = 1; r <= 5; ++r) {
    for (int s = 1; s <= 5; ++s) {
      if (std::gcd(r, s) != 1) continue;
      const RationalSlope slope(r, s);
      const auto w = w_general_table(slope, 19);
      for (int n = 0; n <= 18; ++n) {
        REQUIRE(count_q_decreasing(n, slope) == w[n + 1]);
      }
    }
  }
}

TEST_CASE("a weaker slope admits every string of a stronger one") {
  const std::vector<RationalSlope> grid = {RationalSlope(1, 3), RationalSlope(1, 2),
                                           RationalSlope(1, 1), RationalSlope(3, 2),
                                           RationalSlope(2, 1)};
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const RationalSlope lo = grid[i];  // lo <= hi as rationals
      const RationalSlope hi = grid[j];
      REQUIRE(static_cast<long long>(lo.r) * hi.s <= static_cast<long long>(hi.r) * lo.s);
      for (int n = 0; n <= 12; ++n) {
        for (const std::string& bits : enumerate_q_decreasing(n, lo)) {
          REQUIRE(is_q_decreasing(bits, hi));
        }
      }
    }
  }
}
