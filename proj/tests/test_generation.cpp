#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qdyck/generation.hpp"
#include "qdyck/sequences.hpp"
#include "qdyck/validity.hpp"

using namespace qdyck;

namespace {

std::vector<std::string> rendered(const PathSet& set) {
  std::vector<std::string> out;
  for (const DyckPath& p : set.members) out.push_back(render_path(p));
  return out;
}

}  // namespace

TEST_CASE("prefix of a step word") {
  // UD(DU)^1 is not itself a path; build it directly
  const std::vector<Step> uddu{Step::Up, Step::Down, Step::Down, Step::Up};
  CHECK(prefix_semilength(uddu, 1) == std::vector<Step>{Step::Up, Step::Down});
  CHECK(prefix_semilength(uddu, 2) == uddu);
  CHECK(prefix_semilength(uddu, 0).empty());
  CHECK_THROWS_AS(prefix_semilength(uddu, 3), PrefixTooLong);

  std::vector<Step> word8;  // (UD)^4 (DU)^4
  for (int i = 0; i < 4; ++i) {
    word8.push_back(Step::Up);
    word8.push_back(Step::Down);
  }
  for (int i = 0; i < 4; ++i) {
    word8.push_back(Step::Down);
    word8.push_back(Step::Up);
  }
  CHECK(prefix_semilength(word8, 8) == word8);
}

TEST_CASE("integer-slope construction") {
  const PathSet base = generate_integer(0, 1);
  REQUIRE(base.members.size() == 1);
  CHECK(base.members[0].empty());

  CHECK(rendered(generate_integer(2, 1)) == std::vector<std::string>{"UDUD", "UUDD"});
  CHECK(generate_integer(4, 2).members.size() == 7);

  for (int n = 0; n <= 10; ++n) {
    for (int q = 1; q <= 3; ++q) {
      const PathSet set = generate_integer(n, q);
      CHECK(Count(set.members.size()) == gfib(q + 1, n));
      for (const DyckPath& p : set.members) {
        REQUIRE(p.semilength() == n);
        REQUIRE(is_valid_integer(p, q));
      }
    }
  }
}

TEST_CASE("unit-slope construction") {
  CHECK(rendered(generate_unit(1, 3)) == std::vector<std::string>{"UD"});
  CHECK(rendered(generate_unit(3, 2)) ==
        std::vector<std::string>{"UDUDUD", "UDUUDD", "UUDDUD"});
  CHECK(generate_unit(5, 2).members.size() == 6);

  // the low band is seeded by prefixes of UD(DU)^{s-1}
  const auto d3 = rendered(generate_unit(3, 3));
  CHECK(std::find(d3.begin(), d3.end(), "UUDDUD") != d3.end());

  for (int n = 0; n <= 10; ++n) {
    for (int s = 1; s <= 4; ++s) {
      const PathSet set = generate_unit(n, s);
      CHECK(Count(set.members.size()) == w_unit(s, n));
      for (const DyckPath& p : set.members) {
        REQUIRE(p.semilength() == n);
        REQUIRE(is_valid_unit(p, s));
      }
    }
  }
}

TEST_CASE("general-slope construction") {
  const RationalSlope q45(4, 5);
  const PathSet d4 = generate_general(4, q45);
  std::vector<std::vector<int>> profiles;
  for (const DyckPath& p : d4.members) profiles.push_back(p.hump_peaks());
  CHECK(profiles == std::vector<std::vector<int>>{
                        {0, 0, 0, 0}, {0, 0, 1}, {0, 2}, {1, 0, 0}, {3}});

  CHECK(rendered(generate_general(1, q45)) == std::vector<std::string>{"UD"});
  CHECK(rendered(generate_general(1, RationalSlope(2, 3))) == std::vector<std::string>{"UD"});
  CHECK(generate_general(0, q45).members.size() == 1);
}

TEST_CASE("construction equals the brute-force oracle") {
  for (int r = 1; r <= 5; ++r) {
    for (int s = 1; s <= 5; ++s) {
      if (std::gcd(r, s) != 1) continue;
      const RationalSlope slope(r, s);
      for (int n = 0; n <= 10; ++n) {
        const PathSet built = generate_general(n, slope);
        const PathSet oracle = brute_force(n, slope);
        REQUIRE(built.members == oracle.members);
      }
    }
  }
}

TEST_CASE("family constructions are consistent") {
  for (int n = 0; n <= 12; ++n) {
    for (int s = 1; s <= 5; ++s) {
      REQUIRE(generate_general(n, RationalSlope(1, s)).members == generate_unit(n, s).members);
    }
    for (int q = 1; q <= 4; ++q) {
      REQUIRE(generate_general(n, RationalSlope(q, 1)).members ==
              generate_integer(n, q).members);
    }
  }
}

TEST_CASE("generated sets are sorted and duplicate-free") {
  for (int n = 0; n <= 12; ++n) {
    const PathSet set = generate_general(n, RationalSlope(3, 4));
    CHECK(std::is_sorted(set.members.begin(), set.members.end()));
    CHECK(std::adjacent_find(set.members.begin(), set.members.end()) == set.members.end());
  }
}

TEST_CASE("brute force respects the enumeration cap") {
  CHECK_THROWS_AS(brute_force(10, RationalSlope(1, 2), 9), CapExceeded);
  CHECK(brute_force(0, RationalSlope(1, 2)).members.size() == 1);
}
