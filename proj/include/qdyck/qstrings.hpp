#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdyck/config.hpp"
#include "qdyck/dyck_path.hpp"
#include "qdyck/sequences.hpp"

namespace qdyck {

// Run-length view of a binary string: 1^{b0} 0^{a_1} 1^{b_1} 0^{a_2} ... with
// all a_i >= 1 (runs are maximal).  The leading ones-run carries no
// constraint since it has no zero-run in front of it.
struct FactorDecomposition {
  int leading_ones = 0;
  std::vector<std::pair<int, int>> factors;  // (a_i, b_i)

  friend bool operator==(const FactorDecomposition&, const FactorDecomposition&) = default;
};

FactorDecomposition decompose(std::string_view bits);  // throws std::invalid_argument on non-binary input

// Every maximal factor 0^a 1^b must satisfy q*a > b; with q = r/s the test is
// the cross-multiplied integer inequality r*a > s*b.
bool is_q_decreasing(std::string_view bits, RationalSlope q);

// All q-decreasing strings of length n in lexicographic order ('0' < '1').
std::vector<std::string> enumerate_q_decreasing(int n, RationalSlope q, int cap = kDefaultStringCap);

// |W_n^q| by run-length dynamic programming (exact, no enumeration).
Count count_q_decreasing(int n, RationalSlope q, int cap = kDefaultTableCap);

// |W_n^q| by exhaustive filtering; the trusted baseline for the DP.
Count count_q_decreasing_brute(int n, RationalSlope q, int cap = kDefaultStringCap);

// |B_n(1^k)|: binary strings of length n avoiding k consecutive 1's.
Count count_avoiding_ones_run(int n, int k);

}  // namespace qdyck
