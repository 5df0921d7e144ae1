#include "qdyck/qstrings.hpp"

#include <algorithm>

namespace qdyck {

FactorDecomposition decompose(std::string_view bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw std::invalid_argument("binary string expected, got '" + std::string(1, bits[i]) +
                                  "' at index " + std::to_string(i));
    }
  }
  FactorDecomposition out;
  std::size_t i = 0;
  while (i < bits.size() && bits[i] == '1') ++i;
  out.leading_ones = static_cast<int>(i);
  while (i < bits.size()) {
    int a = 0;
    while (i < bits.size() && bits[i] == '0') ++i, ++a;
    int b = 0;
    while (i < bits.size() && bits[i] == '1') ++i, ++b;
    out.factors.emplace_back(a, b);
  }
  return out;
}

bool is_q_decreasing(std::string_view bits, RationalSlope q) {
  const FactorDecomposition d = decompose(bits);
  for (const auto& [a, b] : d.factors) {
    if (static_cast<long long>(q.r) * a <= static_cast<long long>(q.s) * b) return false;
  }
  return true;
}

std::vector<std::string> enumerate_q_decreasing(int n, RationalSlope q, int cap) {
  if (n < 0) throw std::invalid_argument("string length must be nonnegative");
  if (n > cap) {
    throw CapExceeded("enumerate_q_decreasing: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<std::string> out;
  std::string buf(static_cast<std::size_t>(n), '0');
  const unsigned long long total = 1ULL << n;
  for (unsigned long long x = 0; x < total; ++x) {
    for (int i = 0; i < n; ++i) buf[i] = (x >> (n - 1 - i)) & 1 ? '1' : '0';
    if (is_q_decreasing(buf, q)) out.push_back(buf);
  }
  return out;  // counting order = lexicographic order
}

Count count_q_decreasing_brute(int n, RationalSlope q, int cap) {
  return Count(enumerate_q_decreasing(n, q, cap).size());
}

Count count_q_decreasing(int n, RationalSlope q, int cap) {
  if (n < 0) throw std::invalid_argument("string length must be nonnegative");
  if (n > cap) {
    throw CapExceeded("count_q_decreasing: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  // g[m] = number of suffixes of length m made of maximal factors 0^a 1^b
  // (a >= 1, r*a > s*b); internal factors need b >= 1, the final factor may
  // have b = 0 only when it consumes the whole suffix (all zeros).
  // G[m] = sum of g[0..m]; prepending an arbitrary leading ones-run turns
  // G[n] into the full count.
  std::vector<Count> g(static_cast<std::size_t>(n) + 1), G(static_cast<std::size_t>(n) + 1);
  g[0] = 1;
  G[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Count total = 1;  // the all-zeros factor 0^m
    for (int a = 1; a <= m - 1; ++a) {
      const long long b_quota = (static_cast<long long>(q.r) * a - 1) / q.s;  // b < r*a/s
      const int b_hi = static_cast<int>(std::min<long long>(m - a, b_quota));
      if (b_hi < 1) continue;
      // sum of g[m-a-1] down to g[m-a-b_hi]
      total += G[m - a - 1];
      if (m - a - b_hi - 1 >= 0) total -= G[m - a - b_hi - 1];
    }
    g[m] = total;
    G[m] = G[m - 1] + g[m];
  }
  return G[n];
}

Count count_avoiding_ones_run(int n, int k) {
  if (n < 0) throw std::invalid_argument("string length must be nonnegative");
  if (k < 2) throw std::invalid_argument("run length k must be at least 2");
  // dp[j] = strings of the current length ending in exactly j ones, j < k
  std::vector<Count> dp(static_cast<std::size_t>(k), 0);
  dp[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<Count> next(static_cast<std::size_t>(k), 0);
    Count all = 0;
    for (const Count& c : dp) all += c;
    next[0] = all;  // append '0'
    for (int j = 1; j < k; ++j) next[j] = dp[j - 1];  // append '1'
    dp = std::move(next);
  }
  Count total = 0;
  for (const Count& c : dp) total += c;
  return total;
}

}  // namespace qdyck
