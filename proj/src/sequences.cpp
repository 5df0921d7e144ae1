#include "qdyck/sequences.hpp"

#include <algorithm>

#include "qdyck/validity.hpp"

namespace qdyck {

namespace {

void check_table_args(int n_max, int cap, const char* who) {
  if (n_max < 0) throw std::invalid_argument(std::string(who) + ": n_max must be nonnegative");
  if (n_max > cap) {
    throw CapExceeded(std::string(who) + ": n_max = " + std::to_string(n_max) + " exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace

std::vector<Count> gfib_table(int k, int n_max, int cap) {
  if (k < 2) throw std::invalid_argument("gfib requires k >= 2");
  check_table_args(n_max, cap, "gfib_table");
  std::vector<Count> v(static_cast<std::size_t>(n_max) + 1);
  v[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Count sum = 0;
    for (int i = 1; i <= k && n - i >= 0; ++i) sum += v[n - i];
    v[n] = sum;
  }
  return v;
}

std::vector<Count> w_unit_table(int s, int n_max, int cap) {
  if (s < 1) throw std::invalid_argument("w_unit requires s >= 1");
  check_table_args(n_max, cap, "w_unit_table");
  std::vector<Count> v(static_cast<std::size_t>(n_max) + 1);
  v[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    if (n <= s + 1) {
      v[n] = n;
    } else {
      v[n] = v[n - 1] + v[n - s - 1];
    }
  }
  return v;
}

std::vector<Count> w_general_table(RationalSlope slope, int n_max, int cap) {
  check_table_args(n_max, cap, "w_general_table");
  const int r = slope.r;
  const int s = slope.s;
  std::vector<int> quota(static_cast<std::size_t>(r) + 1, 0);
  for (int p = 1; p <= r; ++p) quota[p] = required_valleys(p, slope);

  // In the band 2 <= n <= r+s the second branch contributes exactly one
  // member: the wrapped prefix of (UD)^r (DU)^{s-1}.
  const Count wrapped_prefix_path = 1;

  std::vector<Count> v(static_cast<std::size_t>(n_max) + 1);
  v[0] = 1;
  if (n_max >= 1) v[1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    if (n <= r + s) {
      Count sum = v[n - 1] + wrapped_prefix_path;
      for (int p = 1; p <= r - 1; ++p) {
        const int tail = n - p - quota[p];
        if (tail >= 1) sum += v[tail];
      }
      v[n] = sum;
    } else {
      Count sum = v[n - 1];
      for (int p = 1; p <= r; ++p) sum += v[n - p - quota[p]];
      v[n] = sum;
    }
  }
  return v;
}

Count gfib(int k, long long n) {
  if (k < 2) throw std::invalid_argument("gfib requires k >= 2");
  if (n < 0) return 0;
  const int nn = static_cast<int>(n);
  return gfib_table(k, nn, std::max(nn, kDefaultTableCap))[static_cast<std::size_t>(nn)];
}

Count w_unit(int s, long long n) {
  if (n < 0) throw std::invalid_argument("w_unit: n must be nonnegative");
  const int nn = static_cast<int>(n);
  return w_unit_table(s, nn, std::max(nn, kDefaultTableCap))[static_cast<std::size_t>(nn)];
}

Count w_general(RationalSlope slope, long long n) {
  if (n < 0) throw std::invalid_argument("w_general: n must be nonnegative");
  const int nn = static_cast<int>(n);
  return w_general_table(slope, nn, std::max(nn, kDefaultTableCap))[static_cast<std::size_t>(nn)];
}

SequenceTable seq_table(RationalSlope slope, int n_max, int cap) {
  return SequenceTable{slope, false, w_general_table(slope, n_max, cap)};
}

SequenceTable seq_table(int k, int n_max, int cap) {
  return SequenceTable{RationalSlope(k - 1, 1), true, gfib_table(k, n_max, cap)};
}

}  // namespace qdyck
