#include "qdyck/generation.hpp"

#include <set>
#include <utility>

#include "qdyck/validity.hpp"

namespace qdyck {

std::vector<Step> prefix_semilength(std::span<const Step> word, int k) {
  if (k < 0) throw std::invalid_argument("prefix semilength must be nonnegative");
  if (2 * static_cast<std::size_t>(k) > word.size()) {
    throw PrefixTooLong("prefix of semilength " + std::to_string(k) + " exceeds word of " +
                        std::to_string(word.size()) + " steps");
  }
  return std::vector<Step>(word.begin(), word.begin() + 2 * static_cast<std::size_t>(k));
}

namespace {

// Union collector for one recursion level.  The construction's branches are
// meant to be disjoint; a duplicate would break the counting argument, so it
// raises instead of being dropped.
class LevelSet {
 public:
  void add(const DyckPath& path) {
    if (!members_.insert(path).second) {
      throw std::logic_error("construction union produced a duplicate path: " +
                             render_path(path));
    }
  }

  std::vector<DyckPath> sorted() && { return {members_.begin(), members_.end()}; }

 private:
  std::set<DyckPath> members_;
};

std::vector<Step> repeat_pair(Step a, Step b, int times) {
  std::vector<Step> out;
  out.reserve(2 * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

void append(std::vector<Step>& word, const std::vector<Step>& tail) {
  word.insert(word.end(), tail.begin(), tail.end());
}

// U <prefix of `inner` of semilength n-1> D
DyckPath wrap_prefix(const std::vector<Step>& inner, int n) {
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  steps.push_back(Step::Up);
  append(steps, prefix_semilength(inner, n - 1));
  steps.push_back(Step::Down);
  return DyckPath::from_steps(steps);
}

DyckPath single_hump(int peaks) {
  std::vector<Step> steps;
  steps.push_back(Step::Up);
  append(steps, repeat_pair(Step::Up, Step::Down, peaks));
  steps.push_back(Step::Down);
  return DyckPath::from_steps(steps);
}

// U(UD)^p (DU)^{v-1} D: p 1-peaks followed by v-1 built-in 0-valleys; the
// v-th arrives at the junction with the nonempty path appended after it.
DyckPath block_factor(int p, int v) {
  std::vector<Step> steps;
  steps.push_back(Step::Up);
  append(steps, repeat_pair(Step::Up, Step::Down, p));
  append(steps, repeat_pair(Step::Down, Step::Up, v - 1));
  steps.push_back(Step::Down);
  return DyckPath::from_steps(steps);
}

}  // namespace

PathSet generate_integer(int n, int q) {
  if (n < 0) throw std::invalid_argument("semilength must be nonnegative");
  if (q < 1) throw std::invalid_argument("q must be positive");
  std::vector<std::vector<DyckPath>> levels(static_cast<std::size_t>(n) + 1);
  std::vector<DyckPath> factors;
  for (int j = 0; j <= q; ++j) factors.push_back(single_hump(j));

  levels[0] = {DyckPath{}};
  for (int m = 1; m <= n; ++m) {
    LevelSet level;
    for (int j = 0; j <= q && m - 1 - j >= 0; ++j) {
      for (const DyckPath& tail : levels[m - 1 - j]) level.add(concat(factors[j], tail));
    }
    levels[m] = std::move(level).sorted();
  }
  return PathSet{n, RationalSlope(q, 1), std::move(levels[n])};
}

PathSet generate_unit(int n, int s) {
  if (n < 0) throw std::invalid_argument("semilength must be nonnegative");
  if (s < 1) throw std::invalid_argument("s must be positive");
  const RationalSlope slope(1, s);

  // UD(DU)^{s-1}; its semilength-(n-1) prefixes seed the low band
  std::vector<Step> prefix_word{Step::Up, Step::Down};
  append(prefix_word, repeat_pair(Step::Down, Step::Up, s - 1));

  const DyckPath up_down = single_hump(0);
  const DyckPath long_factor = block_factor(1, s);  // UUD(DU)^{s-1}D

  std::vector<std::vector<DyckPath>> levels(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    if (m == 0) {
      levels[0] = {DyckPath{}};
      continue;
    }
    if (m == 1) {
      levels[1] = {up_down};
      continue;
    }
    LevelSet level;
    for (const DyckPath& tail : levels[m - 1]) level.add(concat(up_down, tail));
    if (m <= s + 1) {
      level.add(wrap_prefix(prefix_word, m));
    } else {
      for (const DyckPath& tail : levels[m - s - 1]) level.add(concat(long_factor, tail));
    }
    levels[m] = std::move(level).sorted();
  }
  return PathSet{n, slope, std::move(levels[n])};
}

PathSet generate_general(int n, RationalSlope slope) {
  if (n < 0) throw std::invalid_argument("semilength must be nonnegative");
  const int r = slope.r;
  const int s = slope.s;

  // (UD)^r (DU)^{s-1}; its prefixes seed the band 2 <= n <= r+s
  std::vector<Step> prefix_word = repeat_pair(Step::Up, Step::Down, r);
  append(prefix_word, repeat_pair(Step::Down, Step::Up, s - 1));

  const DyckPath up_down = single_hump(0);
  std::vector<DyckPath> factors(static_cast<std::size_t>(r) + 1);
  std::vector<int> quota(static_cast<std::size_t>(r) + 1, 0);
  for (int p = 1; p <= r; ++p) {
    quota[p] = required_valleys(p, slope);
    factors[p] = block_factor(p, quota[p]);
  }

  std::vector<std::vector<DyckPath>> levels(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    if (m == 0) {
      levels[0] = {DyckPath{}};
      continue;
    }
    if (m == 1) {
      levels[1] = {up_down};
      continue;
    }
    LevelSet level;
    for (const DyckPath& tail : levels[m - 1]) level.add(concat(up_down, tail));
    if (m <= r + s) {
      level.add(wrap_prefix(prefix_word, m));
      for (int p = 1; p <= r - 1; ++p) {
        const int tail_n = m - p - quota[p];
        if (tail_n < 1) continue;
        for (const DyckPath& tail : levels[tail_n]) level.add(concat(factors[p], tail));
      }
    } else {
      for (int p = 1; p <= r; ++p) {
        const int tail_n = m - p - quota[p];
        for (const DyckPath& tail : levels[tail_n]) level.add(concat(factors[p], tail));
      }
    }
    levels[m] = std::move(level).sorted();
  }
  return PathSet{n, slope, std::move(levels[n])};
}

PathSet brute_force(int n, RationalSlope slope, int cap) {
  PathSet out{n, slope, {}};
  for (DyckPath& path : enumerate_height2(n, cap)) {
    if (is_valid_general(path, slope)) out.members.push_back(std::move(path));
  }
  return out;
}

}  // namespace qdyck
