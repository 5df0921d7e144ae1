#include "qdyck/validity.hpp"

#include <algorithm>
#include <vector>

namespace qdyck {

int max_consecutive_one_peaks(const DyckPath& path) {
  int best = 0;
  for (int p : path.hump_peaks()) best = std::max(best, p);
  return best;
}

int required_valleys(int p, RationalSlope slope) {
  if (p < 1 || p > slope.r) {
    throw std::out_of_range("required_valleys: p = " + std::to_string(p) + " outside 1.." +
                            std::to_string(slope.r));
  }
  // ceil(p*s/r) without floating point
  const long long num = static_cast<long long>(p) * slope.s;
  return static_cast<int>((num + slope.r - 1) / slope.r);
}

namespace {

// One maximal run of consecutive 1-peaks, read directly off the steps.
struct Block {
  int peaks = 0;                  // run length p
  int zero_valleys = 0;           // consecutive 0-valleys following the run
  std::size_t last_peak_pos = 0;  // index of the run's final U step
};

// Peaks and valleys are the length-2 factors UD / DU classified by the
// ordinate the D step reaches.  A block is a run of 1-peaks joined by
// 1-valleys; its 0-valley tally collects every ground junction (0-peaks do
// not interrupt the run) until the next 1-peak or the end of the path.
std::vector<Block> scan_blocks(const std::vector<Step>& steps) {
  const std::size_t len = steps.size();
  std::vector<int> height(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i) {
    height[i + 1] = height[i] + (steps[i] == Step::Up ? 1 : -1);
  }

  std::vector<Block> blocks;
  bool run_open = false;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (steps[i] == Step::Up && steps[i + 1] == Step::Down) {
      if (height[i + 2] == 1) {  // 1-peak
        if (!run_open) {
          blocks.push_back(Block{});
          run_open = true;
        }
        ++blocks.back().peaks;
        blocks.back().last_peak_pos = i;
      }
      // a 0-peak neither extends a run nor breaks a 0-valley tally
    } else if (steps[i] == Step::Down && steps[i + 1] == Step::Up) {
      if (height[i + 1] == 0) {  // 0-valley
        run_open = false;
        if (!blocks.empty()) ++blocks.back().zero_valleys;
      }
      // a 1-valley joins two 1-peaks of the same run; leave it open
    }
  }
  return blocks;
}

// The run's hump closes with one D and the path stops right there.
bool run_closes_path(const Block& block, std::size_t len) {
  return block.last_peak_pos + 3 == len;
}

}  // namespace

bool is_valid_integer(const DyckPath& path, int q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  return max_consecutive_one_peaks(path) <= q;
}

bool is_valid_unit(const DyckPath& path, int s) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  const auto steps = path.steps();
  const auto blocks = scan_blocks(steps);
  int total_peaks = 0;
  for (const Block& b : blocks) total_peaks += b.peaks;
  int seen = 0;
  for (const Block& b : blocks) {
    for (int j = 1; j <= b.peaks; ++j) {
      ++seen;
      if (seen == total_peaks) continue;  // the last 1-peak is excused
      // a peak that is not run-final is followed by a 1-valley, i.e. by
      // zero 0-valleys
      const int v = (j == b.peaks) ? b.zero_valleys : 0;
      if (v < s) return false;
    }
  }
  return true;
}

bool is_valid_general(const DyckPath& path, RationalSlope slope) {
  const auto steps = path.steps();
  const auto blocks = scan_blocks(steps);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    if (b.peaks > slope.r) return false;  // more than r consecutive 1-peaks
    const int need = required_valleys(b.peaks, slope);
    if (b.zero_valleys >= need) continue;
    if (k + 1 != blocks.size()) return false;  // only the rightmost block may fall short
    if (b.peaks == slope.r) continue;          // rightmost full block: any shorter tail
    if (run_closes_path(b, steps.size())) continue;  // path ends with (UD)^p D
    return false;
  }
  return true;
}

std::optional<Violation> first_violation(const DyckPath& path, RationalSlope slope) {
  const HumpProfile profile = humps_of(path);
  const std::vector<int> z = zero_valley_runs(profile);
  const auto& p = profile.peaks;
  const int m = static_cast<int>(p.size());

  int last_block_hump = -1;
  for (int i = 0; i < m; ++i) {
    if (p[i] >= 1) last_block_hump = i;
  }

  int block_no = 0;
  for (int i = 0; i < m; ++i) {
    if (p[i] == 0) continue;
    ++block_no;
    if (p[i] > slope.r) {
      return Violation{Violation::Kind::TooManyOnePeaks, block_no, p[i], slope.r, z[i]};
    }
    const int need = required_valleys(p[i], slope);
    if (z[i] >= need) continue;
    const bool rightmost = (i == last_block_hump);
    if (rightmost && (p[i] == slope.r || z[i] == 0)) continue;
    return Violation{Violation::Kind::TooFewZeroValleys, block_no, p[i], need, z[i]};
  }
  return std::nullopt;
}

bool is_valid_unified(const DyckPath& path, RationalSlope slope) {
  return !first_violation(path, slope).has_value();
}

std::string Violation::describe() const {
  if (kind == Kind::TooManyOnePeaks) {
    return "block " + std::to_string(block) + " has " + std::to_string(peaks) +
           " consecutive 1-peaks, at most " + std::to_string(required) + " allowed";
  }
  return "block " + std::to_string(block) + " (p=" + std::to_string(peaks) + ") requires v>=" +
         std::to_string(required) + " consecutive 0-valleys, observed " + std::to_string(observed);
}

}  // namespace qdyck
