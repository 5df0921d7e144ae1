#pragma once

#include <optional>
#include <string>

#include "qdyck/dyck_path.hpp"

namespace qdyck {

// Longest run of consecutive 1-peaks, i.e. the largest hump peak count.
int max_consecutive_one_peaks(const DyckPath& path);

// ceil(p*s/r) in exact integer arithmetic: the 0-valley quota after a block
// of p consecutive 1-peaks.  Throws std::out_of_range unless 1 <= p <= r.
int required_valleys(int p, RationalSlope slope);

// Membership predicates for the three parameter families.  The first three
// read the defining rules directly off the step sequence; is_valid_unified
// evaluates one hump-profile algorithm that subsumes them all.
bool is_valid_integer(const DyckPath& path, int q);
bool is_valid_unit(const DyckPath& path, int s);
bool is_valid_general(const DyckPath& path, RationalSlope slope);
bool is_valid_unified(const DyckPath& path, RationalSlope slope);

struct Violation {
  enum class Kind { TooManyOnePeaks, TooFewZeroValleys };
  Kind kind;
  int block = 0;     // 1-based index among 1-peak blocks, left to right
  int peaks = 0;     // block size p
  int required = 0;  // max block size (TooManyOnePeaks) or valley quota
  int observed = 0;  // observed consecutive 0-valleys after the block

  std::string describe() const;
};

// First rule violated by the path under slope r/s, if any.
std::optional<Violation> first_violation(const DyckPath& path, RationalSlope slope);

}  // namespace qdyck
