#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qdyck/config.hpp"
#include "qdyck/dyck_path.hpp"

namespace qdyck {

class PrefixTooLong : public std::out_of_range {
 public:
  explicit PrefixTooLong(const std::string& what) : std::out_of_range(what) {}
};

// The members of one D_n family, sorted in canonical order, duplicate-free.
struct PathSet {
  int semilength = 0;
  RationalSlope slope;
  std::vector<DyckPath> members;

  bool operator==(const PathSet& other) const { return members == other.members; }
};

// First 2k steps of a step word.  Throws PrefixTooLong when 2k exceeds the
// word length.
std::vector<Step> prefix_semilength(std::span<const Step> word, int k);

// The recursive constructions.  Each builds the set bottom-up, level by
// level; a duplicate across union branches is a correctness finding and
// raises std::logic_error rather than being silently dropped.
PathSet generate_integer(int n, int q);
PathSet generate_unit(int n, int s);
PathSet generate_general(int n, RationalSlope slope);

// Independent oracle: filter the full height-<=2 universe through the
// rule-based validator.
PathSet brute_force(int n, RationalSlope slope, int cap = kDefaultEnumCap);

}  // namespace qdyck
