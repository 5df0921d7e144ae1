#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdyck/config.hpp"

namespace qdyck {

enum class Step : unsigned char { Up, Down };

enum class Notation { Letters, Parentheses };

// The slope parameter q = r/s as a coprime pair of positive integers.
struct RationalSlope {
  int r = 1;
  int s = 1;

  RationalSlope() = default;
  RationalSlope(int r_, int s_);  // throws std::invalid_argument unless r,s >= 1 and gcd(r,s) = 1

  // Reduces r/s to lowest terms; throws std::invalid_argument on r < 1 or s < 1.
  static RationalSlope reduced(long long r_, long long s_);

  bool is_integer() const { return s == 1; }
  std::string str() const;  // "r/s", or "r" when s = 1

  friend bool operator==(const RationalSlope&, const RationalSlope&) = default;
};

enum class ParseErrorKind {
  OddLength,
  Unbalanced,
  NegativeExcursion,
  HeightExceeded,
  InvalidCharacter,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t index);
  ParseErrorKind kind() const { return kind_; }
  std::size_t index() const { return index_; }  // first offending position

 private:
  ParseErrorKind kind_;
  std::size_t index_;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Ground-level decomposition of a height-<=2 path: hump i is the factor
// U(UD)^{p_i}D, and the whole path is the left-to-right concatenation of its
// humps.  peaks[i] is the number of 1-peaks of hump i.
struct HumpProfile {
  std::vector<int> peaks;

  int semilength() const;  // sum of (p_i + 1)

  friend bool operator==(const HumpProfile&, const HumpProfile&) = default;
};

// A balanced U/D step sequence that never dips below the axis and never rises
// above height 2.  Stored in hump-profile form; the step sequence is
// materialized on demand.
class DyckPath {
 public:
  DyckPath() = default;  // the empty path

  static DyckPath from_steps(std::span<const Step> steps);  // throws ParseError
  static DyckPath from_humps(HumpProfile profile);  // throws std::invalid_argument on p_i < 0

  int semilength() const;
  bool empty() const { return humps_.empty(); }
  const std::vector<int>& hump_peaks() const { return humps_; }
  std::vector<Step> steps() const;

  // Canonical listing order: hump profiles compared lexicographically.
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<int> humps_;
};

DyckPath parse_path(std::string_view text, Notation notation = Notation::Letters);
DyckPath parse_path_any(std::string_view text);  // accepts either alphabet
std::string render_path(const DyckPath& path, Notation notation = Notation::Letters);

HumpProfile humps_of(const DyckPath& path);
DyckPath path_of_humps(const HumpProfile& profile);

// z_i = number of consecutive 0-valleys immediately after hump i: one per
// following 0-peak hump in the maximal run, plus the junction into the next
// 1-peak hump when the run does not reach the end of the path.
std::vector<int> zero_valley_runs(const HumpProfile& profile);

// Concatenation of two ground-to-ground paths.
DyckPath concat(const DyckPath& a, const DyckPath& b);

// Every height-<=2 path of semilength n, in canonical order.  There are
// 2^(n-1) of them for n >= 1 (one per composition of n).
std::vector<DyckPath> enumerate_height2(int n, int cap = kDefaultEnumCap);

}  // namespace qdyck
