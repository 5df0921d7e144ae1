#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdyck/config.hpp"
#include "qdyck/dyck_path.hpp"
#include "qdyck/sequences.hpp"

namespace qdyck {

struct CheckLine {
  std::string check;      // which check produced this verdict
  std::string parameter;  // rendered parameter, e.g. "4/5" or "q=3"
  int n = -1;             // -1 when the verdict is not tied to one n
  bool pass = true;
  std::string detail;     // counterexample / shift / mismatch description
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool passed() const;
  int failures() const;
  std::string first_counterexample() const;  // empty when passing
  void append(CheckReport other);

  std::string to_text() const;   // human-readable, deterministic
  std::string to_jsonl() const;  // one JSON object per line, stable key order
};

class AmbiguousShift : public std::runtime_error {
 public:
  explicit AmbiguousShift(std::vector<int> candidates);
  const std::vector<int>& candidates() const { return candidates_; }

 private:
  std::vector<int> candidates_;
};

// The unique d with |d| <= max_shift such that a[n+d] = b[n] across the whole
// index overlap; nullopt when no d matches, AmbiguousShift when several do.
// Both sequences must have at least max_shift + 4 entries.
std::optional<int> find_shift(std::span<const Count> a, std::span<const Count> b, int max_shift);

CheckReport verify_grammar_vs_oracle(RationalSlope slope, int n_max, int cap = kDefaultEnumCap);
CheckReport verify_counts(RationalSlope slope, int n_max, int cap = kDefaultEnumCap);
CheckReport verify_string_alignment(RationalSlope slope, int n_max);
CheckReport verify_reductions(int n_max, int cap = kDefaultEnumCap);

// All coprime pairs (r, s) with 1 <= r <= r_max, 1 <= s <= s_max, in
// lexicographic order.
std::vector<RationalSlope> coprime_grid(int r_max, int s_max);

// Grammar/oracle and count checks up to n_sets, string alignment up to
// n_counts, plus the reduction identities, over coprime_grid(5, 5).
CheckReport run_full_crosscheck(int n_sets, int n_counts, int cap = kDefaultEnumCap);

}  // namespace qdyck
