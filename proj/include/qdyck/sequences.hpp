#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "qdyck/config.hpp"
#include "qdyck/dyck_path.hpp"

namespace qdyck {

// Exact nonnegative integer; the counting sequences grow geometrically and
// overflow 64 bits near n = 90, so no fixed-width type appears anywhere.
using Count = boost::multiprecision::cpp_int;

// k-generalized Fibonacci numbers: f_0 = 1, f_n = f_{n-1} + ... + f_{n-k},
// f_n = 0 for n < 0.  Requires k >= 2.
Count gfib(int k, long long n);

// w_0 = 1; w_n = n for 1 <= n <= s+1; w_n = w_{n-1} + w_{n-s-1} afterwards.
Count w_unit(int s, long long n);

// The rational-slope recurrence, piecewise around the band 2 <= n <= r+s.
Count w_general(RationalSlope slope, long long n);

std::vector<Count> gfib_table(int k, int n_max, int cap = kDefaultTableCap);
std::vector<Count> w_unit_table(int s, int n_max, int cap = kDefaultTableCap);
std::vector<Count> w_general_table(RationalSlope slope, int n_max, int cap = kDefaultTableCap);

struct SequenceTable {
  RationalSlope slope;        // integer parameter q is carried as (q, 1)
  bool integer_form = false;  // built from the k-bonacci recurrence
  std::vector<Count> values;  // index 0..n_max
};

SequenceTable seq_table(RationalSlope slope, int n_max, int cap = kDefaultTableCap);
SequenceTable seq_table(int k, int n_max, int cap = kDefaultTableCap);

}  // namespace qdyck
