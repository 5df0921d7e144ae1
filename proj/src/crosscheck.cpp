#include "qdyck/crosscheck.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qdyck/generation.hpp"
#include "qdyck/qstrings.hpp"
#include "qdyck/validity.hpp"

namespace qdyck {

bool CheckReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

int CheckReport::failures() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(),
                                        [](const CheckLine& l) { return !l.pass; }));
}

std::string CheckReport::first_counterexample() const {
  for (const CheckLine& l : lines) {
    if (!l.pass) return l.detail;
  }
  return {};
}

void CheckReport::append(CheckReport other) {
  lines.insert(lines.end(), std::make_move_iterator(other.lines.begin()),
               std::make_move_iterator(other.lines.end()));
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  for (const CheckLine& l : lines) {
    out << (l.pass ? "PASS" : "FAIL") << ' ' << l.check << " q=" << l.parameter;
    if (l.n >= 0) out << " n=" << l.n;
    if (!l.detail.empty()) out << "  [" << l.detail << ']';
    out << '\n';
  }
  out << "checks: " << lines.size() << ", failures: " << failures() << '\n';
  return out.str();
}

std::string CheckReport::to_jsonl() const {
  std::ostringstream out;
  for (const CheckLine& l : lines) {
    nlohmann::ordered_json rec;
    rec["check"] = l.check;
    rec["q"] = l.parameter;
    rec["n"] = l.n;
    rec["pass"] = l.pass;
    rec["detail"] = l.detail;
    out << rec.dump() << '\n';
  }
  nlohmann::ordered_json summary;
  summary["summary"] = true;
  summary["checks"] = lines.size();
  summary["failures"] = failures();
  out << summary.dump() << '\n';
  return out.str();
}

AmbiguousShift::AmbiguousShift(std::vector<int> candidates)
    : std::runtime_error("ambiguous shift: " + std::to_string(candidates.size()) + " candidates"),
      candidates_(std::move(candidates)) {}

std::optional<int> find_shift(std::span<const Count> a, std::span<const Count> b, int max_shift) {
  if (max_shift < 0) throw std::invalid_argument("max_shift must be nonnegative");
  const long long need = static_cast<long long>(max_shift) + 4;
  if (static_cast<long long>(a.size()) < need || static_cast<long long>(b.size()) < need) {
    throw std::invalid_argument("find_shift: sequences must have at least max_shift + 4 entries");
  }
  std::vector<int> matches;
  for (int d = -max_shift; d <= max_shift; ++d) {
    const long long lo = std::max(0LL, static_cast<long long>(-d));
    const long long hi =
        std::min<long long>(static_cast<long long>(b.size()) - 1,
                            static_cast<long long>(a.size()) - 1 - d);
    if (hi < lo) continue;
    bool ok = true;
    for (long long n = lo; n <= hi && ok; ++n) ok = a[n + d] == b[n];
    if (ok) matches.push_back(d);
  }
  if (matches.empty()) return std::nullopt;
  if (matches.size() > 1) throw AmbiguousShift(std::move(matches));
  return matches.front();
}

namespace {

// First members on either side of a set mismatch, rendered; a construction
// surplus also names the rule it breaks.
std::string symmetric_difference_detail(const std::vector<DyckPath>& lhs,
                                        const std::vector<DyckPath>& rhs,
                                        std::optional<RationalSlope> slope = std::nullopt) {
  std::vector<DyckPath> only_lhs, only_rhs;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(only_lhs));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                      std::back_inserter(only_rhs));
  std::string detail;
  if (!only_lhs.empty()) {
    detail += "only-in-construction: " + render_path(only_lhs.front());
    if (slope) {
      if (const auto v = first_violation(only_lhs.front(), *slope)) {
        detail += " (" + v->describe() + ")";
      }
    }
  }
  if (!only_rhs.empty()) {
    if (!detail.empty()) detail += "; ";
    detail += "only-in-oracle: " + render_path(only_rhs.front()) + " (missing from construction)";
  }
  return detail;
}

std::string render_or_epsilon(const DyckPath& path) {
  return path.empty() ? std::string("(empty)") : render_path(path);
}

}  // namespace

CheckReport verify_grammar_vs_oracle(RationalSlope slope, int n_max, int cap) {
  CheckReport report;
  for (int n = 0; n <= n_max; ++n) {
    const PathSet built = generate_general(n, slope);
    const PathSet oracle = brute_force(n, slope, cap);
    CheckLine line{"grammar-vs-oracle", slope.str(), n, true, ""};
    if (built.members != oracle.members) {
      line.pass = false;
      line.detail = symmetric_difference_detail(built.members, oracle.members, slope);
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

CheckReport verify_counts(RationalSlope slope, int n_max, int cap) {
  CheckReport report;
  const std::vector<Count> w = w_general_table(slope, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const std::size_t built = generate_general(n, slope).members.size();
    const std::size_t oracle = brute_force(n, slope, cap).members.size();
    CheckLine line{"counts", slope.str(), n, true, ""};
    if (Count(built) != w[n] || Count(oracle) != w[n]) {
      line.pass = false;
      line.detail = "construction=" + std::to_string(built) + " oracle=" + std::to_string(oracle) +
                    " recurrence=" + w[n].str();
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

CheckReport verify_string_alignment(RationalSlope slope, int n_max) {
  constexpr int kMaxShift = 3;
  CheckReport report;

  const std::vector<Count> w = w_general_table(slope, n_max + kMaxShift);
  std::vector<Count> strings;
  strings.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) strings.push_back(count_q_decreasing(n, slope));

  CheckLine line{"string-alignment", slope.str(), n_max, true, ""};
  try {
    const auto d = find_shift(w, strings, kMaxShift);
    if (d) {
      line.detail = "shift=" + std::to_string(*d);
    } else {
      line.pass = false;
      line.detail = "no constant shift aligns the sequences";
    }
  } catch (const AmbiguousShift& e) {
    line.pass = false;
    line.detail = e.what();
  }
  report.lines.push_back(std::move(line));

  if (slope.is_integer()) {
    const int k = slope.r + 1;
    const std::vector<Count> f = gfib_table(k, n_max + kMaxShift);
    std::vector<Count> avoiding;
    avoiding.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) avoiding.push_back(count_avoiding_ones_run(n, k));
    CheckLine ones{"ones-run-alignment", slope.str(), n_max, true, ""};
    try {
      const auto d = find_shift(f, avoiding, kMaxShift);
      if (d) {
        ones.detail = "shift=" + std::to_string(*d);
      } else {
        ones.pass = false;
        ones.detail = "no constant shift aligns the sequences";
      }
    } catch (const AmbiguousShift& e) {
      ones.pass = false;
      ones.detail = e.what();
    }
    report.lines.push_back(std::move(ones));
  }
  return report;
}

CheckReport verify_reductions(int n_max, int cap) {
  constexpr int kCountDepth = 50;
  CheckReport report;

  for (int s = 1; s <= 5; ++s) {
    const RationalSlope slope(1, s);
    const auto general = w_general_table(slope, kCountDepth);
    const auto unit = w_unit_table(s, kCountDepth);
    for (int n = 0; n <= kCountDepth; ++n) {
      CheckLine line{"w-general-vs-w-unit", slope.str(), n, general[n] == unit[n], ""};
      if (!line.pass) line.detail = general[n].str() + " != " + unit[n].str();
      report.lines.push_back(std::move(line));
    }
  }
  for (int q = 1; q <= 4; ++q) {
    const RationalSlope slope(q, 1);
    const auto general = w_general_table(slope, kCountDepth);
    const auto fib = gfib_table(q + 1, kCountDepth);
    for (int n = 0; n <= kCountDepth; ++n) {
      CheckLine line{"w-general-vs-gfib", slope.str(), n, general[n] == fib[n], ""};
      if (!line.pass) line.detail = general[n].str() + " != " + fib[n].str();
      report.lines.push_back(std::move(line));
    }
  }
  {
    const auto unit = w_unit_table(1, kCountDepth);
    const auto fib = gfib_table(2, kCountDepth);
    for (int n = 0; n <= kCountDepth; ++n) {
      CheckLine line{"w-unit-vs-gfib", "1", n, unit[n] == fib[n], ""};
      if (!line.pass) line.detail = unit[n].str() + " != " + fib[n].str();
      report.lines.push_back(std::move(line));
    }
  }

  // set-level reductions
  for (int s = 1; s <= 5; ++s) {
    const RationalSlope slope(1, s);
    for (int n = 0; n <= n_max; ++n) {
      const PathSet general = generate_general(n, slope);
      const PathSet unit = generate_unit(n, s);
      CheckLine line{"generate-general-vs-unit", slope.str(), n,
                     general.members == unit.members, ""};
      if (!line.pass) line.detail = symmetric_difference_detail(general.members, unit.members);
      report.lines.push_back(std::move(line));
    }
  }
  for (int q = 1; q <= 4; ++q) {
    const RationalSlope slope(q, 1);
    for (int n = 0; n <= n_max; ++n) {
      const PathSet general = generate_general(n, slope);
      const PathSet integer = generate_integer(n, q);
      CheckLine line{"generate-general-vs-integer", slope.str(), n,
                     general.members == integer.members, ""};
      if (!line.pass) line.detail = symmetric_difference_detail(general.members, integer.members);
      report.lines.push_back(std::move(line));
    }
  }

  // validator reductions over the full universe
  const int validator_depth = std::min(n_max, 12);
  for (int n = 0; n <= validator_depth; ++n) {
    const auto universe = enumerate_height2(n, cap);
    for (int q = 1; q <= 4; ++q) {
      const RationalSlope slope(q, 1);
      CheckLine line{"unified-vs-integer-validator", slope.str(), n, true, ""};
      for (const DyckPath& path : universe) {
        if (is_valid_unified(path, slope) != is_valid_integer(path, q)) {
          line.pass = false;
          line.detail = render_or_epsilon(path);
          break;
        }
      }
      report.lines.push_back(std::move(line));
    }
    for (int s = 1; s <= 5; ++s) {
      const RationalSlope slope(1, s);
      CheckLine line{"unified-vs-unit-validator", slope.str(), n, true, ""};
      for (const DyckPath& path : universe) {
        if (is_valid_unified(path, slope) != is_valid_unit(path, s)) {
          line.pass = false;
          line.detail = render_or_epsilon(path);
          break;
        }
      }
      report.lines.push_back(std::move(line));
    }
  }

  // unified algorithm against the rule-based scan, full coprime grid
  for (const RationalSlope& slope : coprime_grid(5, 5)) {
    for (int n = 0; n <= n_max; ++n) {
      const auto universe = enumerate_height2(n, cap);
      CheckLine line{"unified-vs-literal-validator", slope.str(), n, true, ""};
      for (const DyckPath& path : universe) {
        if (is_valid_unified(path, slope) != is_valid_general(path, slope)) {
          line.pass = false;
          line.detail = render_or_epsilon(path);
          break;
        }
      }
      report.lines.push_back(std::move(line));
    }
  }
  return report;
}

std::vector<RationalSlope> coprime_grid(int r_max, int s_max) {
  std::vector<RationalSlope> grid;
  for (int r = 1; r <= r_max; ++r) {
    for (int s = 1; s <= s_max; ++s) {
      if (std::gcd(r, s) == 1) grid.emplace_back(r, s);
    }
  }
  return grid;
}

CheckReport run_full_crosscheck(int n_sets, int n_counts, int cap) {
  CheckReport report;
  for (const RationalSlope& slope : coprime_grid(5, 5)) {
    report.append(verify_grammar_vs_oracle(slope, n_sets, cap));
    report.append(verify_counts(slope, n_sets, cap));
    report.append(verify_string_alignment(slope, n_counts));
  }
  report.append(verify_reductions(n_sets, cap));
  return report;
}

}  // namespace qdyck
