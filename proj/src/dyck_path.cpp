#include "qdyck/dyck_path.hpp"

#include <algorithm>
#include <numeric>

namespace qdyck {

RationalSlope::RationalSlope(int r_, int s_) : r(r_), s(s_) {
  if (r < 1 || s < 1) {
    throw std::invalid_argument("slope requires r >= 1 and s >= 1, got " + std::to_string(r_) +
                                "/" + std::to_string(s_));
  }
  if (std::gcd(r, s) != 1) {
    throw std::invalid_argument("slope " + std::to_string(r_) + "/" + std::to_string(s_) +
                                " is not in lowest terms");
  }
}

RationalSlope RationalSlope::reduced(long long r_, long long s_) {
  if (r_ < 1 || s_ < 1) {
    throw std::invalid_argument("slope requires r >= 1 and s >= 1, got " + std::to_string(r_) +
                                "/" + std::to_string(s_));
  }
  const long long g = std::gcd(r_, s_);
  return RationalSlope(static_cast<int>(r_ / g), static_cast<int>(s_ / g));
}

std::string RationalSlope::str() const {
  return s == 1 ? std::to_string(r) : std::to_string(r) + "/" + std::to_string(s);
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::OddLength:
      return "OddLength";
    case ParseErrorKind::Unbalanced:
      return "Unbalanced";
    case ParseErrorKind::NegativeExcursion:
      return "NegativeExcursion";
    case ParseErrorKind::HeightExceeded:
      return "HeightExceeded";
    case ParseErrorKind::InvalidCharacter:
      return "InvalidCharacter";
  }
  return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t index)
    : std::runtime_error(std::string(to_string(kind)) + " at index " + std::to_string(index)),
      kind_(kind),
      index_(index) {}

int HumpProfile::semilength() const {
  int n = 0;
  for (int p : peaks) n += p + 1;
  return n;
}

DyckPath DyckPath::from_humps(HumpProfile profile) {
  for (int p : profile.peaks) {
    if (p < 0) throw std::invalid_argument("hump peak count must be nonnegative");
  }
  DyckPath path;
  path.humps_ = std::move(profile.peaks);
  return path;
}

int DyckPath::semilength() const {
  int n = 0;
  for (int p : humps_) n += p + 1;
  return n;
}

std::vector<Step> DyckPath::steps() const {
  std::vector<Step> out;
  out.reserve(2 * static_cast<std::size_t>(semilength()));
  for (int p : humps_) {
    out.push_back(Step::Up);
    for (int j = 0; j < p; ++j) {
      out.push_back(Step::Up);
      out.push_back(Step::Down);
    }
    out.push_back(Step::Down);
  }
  return out;
}

namespace {

struct Alphabet {
  char up;
  char down;
};

Alphabet alphabet_of(Notation notation) {
  return notation == Notation::Letters ? Alphabet{'U', 'D'} : Alphabet{'(', ')'};
}

// Single scan: checks all path invariants and collects the hump profile.
// Every arrival at height 2 is one 1-peak of the open hump; every return to
// the ground closes it.
DyckPath scan(std::string_view text, Alphabet alpha) {
  std::vector<int> humps;
  int height = 0;
  int open_peaks = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == alpha.up) {
      if (++height > 2) throw ParseError(ParseErrorKind::HeightExceeded, i);
      if (height == 2) ++open_peaks;
    } else if (c == alpha.down) {
      if (--height < 0) throw ParseError(ParseErrorKind::NegativeExcursion, i);
      if (height == 0) {
        humps.push_back(open_peaks);
        open_peaks = 0;
      }
    } else {
      throw ParseError(ParseErrorKind::InvalidCharacter, i);
    }
  }
  if (text.size() % 2 != 0) throw ParseError(ParseErrorKind::OddLength, text.size());
  if (height != 0) throw ParseError(ParseErrorKind::Unbalanced, text.size());
  return DyckPath::from_humps(HumpProfile{std::move(humps)});
}

}  // namespace

DyckPath DyckPath::from_steps(std::span<const Step> steps) {
  std::string text;
  text.reserve(steps.size());
  for (Step s : steps) text.push_back(s == Step::Up ? 'U' : 'D');
  return parse_path(text, Notation::Letters);
}

DyckPath parse_path(std::string_view text, Notation notation) {
  return scan(text, alphabet_of(notation));
}

DyckPath parse_path_any(std::string_view text) {
  if (!text.empty() && (text.front() == '(' || text.front() == ')')) {
    return parse_path(text, Notation::Parentheses);
  }
  return parse_path(text, Notation::Letters);
}

std::string render_path(const DyckPath& path, Notation notation) {
  const Alphabet alpha = alphabet_of(notation);
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(path.semilength()));
  for (int p : path.hump_peaks()) {
    out.push_back(alpha.up);
    for (int j = 0; j < p; ++j) {
      out.push_back(alpha.up);
      out.push_back(alpha.down);
    }
    out.push_back(alpha.down);
  }
  return out;
}

HumpProfile humps_of(const DyckPath& path) { return HumpProfile{path.hump_peaks()}; }

DyckPath path_of_humps(const HumpProfile& profile) { return DyckPath::from_humps(profile); }

std::vector<int> zero_valley_runs(const HumpProfile& profile) {
  const auto& p = profile.peaks;
  const int m = static_cast<int>(p.size());
  // zeros[i] = length of the run of 0-peak humps starting at hump i
  std::vector<int> zeros(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) zeros[i] = p[i] == 0 ? zeros[i + 1] + 1 : 0;
  std::vector<int> z(m, 0);
  for (int i = 0; i < m; ++i) {
    const int k = zeros[i + 1];
    const bool run_reaches_end = (i + 1 + k == m);
    z[i] = k + (run_reaches_end ? 0 : 1);
  }
  return z;
}

DyckPath concat(const DyckPath& a, const DyckPath& b) {
  HumpProfile joined{a.hump_peaks()};
  joined.peaks.insert(joined.peaks.end(), b.hump_peaks().begin(), b.hump_peaks().end());
  return DyckPath::from_humps(std::move(joined));
}

namespace {

void emit_profiles(int remaining, std::vector<int>& prefix, std::vector<DyckPath>& out) {
  if (remaining == 0) {
    out.push_back(DyckPath::from_humps(HumpProfile{prefix}));
    return;
  }
  for (int p = 0; p < remaining; ++p) {
    prefix.push_back(p);
    emit_profiles(remaining - p - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_height2(int n, int cap) {
  if (n < 0) throw std::invalid_argument("semilength must be nonnegative");
  if (n > cap) {
    throw CapExceeded("enumerate_height2: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<DyckPath> out;
  out.reserve(n == 0 ? 1 : std::size_t{1} << (n - 1));
  std::vector<int> prefix;
  emit_profiles(n, prefix, out);
  return out;
}

}  // namespace qdyck
