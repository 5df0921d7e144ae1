// Command-line front end: counting, listing, validity checking, sequence
// tables, q-decreasing strings, and differential crosscheck runs.
//
// Exit codes: 0 success / valid / crosscheck pass; 1 invalid path or
// crosscheck failure; 2 usage or parse error; 3 cap exceeded.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdyck/crosscheck.hpp"
#include "qdyck/generation.hpp"
#include "qdyck/qstrings.hpp"
#include "qdyck/sequences.hpp"
#include "qdyck/validity.hpp"

namespace {

using nlohmann::ordered_json;

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr) return fallback;
  int out = fallback;
  const auto [ptr, ec] = std::from_chars(v, v + std::string_view(v).size(), out);
  if (ec != std::errc{} || *ptr != '\0') return fallback;
  return out;
}

long long parse_ll(std::string_view text, const char* what) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " from '" +
                                std::string(text) + "'");
  }
  return out;
}

// Accepts "r/s" or an integer literal; unreduced input is reduced with a
// notice on the diagnostic stream.
qdyck::RationalSlope parse_q(const std::string& text) {
  const auto slash = text.find('/');
  long long r = 0;
  long long s = 1;
  if (slash == std::string::npos) {
    r = parse_ll(text, "q");
  } else {
    r = parse_ll(std::string_view(text).substr(0, slash), "q numerator");
    s = parse_ll(std::string_view(text).substr(slash + 1), "q denominator");
  }
  const qdyck::RationalSlope slope = qdyck::RationalSlope::reduced(r, s);
  if (slope.r != r || slope.s != s) {
    std::cerr << "note: q = " << text << " reduced to " << slope.str() << "\n";
  }
  return slope;
}

enum class Format { Plain, Csv, Jsonl };

const std::map<std::string, Format> kFormatNames{
    {"plain", Format::Plain}, {"csv", Format::Csv}, {"jsonl", Format::Jsonl}};

std::string plain_path(const qdyck::DyckPath& path) {
  return path.empty() ? std::string("ε") : qdyck::render_path(path);
}

int run_count(const std::string& q, long long n) {
  const auto slope = parse_q(q);
  const qdyck::Count value =
      slope.is_integer() ? qdyck::gfib(slope.r + 1, n) : qdyck::w_general(slope, n);
  std::cout << value.str() << "\n";
  return 0;
}

qdyck::PathSet generate_family(int n, qdyck::RationalSlope slope) {
  if (slope.is_integer()) return qdyck::generate_integer(n, slope.r);
  if (slope.r == 1) return qdyck::generate_unit(n, slope.s);
  return qdyck::generate_general(n, slope);
}

int run_list(const std::string& q, int n, Format format, int cap) {
  const auto slope = parse_q(q);
  if (n > cap) {
    throw qdyck::CapExceeded("list: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
  }
  const qdyck::PathSet set = generate_family(n, slope);
  if (format == Format::Csv) std::cout << "n,path,humps\n";
  for (const qdyck::DyckPath& path : set.members) {
    if (format == Format::Plain) {
      std::cout << plain_path(path) << "\n";
    } else if (format == Format::Csv) {
      std::cout << path.semilength() << ',' << qdyck::render_path(path) << ',';
      const auto& peaks = path.hump_peaks();
      for (std::size_t i = 0; i < peaks.size(); ++i) {
        if (i > 0) std::cout << ';';
        std::cout << peaks[i];
      }
      std::cout << "\n";
    } else {
      ordered_json rec;
      rec["n"] = path.semilength();
      rec["path"] = qdyck::render_path(path);
      rec["humps"] = path.hump_peaks();
      std::cout << rec.dump() << "\n";
    }
  }
  return 0;
}

int run_check(const std::string& q, const std::string& text) {
  const auto slope = parse_q(q);
  const qdyck::DyckPath path = qdyck::parse_path_any(text);
  const auto violation = qdyck::first_violation(path, slope);
  if (!violation) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid: " << violation->describe() << "\n";
  return 1;
}

int run_table(const std::string& q, int max_n, Format format, int cap) {
  const auto slope = parse_q(q);
  const bool integer_form = slope.is_integer();
  const std::vector<qdyck::Count> values =
      integer_form ? qdyck::gfib_table(slope.r + 1, max_n, cap)
                   : qdyck::w_general_table(slope, max_n, cap);
  if (format == Format::Csv) std::cout << (integer_form ? "n,f\n" : "n,w\n");
  for (int n = 0; n <= max_n; ++n) {
    if (format == Format::Plain) {
      std::cout << n << '\t' << values[n].str() << "\n";
    } else if (format == Format::Csv) {
      std::cout << n << ',' << values[n].str() << "\n";
    } else {
      ordered_json rec;
      rec["n"] = n;
      rec["value"] = values[n].str();
      std::cout << rec.dump() << "\n";
    }
  }
  return 0;
}

int run_strings(const std::string& q, int n, const std::string& mode, Format format, int cap) {
  const auto slope = parse_q(q);
  if (mode == "count") {
    std::cout << qdyck::count_q_decreasing(n, slope).str() << "\n";
    return 0;
  }
  for (const std::string& bits : qdyck::enumerate_q_decreasing(n, slope, cap)) {
    if (format == Format::Jsonl) {
      ordered_json rec;
      rec["n"] = n;
      rec["string"] = bits;
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << bits << "\n";
    }
  }
  return 0;
}

int run_crosscheck(const std::string& q, bool all, int max_n, Format format, int cap) {
  qdyck::CheckReport report;
  if (all) {
    report = qdyck::run_full_crosscheck(max_n, max_n + 4, cap);
  } else {
    const auto slope = parse_q(q);
    report.append(qdyck::verify_grammar_vs_oracle(slope, max_n, cap));
    report.append(qdyck::verify_counts(slope, max_n, cap));
    report.append(qdyck::verify_string_alignment(slope, max_n + 4));
  }
  std::cout << (format == Format::Jsonl ? report.to_jsonl() : report.to_text());
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"height-bounded Dyck paths counted by rational Q-bonacci numbers"};
  app.require_subcommand(1);

  const int enum_cap = env_int("QDYCK_ENUM_CAP", qdyck::kDefaultEnumCap);
  const int table_cap = env_int("QDYCK_TABLE_CAP", qdyck::kDefaultTableCap);

  std::string q;
  long long n_ll = 0;
  int n = 0;
  int max_n = 12;
  int list_cap = 0;
  int seq_cap = 0;
  int string_cap = 0;
  int cross_cap = 0;
  Format format = Format::Plain;
  std::string path_text;
  std::string mode = "count";
  bool all = false;

  auto* count_cmd = app.add_subcommand("count", "print |D_n^q|");
  count_cmd->add_option("--q", q, "slope r/s or integer q")->required();
  count_cmd->add_option("--n", n_ll, "semilength")->required()->check(CLI::NonNegativeNumber);

  auto* list_cmd = app.add_subcommand("list", "list the members of D_n^q");
  list_cmd->add_option("--q", q)->required();
  list_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  list_cmd->add_option("--format", format, "plain|csv|jsonl")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  list_cmd->add_option("--cap", list_cap, "enumeration cap")->default_val(enum_cap);

  auto* check_cmd = app.add_subcommand("check", "decide membership of one path");
  check_cmd->add_option("--q", q)->required();
  check_cmd->add_option("path", path_text, "U/D letters or parentheses")->required();

  auto* table_cmd = app.add_subcommand("table", "print the counting sequence up to n");
  table_cmd->add_option("--q", q)->required();
  table_cmd->add_option("--max-n", max_n)->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", format, "plain|csv|jsonl")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  table_cmd->add_option("--cap", seq_cap, "table cap")->default_val(table_cap);

  auto* strings_cmd = app.add_subcommand("strings", "q-decreasing binary strings");
  strings_cmd->add_option("--q", q)->required();
  strings_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  strings_cmd->add_option("mode", mode, "count|list")
      ->check(CLI::IsMember({"count", "list"}));
  strings_cmd->add_option("--format", format, "plain|jsonl")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  strings_cmd->add_option("--cap", string_cap, "listing cap")
      ->default_val(qdyck::kDefaultStringCap);

  auto* cross_cmd = app.add_subcommand("crosscheck", "differential validation runs");
  auto* cross_q = cross_cmd->add_option("--q", q, "single slope to check");
  auto* cross_all = cross_cmd->add_flag("--all", all, "run the full coprime grid (r,s <= 5)");
  cross_cmd->add_option("--max-n", max_n, "set checks up to this semilength")
      ->check(CLI::NonNegativeNumber);
  cross_cmd->add_option("--format", format, "plain|jsonl")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  cross_cmd->add_option("--cap", cross_cap, "enumeration cap")->default_val(enum_cap);
  cross_q->excludes(cross_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (count_cmd->parsed()) return run_count(q, n_ll);
    if (list_cmd->parsed()) return run_list(q, n, format, list_cap);
    if (check_cmd->parsed()) return run_check(q, path_text);
    if (table_cmd->parsed()) return run_table(q, max_n, format, seq_cap);
    if (strings_cmd->parsed()) return run_strings(q, n, mode, format, string_cap);
    if (cross_cmd->parsed()) {
      if (!all && q.empty()) {
        std::cerr << "error: crosscheck needs --q or --all\n";
        return 2;
      }
      return run_crosscheck(q, all, max_n, format, cross_cap);
    }
  } catch (const qdyck::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qdyck::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
