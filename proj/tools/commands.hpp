#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace tamari::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;  // "false" / "not derivable" / failed check
inline constexpr int kUsage = 2;

int cmd_decide(const std::string& a, const std::string& b, std::ostream& out);
int cmd_derive(const std::string& a, const std::string& b, bool json, std::ostream& out,
               std::ostream& err);
int cmd_normalize(const std::optional<std::string>& in_file, std::ostream& out, std::ostream& err);
int cmd_join(const std::string& a, const std::string& b, std::ostream& out);
int cmd_meet(const std::string& a, const std::string& b, std::ostream& out);
int cmd_bottom(std::size_t n, std::ostream& out);
int cmd_top(std::size_t n, std::ostream& out);

enum class CountMethod { Dp, Formula, Oracle };

struct CountOptions {
  std::optional<std::size_t> single;
  std::optional<std::size_t> upto;
  bool csv = false;
  CountMethod method = CountMethod::Dp;
  std::size_t oracle_limit = 6;
};
int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& err);

int cmd_series(std::size_t order, std::ostream& out);
int cmd_hasse(std::size_t n, const std::optional<std::string>& dot_file, std::size_t limit,
              std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& query, const std::string& a, const std::string& b,
               std::ostream& out);

/// Runs the oracle-equivalence suites up to `max_size` products and prints
/// one line per suite. Returns kOk when every suite passes.
int cmd_selfcheck(std::size_t max_size, std::ostream& out);

}  // namespace tamari::cli
