#include <pthread.h>

#include <cstddef>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "tamari/lattice.hpp"

namespace {

using namespace tamari::cli;

// Recursive builders (search, focus, JSON) are bounded by sequent size, so
// commands run on a thread with a generous stack.
constexpr std::size_t kStackBytes = std::size_t{512} << 20;

struct Job {
  std::function<int()> body;
  int result = kUsage;
};

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

void* run_job(void* arg) {
  auto* job = static_cast<Job*>(arg);
  job->result = guarded(job->body);
  return nullptr;
}

int run_with_big_stack(std::function<int()> body) {
  Job job{std::move(body)};
  pthread_attr_t attr;
  pthread_t thread;
  if (pthread_attr_init(&attr) == 0) {
    const bool ok = pthread_attr_setstacksize(&attr, kStackBytes) == 0 &&
                    pthread_create(&thread, &attr, run_job, &job) == 0;
    pthread_attr_destroy(&attr);
    if (ok) {
      pthread_join(thread, nullptr);
      return job.result;
    }
  }
  return guarded(job.body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tamari order: focused proof search, lattice operations and interval counts"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string a, b;

  auto* decide = app.add_subcommand("decide", "Decide A <= B; exit 0 if true, 1 if false");
  decide->add_option("A", a)->required();
  decide->add_option("B", b)->required();
  decide->callback([&] { action = [&] { return cmd_decide(a, b, std::cout); }; });

  bool json = false;
  auto* derive = app.add_subcommand("derive", "Print the focused derivation of A |- B");
  derive->add_option("A", a)->required();
  derive->add_option("B", b)->required();
  derive->add_flag("--json", json, "Emit derivation JSON");
  derive->callback([&] { action = [&] { return cmd_derive(a, b, json, std::cout, std::cerr); }; });

  std::optional<std::string> in_file;
  auto* normalize = app.add_subcommand("normalize", "Focus a derivation given as JSON");
  normalize->add_option("--in", in_file, "Input file (default: standard input)");
  normalize->callback([&] { action = [&] { return cmd_normalize(in_file, std::cout, std::cerr); }; });

  auto* join = app.add_subcommand("join", "Join of two formulas over the same frontier");
  join->add_option("A", a)->required();
  join->add_option("B", b)->required();
  join->callback([&] { action = [&] { return cmd_join(a, b, std::cout); }; });

  auto* meet = app.add_subcommand("meet", "Meet of two formulas over the same frontier");
  meet->add_option("A", a)->required();
  meet->add_option("B", b)->required();
  meet->callback([&] { action = [&] { return cmd_meet(a, b, std::cout); }; });

  std::size_t n = 0;
  auto* bottom = app.add_subcommand("bottom", "Left comb over a1..a(n+1)");
  bottom->add_option("n", n)->required();
  bottom->callback([&] { action = [&] { return cmd_bottom(n, std::cout); }; });

  auto* top = app.add_subcommand("top", "Right comb over a1..a(n+1)");
  top->add_option("n", n)->required();
  top->callback([&] { action = [&] { return cmd_top(n, std::cout); }; });

  CountOptions count_opts;
  bool use_formula = false, use_oracle = false;
  auto* count = app.add_subcommand("count", "Number of intervals of T_n");
  count->add_option("n", count_opts.single);
  count->add_option("--upto", count_opts.upto, "Print counts for 0..N");
  count->add_flag("--csv", count_opts.csv, "CSV output with header n,count");
  auto* formula_flag = count->add_flag("--formula", use_formula, "Use the closed form");
  count->add_flag("--oracle", use_oracle, "Use brute force")->excludes(formula_flag);
  count->add_option("--oracle-limit", count_opts.oracle_limit, "Largest size the oracle accepts")
      ->capture_default_str();
  count->callback([&] {
    if (use_formula) count_opts.method = CountMethod::Formula;
    if (use_oracle) count_opts.method = CountMethod::Oracle;
    action = [&] { return cmd_count(count_opts, std::cout, std::cerr); };
  });

  std::size_t order = 0;
  auto* series = app.add_subcommand("series", "Coefficients of R(z,x) and L1(z)");
  series->add_option("--order", order, "Highest power of z")->required();
  series->callback([&] { action = [&] { return cmd_series(order, std::cout); }; });

  std::optional<std::string> dot_file;
  std::size_t hasse_limit = tamari::kDefaultHasseLimit;
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of T_n in DOT");
  hasse->add_option("n", n)->required();
  hasse->add_option("--dot", dot_file, "Write DOT to FILE instead of standard output");
  hasse->add_option("--limit", hasse_limit, "Largest frontier length accepted")
      ->capture_default_str();
  hasse->callback([&] {
    action = [&] { return cmd_hasse(n, dot_file, hasse_limit, std::cout, std::cerr); };
  });

  std::size_t max_size = 5;
  auto* selfcheck = app.add_subcommand("selfcheck", "Compare every engine against the oracles");
  selfcheck->add_option("--max-size", max_size, "Largest tree size checked")->capture_default_str();
  selfcheck->callback([&] { action = [&] { return cmd_selfcheck(max_size, std::cout); }; });

  std::string query;
  auto* oracle = app.add_subcommand("oracle", "Answer leq/join/meet by brute force");
  oracle->add_option("query", query)->required()->check(CLI::IsMember({"leq", "join", "meet"}));
  oracle->add_option("A", a)->required();
  oracle->add_option("B", b)->required();
  oracle->callback([&] { action = [&] { return cmd_oracle(query, a, b, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  const int code = run_with_big_stack(action);
  std::cout.flush();
  return code;
}
