#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "tamari/calculus.hpp"
#include "tamari/count.hpp"
#include "tamari/focusing.hpp"
#include "tamari/lattice.hpp"
#include "tamari/oracle.hpp"
#include "tamari/term.hpp"

namespace tamari::cli {

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;

  void fail(std::string what) {
    if (ok) detail = std::move(what);
    ok = false;
  }
};

using Suite = std::function<Outcome(std::size_t)>;

template <typename Body>
void for_each_pair(std::size_t max_size, Body body) {
  for (std::size_t n = 0; n <= max_size; ++n) {
    const auto trees = enumerate_trees(canonical_frontier(n + 1));
    for (const auto& a : trees) {
      for (const auto& b : trees) body(n, a, b);
    }
  }
}

std::string pair_text(const Formula& a, const Formula& b) {
  return print_formula(a) + " , " + print_formula(b);
}

Outcome decide_suite(std::size_t max_size) {
  Outcome out;
  for_each_pair(max_size, [&](std::size_t, const Formula& a, const Formula& b) {
    ++out.checked;
    if (decide(a, b) != oracle::leq_oracle(a, b)) out.fail("decide disagrees on " + pair_text(a, b));
  });
  return out;
}

Outcome coherence_suite(std::size_t max_size) {
  Outcome out;
  std::vector<std::uint64_t> totals(max_size + 1, 0);
  for_each_pair(max_size, [&](std::size_t n, const Formula& a, const Formula& b) {
    ++out.checked;
    const std::uint64_t c = count_focused(Sequent{Context{a}, b});
    totals[n] += c;
    if (c != (oracle::leq_oracle(a, b) ? 1u : 0u)) {
      out.fail(std::to_string(c) + " focused derivations for " + pair_text(a, b));
    }
  });
  const auto expected = interval_counts(max_size);
  for (std::size_t n = 0; n <= max_size; ++n) {
    if (BigInt(totals[n]) != expected[n]) out.fail("derivation total differs at n=" + std::to_string(n));
  }
  return out;
}

Outcome lattice_suite(std::size_t max_size) {
  Outcome out;
  for_each_pair(max_size, [&](std::size_t, const Formula& a, const Formula& b) {
    ++out.checked;
    if (!(join_formula(a, b) == oracle::join_oracle(a, b))) out.fail("join of " + pair_text(a, b));
    if (!(meet_formula(a, b) == oracle::meet_oracle(a, b))) out.fail("meet of " + pair_text(a, b));
  });
  return out;
}

Outcome count_suite(std::size_t max_size) {
  Outcome out;
  const auto dp = interval_counts(max_size);
  const auto series = series_solve(max_size).l;
  for (std::size_t n = 0; n <= max_size; ++n) {
    ++out.checked;
    const BigInt brute = oracle::count_intervals_oracle(n, max_size);
    if (dp[n] != tutte_formula(n) || dp[n] != brute || dp[n] != series.coeff(n, 1)) {
      out.fail("counts differ at n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome hasse_suite(std::size_t max_size) {
  Outcome out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    ++out.checked;
    const Frontier omega = canonical_frontier(n + 1);
    const HasseGraph rot = hasse(omega, max_size + 1);
    const HasseGraph tr = oracle::transitive_reduction(rot.nodes, decide);
    if (rot.edges != tr.edges) out.fail("rotation edges differ from covers at n=" + std::to_string(n));
  }
  return out;
}

Outcome series_suite(std::size_t) {
  constexpr std::size_t kOrder = 20;
  Outcome out;
  out.checked = kOrder + 1;
  if (const auto m = chapoton_check(kOrder)) {
    out.fail("functional equation fails at z^" + std::to_string(m->n) + " x^" + std::to_string(m->k));
  }
  return out;
}

}  // namespace

int cmd_selfcheck(std::size_t max_size, std::ostream& out) {
  const std::vector<std::pair<std::string, Suite>> suites{
      {"decide-vs-oracle", decide_suite}, {"coherence", coherence_suite},
      {"join-meet-vs-oracle", lattice_suite}, {"interval-counts", count_suite},
      {"hasse-covers", hasse_suite}, {"functional-equation", series_suite},
  };
  std::size_t failed = 0;
  for (const auto& [name, suite] : suites) {
    const Outcome o = suite(max_size);
    out << (o.ok ? "PASS " : "FAIL ") << name << " (" << o.checked << " checks)";
    if (!o.ok) {
      ++failed;
      out << ": " << o.detail;
    }
    out << '\n';
  }
  out << (suites.size() - failed) << '/' << suites.size() << " suites passed\n";
  return failed == 0 ? kOk : kFalse;
}

}  // namespace tamari::cli
