// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/run.hpp"
#include "tamari/count.hpp"
#include "tamari/focusing.hpp"
#include "tamari/lattice.hpp"
#include "tamari/oracle.hpp"

using namespace tamari;
using fixtures::F;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

std::vector<Formula> trees(std::size_t n) { return enumerate_trees(canonical_frontier(n + 1)); }

Result interval_counts_criterion() {
  Result r;
  const std::string expected = "1\n1\n3\n13\n68\n399\n2530\n16965\n";
  auto t0 = Clock::now();
  const auto cli = fixtures::run(fixtures::shell_quote(TAMARI_CLI) + " count --upto 7");
  const double cli_time = seconds_since(t0);
  r.expect(cli.code == 0 && cli.out == expected, "count --upto 7 printed: " + cli.out);
  r.expect(cli_time < 1.0, "count --upto 7 took " + fmt_time(cli_time));

  const std::vector<long> golden{1, 1, 3, 13, 68, 399, 2530, 16965};
  const auto dp7 = interval_counts(7);
  for (std::size_t n = 0; n <= 7; ++n) {
    r.expect(dp7[n] == golden[n] && tutte_formula(n) == golden[n], "n=" + std::to_string(n));
  }

  t0 = Clock::now();
  const auto dp = interval_counts(60);
  const auto series = series_solve(60);
  for (std::size_t n = 0; n <= 60; ++n) {
    const BigInt closed = tutte_formula(n);
    r.expect(dp[n] == closed && series.l.coeff(n, 1) == closed,
             "dp/series/formula differ at n=" + std::to_string(n));
  }
  const double big_time = seconds_since(t0);
  r.expect(big_time < 10.0, "n<=60 agreement took " + fmt_time(big_time));
  if (r.ok) r.detail = "cli " + fmt_time(cli_time) + ", n<=60 " + fmt_time(big_time);
  return r;
}

Result series_golden_criterion() {
  Result r;
  const auto sol = series_solve(4);
  const std::vector<std::vector<long>> golden{
      {0, 1}, {0, 0, 1}, {0, 0, 1, 2}, {0, 0, 3, 5, 5}, {0, 0, 13, 20, 21, 14}};
  for (std::size_t n = 0; n < golden.size(); ++n) {
    r.expect(sol.r[n] == Poly(golden[n].begin(), golden[n].end()), "z^" + std::to_string(n));
  }
  return r;
}

Result decision_criterion() {
  Result r;
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto ts = trees(n);
    for (const auto& a : ts) {
      for (const auto& b : ts) {
        ++pairs;
        r.expect(decide(a, b) == oracle::leq_oracle(a, b),
                 print_formula(a) + " <= " + print_formula(b));
      }
    }
  }
  const double t = seconds_since(t0);
  r.expect(t < 60.0, "sweep took " + fmt_time(t));
  if (r.ok) r.detail = std::to_string(pairs) + " pairs, " + fmt_time(t);
  return r;
}

Result coherence_criterion() {
  Result r;
  const auto expected = interval_counts(5);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::uint64_t total = 0;
    const auto ts = trees(n);
    for (const auto& a : ts) {
      for (const auto& b : ts) {
        const std::uint64_t c = count_focused(Sequent{Context{a}, b});
        total += c;
        r.expect(c == (oracle::leq_oracle(a, b) ? 1u : 0u),
                 std::to_string(c) + " derivations of " + print_formula(a) + " |- " + print_formula(b));
      }
    }
    r.expect(BigInt(total) == expected[n], "total at n=" + std::to_string(n));
  }
  return r;
}

Result lattice_criterion() {
  Result r;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto ts = trees(n);
    for (const auto& a : ts) {
      for (const auto& b : ts) {
        r.expect(join_formula(a, b) == oracle::join_oracle(a, b),
                 "join " + print_formula(a) + ", " + print_formula(b));
        r.expect(meet_formula(a, b) == oracle::meet_oracle(a, b),
                 "meet " + print_formula(a) + ", " + print_formula(b));
      }
    }
  }
  const Formula j = join_formula(F("p*((q*(r*((s*t)*u)))*v)"), F("(p*(q*r))*((s*t)*(u*v))"));
  r.expect(j == F("p*(q*(r*((s*t)*(u*v))))"), "worked example gave " + print_formula(j));
  return r;
}

Result structural_criterion() {
  Result r;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& a : trees(n)) r.expect(phi(psi(a)) == a, "phi(psi(" + print_formula(a) + "))");
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    for (const auto& c : fixtures::all_contexts(canonical_frontier(m))) {
      if (is_irreducible(c)) r.expect(psi(phi(c)) == c, "psi(phi(" + print_context(c) + "))");
    }
  }
  // Adjoint triple, total size <= 4 (at most 5 atoms).
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto contexts = fixtures::all_contexts(canonical_frontier(m));
    for (const auto& a : trees(m - 1)) {
      for (const auto& c : contexts) {
        if (is_irreducible(c)) {
          r.expect(leq_context(psi(a), c) == decide(a, phi(c)),
                   "psi -| phi at " + print_formula(a) + ", " + print_context(c));
        }
        r.expect(decide(phi(c), a) == leq_context(c, Context{a}),
                 "phi -| [-] at " + print_context(c) + ", " + print_formula(a));
      }
    }
  }
  // Oplaxity, total size <= 5.
  for (std::size_t m = 2; m <= 6; ++m) {
    for (const auto& c : fixtures::all_contexts(canonical_frontier(m))) {
      for (std::size_t k = 1; k < c.size(); ++k) {
        const Context g(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
        const Context d(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
        r.expect(decide(phi(c), phi(g) * phi(d)), "oplax at " + print_context(c));
      }
    }
  }
  return r;
}

Result normalizer_criterion() {
  Result r;
  std::mt19937_64 rng(2024);
  std::size_t with_cut = 0;
  for (int i = 0; i < 1000; ++i) {
    const Derivation d = fixtures::random_derivation(6, rng);
    r.expect(!validate(d), "generator produced an invalid derivation");
    if (to_json(d).find("\"cut\"") != std::string::npos) ++with_cut;
    const Derivation f = focus(d);
    const auto expected = search_focused(d.conclusion());
    r.expect(!validate(f) && is_focused(f), "focus output is not focused");
    r.expect(f.conclusion() == d.conclusion(), "conclusion changed");
    r.expect(expected && f == *expected, "differs from search: " + print_sequent(d.conclusion()));
  }
  r.expect(with_cut > 100, "too few derivations contain cuts: " + std::to_string(with_cut));
  if (r.ok) r.detail = std::to_string(with_cut) + " of 1000 contain cuts";
  return r;
}

Result hasse_criterion() {
  Result r;
  const auto comparable = [](const HasseGraph& g) {
    std::size_t c = 0;
    for (const auto& a : g.nodes) {
      for (const auto& b : g.nodes) c += decide(a, b) ? 1 : 0;
    }
    return c;
  };
  const auto t3 = hasse(canonical_frontier(4));
  r.expect(t3.nodes.size() == 5 && t3.edges.size() == 5 && comparable(t3) == 13, "T3");
  const auto t4 = hasse(canonical_frontier(5));
  r.expect(t4.nodes.size() == 14 && t4.edges.size() == 21 && comparable(t4) == 68, "T4");
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto g = hasse(canonical_frontier(n + 1));
    const auto tr = oracle::transitive_reduction(g.nodes, oracle::leq_oracle);
    r.expect(g.edges == tr.edges, "rotation edges differ from covers at n=" + std::to_string(n));
  }
  return r;
}

Result chapoton_criterion() {
  Result r;
  if (const auto m = chapoton_check(20)) {
    r.fail("mismatch at z^" + std::to_string(m->n) + " x^" + std::to_string(m->k));
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"interval counts", interval_counts_criterion},
      {"series coefficients", series_golden_criterion},
      {"decision matches rotation oracle", decision_criterion},
      {"coherence", coherence_criterion},
      {"join and meet match oracle", lattice_criterion},
      {"structural laws", structural_criterion},
      {"normalizer", normalizer_criterion},
      {"hasse diagrams", hasse_criterion},
      {"functional equation", chapoton_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu. %s [%s]%s%s\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                fmt_time(seconds_since(t0)).c_str(), r.detail.empty() ? "" : ": ",
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.ok) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
