#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tamari/calculus.hpp"
#include "tamari/count.hpp"
#include "tamari/focusing.hpp"
#include "tamari/lattice.hpp"
#include "tamari/oracle.hpp"
#include "tamari/term.hpp"

namespace tamari::cli {

int cmd_decide(const std::string& a, const std::string& b, std::ostream& out) {
  const bool holds = decide(parse_formula(a), parse_formula(b));
  out << (holds ? "true" : "false") << '\n';
  return holds ? kOk : kFalse;
}

int cmd_derive(const std::string& a, const std::string& b, bool json, std::ostream& out,
               std::ostream& err) {
  const Sequent s{Context{parse_formula(a)}, parse_formula(b)};
  const auto d = search_focused(s);
  if (!d) {
    err << "not derivable: " << print_sequent(s) << '\n';
    return kFalse;
  }
  if (json) {
    out << to_json(*d) << '\n';
  } else {
    out << to_text(*d);
  }
  return kOk;
}

int cmd_normalize(const std::optional<std::string>& in_file, std::ostream& out, std::ostream& err) {
  std::string text;
  if (in_file) {
    std::ifstream in(*in_file);
    if (!in) {
      err << "error: cannot open " << *in_file << '\n';
      return kUsage;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  const Derivation d = from_json(text);
  out << to_json(focus(d)) << '\n';
  return kOk;
}

int cmd_join(const std::string& a, const std::string& b, std::ostream& out) {
  out << print_formula(join_formula(parse_formula(a), parse_formula(b))) << '\n';
  return kOk;
}

int cmd_meet(const std::string& a, const std::string& b, std::ostream& out) {
  out << print_formula(meet_formula(parse_formula(a), parse_formula(b))) << '\n';
  return kOk;
}

int cmd_bottom(std::size_t n, std::ostream& out) {
  out << print_formula(bottom(canonical_frontier(n + 1))) << '\n';
  return kOk;
}

int cmd_top(std::size_t n, std::ostream& out) {
  out << print_formula(top(canonical_frontier(n + 1))) << '\n';
  return kOk;
}

namespace {

std::vector<BigInt> counts_by(CountMethod method, std::size_t max_size, std::size_t oracle_limit) {
  switch (method) {
    case CountMethod::Dp:
      return interval_counts(max_size);
    case CountMethod::Formula: {
      std::vector<BigInt> out;
      for (std::size_t n = 0; n <= max_size; ++n) out.push_back(tutte_formula(n));
      return out;
    }
    case CountMethod::Oracle: {
      std::vector<BigInt> out;
      for (std::size_t n = 0; n <= max_size; ++n) {
        out.emplace_back(oracle::count_intervals_oracle(n, oracle_limit));
      }
      return out;
    }
  }
  return {};
}

std::string print_poly(const Poly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (p[k] != 1 || k == 0) out += p[k].str();
    if (k == 1) out += "x";
    if (k > 1) out += "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.single.has_value() == opts.upto.has_value()) {
    err << "error: count takes either <n> or --upto <N>\n";
    return kUsage;
  }
  if (opts.single) {
    out << counts_by(opts.method, *opts.single, opts.oracle_limit).back() << '\n';
    return kOk;
  }
  const auto counts = counts_by(opts.method, *opts.upto, opts.oracle_limit);
  if (opts.csv) out << "n,count\n";
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (opts.csv) out << n << ',';
    out << counts[n] << '\n';
  }
  return kOk;
}

int cmd_series(std::size_t order, std::ostream& out) {
  const SeriesSolution sol = series_solve(order);
  out << "R(z,x):\n";
  for (std::size_t n = 0; n <= order; ++n) out << "z^" << n << ": " << print_poly(sol.r[n]) << '\n';
  out << "L1(z):\n";
  for (std::size_t n = 0; n <= order; ++n) out << "z^" << n << ": " << sol.l.coeff(n, 1) << '\n';
  return kOk;
}

int cmd_hasse(std::size_t n, const std::optional<std::string>& dot_file, std::size_t limit,
              std::ostream& out, std::ostream& err) {
  const HasseGraph g = hasse(canonical_frontier(n + 1), limit);
  const std::string dot = to_dot(g);
  if (!dot_file) {
    out << dot;
    return kOk;
  }
  std::ofstream file(*dot_file, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << *dot_file << '\n';
    return kUsage;
  }
  file << dot;
  out << "nodes " << g.nodes.size() << ", edges " << g.edges.size() << '\n';
  return kOk;
}

int cmd_oracle(const std::string& query, const std::string& a, const std::string& b,
               std::ostream& out) {
  const Formula fa = parse_formula(a);
  const Formula fb = parse_formula(b);
  if (query == "leq") {
    const bool holds = oracle::leq_oracle(fa, fb);
    out << (holds ? "true" : "false") << '\n';
    return holds ? kOk : kFalse;
  }
  if (query == "join") {
    out << print_formula(oracle::join_oracle(fa, fb)) << '\n';
  } else {
    out << print_formula(oracle::meet_oracle(fa, fb)) << '\n';
  }
  return kOk;
}

}  // namespace tamari::cli
