#include "tamari/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "tamari/calculus.hpp"
#include "tamari/focusing.hpp"

namespace tamari {

// ---------------------------------------------------------------------------
// Compositions

Composition::Composition(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
  for (auto b : blocks_) {
    if (b == 0) throw std::invalid_argument("Composition: empty block");
  }
}

std::size_t Composition::total() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
}

std::vector<bool> Composition::boundaries() const {
  const std::size_t n = total();
  std::vector<bool> bits(n == 0 ? 0 : n - 1, false);
  std::size_t pos = 0;
  for (std::size_t i = 0; i + 1 < blocks_.size(); ++i) {
    pos += blocks_[i];
    bits[pos - 1] = true;
  }
  return bits;
}

Composition Composition::from_boundaries(const std::vector<bool>& bits) {
  std::vector<std::size_t> blocks;
  std::size_t run = 1;
  for (bool b : bits) {
    if (b) {
      blocks.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  blocks.push_back(run);
  return Composition(std::move(blocks));
}

bool Composition::refines(const Composition& coarser) const {
  if (total() != coarser.total()) return false;
  const auto mine = boundaries();
  const auto theirs = coarser.boundaries();
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (theirs[i] && !mine[i]) return false;
  }
  return true;
}

std::string print_composition(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.blocks().size(); ++i) {
    if (i != 0) out += ';';
    out += std::to_string(c.blocks()[i]);
  }
  return out + ")";
}

Composition compose(const Composition& outer, const Composition& inner) {
  if (outer.total() != inner.parts()) {
    throw std::invalid_argument("compose: outer composition does not cover the inner blocks");
  }
  std::vector<std::size_t> merged;
  std::size_t next = 0;
  for (auto group : outer.blocks()) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < group; ++i) len += inner.blocks()[next++];
    merged.push_back(len);
  }
  return Composition(std::move(merged));
}

namespace {

// How many blocks of `fine` fall inside each block of `coarse`.
Composition grouping(const Composition& coarse, const Composition& fine) {
  std::vector<std::size_t> counts;
  std::size_t i = 0;
  for (auto target : coarse.blocks()) {
    std::size_t covered = 0;
    std::size_t count = 0;
    while (covered < target) {
      covered += fine.blocks()[i++];
      ++count;
    }
    counts.push_back(count);
  }
  return Composition(std::move(counts));
}

}  // namespace

Pushout pushout(const Composition& alpha, const Composition& alpha_prime) {
  if (alpha.total() != alpha_prime.total()) {
    throw FrontierMismatch("pushout: compositions of different lengths");
  }
  if (alpha.total() == 0) return Pushout{};
  auto bits = alpha.boundaries();
  const auto other = alpha_prime.boundaries();
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits[i] && other[i];
  Composition join = Composition::from_boundaries(bits);
  return Pushout{grouping(join, alpha), grouping(join, alpha_prime), std::move(join)};
}

Composition composition_of(const Context& ctx) {
  std::vector<std::size_t> blocks;
  blocks.reserve(ctx.size());
  for (const auto& f : ctx) blocks.push_back(f.leaves());
  return Composition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Order and joins

bool leq_context(const Context& lower, const Context& upper) {
  std::size_t i = 0;
  for (const auto& target : upper) {
    std::size_t acc = 0;
    const std::size_t start = i;
    while (i < lower.size() && acc < target.leaves()) acc += lower[i++].leaves();
    if (acc != target.leaves() || i == start) return false;
    Context segment(lower.begin() + static_cast<std::ptrdiff_t>(start),
                    lower.begin() + static_cast<std::ptrdiff_t>(i));
    if (!derivable(Sequent{std::move(segment), target})) return false;
  }
  return i == lower.size();
}

namespace {

Formula join_same_frontier(const Formula& a, const Formula& b);

Context join_context_same_frontier(const Context& a, const Context& b) {
  const Pushout po = pushout(composition_of(a), composition_of(b));
  Context out;
  out.reserve(po.join.parts());
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t k = 0; k < po.join.parts(); ++k) {
    Context block_a(a.begin() + static_cast<std::ptrdiff_t>(ia),
                    a.begin() + static_cast<std::ptrdiff_t>(ia + po.beta.blocks()[k]));
    Context block_b(b.begin() + static_cast<std::ptrdiff_t>(ib),
                    b.begin() + static_cast<std::ptrdiff_t>(ib + po.beta_prime.blocks()[k]));
    ia += po.beta.blocks()[k];
    ib += po.beta_prime.blocks()[k];
    out.push_back(join_same_frontier(phi(block_a), phi(block_b)));
  }
  return out;
}

Formula join_same_frontier(const Formula& a, const Formula& b) {
  if (a.is_atom() || a == b) return a;
  Context joined = join_context_same_frontier(psi(a), psi(b));
  // Both decompositions start with the same atom, so that atom is a block
  // of its own and the recursion works on strictly smaller formulas.
  if (joined.size() < 2) throw std::logic_error("join: pushout of decompositions has one block");
  return phi(joined);
}

void require_same_frontier(const Frontier& a, const Frontier& b, const char* who) {
  if (a != b) throw FrontierMismatch(std::string(who) + ": frontiers differ");
}

}  // namespace

Formula join_formula(const Formula& a, const Formula& b) {
  require_same_frontier(frontier(a), frontier(b), "join_formula");
  return join_same_frontier(a, b);
}

Context join_context(const Context& a, const Context& b) {
  require_same_frontier(frontier(a), frontier(b), "join_context");
  return join_context_same_frontier(a, b);
}

Formula meet_formula(const Formula& a, const Formula& b) {
  require_same_frontier(frontier(a), frontier(b), "meet_formula");
  return mirror(join_same_frontier(mirror(a), mirror(b)));
}

Formula bottom(const Frontier& omega) {
  if (omega.empty()) throw std::invalid_argument("bottom: empty frontier");
  Formula acc(omega.front());
  for (std::size_t i = 1; i < omega.size(); ++i) acc = acc * Formula(omega[i]);
  return acc;
}

Formula top(const Frontier& omega) {
  if (omega.empty()) throw std::invalid_argument("top: empty frontier");
  Formula acc(omega.back());
  for (std::size_t i = omega.size() - 1; i-- > 0;) acc = Formula(omega[i]) * acc;
  return acc;
}

// ---------------------------------------------------------------------------
// Enumeration and Hasse diagrams

std::vector<Formula> enumerate_trees(const Frontier& omega) {
  if (omega.empty()) throw std::invalid_argument("enumerate_trees: empty frontier");
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Formula>> memo;
  std::function<const std::vector<Formula>&(std::size_t, std::size_t)> trees =
      [&](std::size_t lo, std::size_t hi) -> const std::vector<Formula>& {
    auto key = std::make_pair(lo, hi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Formula> out;
    if (hi - lo == 1) {
      out.emplace_back(omega[lo]);
    } else {
      for (std::size_t mid = lo + 1; mid < hi; ++mid) {
        const auto& lefts = trees(lo, mid);
        const auto& rights = trees(mid, hi);
        for (const auto& l : lefts) {
          for (const auto& r : rights) out.push_back(l * r);
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return trees(0, omega.size());
}

std::vector<Formula> right_rotations(const Formula& f) {
  std::vector<Formula> out;
  if (f.is_atom()) return out;
  const Formula& l = f.left();
  const Formula& r = f.right();
  if (l.is_product()) out.push_back(l.left() * (l.right() * r));
  for (auto& x : right_rotations(l)) out.push_back(std::move(x) * r);
  for (auto& x : right_rotations(r)) out.push_back(l * std::move(x));
  return out;
}

HasseGraph hasse(const Frontier& omega, std::size_t limit) {
  if (omega.size() > limit) {
    throw std::length_error("hasse: frontier of " + std::to_string(omega.size()) +
                            " atoms exceeds the limit of " + std::to_string(limit));
  }
  HasseGraph g;
  g.nodes = enumerate_trees(omega);
  std::unordered_map<Formula, std::size_t, FormulaHash> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i], i);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& up : right_rotations(g.nodes[i])) g.edges.emplace_back(i, index.at(up));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::string to_dot(const HasseGraph& g) {
  std::string out = "digraph {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + print_formula(g.nodes[i]) + "\"];\n";
  }
  for (const auto& [lo, hi] : g.edges) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace tamari
