#include "tamari/oracle.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace tamari::oracle {

std::vector<Formula> rotations(const Formula& f) {
  std::vector<Formula> out;
  if (f.is_atom()) return out;
  const Formula& l = f.left();
  const Formula& r = f.right();
  if (l.is_product()) out.push_back(l.left() * (l.right() * r));
  for (auto& x : rotations(l)) out.push_back(x * r);
  for (auto& x : rotations(r)) out.push_back(l * x);
  return out;
}

namespace {

bool reachable_bfs(const Formula& from, const Formula& to) {
  std::unordered_set<Formula, FormulaHash> seen{from};
  std::deque<Formula> queue{from};
  while (!queue.empty()) {
    Formula cur = std::move(queue.front());
    queue.pop_front();
    if (cur == to) return true;
    for (auto& next : rotations(cur)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

// Same tree shape, atoms renamed a1, a2, ... left to right.
Formula shape_of(const Formula& f, std::size_t& next_atom) {
  if (f.is_atom()) return Formula(Atom("a" + std::to_string(++next_atom)));
  Formula l = shape_of(f.left(), next_atom);
  return l * shape_of(f.right(), next_atom);
}

Formula shape_of(const Formula& f) {
  std::size_t counter = 0;
  return shape_of(f, counter);
}

// Reachability between all trees of one size, indexed in enumeration order.
struct Closure {
  std::unordered_map<Formula, std::size_t, FormulaHash> index;
  std::vector<std::vector<bool>> reach;
};

std::shared_ptr<const Closure> build_closure(std::size_t size) {
  auto c = std::make_shared<Closure>();
  const auto trees = enumerate_trees(canonical_frontier(size + 1));
  for (std::size_t i = 0; i < trees.size(); ++i) c->index.emplace(trees[i], i);
  c->reach.assign(trees.size(), std::vector<bool>(trees.size(), false));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto& row = c->reach[i];
    std::vector<std::size_t> stack{i};
    row[i] = true;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (const auto& next : rotations(trees[cur])) {
        const std::size_t j = c->index.at(next);
        if (!row[j]) {
          row[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  return c;
}

std::shared_ptr<const Closure> closure_for(std::size_t size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Closure>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[size];
  if (!slot) slot = build_closure(size);
  return slot;
}

}  // namespace

bool leq_oracle(const Formula& a, const Formula& b) {
  if (frontier(a) != frontier(b)) return false;
  if (a.size() > kClosureCacheMaxSize) return reachable_bfs(a, b);
  const auto closure = closure_for(a.size());
  return closure->reach[closure->index.at(shape_of(a))][closure->index.at(shape_of(b))];
}

namespace {

enum class Extremum { LeastUpper, GreatestLower };

Formula scan_bound(const Formula& a, const Formula& b, Extremum which) {
  if (frontier(a) != frontier(b)) throw FrontierMismatch("oracle: frontiers differ");
  const bool upper = which == Extremum::LeastUpper;
  auto below = [&](const Formula& x, const Formula& y) {
    return upper ? leq_oracle(x, y) : leq_oracle(y, x);
  };
  std::vector<Formula> bounds;
  for (const auto& c : enumerate_trees(frontier(a))) {
    if (below(a, c) && below(b, c)) bounds.push_back(c);
  }
  std::vector<Formula> extremal;
  for (const auto& u : bounds) {
    bool dominated = false;
    for (const auto& v : bounds) {
      if (v != u && below(v, u)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) extremal.push_back(u);
  }
  if (extremal.size() != 1) {
    throw NotALattice(std::string(upper ? "join" : "meet") + " of " + print_formula(a) + " and " +
                      print_formula(b) + " has " + std::to_string(extremal.size()) +
                      " candidates");
  }
  return extremal.front();
}

}  // namespace

Formula join_oracle(const Formula& a, const Formula& b) {
  return scan_bound(a, b, Extremum::LeastUpper);
}

Formula meet_oracle(const Formula& a, const Formula& b) {
  return scan_bound(a, b, Extremum::GreatestLower);
}

std::uint64_t count_intervals_oracle(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw std::length_error("count_intervals_oracle: size " + std::to_string(n) +
                            " exceeds the limit of " + std::to_string(limit));
  }
  const auto trees = enumerate_trees(canonical_frontier(n + 1));
  std::uint64_t total = 0;
  for (const auto& a : trees) {
    for (const auto& b : trees) total += leq_oracle(a, b) ? 1 : 0;
  }
  return total;
}

HasseGraph transitive_reduction(std::vector<Formula> nodes,
                                const std::function<bool(const Formula&, const Formula&)>& leq) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lt[i][j] = i != j && leq(nodes[i], nodes[j]);
  }
  HasseGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) covered = !(lt[i][k] && lt[k][j]);
      if (covered) g.edges.emplace_back(i, j);
    }
  }
  g.nodes = std::move(nodes);
  return g;
}

}  // namespace tamari::oracle
