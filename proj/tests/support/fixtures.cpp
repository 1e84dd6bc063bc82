#include "fixtures.hpp"

#include <stdexcept>

#include "tamari/focusing.hpp"
#include "tamari/lattice.hpp"

namespace fixtures {

Context ctx(std::initializer_list<std::string_view> items) {
  Context out;
  for (auto item : items) out.push_back(F(item));
  return out;
}

Derivation semi_assoc(const Formula& a, const Formula& b, const Formula& c) {
  const auto bc = Derivation::times_r(Derivation::id(b), Derivation::id(c));
  return Derivation::times_l(Derivation::times_l(Derivation::times_r(Derivation::id(a), bc)));
}

Derivation rotation_example() {
  const auto p = Derivation::id(F("p"));
  const auto q = Derivation::id(F("q"));
  const auto r = Derivation::id(F("r"));
  const auto s = Derivation::id(F("s"));
  const auto qrs = Derivation::times_l(Derivation::times_r(q, Derivation::times_r(r, s)));
  return Derivation::times_l(Derivation::times_l(Derivation::times_r(p, qrs)));
}

Derivation cut_example() {
  const auto left = Derivation::times_l(
      Derivation::times_r(semi_assoc(F("p"), F("q"), F("r")), Derivation::id(F("s"))));
  const auto right = semi_assoc(F("p"), F("q*r"), F("s"));
  return Derivation::cut(left, right, 0);
}

Derivation focused_cut_example() {
  const auto id = [](std::string_view a) { return Derivation::id(F(a)); };
  const auto qr = Derivation::times_r(id("q"), id("r"));
  const auto qrs = Derivation::times_r(qr, id("s"));
  return Derivation::times_l(
      Derivation::times_l(Derivation::times_l(Derivation::times_r(id("p"), qrs))));
}

namespace {

Formula build_tree(std::size_t size, std::size_t first_atom, std::mt19937_64& rng,
                   const std::vector<std::vector<double>>& weights) {
  if (size == 0) return Formula("a" + std::to_string(first_atom));
  std::discrete_distribution<std::size_t> pick(weights[size].begin(), weights[size].end());
  const std::size_t left = pick(rng);
  Formula l = build_tree(left, first_atom, rng, weights);
  Formula r = build_tree(size - 1 - left, first_atom + left + 1, rng, weights);
  return l * r;
}

template <typename T>
const T& choose(const std::vector<T>& items, std::mt19937_64& rng) {
  if (items.empty()) throw std::logic_error("choose: empty");
  std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
  return items[pick(rng)];
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Context slice(const Context& c, std::size_t from, std::size_t to) {
  return Context(c.begin() + static_cast<std::ptrdiff_t>(from), c.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

std::vector<Context> all_contexts(const Frontier& omega) {
  std::vector<Context> out;
  if (omega.empty()) return out;
  // First block covers omega[0..k), the rest recurses.
  for (std::size_t k = 1; k <= omega.size(); ++k) {
    const Frontier head(omega.begin(), omega.begin() + static_cast<std::ptrdiff_t>(k));
    const Frontier rest(omega.begin() + static_cast<std::ptrdiff_t>(k), omega.end());
    const auto tails = rest.empty() ? std::vector<Context>{Context{}} : all_contexts(rest);
    for (const auto& first : enumerate_trees(head)) {
      for (const auto& tail : tails) {
        Context c{first};
        c.insert(c.end(), tail.begin(), tail.end());
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

Formula random_tree(std::size_t size, std::mt19937_64& rng) {
  // Catalan numbers as split weights give the uniform distribution.
  std::vector<double> catalan{1};
  for (std::size_t n = 1; n <= size; ++n) {
    double c = 0;
    for (std::size_t a = 0; a < n; ++a) c += catalan[a] * catalan[n - 1 - a];
    catalan.push_back(c);
  }
  std::vector<std::vector<double>> weights(size + 1);
  for (std::size_t n = 1; n <= size; ++n) {
    for (std::size_t a = 0; a < n; ++a) weights[n].push_back(catalan[a] * catalan[n - 1 - a]);
  }
  return build_tree(size, 1, rng, weights);
}

Relabelling random_collapse(std::size_t atoms, std::mt19937_64& rng) {
  static const std::vector<std::string> alphabet{"p", "q", "r"};
  Relabelling sigma;
  for (const auto& a : canonical_frontier(atoms)) sigma.emplace(a, Atom(choose(alphabet, rng)));
  return sigma;
}

Derivation random_derivation_of(const Sequent& s, int budget, std::mt19937_64& rng) {
  const Context& g = s.context;
  if (budget <= 0 || coin(rng, 0.25)) {
    auto d = search_focused(s);
    if (!d) throw std::logic_error("random_derivation_of: sequent not derivable");
    return *d;
  }
  if (g.size() == 1 && g[0] == s.goal && coin(rng, 0.3)) return Derivation::id(s.goal);

  const int choice = std::uniform_int_distribution<int>(0, 2)(rng);
  if (choice == 0 && g[0].is_product()) {
    Context premise{g[0].left(), g[0].right()};
    premise.insert(premise.end(), g.begin() + 1, g.end());
    return Derivation::times_l(random_derivation_of(Sequent{premise, s.goal}, budget - 1, rng));
  }
  if (choice == 1 && s.goal.is_product()) {
    // Unrestricted R: any split whose halves are derivable.
    std::vector<std::size_t> splits;
    for (std::size_t k = 1; k < g.size(); ++k) {
      if (derivable(Sequent{slice(g, 0, k), s.goal.left()}) &&
          derivable(Sequent{slice(g, k, g.size()), s.goal.right()})) {
        splits.push_back(k);
      }
    }
    if (!splits.empty()) {
      const std::size_t k = choose(splits, rng);
      return Derivation::times_r(
          random_derivation_of(Sequent{slice(g, 0, k), s.goal.left()}, budget - 1, rng),
          random_derivation_of(Sequent{slice(g, k, g.size()), s.goal.right()}, budget - 1, rng));
    }
  }
  // Cut: replace a segment Theta by a formula X it derives.
  struct Option {
    std::size_t at, len;
    Formula x;
  };
  std::vector<Option> options;
  for (std::size_t at = 0; at < g.size(); ++at) {
    for (std::size_t len = 1; at + len <= g.size(); ++len) {
      const Context theta = slice(g, at, at + len);
      for (const auto& x : enumerate_trees(frontier(theta))) {
        if (!derivable(Sequent{theta, x})) continue;
        Context rest = slice(g, 0, at);
        rest.push_back(x);
        const Context tail = slice(g, at + len, g.size());
        rest.insert(rest.end(), tail.begin(), tail.end());
        if (derivable(Sequent{rest, s.goal})) options.push_back(Option{at, len, x});
      }
    }
  }
  const Option& o = choose(options, rng);
  const Context theta = slice(g, o.at, o.at + o.len);
  Context rest = slice(g, 0, o.at);
  rest.push_back(o.x);
  const Context tail = slice(g, o.at + o.len, g.size());
  rest.insert(rest.end(), tail.begin(), tail.end());
  return Derivation::cut(random_derivation_of(Sequent{theta, o.x}, budget - 1, rng),
                         random_derivation_of(Sequent{rest, s.goal}, budget - 1, rng), o.at);
}

Derivation random_derivation(std::size_t max_size, std::mt19937_64& rng) {
  const std::size_t size = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
  const Formula a = random_tree(size, rng);
  std::vector<Formula> above;
  for (const auto& b : enumerate_trees(frontier(a))) {
    if (decide(a, b)) above.push_back(b);
  }
  const Formula b = choose(above, rng);
  Derivation d = random_derivation_of(Sequent{Context{a}, b}, 4, rng);
  if (coin(rng, 0.5)) d = relabel(random_collapse(size + 1, rng), d);
  return d;
}

}  // namespace fixtures
