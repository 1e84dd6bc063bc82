#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tamari/term.hpp"

namespace tamari {

class FrontierMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered partition of a list into non-empty contiguous blocks, stored as
/// block lengths. Over a list of n+1 items a composition is equivalently the
/// set of cut points in 1..n; refinement is inclusion of cut sets.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<std::size_t> blocks);

  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  std::size_t parts() const noexcept { return blocks_.size(); }
  std::size_t total() const noexcept;

  /// Boundary bits: bit i (0-based, i < total()-1) is set iff a block ends
  /// after item i.
  std::vector<bool> boundaries() const;
  static Composition from_boundaries(const std::vector<bool>& bits);

  /// True iff every boundary of `coarser` is also a boundary of *this.
  bool refines(const Composition& coarser) const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::size_t> blocks_;
};

std::string print_composition(const Composition& c);  // "(2;1)", "()" when empty

/// `outer` groups the blocks of `inner` (outer.total() == inner.parts());
/// the result merges them accordingly.
Composition compose(const Composition& outer, const Composition& inner);

struct Pushout {
  Composition beta;        // groups the blocks of alpha
  Composition beta_prime;  // groups the blocks of alpha'
  Composition join;        // compose(beta, alpha) == compose(beta_prime, alpha')
};

/// Finest common coarsening and its two mediating compositions.
Pushout pushout(const Composition& alpha, const Composition& alpha_prime);

/// Block i has the frontier length of formula i.
Composition composition_of(const Context& ctx);

/// Substitution order on contexts.
bool leq_context(const Context& lower, const Context& upper);

Formula join_formula(const Formula& a, const Formula& b);
Context join_context(const Context& a, const Context& b);
Formula meet_formula(const Formula& a, const Formula& b);

/// Left comb (least element) and right comb (greatest element).
Formula bottom(const Frontier& omega);
Formula top(const Frontier& omega);

/// All trees over `omega`, left subtree leaf count ascending at every split.
std::vector<Formula> enumerate_trees(const Frontier& omega);

/// Single right rotations (X*Y)*Z -> X*(Y*Z) at every position, pre-order.
std::vector<Formula> right_rotations(const Formula& f);

struct HasseGraph {
  std::vector<Formula> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper), sorted
};

inline constexpr std::size_t kDefaultHasseLimit = 9;

/// Hasse diagram of the trees over `omega`, with edges given by single
/// right rotations. Throws std::length_error when |omega| > limit.
HasseGraph hasse(const Frontier& omega, std::size_t limit = kDefaultHasseLimit);

std::string to_dot(const HasseGraph& g);

}  // namespace tamari
