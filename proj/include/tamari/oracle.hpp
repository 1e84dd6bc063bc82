#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tamari/lattice.hpp"
#include "tamari/term.hpp"

/// Deliberately naive ground truth for the Tamari order: everything here is
/// rotation reachability and exhaustive scans, never sequent search.
namespace tamari::oracle {

inline constexpr std::size_t kDefaultLimit = 6;

/// Every formula one right rotation (X*Y)*Z -> X*(Y*Z) away from `f`.
std::vector<Formula> rotations(const Formula& f);

/// Breadth-first reachability through right rotations. Trees over the same
/// frontier shape are memoized per size up to `kClosureCacheMaxSize`.
bool leq_oracle(const Formula& a, const Formula& b);

inline constexpr std::size_t kClosureCacheMaxSize = 7;

class NotALattice : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Scans every tree over the shared frontier. Throws NotALattice if the
/// minimal upper bound (maximal lower bound) is not unique.
Formula join_oracle(const Formula& a, const Formula& b);
Formula meet_oracle(const Formula& a, const Formula& b);

/// Number of pairs A <= B among the trees of size n.
/// Throws std::length_error when n > limit.
std::uint64_t count_intervals_oracle(std::size_t n, std::size_t limit = kDefaultLimit);

/// Covering pairs of a partial order given as a predicate on the nodes.
HasseGraph transitive_reduction(std::vector<Formula> nodes,
                                const std::function<bool(const Formula&, const Formula&)>& leq);

}  // namespace tamari::oracle
