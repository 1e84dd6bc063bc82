#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "tamari/calculus.hpp"
#include "tamari/term.hpp"

namespace tamari {

/// Backtrack-free focused proof search. Returns the unique focused
/// derivation of `s`, or nullopt when `s` is not derivable.
///
/// Left-inverting sequents force TimesL. A right-focusing sequent
/// `Gamma |- A*B` can only split `Gamma` at the prefix whose frontier has as
/// many atoms as `A`; if no prefix has exactly that many, the sequent is not
/// derivable. An atomic sequent is derivable only as `p |- p`.
/// Throws std::invalid_argument on an empty context.
std::optional<Derivation> search_focused(const Sequent& s);

/// Same decision as `search_focused(s).has_value()`, but iterative and
/// allocation-light; safe on sequents of size 10^4 and beyond.
bool derivable(const Sequent& s);

/// Tamari order: A <= B.
bool decide(const Formula& a, const Formula& b);

/// Counts focused derivations by trying every split at each TimesR node.
/// Independent of the frontier argument used by `search_focused`.
std::uint64_t count_focused(const Sequent& s);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Focused derivation of `A |- A`, built by the focused deduction recursion.
Derivation identity_expansion(const Formula& a);

/// Given focused `d : Theta |- A` and focused `e : Gamma, A, Delta |- B` with
/// `A` at index `pos` of e's context, builds a focused derivation of
/// `Gamma, Theta, Delta |- B`. Throws PreconditionError otherwise.
Derivation admit_cut(const Derivation& d, const Derivation& e, std::size_t pos);

/// Given focused `d : Gamma |- A` and `e : Delta |- B`, builds a focused
/// derivation of `Gamma, Delta |- A*B`. Throws PreconditionError otherwise.
Derivation admit_times_r(const Derivation& d, const Derivation& e);

/// Turns any valid derivation into the focused derivation of its conclusion,
/// working from the leaves down. Throws InvalidDerivation if `d` does not
/// validate.
Derivation focus(const Derivation& d);

}  // namespace tamari
