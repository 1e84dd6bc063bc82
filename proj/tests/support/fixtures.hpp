#pragma once

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

#include "tamari/calculus.hpp"
#include "tamari/term.hpp"

namespace fixtures {

using namespace tamari;

inline Formula F(std::string_view text) { return parse_formula(text); }

Context ctx(std::initializer_list<std::string_view> items);

/// (A*B)*C |- A*(B*C) by L, L, R over id leaves.
Derivation semi_assoc(const Formula& a, const Formula& b, const Formula& c);

/// The L/L/R/id derivation of (p*(q*r))*s |- p*(q*(r*s)).
Derivation rotation_example();

/// ((p*q)*r)*s |- p*((q*r)*s) as a cut of two non-focused derivations.
Derivation cut_example();

/// Focused derivation of the same sequent, written out rule by rule.
Derivation focused_cut_example();

/// Every context over `omega`: each composition of it, with every choice
/// of tree per block.
std::vector<Context> all_contexts(const Frontier& omega);

/// Uniformly random tree shape with `size` products over a1..a(size+1).
Formula random_tree(std::size_t size, std::mt19937_64& rng);

/// Renames atoms a1..aN into a small alphabet, so atoms repeat.
Relabelling random_collapse(std::size_t atoms, std::mt19937_64& rng);

/// A valid, generally unfocused derivation of a random derivable sequent
/// A |- B with |A| <= max_size. Built from focused pieces glued together by
/// cuts, unrestricted R and non-atomic id, and optionally relabelled so that
/// atoms repeat.
Derivation random_derivation(std::size_t max_size, std::mt19937_64& rng);

/// Random derivation of a given derivable sequent with at most `budget`
/// nested non-focused constructions.
Derivation random_derivation_of(const Sequent& s, int budget, std::mt19937_64& rng);

}  // namespace fixtures
