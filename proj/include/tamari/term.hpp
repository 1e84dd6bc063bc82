#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tamari {

/// A named atom. Names match `[a-z][a-zA-Z0-9_]*`.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

  static bool valid_name(std::string_view name) noexcept;

 private:
  std::string name_;
};

/// Fully-bracketed word: an atom or a product of two formulas.
///
/// Formulas are immutable and share structure, so copies are cheap.
/// Size counts products, so `leaves() == size() + 1`.
class Formula {
 public:
  explicit Formula(Atom atom);
  explicit Formula(std::string_view atom_name) : Formula(Atom(std::string(atom_name))) {}

  static Formula product(Formula lhs, Formula rhs);

  bool is_atom() const noexcept;
  bool is_product() const noexcept { return !is_atom(); }

  // Preconditions: is_atom() for atom(), is_product() for left()/right().
  const Atom& atom() const;
  const Formula& left() const;
  const Formula& right() const;

  std::size_t size() const noexcept;
  std::size_t leaves() const noexcept { return size() + 1; }
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  std::size_t size = 0;
  std::size_t hash = 0;
  std::optional<Atom> atom;
  std::optional<Formula> left;
  std::optional<Formula> right;
};

inline bool Formula::is_atom() const noexcept { return node_->size == 0; }
inline std::size_t Formula::size() const noexcept { return node_->size; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }

inline Formula operator*(Formula lhs, Formula rhs) {
  return Formula::product(std::move(lhs), std::move(rhs));
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

using Context = std::vector<Formula>;
using Frontier = std::vector<Atom>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses `formula := term ("*" term)*`, `term := atom | "(" formula ")"`.
/// The `*` chain associates to the left. Whitespace between tokens is ignored.
Formula parse_formula(std::string_view text);

/// Prints with the fewest parentheses that still re-parse to the same tree.
std::string print_formula(const Formula& f);
std::string print_context(const Context& ctx);

Frontier frontier(const Formula& f);
Frontier frontier(const Context& ctx);
std::size_t leaf_count(const Context& ctx) noexcept;

/// Atom substitution. Atoms missing from the map are left unchanged.
using Relabelling = std::map<Atom, Atom>;
Formula relabel(const Relabelling& sigma, const Formula& f);
Context relabel(const Relabelling& sigma, const Context& ctx);

/// Left-associated product of a non-empty context. Throws std::invalid_argument on [].
Formula phi(const Context& ctx);

/// Right action: act(A, []) = A, act(A, Δ ++ [B]) = act(A, Δ) * B.
Formula act(const Formula& a, const Context& delta);

/// Maximal decomposition: psi(p) = [p], psi(A*B) = psi(A) ++ [B].
Context psi(const Formula& f);

/// Reverses every product. An involution that swaps the order and its dual.
Formula mirror(const Formula& f);

/// True iff the context is empty or starts with an atom.
bool is_irreducible(const Context& ctx) noexcept;

/// The atoms a1..a<count>, used wherever only the tree shape matters.
Frontier canonical_frontier(std::size_t atoms);

}  // namespace tamari

template <>
struct std::hash<tamari::Formula> {
  std::size_t operator()(const tamari::Formula& f) const noexcept { return f.hash(); }
};
