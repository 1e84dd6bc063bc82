#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/term.hpp"

namespace tamari {

struct Sequent {
  Context context;
  Formula goal;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string print_sequent(const Sequent& s);

enum class Rule { TimesL, TimesR, Id, Cut };

std::string_view rule_tag(Rule r) noexcept;  // "L", "R", "id", "cut"

/// A rule-labelled tree of sequents.
///
/// TimesR nodes record `split`, the number of conclusion-context formulas
/// that go to the left premise. Cut nodes record `at` and `len`: the cut
/// formula sits at index `at` of the right premise and is replaced by the
/// `len` formulas of the left premise, starting at index `at` of the
/// conclusion. The checked factories compute conclusions from premises;
/// `unchecked` builds an arbitrary node for validation and deserialization.
class Derivation {
 public:
  static Derivation id(Formula a);
  static Derivation times_l(Derivation premise);
  static Derivation times_r(Derivation left, Derivation right);
  static Derivation cut(Derivation left, Derivation right, std::size_t at);

  static Derivation unchecked(Rule rule, Sequent conclusion, std::vector<Derivation> premises,
                              std::size_t split = 0, std::size_t at = 0, std::size_t len = 0);

  Rule rule() const noexcept { return node_->rule; }
  const Sequent& conclusion() const noexcept { return node_->conclusion; }
  const std::vector<Derivation>& premises() const noexcept { return node_->premises; }
  const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }

  std::size_t split() const noexcept { return node_->split; }
  std::size_t at() const noexcept { return node_->at; }
  std::size_t len() const noexcept { return node_->len; }
  /// Cut formula of a Cut node (the left premise's goal).
  const Formula& cut_formula() const;

  /// Number of rule instances in the tree.
  std::size_t node_count() const;

  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  struct Node {
    Rule rule;
    Sequent conclusion;
    std::vector<Derivation> premises;
    std::size_t split = 0;
    std::size_t at = 0;
    std::size_t len = 0;
  };
  explicit Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Violation {
  std::string path;    // "root", "root/1/0", ...
  std::string clause;  // which part of the rule schema failed
};

/// Checks every node against its rule schema, top-down from the root.
/// Returns the first offending node, or nullopt when the tree is valid.
std::optional<Violation> validate(const Derivation& d);

class InvalidDerivation : public std::runtime_error {
 public:
  explicit InvalidDerivation(const Violation& v);
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

enum class SequentClass { LeftInverting, RightFocusing, AtomicClass };

/// Throws std::invalid_argument on an empty context.
SequentClass classify(const Sequent& s);

/// Cut-free, every TimesR has an irreducible left premise context, every Id
/// is atomic. Assumes `validate(d)` succeeded.
bool is_focused(const Derivation& d);

/// Applies an atom substitution to every sequent in the tree.
Derivation relabel(const Relabelling& sigma, const Derivation& d);

class JsonSchemaError : public std::runtime_error {
 public:
  JsonSchemaError(const std::string& path, const std::string& message);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Compact JSON:
///   {"rule":"R","sequent":{"ctx":["p","q"],"goal":"p*q"},"split":1,"premises":[...]}
/// `split` appears only on "R" nodes, `at` and `len` only on "cut" nodes.
std::string to_json(const Derivation& d);
Derivation from_json(std::string_view text);

/// Indented plain-text rendering, one sequent per line, conclusion first.
std::string to_text(const Derivation& d);

}  // namespace tamari
