#include "tamari/term.hpp"

#include <cctype>
#include <utility>

namespace tamari {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Atom / Formula

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) {
    throw std::invalid_argument("invalid atom name '" + name_ + "'");
  }
}

bool Atom::valid_name(std::string_view name) noexcept {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char c : name.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

Formula::Formula(Atom atom) {
  auto node = std::make_shared<Node>();
  node->hash = mix(0x51ed270b27422dULL, std::hash<std::string>{}(atom.name()));
  node->atom = std::move(atom);
  node_ = std::move(node);
}

Formula Formula::product(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->size = 1 + lhs.size() + rhs.size();
  node->hash = mix(mix(0x2545f4914f6cdd1dULL, lhs.hash()), rhs.hash());
  node->left = std::move(lhs);
  node->right = std::move(rhs);
  return Formula(std::shared_ptr<const Node>(std::move(node)));
}

const Atom& Formula::atom() const {
  if (!is_atom()) throw std::logic_error("Formula::atom() on a product");
  return *node_->atom;
}

const Formula& Formula::left() const {
  if (is_atom()) throw std::logic_error("Formula::left() on an atom");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (is_atom()) throw std::logic_error("Formula::right() on an atom");
  return *node_->right;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  if (a.is_atom()) return a.atom() == b.atom();
  return a.left() == b.left() && a.right() == b.right();
}

// ---------------------------------------------------------------------------
// Parsing and printing

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

Formula parse_formula(std::string_view text) {
  // Explicit stack of open groups; each holds the product accumulated so far.
  struct Group {
    std::optional<Formula> acc;
    std::size_t open_pos = 0;
  };
  std::vector<Group> groups(1);
  bool want_operand = true;
  std::size_t i = 0;

  auto push_operand = [&](Formula f) {
    auto& g = groups.back();
    g.acc = g.acc ? Formula::product(std::move(*g.acc), std::move(f)) : std::move(f);
    want_operand = false;
  };

  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    const char c = text[i];
    if (want_operand) {
      if (c == '(') {
        groups.push_back(Group{std::nullopt, i});
        ++i;
      } else if (c >= 'a' && c <= 'z') {
        std::size_t j = i + 1;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
          ++j;
        }
        push_operand(Formula(Atom(std::string(text.substr(i, j - i)))));
        i = j;
      } else {
        throw ParseError(std::string("expected atom or '(' but found '") + c + "'", i);
      }
    } else if (c == '*') {
      want_operand = true;
      ++i;
    } else if (c == ')') {
      if (groups.size() == 1) throw ParseError("unbalanced ')'", i);
      Formula inner = std::move(*groups.back().acc);
      groups.pop_back();
      push_operand(std::move(inner));
      ++i;
    } else {
      throw ParseError(std::string("expected '*' or ')' but found '") + c + "'", i);
    }
  }
  if (want_operand) {
    throw ParseError(groups.back().acc ? "dangling '*'" : "expected a formula", i);
  }
  if (groups.size() > 1) throw ParseError("unclosed '('", groups.back().open_pos);
  return std::move(*groups.back().acc);
}

namespace {

void print_into(const Formula& f, std::string& out) {
  if (f.is_atom()) {
    out += f.atom().name();
    return;
  }
  print_into(f.left(), out);
  out += '*';
  if (f.right().is_atom()) {
    out += f.right().atom().name();
  } else {
    out += '(';
    print_into(f.right(), out);
    out += ')';
  }
}

void frontier_into(const Formula& f, Frontier& out) {
  if (f.is_atom()) {
    out.push_back(f.atom());
    return;
  }
  frontier_into(f.left(), out);
  frontier_into(f.right(), out);
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::string print_context(const Context& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i != 0) out += ", ";
    print_into(ctx[i], out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural maps

Frontier frontier(const Formula& f) {
  Frontier out;
  out.reserve(f.leaves());
  frontier_into(f, out);
  return out;
}

Frontier frontier(const Context& ctx) {
  Frontier out;
  out.reserve(leaf_count(ctx));
  for (const auto& f : ctx) frontier_into(f, out);
  return out;
}

std::size_t leaf_count(const Context& ctx) noexcept {
  std::size_t n = 0;
  for (const auto& f : ctx) n += f.leaves();
  return n;
}

Formula relabel(const Relabelling& sigma, const Formula& f) {
  if (f.is_atom()) {
    auto it = sigma.find(f.atom());
    return it == sigma.end() ? f : Formula(it->second);
  }
  return relabel(sigma, f.left()) * relabel(sigma, f.right());
}

Context relabel(const Relabelling& sigma, const Context& ctx) {
  Context out;
  out.reserve(ctx.size());
  for (const auto& f : ctx) out.push_back(relabel(sigma, f));
  return out;
}

Formula phi(const Context& ctx) {
  if (ctx.empty()) throw std::invalid_argument("phi: empty context");
  Formula acc = ctx.front();
  for (std::size_t i = 1; i < ctx.size(); ++i) acc = acc * ctx[i];
  return acc;
}

Formula act(const Formula& a, const Context& delta) {
  Formula acc = a;
  for (const auto& b : delta) acc = acc * b;
  return acc;
}

Context psi(const Formula& f) {
  Context rev;
  const Formula* cur = &f;
  while (cur->is_product()) {
    rev.push_back(cur->right());
    cur = &cur->left();
  }
  rev.push_back(*cur);
  return Context(rev.rbegin(), rev.rend());
}

Formula mirror(const Formula& f) {
  if (f.is_atom()) return f;
  return mirror(f.right()) * mirror(f.left());
}

bool is_irreducible(const Context& ctx) noexcept {
  return ctx.empty() || ctx.front().is_atom();
}

Frontier canonical_frontier(std::size_t atoms) {
  Frontier out;
  out.reserve(atoms);
  for (std::size_t i = 1; i <= atoms; ++i) out.emplace_back("a" + std::to_string(i));
  return out;
}

}  // namespace tamari
