#include "tamari/focusing.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace tamari {

namespace {

Context slice(const Context& ctx, std::size_t from, std::size_t to) {
  return Context(ctx.begin() + static_cast<std::ptrdiff_t>(from),
                 ctx.begin() + static_cast<std::ptrdiff_t>(to));
}

// Number of leading formulas whose frontiers together have exactly `atoms`
// atoms, or nullopt if the running total skips over `atoms`.
std::optional<std::size_t> prefix_with_atoms(const Context& ctx, std::size_t atoms) {
  std::size_t acc = 0;
  std::size_t i = 0;
  while (i < ctx.size() && acc < atoms) acc += ctx[i++].leaves();
  if (acc != atoms) return std::nullopt;
  return i;
}

std::optional<Derivation> search(const Context& ctx, const Formula& goal) {
  if (ctx.empty()) return std::nullopt;
  const Formula& head = ctx.front();
  if (head.is_product()) {
    Context next{head.left(), head.right()};
    next.insert(next.end(), ctx.begin() + 1, ctx.end());
    auto premise = search(next, goal);
    if (!premise) return std::nullopt;
    return Derivation::times_l(std::move(*premise));
  }
  if (goal.is_atom()) {
    if (ctx.size() == 1 && head == goal) return Derivation::id(goal);
    return std::nullopt;
  }
  auto split = prefix_with_atoms(ctx, goal.left().leaves());
  if (!split || *split == ctx.size()) return std::nullopt;
  auto left = search(slice(ctx, 0, *split), goal.left());
  if (!left) return std::nullopt;
  auto right = search(slice(ctx, *split, ctx.size()), goal.right());
  if (!right) return std::nullopt;
  return Derivation::times_r(std::move(*left), std::move(*right));
}

std::uint64_t count(const Context& ctx, const Formula& goal) {
  if (ctx.empty()) return 0;
  const Formula& head = ctx.front();
  if (head.is_product()) {
    Context next{head.left(), head.right()};
    next.insert(next.end(), ctx.begin() + 1, ctx.end());
    return count(next, goal);
  }
  if (goal.is_atom()) return ctx.size() == 1 && head == goal ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t i = 1; i < ctx.size(); ++i) {
    const std::uint64_t left = count(slice(ctx, 0, i), goal.left());
    if (left == 0) continue;
    total += left * count(slice(ctx, i, ctx.size()), goal.right());
  }
  return total;
}

// ---------------------------------------------------------------------------
// Admissibility

using Continuation = std::function<Derivation(Derivation)>;

// Focused deduction: given k mapping focused `Gamma_irr |- A` to focused
// `Gamma_irr, Delta |- B`, produces focused `A, Delta |- B`.
Derivation deduce(const Formula& a, const Continuation& k) {
  if (a.is_atom()) return k(Derivation::id(a));
  const Formula& rhs = a.right();
  Continuation inner = [&](Derivation d1) {
    return k(Derivation::times_r(std::move(d1), deduce(rhs, [](Derivation d) { return d; })));
  };
  return Derivation::times_l(deduce(a.left(), inner));
}

// Lexicographic on (cut formula, (d, e)).
Derivation cut_focused(const Derivation& d, const Derivation& e, std::size_t pos) {
  if (d.conclusion().goal.is_atom()) return e;

  switch (e.rule()) {
    case Rule::TimesR: {
      const std::size_t split = e.split();
      if (pos < split) {
        return Derivation::times_r(cut_focused(d, e.premise(0), pos), e.premise(1));
      }
      return Derivation::times_r(e.premise(0), cut_focused(d, e.premise(1), pos - split));
    }
    case Rule::TimesL: {
      if (pos > 0) return Derivation::times_l(cut_focused(d, e.premise(0), pos + 1));
      // The cut formula A1*A2 is the one E decomposes; look at D.
      switch (d.rule()) {
        case Rule::TimesL:
          return Derivation::times_l(cut_focused(d.premise(0), e, 0));
        case Rule::TimesR: {
          Derivation partial = cut_focused(d.premise(1), e.premise(0), 1);
          return cut_focused(d.premise(0), partial, 0);
        }
        default:
          break;
      }
      break;
    }
    default:
      break;
  }
  throw std::logic_error("admit_cut: unreachable case (input not focused?)");
}

Derivation times_r_focused(const Derivation& d, const Derivation& e) {
  if (is_irreducible(d.conclusion().context)) return Derivation::times_r(d, e);
  if (d.rule() != Rule::TimesL) throw std::logic_error("admit_times_r: reducible context without L");
  return Derivation::times_l(times_r_focused(d.premise(0), e));
}

void require_focused(const Derivation& d, const char* who, const char* which) {
  if (auto v = validate(d)) {
    throw PreconditionError(std::string(who) + ": " + which + " is invalid at " + v->path + ": " +
                            v->clause);
  }
  if (!is_focused(d)) throw PreconditionError(std::string(who) + ": " + which + " is not focused");
}

Derivation focus_valid(const Derivation& d) {
  switch (d.rule()) {
    case Rule::Id:
      return identity_expansion(d.conclusion().goal);
    case Rule::TimesL:
      return Derivation::times_l(focus_valid(d.premise(0)));
    case Rule::TimesR:
      return times_r_focused(focus_valid(d.premise(0)), focus_valid(d.premise(1)));
    case Rule::Cut:
      return cut_focused(focus_valid(d.premise(0)), focus_valid(d.premise(1)), d.at());
  }
  throw std::logic_error("focus: unknown rule");
}

}  // namespace

std::optional<Derivation> search_focused(const Sequent& s) {
  if (s.context.empty()) throw std::invalid_argument("search_focused: empty context");
  return search(s.context, s.goal);
}

bool derivable(const Sequent& s) {
  if (s.context.empty()) throw std::invalid_argument("derivable: empty context");
  // Contexts are stored reversed so the leftmost formula is at the back.
  struct Task {
    std::vector<const Formula*> rev;
    const Formula* goal;
  };
  std::vector<Task> todo;
  {
    Task first{{}, &s.goal};
    first.rev.reserve(s.context.size());
    for (auto it = s.context.rbegin(); it != s.context.rend(); ++it) first.rev.push_back(&*it);
    todo.push_back(std::move(first));
  }
  while (!todo.empty()) {
    Task t = std::move(todo.back());
    todo.pop_back();
    while (true) {
      if (t.rev.empty()) return false;
      const Formula* head = t.rev.back();
      if (head->is_product()) {
        t.rev.pop_back();
        t.rev.push_back(&head->right());
        t.rev.push_back(&head->left());
        continue;
      }
      if (t.goal->is_atom()) {
        if (t.rev.size() != 1 || head->atom() != t.goal->atom()) return false;
        break;
      }
      const std::size_t want = t.goal->left().leaves();
      std::size_t acc = 0;
      std::size_t taken = 0;
      while (taken < t.rev.size() && acc < want) acc += t.rev[t.rev.size() - 1 - taken++]->leaves();
      if (acc != want || taken == t.rev.size()) return false;
      Task left{std::vector<const Formula*>(t.rev.end() - static_cast<std::ptrdiff_t>(taken),
                                            t.rev.end()),
                &t.goal->left()};
      t.rev.resize(t.rev.size() - taken);
      t.goal = &t.goal->right();
      todo.push_back(std::move(t));
      t = std::move(left);
    }
  }
  return true;
}

bool decide(const Formula& a, const Formula& b) { return derivable(Sequent{Context{a}, b}); }

std::uint64_t count_focused(const Sequent& s) {
  if (s.context.empty()) throw std::invalid_argument("count_focused: empty context");
  return count(s.context, s.goal);
}

Derivation identity_expansion(const Formula& a) {
  return deduce(a, [](Derivation d) { return d; });
}

Derivation admit_cut(const Derivation& d, const Derivation& e, std::size_t pos) {
  require_focused(d, "admit_cut", "left derivation");
  require_focused(e, "admit_cut", "right derivation");
  const Context& ctx = e.conclusion().context;
  if (pos >= ctx.size()) throw PreconditionError("admit_cut: position out of range");
  if (ctx[pos] != d.conclusion().goal) {
    throw PreconditionError("admit_cut: cut formula does not match the right derivation");
  }
  return cut_focused(d, e, pos);
}

Derivation admit_times_r(const Derivation& d, const Derivation& e) {
  require_focused(d, "admit_times_r", "left derivation");
  require_focused(e, "admit_times_r", "right derivation");
  return times_r_focused(d, e);
}

Derivation focus(const Derivation& d) {
  if (auto v = validate(d)) throw InvalidDerivation(*v);
  return focus_valid(d);
}

}  // namespace tamari
