#include "tamari/calculus.hpp"

#include "json.hpp"

namespace tamari {

using ordered_json = nlohmann::ordered_json;

std::string print_sequent(const Sequent& s) {
  return print_context(s.context) + " |- " + print_formula(s.goal);
}

std::string_view rule_tag(Rule r) noexcept {
  switch (r) {
    case Rule::TimesL: return "L";
    case Rule::TimesR: return "R";
    case Rule::Id: return "id";
    case Rule::Cut: return "cut";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Construction

Derivation Derivation::unchecked(Rule rule, Sequent conclusion, std::vector<Derivation> premises,
                                 std::size_t split, std::size_t at, std::size_t len) {
  return Derivation(std::make_shared<const Node>(
      Node{rule, std::move(conclusion), std::move(premises), split, at, len}));
}

Derivation Derivation::id(Formula a) {
  Sequent s{Context{a}, a};
  return unchecked(Rule::Id, std::move(s), {});
}

Derivation Derivation::times_l(Derivation premise) {
  const Context& ctx = premise.conclusion().context;
  if (ctx.size() < 2) throw std::invalid_argument("times_l: premise context has fewer than 2 formulas");
  Context out;
  out.reserve(ctx.size() - 1);
  out.push_back(ctx[0] * ctx[1]);
  out.insert(out.end(), ctx.begin() + 2, ctx.end());
  Sequent s{std::move(out), premise.conclusion().goal};
  return unchecked(Rule::TimesL, std::move(s), {std::move(premise)});
}

Derivation Derivation::times_r(Derivation left, Derivation right) {
  const Sequent& l = left.conclusion();
  const Sequent& r = right.conclusion();
  Context out = l.context;
  out.insert(out.end(), r.context.begin(), r.context.end());
  const std::size_t split = l.context.size();
  Sequent s{std::move(out), l.goal * r.goal};
  return unchecked(Rule::TimesR, std::move(s), {std::move(left), std::move(right)}, split);
}

Derivation Derivation::cut(Derivation left, Derivation right, std::size_t at) {
  const Context& outer = right.conclusion().context;
  if (at >= outer.size()) throw std::invalid_argument("cut: position out of range");
  if (outer[at] != left.conclusion().goal) {
    throw std::invalid_argument("cut: right premise does not contain the cut formula at that position");
  }
  const Context& theta = left.conclusion().context;
  Context out(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), theta.begin(), theta.end());
  out.insert(out.end(), outer.begin() + static_cast<std::ptrdiff_t>(at) + 1, outer.end());
  const std::size_t len = theta.size();
  Sequent s{std::move(out), right.conclusion().goal};
  return unchecked(Rule::Cut, std::move(s), {std::move(left), std::move(right)}, 0, at, len);
}

const Formula& Derivation::cut_formula() const {
  if (rule() != Rule::Cut || premises().empty()) {
    throw std::logic_error("cut_formula() on a non-cut node");
  }
  return premises().front().conclusion().goal;
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises()) n += p.node_count();
  return n;
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.rule == y.rule && x.split == y.split && x.at == y.at && x.len == y.len &&
         x.conclusion == y.conclusion && x.premises == y.premises;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

Context slice(const Context& ctx, std::size_t from, std::size_t to) {
  return Context(ctx.begin() + static_cast<std::ptrdiff_t>(from),
                 ctx.begin() + static_cast<std::ptrdiff_t>(to));
}

// Returns the violated clause, or an empty string when the node itself is fine.
std::string check_node(const Derivation& d) {
  const Sequent& s = d.conclusion();
  const Context& ctx = s.context;
  const auto& ps = d.premises();
  if (ctx.empty()) return "conclusion context is empty";

  switch (d.rule()) {
    case Rule::TimesL: {
      if (ps.size() != 1) return "L: expected 1 premise";
      if (!ctx[0].is_product()) return "L: leftmost formula of the conclusion is not a product";
      Context expect{ctx[0].left(), ctx[0].right()};
      expect.insert(expect.end(), ctx.begin() + 1, ctx.end());
      if (ps[0].conclusion().context != expect) return "L: premise context is not A, B, Delta";
      if (ps[0].conclusion().goal != s.goal) return "L: premise goal differs from conclusion goal";
      return {};
    }
    case Rule::TimesR: {
      if (ps.size() != 2) return "R: expected 2 premises";
      if (!s.goal.is_product()) return "R: conclusion goal is not a product";
      if (d.split() == 0 || d.split() >= ctx.size()) return "R: split does not leave both sides non-empty";
      if (ps[0].conclusion().context != slice(ctx, 0, d.split())) {
        return "R: left premise context differs from the split prefix";
      }
      if (ps[1].conclusion().context != slice(ctx, d.split(), ctx.size())) {
        return "R: right premise context differs from the split suffix";
      }
      if (ps[0].conclusion().goal != s.goal.left()) return "R: left premise goal is not A";
      if (ps[1].conclusion().goal != s.goal.right()) return "R: right premise goal is not B";
      return {};
    }
    case Rule::Id: {
      if (!ps.empty()) return "id: expected no premises";
      if (ctx.size() != 1 || ctx[0] != s.goal) return "id: conclusion is not A |- A";
      return {};
    }
    case Rule::Cut: {
      if (ps.size() != 2) return "cut: expected 2 premises";
      if (d.len() == 0) return "cut: replaced segment is empty";
      if (d.at() + d.len() > ctx.size()) return "cut: segment exceeds the conclusion context";
      if (ps[0].conclusion().context != slice(ctx, d.at(), d.at() + d.len())) {
        return "cut: left premise context differs from the segment Theta";
      }
      Context expect = slice(ctx, 0, d.at());
      expect.push_back(ps[0].conclusion().goal);
      const Context tail = slice(ctx, d.at() + d.len(), ctx.size());
      expect.insert(expect.end(), tail.begin(), tail.end());
      if (ps[1].conclusion().context != expect) {
        return "cut: right premise context is not Gamma, A, Delta";
      }
      if (ps[1].conclusion().goal != s.goal) return "cut: right premise goal differs from conclusion goal";
      return {};
    }
  }
  return "unknown rule";
}

std::optional<Violation> validate_at(const Derivation& d, const std::string& path) {
  if (auto clause = check_node(d); !clause.empty()) return Violation{path, std::move(clause)};
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    if (auto v = validate_at(d.premises()[i], path + "/" + std::to_string(i))) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate(const Derivation& d) { return validate_at(d, "root"); }

InvalidDerivation::InvalidDerivation(const Violation& v)
    : std::runtime_error("invalid derivation at " + v.path + ": " + v.clause), violation_(v) {}

SequentClass classify(const Sequent& s) {
  if (s.context.empty()) throw std::invalid_argument("classify: empty context");
  if (!is_irreducible(s.context)) return SequentClass::LeftInverting;
  return s.goal.is_product() ? SequentClass::RightFocusing : SequentClass::AtomicClass;
}

bool is_focused(const Derivation& d) {
  switch (d.rule()) {
    case Rule::Cut: return false;
    case Rule::Id:
      if (!d.conclusion().goal.is_atom()) return false;
      break;
    case Rule::TimesR:
      if (!is_irreducible(d.premise(0).conclusion().context)) return false;
      break;
    case Rule::TimesL: break;
  }
  for (const auto& p : d.premises()) {
    if (!is_focused(p)) return false;
  }
  return true;
}

Derivation relabel(const Relabelling& sigma, const Derivation& d) {
  std::vector<Derivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(relabel(sigma, p));
  Sequent s{relabel(sigma, d.conclusion().context), relabel(sigma, d.conclusion().goal)};
  return Derivation::unchecked(d.rule(), std::move(s), std::move(premises), d.split(), d.at(),
                               d.len());
}

// ---------------------------------------------------------------------------
// JSON

JsonSchemaError::JsonSchemaError(const std::string& path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(path) {}

namespace {

ordered_json encode(const Derivation& d) {
  ordered_json j;
  j["rule"] = std::string(rule_tag(d.rule()));
  ordered_json ctx = ordered_json::array();
  for (const auto& f : d.conclusion().context) ctx.push_back(print_formula(f));
  j["sequent"] = ordered_json{{"ctx", std::move(ctx)}, {"goal", print_formula(d.conclusion().goal)}};
  if (d.rule() == Rule::TimesR) j["split"] = d.split();
  if (d.rule() == Rule::Cut) {
    j["at"] = d.at();
    j["len"] = d.len();
  }
  ordered_json premises = ordered_json::array();
  for (const auto& p : d.premises()) premises.push_back(encode(p));
  j["premises"] = std::move(premises);
  return j;
}

const ordered_json& field(const ordered_json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw JsonSchemaError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

Formula decode_formula(const ordered_json& j, const std::string& path) {
  if (!j.is_string()) throw JsonSchemaError(path, "expected a formula string");
  try {
    return parse_formula(j.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonSchemaError(path, e.what());
  }
}

std::size_t decode_index(const ordered_json& j, const char* key, const std::string& path) {
  const auto& v = field(j, key, path);
  if (!v.is_number_unsigned()) {
    throw JsonSchemaError(path + "." + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

Derivation decode(const ordered_json& j, const std::string& path) {
  if (!j.is_object()) throw JsonSchemaError(path, "expected an object");

  const auto& rule_j = field(j, "rule", path);
  if (!rule_j.is_string()) throw JsonSchemaError(path + ".rule", "expected a string");
  const auto tag = rule_j.get<std::string>();
  Rule rule;
  std::size_t arity;
  if (tag == "L") {
    rule = Rule::TimesL;
    arity = 1;
  } else if (tag == "R") {
    rule = Rule::TimesR;
    arity = 2;
  } else if (tag == "id") {
    rule = Rule::Id;
    arity = 0;
  } else if (tag == "cut") {
    rule = Rule::Cut;
    arity = 2;
  } else {
    throw JsonSchemaError(path + ".rule", "unknown rule \"" + tag + "\"");
  }

  const std::string seq_path = path + ".sequent";
  const auto& seq = field(j, "sequent", path);
  if (!seq.is_object()) throw JsonSchemaError(seq_path, "expected an object");
  const auto& ctx_j = field(seq, "ctx", seq_path);
  if (!ctx_j.is_array()) throw JsonSchemaError(seq_path + ".ctx", "expected an array");
  Context ctx;
  for (std::size_t i = 0; i < ctx_j.size(); ++i) {
    ctx.push_back(decode_formula(ctx_j[i], seq_path + ".ctx[" + std::to_string(i) + "]"));
  }
  Formula goal = decode_formula(field(seq, "goal", seq_path), seq_path + ".goal");

  std::size_t split = 0, at = 0, len = 0;
  if (rule == Rule::TimesR) split = decode_index(j, "split", path);
  if (rule == Rule::Cut) {
    at = decode_index(j, "at", path);
    len = decode_index(j, "len", path);
  }

  const auto& prem_j = field(j, "premises", path);
  if (!prem_j.is_array()) throw JsonSchemaError(path + ".premises", "expected an array");
  if (prem_j.size() != arity) {
    throw JsonSchemaError(path + ".premises", "rule \"" + tag + "\" takes " +
                                                  std::to_string(arity) + " premises, got " +
                                                  std::to_string(prem_j.size()));
  }
  std::vector<Derivation> premises;
  for (std::size_t i = 0; i < prem_j.size(); ++i) {
    premises.push_back(decode(prem_j[i], path + ".premises[" + std::to_string(i) + "]"));
  }
  return Derivation::unchecked(rule, Sequent{std::move(ctx), std::move(goal)},
                               std::move(premises), split, at, len);
}

void text_into(const Derivation& d, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += '[';
  out += rule_tag(d.rule());
  out += "] ";
  out += print_sequent(d.conclusion());
  out += '\n';
  for (const auto& p : d.premises()) text_into(p, depth + 1, out);
}

}  // namespace

std::string to_json(const Derivation& d) { return encode(d).dump(); }

Derivation from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw JsonSchemaError("$", e.what());
  }
  return decode(j, "$");
}

std::string to_text(const Derivation& d) {
  std::string out;
  text_into(d, 0, out);
  return out;
}

}  // namespace tamari
