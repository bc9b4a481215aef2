#include "posetkit/registry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "posetkit/complement.hpp"
#include "posetkit/cones.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/structure.hpp"

namespace posetkit {

EvalContext EvalContext::with_cap(std::size_t exhaustive_cap, std::size_t samples, std::uint64_t seed) {
  EvalContext ctx;
  ctx.conditions.size_cap = exhaustive_cap;
  ctx.conditions.samples = samples;
  ctx.conditions.seed = seed;
  ctx.hull.size_cap = exhaustive_cap;
  ctx.hull.samples = samples;
  ctx.hull.seed = seed;
  ctx.seed = seed;
  return ctx;
}

namespace {

using Evaluator = std::function<PropertyReport(const BoundedPoset&, const EvalContext&)>;

PropertyReport renamed(PropertyReport r, std::string name) {
  r.property = std::move(name);
  return r;
}

PropertyReport is_lattice(const BoundedPoset& bp) {
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      Bits pair(n);
      pair.set(x);
      pair.set(y);
      if (!raw::least_of(p, raw::upper(p, pair)) || !raw::greatest_of(p, raw::lower(p, pair))) {
        return PropertyReport::fail("lattice", {{"x", x}, {"y", y}});
      }
    }
  }
  return PropertyReport::pass("lattice");
}

std::vector<Bits> bi_plus_table(const BoundedPoset& bp) {
  std::vector<Bits> out;
  for (Element x = 0; x < bp.size(); ++x) out.push_back(raw::plus(bp, bp.complement_row(x)));
  return out;
}

PropertyReport bi_plus_injective(const BoundedPoset& bp) {
  const auto closure = bi_plus_table(bp);
  for (Element a = 0; a < bp.size(); ++a) {
    for (Element b = a + 1; b < bp.size(); ++b) {
      if (closure[a] == closure[b]) return PropertyReport::fail("bi-plus-injective", {{"a", a}, {"b", b}});
    }
  }
  return PropertyReport::pass("bi-plus-injective");
}

PropertyReport bi_plus_involutive(const BoundedPoset& bp) {
  const auto closure = bi_plus_table(bp);
  for (Element a = 0; a < bp.size(); ++a) {
    if (closure[a].count() != 1 || !closure[a].test(a)) {
      return PropertyReport::fail("bi-plus-involutive", {{"a", a}, {"bi-plus", bp.poset().subset(closure[a])}});
    }
  }
  return PropertyReport::pass("bi-plus-involutive");
}

const std::vector<std::pair<std::string, Evaluator>>& property_table() {
  static const std::vector<std::pair<std::string, Evaluator>> table = [] {
    std::vector<std::pair<std::string, Evaluator>> t;
    auto add = [&](std::string name, Evaluator f) { t.emplace_back(std::move(name), std::move(f)); };
    add("lattice", [](const BoundedPoset& bp, const EvalContext&) { return is_lattice(bp); });
    add("distributive", [](const BoundedPoset& bp, const EvalContext&) { return is_distributive(bp, 1); });
    for (int f = 2; f <= 4; ++f) {
      add("distributive-" + std::to_string(f),
          [f](const BoundedPoset& bp, const EvalContext&) { return is_distributive(bp, f); });
    }
    add("modular", [](const BoundedPoset& bp, const EvalContext&) { return is_modular(bp); });
    for (int f = 1; f <= 2; ++f) {
      add("modular-" + std::to_string(f),
          [f](const BoundedPoset& bp, const EvalContext&) { return is_modular_form(bp, f); });
    }
    add("complemented", [](const BoundedPoset& bp, const EvalContext&) { return is_complemented(bp); });
    add("uniquely-complemented",
        [](const BoundedPoset& bp, const EvalContext&) { return is_uniquely_complemented(bp); });
    add("boolean", [](const BoundedPoset& bp, const EvalContext&) { return is_boolean(bp); });
    add("pseudocomplemented", [](const BoundedPoset& bp, const EvalContext&) { return is_pseudocomplemented(bp); });
    add("n5-with-bounds", [](const BoundedPoset& bp, const EvalContext&) { return has_n5_with_bounds(bp); });
    add("complement-antichain",
        [](const BoundedPoset& bp, const EvalContext&) { return complement_antichain_all(bp); });
    add("complement-convex", [](const BoundedPoset& bp, const EvalContext&) { return complement_convex_all(bp); });
    const char* roman[] = {"i", "ii", "iii", "iv", "v"};
    for (int c = 1; c <= 5; ++c) {
      add(std::string("antitone-") + roman[c - 1],
          [c](const BoundedPoset& bp, const EvalContext&) { return antitone_condition(bp, c); });
    }
    add("de-morgan", [](const BoundedPoset& bp, const EvalContext&) { return de_morgan_check(bp); });
    for (int l = 1; l <= 2; ++l) {
      add("de-morgan-" + std::to_string(l),
          [l](const BoundedPoset& bp, const EvalContext&) { return de_morgan_law(bp, l); });
    }
    add("bi-plus-injective", [](const BoundedPoset& bp, const EvalContext&) { return bi_plus_injective(bp); });
    add("bi-plus-involutive", [](const BoundedPoset& bp, const EvalContext&) { return bi_plus_involutive(bp); });
    add("circ-monotone-left", [](const BoundedPoset& bp, const EvalContext&) { return monotone_left(bp, Op::Circ); });
    add("odot-monotone-left", [](const BoundedPoset& bp, const EvalContext&) { return monotone_left(bp, Op::Odot); });
    add("imp-monotone-right", [](const BoundedPoset& bp, const EvalContext&) { return monotone_right(bp, Op::Imp); });
    add("hook-monotone-right",
        [](const BoundedPoset& bp, const EvalContext&) { return monotone_right(bp, Op::Hook); });
    add("hook-weakly-antitone-left",
        [](const BoundedPoset& bp, const EvalContext&) { return weakly_antitone_left(bp, Op::Hook); });
    add("odot-weakly-monotone-right",
        [](const BoundedPoset& bp, const EvalContext&) { return weakly_monotone_right(bp, Op::Odot); });
    add("adjoint", [](const BoundedPoset& bp, const EvalContext&) { return adjointness_report(bp).both; });
    add("adjoint-forward", [](const BoundedPoset& bp, const EvalContext&) { return adjointness_report(bp).forward; });
    add("adjoint-backward",
        [](const BoundedPoset& bp, const EvalContext&) { return adjointness_report(bp).backward; });
    add("odot-hook-adjoint", [](const BoundedPoset& bp, const EvalContext&) { return odot_hook_adjointness(bp).both; });
    add("odot-hook-adjoint-forward",
        [](const BoundedPoset& bp, const EvalContext&) { return odot_hook_adjointness(bp).forward; });
    add("odot-hook-adjoint-backward",
        [](const BoundedPoset& bp, const EvalContext&) { return odot_hook_adjointness(bp).backward; });
    for (int k = 1; k <= 6; ++k) {
      add("condition-" + std::to_string(k),
          [k](const BoundedPoset& bp, const EvalContext& ctx) { return condition(bp, k, ctx.conditions); });
    }
    add("dm-embedding", [](const BoundedPoset& bp, const EvalContext&) { return embedding_check(bp.poset()); });
    add("dm-orthogonality", [](const BoundedPoset& bp, const EvalContext&) { return dm_orthogonality_check(bp); });
    add("dm-element-orthogonality",
        [](const BoundedPoset& bp, const EvalContext&) { return dm_element_orthogonality(bp); });
    add("hull-orthogonality",
        [](const BoundedPoset& bp, const EvalContext& ctx) { return hull_orthogonality_check(bp, ctx.hull); });
    return t;
  }();
  return table;
}

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"distributive-1", "distributive"},
      {"de-morgan-holds", "de-morgan"},
      {"n5", "n5-with-bounds"},
      {"has-n5-with-bounds", "n5-with-bounds"},
      {"unique-complements", "uniquely-complemented"},
      {"antichain-complements", "complement-antichain"},
      {"convex-complements", "complement-convex"},
  };
  return table;
}

// ---- suites -------------------------------------------------------------

PropertyReport implies(std::string name, bool hypothesis, PropertyReport conclusion) {
  if (!hypothesis) {
    auto r = PropertyReport::pass(std::move(name));
    r.vacuous = true;
    return r;
  }
  conclusion.note = conclusion.property;
  conclusion.property = std::move(name);
  return conclusion;
}

Bits random_bits(std::size_t n, std::mt19937_64& rng) {
  Bits out(n);
  std::uint64_t chunk = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) chunk = rng();
    if ((chunk >> (i % 64)) & 1u) out.set(i);
  }
  return out;
}

PropertyReport galois_lemma(const BoundedPoset& bp, const EvalContext& ctx) {
  const std::string name = "galois-lemma";
  const Poset& p = bp.poset();
  std::mt19937_64 rng(ctx.seed);
  auto fail = [&](const Bits& a, const Bits& b, const char* item) {
    auto r = PropertyReport::fail(name, {{"A", p.subset(a)}, {"B", p.subset(b)}});
    r.note = item;
    return r;
  };
  for (std::size_t i = 0; i < ctx.galois_pairs; ++i) {
    const Bits a = random_bits(p.size(), rng);
    const Bits b = random_bits(p.size(), rng);
    const Bits ap = raw::plus(bp, a);
    const Bits bp_ = raw::plus(bp, b);
    if (!a.is_subset_of(raw::plus(bp, ap))) return fail(a, b, "A ⊆ (A⁺)⁺");
    const Bits sup = a | b;
    if (!raw::plus(bp, sup).is_subset_of(ap)) return fail(a, sup, "A ⊆ B implies B⁺ ⊆ A⁺");
    if (raw::plus(bp, raw::plus(bp, ap)) != ap) return fail(a, b, "((A⁺)⁺)⁺ = A⁺");
    if (a.is_subset_of(bp_) != b.is_subset_of(ap)) return fail(a, b, "A ⊆ B⁺ iff B ⊆ A⁺");
  }
  auto r = PropertyReport::pass(name);
  r.exhaustive = false;
  r.samples = ctx.galois_pairs;
  return r;
}

PropertyReport distributive_forms(const BoundedPoset& bp) {
  std::vector<PropertyReport> forms;
  for (int f = 1; f <= 4; ++f) forms.push_back(is_distributive(bp, f));
  for (int f = 1; f < 4; ++f) {
    if (forms[f].holds != forms[0].holds) {
      auto r = forms[f].holds ? forms[0] : forms[f];
      r.property = "distributive-forms";
      r.holds = false;
      r.note = "distributive-1 and distributive-" + std::to_string(f + 1) + " disagree";
      return r;
    }
  }
  return PropertyReport::pass("distributive-forms");
}

PropertyReport antichain_n5(const BoundedPoset& bp) {
  const std::string name = "complement-antichain-n5";
  if (!is_complemented(bp).holds) {
    auto r = PropertyReport::pass(name);
    r.vacuous = true;
    return r;
  }
  const auto anti = complement_antichain_all(bp);
  const auto n5 = has_n5_with_bounds(bp);
  if (anti.holds == n5.holds) {
    auto r = anti.holds ? n5 : anti;
    r.property = name;
    r.holds = false;
    r.note = anti.holds ? "antichains but N5 with bounds present" : "non-antichain but no N5 with bounds";
    return r;
  }
  return PropertyReport::pass(name);
}

PropertyReport operator_identities(const BoundedPoset& bp) {
  const std::string name = "operator-identities";
  if (!is_complemented(bp).holds) {
    auto r = PropertyReport::pass(name);
    r.vacuous = true;
    return r;
  }
  const Poset& p = bp.poset();
  const Element one = bp.top();
  for (Element x = 0; x < bp.size(); ++x) {
    for (Element y = 0; y < bp.size(); ++y) {
      auto fail = [&](const char* what) {
        auto r = PropertyReport::fail(name, {{"x", x}, {"y", y}});
        r.note = what;
        return r;
      };
      if (circ(bp, x, y) != circ(bp, y, x)) return fail("x∘y = y∘x");
      if (hook(bp, x, y) != hook_via_max(bp, x, y)) return fail("x↪y via L(x,y) and Max L(x,y)");
      if (imp(bp, one, x) != p.singleton(x)) return fail("1→x = x");
      if (odot(bp, x, one) != p.singleton(x)) return fail("x⊙1 = x");
      if (hook(bp, one, x) != p.singleton(x)) return fail("1↪x = x");
      if (p.leq(x, y)) {
        if (circ(bp, x, y) != p.singleton(x)) return fail("x∘y = x for x ≤ y");
        if (imp(bp, x, y) != p.singleton(one)) return fail("x→y = 1 for x ≤ y");
        if (odot(bp, y, x) != p.singleton(x)) return fail("y⊙x = x for x ≤ y");
        if (hook(bp, x, y) != p.singleton(one)) return fail("x↪y = 1 for x ≤ y");
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport monotonicity_lemma(const BoundedPoset& bp) {
  auto parts = monotonicity_report(bp);
  parts.resize(4);  // the weak conditions are hypotheses elsewhere, not claims
  return implies("monotonicity-lemma", is_complemented(bp).holds, all_of("monotonicity", parts));
}

PropertyReport filtered_implications(const BoundedPoset& bp, const EvalContext& ctx, const std::string& name,
                                     const std::function<bool(const std::string&)>& keep) {
  std::vector<PropertyReport> parts;
  for (auto& r : theorem_implications(bp, ctx.conditions)) {
    if (keep(r.property)) parts.push_back(std::move(r));
  }
  return all_of(name, parts);
}

bool mentions_subset_condition(const std::string& property) {
  return property.rfind("condition-5", 0) == 0 || property.rfind("condition-6", 0) == 0;
}

PropertyReport dm_suite(const BoundedPoset& bp) {
  PropertyReport lattice = PropertyReport::pass("dm-lattice");
  try {
    (void)dm_completion(bp.poset());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvariantViolation) throw;
    lattice = PropertyReport::fail("dm-lattice", {});
    lattice.note = e.what();
  }
  return all_of("dm-completion", {lattice, embedding_check(bp.poset()), dm_orthogonality_check(bp),
                                  dm_element_orthogonality(bp)});
}

PropertyReport hull_characterizations(const BoundedPoset& bp, const EvalContext& ctx) {
  const std::string name = "hull-characterizations";
  const Poset& p = bp.poset();
  const std::size_t n = p.size();
  auto check = [&](const Bits& a) {
    const Subset s = p.subset(a);
    return convex_hull(p, s) == convex_hull_between(p, s);
  };
  if (n <= 16) {
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      const Bits a = Bits::from_u64(n, mask);
      if (!check(a)) return PropertyReport::fail(name, {{"A", p.subset(a)}});
    }
    return PropertyReport::pass(name);
  }
  std::mt19937_64 rng(ctx.seed);
  const std::size_t samples = ctx.hull.samples.value_or(1000);
  for (std::size_t i = 0; i < samples; ++i) {
    const Bits a = random_bits(n, rng);
    if (!check(a)) return PropertyReport::fail(name, {{"A", p.subset(a)}});
  }
  auto r = PropertyReport::pass(name);
  r.exhaustive = false;
  r.samples = samples;
  return r;
}

PropertyReport cl_suite(const BoundedPoset& bp) {
  try {
    (void)closed_sets(bp);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvariantViolation) throw;
    auto r = PropertyReport::fail("cl-ortholattice", {});
    r.note = e.what();
    return r;
  }
  return PropertyReport::pass("cl-ortholattice");
}

using Suite = std::function<PropertyReport(const BoundedPoset&, const EvalContext&)>;

const std::vector<std::pair<std::string, Suite>>& suite_table() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"galois-lemma", galois_lemma},
      {"distributive-forms", [](const BoundedPoset& bp, const EvalContext&) { return distributive_forms(bp); }},
      {"complement-antichain-n5", [](const BoundedPoset& bp, const EvalContext&) { return antichain_n5(bp); }},
      {"complement-convex",
       [](const BoundedPoset& bp, const EvalContext&) {
         return implies("complement-convex", is_complemented(bp).holds, complement_convex_all(bp));
       }},
      {"prop2", [](const BoundedPoset& bp, const EvalContext&) { return renamed(prop2_check(bp), "prop2"); }},
      {"antitone-theorem",
       [](const BoundedPoset& bp, const EvalContext&) {
         return all_of("antitone-theorem", antitone_conditions(bp).implications);
       }},
      {"de-morgan-lemma",
       [](const BoundedPoset& bp, const EvalContext&) {
         const bool hyp = is_complemented(bp).holds && !is_uniquely_complemented(bp).holds;
         if (!hyp) {
           auto r = PropertyReport::pass("de-morgan-lemma");
           r.vacuous = true;
           return r;
         }
         if (de_morgan_check(bp).holds) {
           auto r = PropertyReport::fail("de-morgan-lemma", {});
           r.note = "both De Morgan laws hold";
           return r;
         }
         return PropertyReport::pass("de-morgan-lemma");
       }},
      {"operator-identities",
       [](const BoundedPoset& bp, const EvalContext&) { return operator_identities(bp); }},
      {"monotonicity-lemma", [](const BoundedPoset& bp, const EvalContext&) { return monotonicity_lemma(bp); }},
      {"odot-unique",
       [](const BoundedPoset& bp, const EvalContext& ctx) {
         return filtered_implications(bp, ctx, "odot-unique", [](const std::string& p) {
           return p == "odot-weak-monotone-implies-uniquely-complemented";
         });
       }},
      {"adjointness-theorems",
       [](const BoundedPoset& bp, const EvalContext& ctx) {
         return filtered_implications(bp, ctx, "adjointness-theorems", [](const std::string& p) {
           return !mentions_subset_condition(p) && p != "odot-weak-monotone-implies-uniquely-complemented";
         });
       }},
      {"modular-corollary",
       [](const BoundedPoset& bp, const EvalContext& ctx) {
         return filtered_implications(bp, ctx, "modular-corollary", mentions_subset_condition);
       }},
      {"dm-completion", [](const BoundedPoset& bp, const EvalContext&) { return dm_suite(bp); }},
      {"hull-orthogonality",
       [](const BoundedPoset& bp, const EvalContext& ctx) {
         return all_of("hull-orthogonality",
                       {hull_characterizations(bp, ctx), hull_orthogonality_check(bp, ctx.hull)});
       }},
      {"cl-ortholattice", [](const BoundedPoset& bp, const EvalContext&) { return cl_suite(bp); }},
      {"injectivity",
       [](const BoundedPoset& bp, const EvalContext&) { return all_of("injectivity", bi_plus_properties(bp)); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : property_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string resolve_property(std::string_view name) {
  for (const auto& [n, f] : property_table()) {
    if (n == name) return n;
  }
  if (auto it = aliases().find(name); it != aliases().end()) return it->second;
  throw Error(ErrorKind::UnknownProperty, "no property named '" + std::string(name) + "'");
}

PropertyReport evaluate_property(const BoundedPoset& bp, std::string_view name, const EvalContext& ctx) {
  const std::string canonical = resolve_property(name);
  for (const auto& [n, f] : property_table()) {
    if (n == canonical) return renamed(f(bp, ctx), canonical);
  }
  throw Error(ErrorKind::UnknownProperty, "no property named '" + std::string(name) + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : suite_table()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

PropertyReport run_suite(const BoundedPoset& bp, std::string_view suite, const EvalContext& ctx) {
  if (suite == "all") {
    std::vector<PropertyReport> parts;
    for (const auto& [name, f] : suite_table()) parts.push_back(f(bp, ctx));
    return all_of("all", parts);
  }
  for (const auto& [name, f] : suite_table()) {
    if (name == suite) return f(bp, ctx);
  }
  throw Error(ErrorKind::PredicateUnknown, "no suite named '" + std::string(suite) + "'");
}

// ---- predicate expressions ----------------------------------------------

struct Predicate::Node {
  enum class Kind { Atom, Not, And, Or } kind;
  std::size_t atom = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::vector<std::string>& atoms) : text_(text), atoms_(atoms) {}

  std::shared_ptr<const Predicate::Node> parse() {
    auto node = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  using Node = Predicate::Node;
  using Ptr = std::shared_ptr<const Node>;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(std::initializer_list<std::string_view> tokens) {
    skip_space();
    for (auto t : tokens) {
      if (text_.substr(pos_, t.size()) == t) {
        pos_ += t.size();
        return true;
      }
    }
    return false;
  }

  Ptr parse_or() {
    Ptr node = parse_and();
    while (accept({"|", "∨"})) node = std::make_shared<Node>(Node{Node::Kind::Or, 0, node, parse_and()});
    return node;
  }

  Ptr parse_and() {
    Ptr node = parse_unary();
    while (accept({"&", "∧"})) node = std::make_shared<Node>(Node{Node::Kind::And, 0, node, parse_unary()});
    return node;
  }

  Ptr parse_unary() {
    if (accept({"!", "¬"})) return std::make_shared<Node>(Node{Node::Kind::Not, 0, parse_unary(), nullptr});
    if (accept({"("})) {
      Ptr inner = parse_or();
      if (!accept({")"})) fail("expected ')'");
      return inner;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                        c == '_';
      if (!word) break;
      ++pos_;
    }
    if (start == pos_) fail("expected a property name");
    std::string name;
    try {
      name = resolve_property(text_.substr(start, pos_ - start));
    } catch (const Error&) {
      throw Error(ErrorKind::PredicateUnknown,
                  "unknown predicate '" + std::string(text_.substr(start, pos_ - start)) + "'");
    }
    auto it = std::find(atoms_.begin(), atoms_.end(), name);
    const std::size_t index = static_cast<std::size_t>(it - atoms_.begin());
    if (it == atoms_.end()) atoms_.push_back(name);
    return std::make_shared<Node>(Node{Node::Kind::Atom, index, nullptr, nullptr});
  }

  std::string_view text_;
  std::vector<std::string>& atoms_;
  std::size_t pos_ = 0;
};

bool eval_node(const Predicate::Node& node, const std::vector<PropertyReport>& values) {
  using Kind = Predicate::Node::Kind;
  switch (node.kind) {
    case Kind::Atom: return values[node.atom].holds;
    case Kind::Not: return !eval_node(*node.lhs, values);
    case Kind::And: return eval_node(*node.lhs, values) && eval_node(*node.rhs, values);
    case Kind::Or: return eval_node(*node.lhs, values) || eval_node(*node.rhs, values);
  }
  return false;
}

}  // namespace

Predicate Predicate::parse(std::string_view text) {
  Predicate out;
  out.text_ = std::string(text);
  out.root_ = ExprParser(text, out.atoms_).parse();
  return out;
}

bool Predicate::evaluate(const BoundedPoset& bp, const EvalContext& ctx, std::vector<PropertyReport>* reports) const {
  std::vector<PropertyReport> values;
  values.reserve(atoms_.size());
  for (const auto& atom : atoms_) values.push_back(evaluate_property(bp, atom, ctx));
  const bool result = eval_node(*root_, values);
  if (reports) *reports = std::move(values);
  return result;
}

}  // namespace posetkit
