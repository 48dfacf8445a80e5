#include "plancomp/model.hpp"

#include <algorithm>
#include <map>

#include "plancomp/error.hpp"

namespace plancomp {

namespace {

void sort_unique(std::vector<Formula>& fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

}  // namespace

ConditionalEffect::ConditionalEffect(std::vector<Formula> conditions,
                                     LiteralSet effects) {
  for (auto& c : conditions)
    if (!(c.is_leaf() && c.literal().is_top())) conditions_.push_back(c);
  sort_unique(conditions_);
  for (const auto& l : effects)
    if (!l.is_top()) effects_.insert(l);
  if (effects_.empty())
    throw ValidationError("conditional effect with empty effect set");
}

Operator::Operator(std::string n, std::vector<Formula> p,
                   std::vector<ConditionalEffect> q)
    : name(std::move(n)), pre(std::move(p)), post(std::move(q)) {
  sort_unique(pre);
}

const Operator* DomainStructure::find(const std::string& op) const {
  for (const auto& o : operators)
    if (o.name == op) return &o;
  return nullptr;
}

std::optional<std::size_t> DomainStructure::index_of(const std::string& op) const {
  for (std::size_t i = 0; i < operators.size(); ++i)
    if (operators[i].name == op) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string FormalismTag::name() const {
  std::string suffix;
  if (formula_class == FormulaClass::Literals) suffix += 'L';
  if (formula_class == FormulaClass::Boolean) suffix += 'B';
  if (incomplete) suffix += 'I';
  if (conditional) suffix += 'C';
  return suffix.empty() ? "S" : "S_" + suffix;
}

std::optional<FormalismTag> parse_tag(const std::string& name) {
  if (name == "S") return FormalismTag{};
  if (name.size() < 3 || name.compare(0, 2, "S_") != 0) return std::nullopt;
  FormalismTag t;
  bool cls = false;
  for (std::size_t i = 2; i < name.size(); ++i) {
    switch (name[i]) {
      case 'L':
      case 'B':
        if (cls) return std::nullopt;
        cls = true;
        t.formula_class = name[i] == 'L' ? FormulaClass::Literals : FormulaClass::Boolean;
        break;
      case 'I':
        if (t.incomplete) return std::nullopt;
        t.incomplete = true;
        break;
      case 'C':
        if (t.conditional) return std::nullopt;
        t.conditional = true;
        break;
      default:
        return std::nullopt;
    }
  }
  return t;
}

std::vector<FormalismTag> all_tags() {
  std::vector<FormalismTag> out;
  for (bool c : {false, true})
    for (bool i : {false, true})
      for (auto k : {FormulaClass::Atoms, FormulaClass::Literals, FormulaClass::Boolean})
        out.push_back(FormalismTag{k, i, c});
  return out;
}

bool specializes(const FormalismTag& x, const FormalismTag& y) {
  return x.formula_class <= y.formula_class && (!x.incomplete || y.incomplete) &&
         (!x.conditional || y.conditional);
}

FormalismTag join(const FormalismTag& x, const FormalismTag& y) {
  return {std::max(x.formula_class, y.formula_class), x.incomplete || y.incomplete,
          x.conditional || y.conditional};
}

FormalismTag classify_domain(const DomainStructure& d) {
  FormalismTag t;
  auto see = [&](const Formula& f) {
    t.formula_class = std::max(t.formula_class, formula_class(f));
  };
  for (const auto& o : d.operators) {
    for (const auto& f : o.pre) see(f);
    for (const auto& e : o.post) {
      if (!e.unconditional()) t.conditional = true;
      for (const auto& f : e.conditions()) see(f);
    }
  }
  return t;
}

FormalismTag classify_instance(const Instance& p) {
  validate_instance(p);
  FormalismTag t = classify_domain(p.domain);
  t.incomplete = !is_complete_over(p.init, p.domain.atoms);
  if (t.formula_class == FormulaClass::Atoms && !negatives(p.goal).empty())
    t.formula_class = FormulaClass::Literals;
  return t;
}

// ---------------------------------------------------------------------------

bool is_user_atom_name(const std::string& name) {
  if (name.empty()) return false;
  char c = name[0];
  if (!((c >= 'a' && c <= 'z') || c == '_')) return false;
  for (char ch : name)
    if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_' || ch == '-'))
      return false;
  return name != "true" && name != "false";
}

bool is_generated_name(const std::string& name) {
  if (name.size() < 2 || name[0] != '@') return false;
  for (char ch : name)
    if (ch == '(' || ch == ')' || ch == ';' || ch == '"' ||
        static_cast<unsigned char>(ch) <= ' ')
      return false;
  return true;
}

namespace {

void check_atoms(const AtomSet& used, const AtomSet& declared, const std::string& where) {
  for (const auto& a : used)
    if (!declared.count(a))
      throw ValidationError("undeclared atom '" + a + "' in " + where);
}

}  // namespace

void validate_domain(const DomainStructure& d) {
  for (const auto& a : d.atoms)
    if (!is_user_atom_name(a) && !is_generated_name(a))
      throw ValidationError("invalid atom name '" + a + "'");
  AtomSet names;
  for (const auto& o : d.operators) {
    if (!is_user_atom_name(o.name) && !is_generated_name(o.name))
      throw ValidationError("invalid operator name '" + o.name + "'");
    if (!names.insert(o.name).second)
      throw ValidationError("duplicate operator name '" + o.name + "'");
    AtomSet used;
    for (const auto& f : o.pre) f.collect_atoms(used);
    for (const auto& e : o.post) {
      for (const auto& f : e.conditions()) f.collect_atoms(used);
      for (const auto& a : atoms_of(e.effects())) used.insert(a);
    }
    check_atoms(used, d.atoms, "operator '" + o.name + "'");
  }
}

void validate_instance(const Instance& p) {
  validate_domain(p.domain);
  check_atoms(atoms_of(p.init), p.domain.atoms, "init");
  check_atoms(atoms_of(p.goal), p.domain.atoms, "goal");
  for (const auto& l : p.init)
    if (!l.is_atom()) throw ValidationError("constant in init");
  if (!is_consistent(p.init)) throw ValidationError("inconsistent init");
  for (const auto& l : p.goal)
    if (!l.is_atom()) throw ValidationError("constant in goal");
}

std::vector<std::size_t> resolve_plan(const DomainStructure& d, const Plan& plan) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < d.operators.size(); ++i)
    index.emplace(d.operators[i].name, i);
  std::vector<std::size_t> out;
  out.reserve(plan.size());
  for (const auto& s : plan.steps) {
    auto it = index.find(s);
    if (it == index.end()) throw ValidationError("unknown operator '" + s + "' in plan");
    out.push_back(it->second);
  }
  return out;
}

// ---------------------------------------------------------------------------

DomainStructure normalize_singleton_effects(const DomainStructure& d) {
  DomainStructure out{d.name, d.atoms, {}};
  for (const auto& o : d.operators) {
    std::vector<ConditionalEffect> post;
    for (const auto& e : o.post)
      for (const auto& l : e.effects()) post.emplace_back(e.conditions(), LiteralSet{l});
    out.operators.emplace_back(o.name, o.pre, std::move(post));
  }
  return out;
}

namespace {

bool is_boolean(const DomainStructure& d) {
  return classify_domain(d).formula_class == FormulaClass::Boolean;
}

}  // namespace

bool has_singleton_effects(const DomainStructure& d) {
  for (const auto& o : d.operators)
    for (const auto& e : o.post)
      if (e.effects().size() != 1) return false;
  return true;
}

bool has_unique_effect_literals(const DomainStructure& d) {
  for (const auto& o : d.operators) {
    LiteralSet seen;
    for (const auto& e : o.post)
      for (const auto& l : e.effects())
        if (!seen.insert(l).second) return false;
  }
  return true;
}

std::size_t max_effects(const DomainStructure& d) {
  std::size_t m = 0;
  for (const auto& o : d.operators) m = std::max(m, o.post.size());
  return m;
}

std::size_t total_effects(const DomainStructure& d) {
  std::size_t m = 0;
  for (const auto& o : d.operators) m += o.post.size();
  return m;
}

DomainStructure detail::merge_effect_literals(const DomainStructure& d) {
  DomainStructure split = normalize_singleton_effects(d);
  DomainStructure out{d.name, d.atoms, {}};
  for (const auto& o : split.operators) {
    std::vector<Literal> order;
    std::map<Literal, std::vector<const ConditionalEffect*>> groups;
    for (const auto& e : o.post) {
      const Literal& l = *e.effects().begin();
      if (!groups.count(l)) order.push_back(l);
      groups[l].push_back(&e);
    }
    std::vector<ConditionalEffect> post;
    for (const auto& l : order) {
      const auto& g = groups[l];
      if (g.size() == 1) {
        post.push_back(*g[0]);
        continue;
      }
      bool always = std::any_of(g.begin(), g.end(),
                                [](const ConditionalEffect* e) { return e->unconditional(); });
      if (always) {
        post.emplace_back(std::vector<Formula>{}, LiteralSet{l});
        continue;
      }
      std::vector<Formula> disjuncts;
      for (const auto* e : g) disjuncts.push_back(conjoin_all(e->conditions()));
      post.emplace_back(std::vector<Formula>{disjoin_all(disjuncts)}, LiteralSet{l});
    }
    out.operators.emplace_back(o.name, o.pre, std::move(post));
  }
  return out;
}

DomainStructure normalize_unique_effect_literals(const DomainStructure& d) {
  DomainStructure split = normalize_singleton_effects(d);
  if (has_unique_effect_literals(split)) return split;
  if (!is_boolean(d))
    throw PreconditionError("merging effect literals needs a Boolean domain");
  return detail::merge_effect_literals(d);
}

DomainStructure detail::fold_preconditions(const DomainStructure& d) {
  DomainStructure out{d.name, d.atoms, {}};
  for (const auto& o : d.operators)
    out.operators.emplace_back(o.name, std::vector<Formula>{conjoin_all(o.pre)}, o.post);
  return out;
}

DomainStructure normalize_single_precondition(const DomainStructure& d) {
  bool needs_fold = std::any_of(d.operators.begin(), d.operators.end(),
                                [](const Operator& o) { return o.pre.size() > 1; });
  if (needs_fold && !is_boolean(d))
    throw PreconditionError("folding preconditions needs a Boolean domain");
  return detail::fold_preconditions(d);
}

}  // namespace plancomp
