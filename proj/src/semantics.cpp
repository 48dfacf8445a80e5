#include "plancomp/semantics.hpp"

#include <map>

#include "plancomp/error.hpp"

namespace plancomp {

StateSpec StateSpec::of(LiteralSet l) {
  if (!plancomp::is_consistent(l)) throw ValidationError("inconsistent state specification " + plancomp::str(l));
  StateSpec s;
  s.literals_ = std::move(l);
  return s;
}

std::string StateSpec::str() const {
  return is_illegal() ? std::string("ILLEGAL") : plancomp::str(*literals_);
}

const char* reason_name(IllegalReason r) {
  switch (r) {
    case IllegalReason::SourceIllegal:
      return "SourceIllegal";
    case IllegalReason::PreNotEntailed:
      return "PreNotEntailed";
    case IllegalReason::ActiveInconsistent:
      return "ActiveInconsistent";
    case IllegalReason::ActiveNotEqualPotential:
      return "ActiveNotEqualPotential";
  }
  return "?";
}

namespace {

Truth fixed_value(const LiteralSet& s, const std::string& a) {
  if (s.count(Literal::positive(a))) return Truth::True;
  if (s.count(Literal::negative(a))) return Truth::False;
  return Truth::Unknown;
}

// Calls `visit(assignment)` for every assignment of the atoms of `fs` left
// open by `s`, stopping when it returns false. Returns false iff stopped.
template <class Visit>
bool for_each_completion(const LiteralSet& s, const std::vector<Formula>& fs,
                         const Visit& visit) {
  AtomSet mentioned;
  for (const auto& f : fs) f.collect_atoms(mentioned);
  std::vector<std::string> open;
  for (const auto& a : mentioned)
    if (fixed_value(s, a) == Truth::Unknown) open.push_back(a);
  if (open.size() > kMaxEnumeratedAtoms)
    throw BoundError("too many open atoms for enumeration");
  std::map<std::string, bool> extra;
  for (unsigned long long bits = 0; bits < (1ULL << open.size()); ++bits) {
    for (std::size_t i = 0; i < open.size(); ++i) extra[open[i]] = (bits >> i) & 1ULL;
    auto lookup = [&](const std::string& a) {
      Truth t = fixed_value(s, a);
      if (t != Truth::Unknown) return t;
      return extra.at(a) ? Truth::True : Truth::False;
    };
    if (!visit(lookup)) return false;
  }
  return true;
}

}  // namespace

bool entails(const LiteralSet& s, const Formula& f) {
  Truth t = f.evaluate3([&](const std::string& a) { return fixed_value(s, a); });
  if (t != Truth::Unknown) return t == Truth::True;
  return for_each_completion(s, {f}, [&](const auto& lookup) {
    return f.evaluate3(lookup) == Truth::True;
  });
}

bool entails(const StateSpec& s, const Formula& f) {
  return s.is_illegal() || entails(s.literals(), f);
}

bool entails_all(const LiteralSet& s, const std::vector<Formula>& fs) {
  for (const auto& f : fs)
    if (!entails(s, f)) return false;
  return true;
}

bool jointly_satisfiable(const LiteralSet& s, const std::vector<Formula>& fs) {
  if (!is_consistent(s)) return false;
  bool all_true = true;
  for (const auto& f : fs) {
    Truth t = f.evaluate3([&](const std::string& a) { return fixed_value(s, a); });
    if (t == Truth::False) return false;
    if (t != Truth::True) all_true = false;
  }
  if (all_true) return true;
  // the visitor stops (returns false) at the first satisfying completion
  return !for_each_completion(s, fs, [&](const auto& lookup) {
    for (const auto& f : fs)
      if (f.evaluate3(lookup) != Truth::True) return true;
    return false;
  });
}

LiteralSet active_effects(const LiteralSet& s, const std::vector<ConditionalEffect>& post) {
  LiteralSet out;
  for (const auto& e : post)
    if (entails_all(s, e.conditions())) out.insert(e.effects().begin(), e.effects().end());
  return out;
}

LiteralSet potentially_active_effects(const LiteralSet& s,
                                      const std::vector<ConditionalEffect>& post) {
  LiteralSet out;
  for (const auto& e : post)
    if (jointly_satisfiable(s, e.conditions()))
      out.insert(e.effects().begin(), e.effects().end());
  return out;
}

LiteralSet active_effects(const State& s, const std::vector<ConditionalEffect>& post,
                          const AtomSet& sigma) {
  return active_effects(spec_of_state(s, sigma), post);
}

ApplyOutcome apply_operator(const StateSpec& s, const Operator& o) {
  auto fail = [](IllegalReason r) { return ApplyOutcome{StateSpec::illegal(), r}; };
  if (s.is_illegal()) return fail(IllegalReason::SourceIllegal);
  const LiteralSet& lits = s.literals();
  if (!entails_all(lits, o.pre)) return fail(IllegalReason::PreNotEntailed);
  LiteralSet a = active_effects(lits, o.post);
  if (!is_consistent(a)) return fail(IllegalReason::ActiveInconsistent);
  if (a != potentially_active_effects(lits, o.post))
    return fail(IllegalReason::ActiveNotEqualPotential);
  LiteralSet next = set_union(set_difference(lits, negate_all(a)), a);
  return ApplyOutcome{StateSpec::of(std::move(next)), std::nullopt};
}

StateSpec apply_plan(const StateSpec& s, const DomainStructure& d, const Plan& plan) {
  auto idx = resolve_plan(d, plan);
  StateSpec cur = s;
  for (auto i : idx) {
    if (cur.is_illegal()) break;
    cur = apply_operator(cur, d.operators[i]).result;
  }
  return cur;
}

bool is_solution(const Instance& p, const Plan& plan) {
  StateSpec end = apply_plan(StateSpec::of(p.init), p.domain, plan);
  return end.is_consistent() && is_subset(p.goal, end.literals());
}

std::set<State> enumerate_models(const StateSpec& s, const AtomSet& sigma,
                                  std::size_t max_atoms) {
  if (sigma.size() > max_atoms) throw BoundError("model enumeration bound exceeded");
  std::set<State> out;
  if (s.is_illegal()) return out;
  std::vector<std::string> atoms(sigma.begin(), sigma.end());
  for (unsigned long long bits = 0; bits < (1ULL << atoms.size()); ++bits) {
    State st;
    bool ok = true;
    for (std::size_t i = 0; i < atoms.size() && ok; ++i) {
      bool v = (bits >> i) & 1ULL;
      if (v) st.insert(atoms[i]);
      if (s.literals().count(Literal::of(atoms[i], !v))) ok = false;
    }
    if (ok) out.insert(std::move(st));
  }
  return out;
}

std::optional<State> transition(const State& s, const Operator& o) {
  auto lookup = [&](const std::string& a) { return s.count(a) > 0; };
  for (const auto& f : o.pre)
    if (!f.evaluate(lookup)) return std::nullopt;
  LiteralSet a;
  for (const auto& e : o.post) {
    bool on = true;
    for (const auto& f : e.conditions())
      if (!f.evaluate(lookup)) on = false;
    if (on) a.insert(e.effects().begin(), e.effects().end());
  }
  if (!is_consistent(a)) return std::nullopt;
  State next = s;
  for (const auto& l : a) {
    if (l.is_positive()) next.insert(l.atom());
    if (l.is_negative()) next.erase(l.atom());
  }
  return next;
}

LiteralSet spec_of_state(const State& s, const AtomSet& sigma) {
  LiteralSet out;
  for (const auto& a : sigma) out.insert(Literal::of(a, s.count(a) > 0));
  return out;
}

}  // namespace plancomp
