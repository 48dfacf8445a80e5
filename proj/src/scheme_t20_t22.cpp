// Conditional effects compiled into sequences of unconditional operators:
// o^pre starts an operator, one rule operator per conditional effect records
// whether it fired, o^e closes the operator, copy operators move the recorded
// effects into the state, o^c ends the cycle.

#include <map>

#include "plancomp/schemes.hpp"
#include "plancomp/semantics.hpp"
#include "scheme_util.hpp"

namespace plancomp {

using namespace detail;

namespace {

enum class Variant { T20, T22b, T22l };

SchemeId scheme_id(Variant v) {
  switch (v) {
    case Variant::T20:
      return SchemeId::T20;
    case Variant::T22b:
      return SchemeId::T22b;
    case Variant::T22l:
      return SchemeId::T22l;
  }
  return SchemeId::T20;
}

struct CycleLayout {
  DomainStructure src;  // singleton effects
  std::map<std::string, std::string> plus, minus, hash;
  std::vector<std::string> op_atom;
  std::vector<std::vector<std::string>> x;
  std::string c;
  // operator names
  std::vector<std::string> pre, end;
  std::vector<std::vector<std::string>> fire;
  std::vector<std::vector<std::vector<std::string>>> block;  // [i][j][m]; t20: one per rule
  std::map<std::string, std::string> add, del, clash;
  std::string cycle;
};

CycleLayout cycle_layout(const DomainStructure& d, Variant v) {
  CycleLayout L;
  L.src = normalize_singleton_effects(d);
  if (v == Variant::T20 && !has_unique_effect_literals(L.src))
    throw PreconditionError("t20 needs unique effect literals per operator");
  SchemeId id = scheme_id(v);
  NameSupply atoms(d.atoms);
  for (const auto& p : d.atoms) L.plus[p] = atoms.take(fresh_atom(id, "plus", {p}));
  for (const auto& p : d.atoms) L.minus[p] = atoms.take(fresh_atom(id, "minus", {p}));
  for (const auto& p : d.atoms) L.hash[p] = atoms.take(fresh_atom(id, "hash", {p}));
  for (const auto& o : L.src.operators) L.op_atom.push_back(atoms.take(fresh_atom(id, "op", {o.name})));
  for (std::size_t i = 0; i < L.src.operators.size(); ++i) {
    L.x.emplace_back();
    for (std::size_t j = 0; j < L.src.operators[i].post.size(); ++j)
      L.x[i].push_back(atoms.take(fresh_atom(id, "x", {std::to_string(i + 1), std::to_string(j + 1)})));
  }
  L.c = atoms.take(fresh_atom(id, "c"));

  NameSupply ops;
  for (std::size_t i = 0; i < L.src.operators.size(); ++i) {
    const Operator& o = L.src.operators[i];
    L.pre.push_back(ops.take("@pre." + o.name));
    L.fire.emplace_back();
    L.block.emplace_back();
    for (std::size_t j = 0; j < o.post.size(); ++j) {
      std::string ij = std::to_string(i + 1) + "." + std::to_string(j + 1);
      L.fire[i].push_back(ops.take("@fire." + ij));
      L.block[i].emplace_back();
      if (v == Variant::T20) {
        L.block[i][j].push_back(ops.take("@block." + ij));
      } else {
        for (std::size_t m = 0; m < o.post[j].conditions().size(); ++m)
          L.block[i][j].push_back(ops.take("@block." + ij + "." + std::to_string(m + 1)));
      }
    }
    L.end.push_back(ops.take("@end." + o.name));
  }
  for (const auto& p : d.atoms) {
    L.add[p] = ops.take("@add." + p);
    L.del[p] = ops.take("@del." + p);
    L.clash[p] = ops.take("@clash." + p);
  }
  L.cycle = ops.take("@cycle");
  return L;
}

LiteralSet rule_effect(const CycleLayout& L, std::size_t i, std::size_t j) {
  const Literal& l = *L.src.operators[i].post[j].effects().begin();
  LiteralSet out{Literal::positive(L.x[i][j])};
  if (l.is_bottom()) {
    out.insert(Literal::bottom());
  } else {
    out.insert(Literal::positive(l.is_positive() ? L.plus.at(l.atom()) : L.minus.at(l.atom())));
    out.insert(Literal::positive(L.hash.at(l.atom())));
  }
  return out;
}

Operator unconditional(std::string name, std::vector<Formula> pre, LiteralSet eff) {
  return Operator(std::move(name), std::move(pre), {ConditionalEffect({}, std::move(eff))});
}

DomainStructure cycle_domain(const DomainStructure& d, Variant v) {
  CycleLayout L = cycle_layout(d, v);
  DomainStructure out{d.name + (v == Variant::T20 ? "-t20" : v == Variant::T22b ? "-t22b" : "-t22l"),
                      d.atoms,
                      {}};
  for (const auto& m : {&L.plus, &L.minus, &L.hash})
    for (const auto& [p, a] : *m) out.atoms.insert(a);
  out.atoms.insert(L.op_atom.begin(), L.op_atom.end());
  for (const auto& row : L.x) out.atoms.insert(row.begin(), row.end());
  out.atoms.insert(L.c);

  LiteralSet reset;
  for (const auto& m : {&L.plus, &L.minus, &L.hash})
    for (const auto& [p, a] : *m) reset.insert(Literal::negative(a));
  for (const auto& row : L.x)
    for (const auto& x : row) reset.insert(Literal::negative(x));

  for (std::size_t i = 0; i < L.src.operators.size(); ++i) {
    const Operator& o = L.src.operators[i];
    const std::string& po = L.op_atom[i];
    std::vector<Formula> pre = o.pre;
    for (const auto& a : L.op_atom) pre.push_back(neg(a));
    pre.push_back(neg(L.c));
    LiteralSet eff = reset;
    eff.insert(Literal::positive(po));
    out.operators.push_back(unconditional(L.pre[i], std::move(pre), std::move(eff)));

    for (std::size_t j = 0; j < o.post.size(); ++j) {
      const auto& gamma = o.post[j].conditions();
      if (v == Variant::T20) {
        Formula phi = conjoin_all(gamma);
        std::vector<Formula> fire_pre{gamma.empty() ? pos(po) : Formula::conjunction(pos(po), phi)};
        out.operators.push_back(unconditional(L.fire[i][j], std::move(fire_pre), rule_effect(L, i, j)));
        out.operators.push_back(unconditional(
            L.block[i][j][0], {Formula::conjunction(pos(po), Formula::negation(phi))},
            LiteralSet{Literal::positive(L.x[i][j])}));
      } else {
        std::vector<Formula> fire_pre = gamma;
        fire_pre.push_back(pos(po));
        out.operators.push_back(unconditional(L.fire[i][j], std::move(fire_pre), rule_effect(L, i, j)));
        for (std::size_t m = 0; m < gamma.size(); ++m)
          out.operators.push_back(unconditional(L.block[i][j][m],
                                                {pos(po), Formula::negation(gamma[m])},
                                                LiteralSet{Literal::positive(L.x[i][j])}));
      }
    }
    std::vector<Formula> end_pre{pos(po)};
    for (const auto& x : L.x[i]) end_pre.push_back(pos(x));
    out.operators.push_back(unconditional(L.end[i], std::move(end_pre),
                                          LiteralSet{Literal::positive(L.c), Literal::negative(po)}));
  }
  for (const auto& p : d.atoms) {
    const std::string &a = L.plus[p], &b = L.minus[p], &h = L.hash[p];
    out.operators.push_back(unconditional(L.add[p], {pos(L.c), pos(a), neg(b), pos(h)},
                                          LiteralSet{Literal::positive(p), Literal::negative(h)}));
    out.operators.push_back(unconditional(L.del[p], {pos(L.c), neg(a), pos(b), pos(h)},
                                          LiteralSet{Literal::negative(p), Literal::negative(h)}));
    out.operators.push_back(unconditional(L.clash[p], {pos(L.c), pos(a), pos(b), pos(h)},
                                          LiteralSet{Literal::bottom()}));
  }
  std::vector<Formula> cycle_pre{pos(L.c)};
  for (const auto& [p, h] : L.hash) cycle_pre.push_back(neg(h));
  out.operators.push_back(unconditional(L.cycle, std::move(cycle_pre), LiteralSet{Literal::negative(L.c)}));
  return out;
}

Plan cycle_translate(const Instance& p, const Plan& plan, Variant v) {
  CycleLayout L = cycle_layout(p.domain, v);
  Plan out;
  StateSpec s = StateSpec::of(p.init);
  for (std::size_t i : resolve_plan(L.src, plan)) {
    const Operator& o = L.src.operators[i];
    const LiteralSet& lits = s.literals();
    out.steps.push_back(L.pre[i]);
    for (std::size_t j = 0; j < o.post.size(); ++j) {
      const auto& gamma = o.post[j].conditions();
      if (entails_all(lits, gamma)) {
        out.steps.push_back(L.fire[i][j]);
        continue;
      }
      bool blocked = false;
      if (v == Variant::T20) {
        if (entails(lits, Formula::negation(conjoin_all(gamma)))) {
          out.steps.push_back(L.block[i][j][0]);
          blocked = true;
        }
      } else {
        for (std::size_t m = 0; m < gamma.size() && !blocked; ++m)
          if (entails(lits, Formula::negation(gamma[m]))) {
            out.steps.push_back(L.block[i][j][m]);
            blocked = true;
          }
      }
      if (!blocked) throw PreconditionError("rule neither active nor blocked; plan is not a solution");
    }
    out.steps.push_back(L.end[i]);
    LiteralSet active = active_effects(lits, o.post);
    for (const auto& q : p.domain.atoms) {
      if (active.count(Literal::positive(q))) out.steps.push_back(L.add[q]);
      if (active.count(Literal::negative(q))) out.steps.push_back(L.del[q]);
    }
    out.steps.push_back(L.cycle);
    s = apply_operator(s, o).result;
  }
  return out;
}

CompilationScheme cycle_scheme(Variant v) {
  CompilationScheme s;
  s.id = scheme_id(v);
  switch (v) {
    case Variant::T20:
      s.name = "t20";
      s.source = kSBIC;
      s.target = kSBI;
      break;
    case Variant::T22b:
      s.name = "t22b";
      s.source = kSBC;
      s.target = kSB;
      break;
    case Variant::T22l:
      s.name = "t22l";
      s.source = kSLC;
      s.target = kSL;
      break;
  }
  s.preservation = Preservation::polynomial("|plan| * (3 + 2m)");
  s.f_xi = [s, v](const DomainStructure& d) {
    check_source(s, d);
    return cycle_domain(d, v);
  };
  s.f_i = [v](const DomainStructure& d) {
    CycleLayout L = cycle_layout(d, v);
    LiteralSet out{Literal::negative(L.c)};
    for (const auto& m : {&L.plus, &L.minus, &L.hash})
      for (const auto& [p, a] : *m) out.insert(Literal::negative(a));
    for (const auto& a : L.op_atom) out.insert(Literal::negative(a));
    for (const auto& row : L.x)
      for (const auto& x : row) out.insert(Literal::negative(x));
    return out;
  };
  s.f_g = [v](const DomainStructure& d) {
    CycleLayout L = cycle_layout(d, v);
    LiteralSet out{Literal::negative(L.c)};
    for (const auto& a : L.op_atom) out.insert(Literal::negative(a));
    return out;
  };
  s.t_i = [](const AtomSet& sigma, const LiteralSet& l) { return restrict_to(l, sigma); };
  s.t_g = [](const AtomSet& sigma, const LiteralSet& l) { return restrict_to(l, sigma); };
  s.image = [](const AtomSet& sigma) { return sigma; };
  s.translate = [v](const Instance& p, const Plan& plan) { return cycle_translate(p, plan, v); };
  s.size_bound = [](const DomainStructure& d, std::size_t n) {
    return n * (3 + 2 * max_effects(normalize_singleton_effects(d)));
  };
  s.components = {s.name};
  return s;
}

}  // namespace

CompilationScheme scheme_t20() { return cycle_scheme(Variant::T20); }
CompilationScheme scheme_t22(bool boolean_variant) {
  return cycle_scheme(boolean_variant ? Variant::T22b : Variant::T22l);
}

}  // namespace plancomp
