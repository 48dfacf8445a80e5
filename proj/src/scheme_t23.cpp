// S_B -> S_L. Each precondition formula is evaluated bottom-up by one
// operator per sub-formula step; the main operator then only needs the
// evaluated truth value of its precondition.

#include <algorithm>
#include <map>

#include "plancomp/schemes.hpp"
#include "plancomp/semantics.hpp"
#include "scheme_util.hpp"

namespace plancomp {

using namespace detail;

namespace {

enum class Shape { Atom, NegLeaf, Not, And, Or, Const };

struct SubFormula {
  Formula f;
  Shape shape;
  std::size_t a = 0, b = 0;  // child indices (0-based)
};

struct T23Layout {
  DomainStructure src;  // one precondition formula per operator
  std::vector<SubFormula> subs;
  std::vector<std::vector<std::size_t>> own;  // per operator, post-order
  std::vector<std::string> f, fdone;
  // evaluator operator names per sub-formula, keyed by variant
  std::vector<std::map<std::string, std::string>> eval;
};

std::size_t index_sub(T23Layout& L, std::map<Formula, std::size_t>& seen, const Formula& phi,
                      std::vector<std::size_t>& order) {
  auto visit = [&](const Formula& g) { return index_sub(L, seen, g, order); };
  SubFormula s{phi, Shape::Const};
  if (phi.is_leaf()) {
    const Literal& l = phi.literal();
    if (l.is_positive()) {
      s.shape = Shape::Atom;
    } else if (l.is_negative()) {
      s.shape = Shape::NegLeaf;
      s.a = visit(Formula::atom(l.atom()));
    }
  } else if (phi.kind() == Formula::Kind::Not) {
    s.shape = Shape::Not;
    s.a = visit(phi.left());
  } else {
    s.shape = phi.kind() == Formula::Kind::And ? Shape::And : Shape::Or;
    s.a = visit(phi.left());
    s.b = visit(phi.right());
  }
  auto it = seen.find(phi);
  std::size_t k;
  if (it != seen.end()) {
    k = it->second;
  } else {
    k = L.subs.size();
    seen.emplace(phi, k);
    L.subs.push_back(s);
  }
  if (std::find(order.begin(), order.end(), k) == order.end()) order.push_back(k);
  return k;
}

std::vector<std::string> variants(Shape s) {
  switch (s) {
    case Shape::Atom:
    case Shape::NegLeaf:
    case Shape::Not:
      return {"pos", "neg"};
    case Shape::And:
      return {"pos", "neg1", "neg2"};
    case Shape::Or:
      return {"pos1", "pos2", "neg"};
    case Shape::Const:
      return {"const"};
  }
  return {};
}

T23Layout t23_layout(const DomainStructure& d) {
  T23Layout L;
  L.src = fold_preconditions(d);
  std::map<Formula, std::size_t> seen;
  for (const auto& o : L.src.operators) {
    L.own.emplace_back();
    index_sub(L, seen, o.pre.front(), L.own.back());
  }
  NameSupply atoms(d.atoms);
  for (std::size_t k = 0; k < L.subs.size(); ++k)
    L.f.push_back(atoms.take(fresh_atom(SchemeId::T23, "f", {std::to_string(k + 1)})));
  for (std::size_t k = 0; k < L.subs.size(); ++k)
    L.fdone.push_back(atoms.take(fresh_atom(SchemeId::T23, "fdone", {std::to_string(k + 1)})));
  NameSupply ops(operator_names(d));
  for (std::size_t k = 0; k < L.subs.size(); ++k) {
    L.eval.emplace_back();
    for (const auto& v : variants(L.subs[k].shape))
      L.eval[k][v] = ops.take("@eval." + std::to_string(k + 1) + "." + v);
  }
  return L;
}

// Precondition and effect of one evaluator.
Operator evaluator(const T23Layout& L, std::size_t k, const std::string& v) {
  const SubFormula& s = L.subs[k];
  auto done = [&](std::size_t c) { return pos(L.fdone[c]); };
  auto val = [&](std::size_t c, bool t) { return t ? pos(L.f[c]) : neg(L.f[c]); };
  std::vector<Formula> pre;
  bool result = v.rfind("pos", 0) == 0;
  switch (s.shape) {
    case Shape::Atom:
      pre = {result ? s.f : Formula::negation(s.f)};
      break;
    case Shape::NegLeaf:
    case Shape::Not:
      pre = {done(s.a), val(s.a, !result)};
      break;
    case Shape::And:
      if (v == "pos") pre = {done(s.a), val(s.a, true), done(s.b), val(s.b, true)};
      else if (v == "neg1") pre = {done(s.a), val(s.a, false)};
      else pre = {done(s.b), val(s.b, false)};
      break;
    case Shape::Or:
      if (v == "neg") pre = {done(s.a), val(s.a, false), done(s.b), val(s.b, false)};
      else if (v == "pos1") pre = {done(s.a), val(s.a, true)};
      else pre = {done(s.b), val(s.b, true)};
      break;
    case Shape::Const:
      result = s.f.literal().is_top();
      break;
  }
  LiteralSet eff{Literal::of(L.f[k], result), Literal::positive(L.fdone[k])};
  return Operator(L.eval[k].at(v), std::move(pre), {ConditionalEffect({}, std::move(eff))});
}

// The evaluator that applies once the children of sub-formula k have been
// evaluated; `value` holds the truth of every sub-formula evaluated so far.
std::string chosen_variant(const SubFormula& s, std::size_t k, const std::vector<bool>& value) {
  switch (s.shape) {
    case Shape::Atom:
    case Shape::NegLeaf:
    case Shape::Not:
      return value[k] ? "pos" : "neg";
    case Shape::And:
      if (value[s.a] && value[s.b]) return "pos";
      return value[s.a] ? "neg2" : "neg1";
    case Shape::Or:
      if (value[s.a]) return "pos1";
      return value[s.b] ? "pos2" : "neg";
    case Shape::Const:
      return "const";
  }
  return {};
}

}  // namespace

CompilationScheme scheme_t23() {
  CompilationScheme s;
  s.id = SchemeId::T23;
  s.name = "t23";
  s.source = kSB;
  s.target = kSL;
  s.preservation = Preservation::polynomial("|plan| * (m + 1)");
  s.f_xi = [s](const DomainStructure& d) {
    check_source(s, d);
    T23Layout L = t23_layout(d);
    DomainStructure out{d.name + "-t23", d.atoms, {}};
    out.atoms.insert(L.f.begin(), L.f.end());
    out.atoms.insert(L.fdone.begin(), L.fdone.end());
    LiteralSet reset;
    for (const auto& a : L.fdone) reset.insert(Literal::negative(a));
    for (std::size_t i = 0; i < L.src.operators.size(); ++i) {
      const Operator& o = L.src.operators[i];
      std::size_t k = L.own[i].back();
      LiteralSet eff = reset;
      for (const auto& e : o.post) eff.insert(e.effects().begin(), e.effects().end());
      out.operators.emplace_back(o.name, std::vector<Formula>{pos(L.f[k]), pos(L.fdone[k])},
                                 std::vector<ConditionalEffect>{ConditionalEffect({}, std::move(eff))});
    }
    for (std::size_t k = 0; k < L.subs.size(); ++k)
      for (const auto& v : variants(L.subs[k].shape)) out.operators.push_back(evaluator(L, k, v));
    return out;
  };
  s.f_i = [](const DomainStructure& d) {
    T23Layout L = t23_layout(d);
    LiteralSet out;
    for (const auto& a : L.f) out.insert(Literal::negative(a));
    for (const auto& a : L.fdone) out.insert(Literal::negative(a));
    return out;
  };
  s.f_g = [](const DomainStructure& d) {
    LiteralSet out;
    for (const auto& a : t23_layout(d).fdone) out.insert(Literal::negative(a));
    return out;
  };
  s.t_i = [](const AtomSet& sigma, const LiteralSet& l) { return restrict_to(l, sigma); };
  s.t_g = [](const AtomSet& sigma, const LiteralSet& l) { return restrict_to(l, sigma); };
  s.image = [](const AtomSet& sigma) { return sigma; };
  s.translate = [](const Instance& p, const Plan& plan) {
    T23Layout L = t23_layout(p.domain);
    Plan out;
    StateSpec st = StateSpec::of(p.init);
    for (std::size_t i : resolve_plan(L.src, plan)) {
      const LiteralSet& lits = st.literals();
      auto holds = [&](const std::string& a) { return lits.count(Literal::positive(a)) > 0; };
      std::vector<bool> value(L.subs.size(), false);
      for (std::size_t k : L.own[i]) {
        const SubFormula& sf = L.subs[k];
        value[k] = sf.f.evaluate(holds);
        out.steps.push_back(L.eval[k].at(chosen_variant(sf, k, value)));
      }
      out.steps.push_back(L.src.operators[i].name);
      st = apply_operator(st, L.src.operators[i]).result;
    }
    return out;
  };
  s.size_bound = [](const DomainStructure& d, std::size_t n) {
    T23Layout L = t23_layout(d);
    std::size_t m = 0;
    for (const auto& o : L.own) m = std::max(m, o.size());
    return n * (m + 1);
  };
  s.components = {"t23"};
  return s;
}

}  // namespace plancomp
