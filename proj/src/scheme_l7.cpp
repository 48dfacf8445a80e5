// S_LIC -> S_LC with two alternating phases k = 0, 1. Phase k executes the
// source operator and, in parallel, tests the bookkeeping left behind by the
// previous step (phase s(k)).

#include <map>

#include "plancomp/schemes.hpp"
#include "scheme_util.hpp"

namespace plancomp {

using namespace detail;

namespace {

std::string prime(const std::string& p) { return fresh_atom(SchemeId::L7, "prime", {p}); }

struct L7Layout {
  DomainStructure src;  // singleton effects
  std::map<std::string, std::string> plus[2], minus[2];
  std::vector<std::vector<std::string>> x[2];  // x[k][i][j]
  std::string g, c[2];
  std::vector<std::string> op[2];
  std::string check[2];

  // v^k(i, j); empty for a BOTTOM effect.
  std::string v(int k, std::size_t i, std::size_t j) const {
    const Literal& l = *src.operators[i].post[j].effects().begin();
    if (l.is_bottom()) return {};
    return l.is_positive() ? plus[k].at(l.atom()) : minus[k].at(l.atom());
  }
};

L7Layout l7_layout(const DomainStructure& d) {
  L7Layout L;
  L.src = normalize_singleton_effects(d);
  AtomSet taken = d.atoms;
  for (const auto& p : d.atoms) taken.insert(prime(p));
  NameSupply atoms(taken);
  for (int k = 0; k < 2; ++k) {
    std::string ks = std::to_string(k);
    for (const auto& p : d.atoms) {
      L.plus[k][p] = atoms.take(fresh_atom(SchemeId::L7, "plus", {ks, p}));
      L.minus[k][p] = atoms.take(fresh_atom(SchemeId::L7, "minus", {ks, p}));
    }
  }
  for (int k = 0; k < 2; ++k) {
    std::string ks = std::to_string(k);
    L.x[k].resize(L.src.operators.size());
    for (std::size_t i = 0; i < L.src.operators.size(); ++i)
      for (std::size_t j = 0; j < L.src.operators[i].post.size(); ++j)
        L.x[k][i].push_back(atoms.take(fresh_atom(
            SchemeId::L7, "x", {ks, std::to_string(i + 1), std::to_string(j + 1)})));
  }
  L.g = atoms.take(fresh_atom(SchemeId::L7, "g"));
  L.c[0] = atoms.take(fresh_atom(SchemeId::L7, "c0"));
  L.c[1] = atoms.take(fresh_atom(SchemeId::L7, "c1"));
  NameSupply ops;
  for (int k = 0; k < 2; ++k)
    for (const auto& o : L.src.operators)
      L.op[k].push_back(ops.take("@k" + std::to_string(k) + "." + o.name));
  L.check[0] = ops.take("@check.0");
  L.check[1] = ops.take("@check.1");
  return L;
}

// The knownness literals σ(L') for the atoms of `ls`.
std::vector<Formula> primed(const std::vector<Literal>& ls) {
  std::vector<Formula> out;
  for (const auto& l : ls)
    if (l.is_atom()) out.push_back(pos(prime(l.atom())));
  return out;
}

std::vector<ConditionalEffect> test_rules(const L7Layout& L, int s) {
  std::vector<ConditionalEffect> out;
  for (std::size_t i = 0; i < L.src.operators.size(); ++i)
    for (std::size_t j = 0; j < L.src.operators[i].post.size(); ++j) {
      std::vector<Formula> cond{neg(L.x[s][i][j])};
      std::string v = L.v(s, i, j);
      if (!v.empty()) cond.push_back(neg(v));
      out.emplace_back(std::move(cond), LiteralSet{Literal::bottom()});
    }
  return out;
}

void add_if_nonempty(std::vector<ConditionalEffect>& post, const LiteralSet& l) {
  if (!l.empty()) post.emplace_back(std::vector<Formula>{}, l);
}

Operator phase_operator(const L7Layout& L, std::size_t i, int k) {
  const Operator& o = L.src.operators[i];
  const int s = 1 - k;
  auto pre_lits = literal_leaves(o.pre, "preconditions");
  std::vector<Formula> pre = o.pre;
  for (auto& f : primed(pre_lits)) pre.push_back(f);
  pre.push_back(pos(L.c[k]));

  std::vector<ConditionalEffect> post;
  std::set<std::string> own_v;
  for (std::size_t j = 0; j < o.post.size(); ++j) {
    const auto& e = o.post[j];
    auto cond = literal_leaves(e.conditions(), "effect conditions");
    const Literal& l = *e.effects().begin();
    bool dead = is_contradictory(cond);
    // post^k
    if (!dead) {
      std::vector<Formula> c = e.conditions();
      for (auto& f : primed(cond)) c.push_back(f);
      if (l.is_bottom()) {
        post.emplace_back(std::move(c), LiteralSet{Literal::bottom()});
      } else {
        own_v.insert(L.v(k, i, j));
        post.emplace_back(std::move(c), LiteralSet{l, Literal::positive(prime(l.atom())),
                                                   Literal::positive(L.v(k, i, j))});
      }
    }
    // block^k
    const std::string& x = L.x[k][i][j];
    if (dead) {
      post.emplace_back(std::vector<Formula>{}, LiteralSet{Literal::positive(x)});
      continue;
    }
    for (const auto& q : cond)
      post.emplace_back(std::vector<Formula>{lit(q.negated()), pos(prime(q.atom()))},
                        LiteralSet{Literal::positive(x)});
  }
  for (auto& r : test_rules(L, s)) post.push_back(std::move(r));
  post.emplace_back(std::vector<Formula>{},
                    LiteralSet{Literal::negative(L.c[k]), Literal::negative(L.g),
                               Literal::positive(L.c[s])});
  LiteralSet untouched;
  for (const auto& [p, a] : L.plus[k])
    if (!own_v.count(a)) untouched.insert(Literal::positive(a));
  for (const auto& [p, a] : L.minus[k])
    if (!own_v.count(a)) untouched.insert(Literal::positive(a));
  add_if_nonempty(post, untouched);
  LiteralSet others;
  for (std::size_t m = 0; m < L.src.operators.size(); ++m)
    if (m != i)
      for (const auto& x : L.x[k][m]) others.insert(Literal::positive(x));
  add_if_nonempty(post, others);
  LiteralSet reset;
  for (const auto& [p, a] : L.plus[s]) reset.insert(Literal::negative(a));
  for (const auto& [p, a] : L.minus[s]) reset.insert(Literal::negative(a));
  for (const auto& row : L.x[s])
    for (const auto& x : row) reset.insert(Literal::negative(x));
  add_if_nonempty(post, reset);
  return Operator(L.op[k][i], std::move(pre), std::move(post));
}

}  // namespace

CompilationScheme scheme_l7() {
  CompilationScheme s;
  s.id = SchemeId::L7;
  s.name = "l7";
  s.source = kSLIC;
  s.target = kSLC;
  s.preservation = Preservation::exact(1);
  s.f_xi = [s](const DomainStructure& d) {
    check_source(s, d);
    check_image_collisions(d.atoms, "@prime.");
    L7Layout L = l7_layout(d);
    DomainStructure out{d.name + "-l7", d.atoms, {}};
    for (const auto& p : d.atoms) out.atoms.insert(prime(p));
    for (int k = 0; k < 2; ++k) {
      for (const auto& [p, a] : L.plus[k]) out.atoms.insert(a);
      for (const auto& [p, a] : L.minus[k]) out.atoms.insert(a);
      for (const auto& row : L.x[k]) out.atoms.insert(row.begin(), row.end());
    }
    out.atoms.insert({L.g, L.c[0], L.c[1]});
    for (int k = 0; k < 2; ++k)
      for (std::size_t i = 0; i < L.src.operators.size(); ++i)
        out.operators.push_back(phase_operator(L, i, k));
    for (int k = 0; k < 2; ++k) {
      std::vector<ConditionalEffect> post = test_rules(L, 1 - k);
      post.emplace_back(std::vector<Formula>{},
                        LiteralSet{Literal::positive(L.g), Literal::negative(L.c[k])});
      out.operators.emplace_back(L.check[k], std::vector<Formula>{pos(L.c[k])}, std::move(post));
    }
    return out;
  };
  s.f_i = [](const DomainStructure& d) {
    L7Layout L = l7_layout(d);
    LiteralSet out{Literal::negative(L.g), Literal::positive(L.c[0]), Literal::negative(L.c[1])};
    for (int k = 0; k < 2; ++k) {
      for (const auto& [p, a] : L.plus[k]) out.insert(Literal::negative(a));
      for (const auto& [p, a] : L.minus[k]) out.insert(Literal::negative(a));
    }
    // Υ^1 starts true so that the first phase-0 step has nothing to test.
    for (int k = 0; k < 2; ++k)
      for (const auto& row : L.x[k])
        for (const auto& x : row) out.insert(Literal::of(x, k == 1));
    return out;
  };
  s.f_g = [](const DomainStructure& d) { return LiteralSet{Literal::positive(l7_layout(d).g)}; };
  s.image = [](const AtomSet& sigma) {
    AtomSet out = sigma;
    for (const auto& p : sigma) out.insert(prime(p));
    return out;
  };
  s.t_i = [](const AtomSet& sigma, const LiteralSet& l) {
    LiteralSet r = restrict_to(l, sigma);
    LiteralSet out = cwa(sigma, r);
    AtomSet known = atoms_of(r);
    for (const auto& p : sigma) out.insert(Literal::of(prime(p), known.count(p) > 0));
    return out;
  };
  s.t_g = [](const AtomSet& sigma, const LiteralSet& l) {
    LiteralSet out = restrict_to(l, sigma);
    for (const auto& p : atoms_of(out)) out.insert(Literal::positive(prime(p)));
    return out;
  };
  s.translate = [](const Instance& p, const Plan& plan) {
    L7Layout L = l7_layout(p.domain);
    Plan out;
    auto idx = resolve_plan(L.src, plan);
    for (std::size_t n = 0; n < idx.size(); ++n) out.steps.push_back(L.op[n % 2][idx[n]]);
    out.steps.push_back(L.check[idx.size() % 2]);
    return out;
  };
  s.size_bound = [](const DomainStructure&, std::size_t n) { return n + 1; };
  s.components = {"l7"};
  return s;
}

}  // namespace plancomp
