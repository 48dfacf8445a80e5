#include "plancomp/schemes.hpp"

#include <map>

#include "plancomp/semantics.hpp"
#include "scheme_util.hpp"

namespace plancomp {

namespace detail {

std::vector<Literal> literal_leaves(const std::vector<Formula>& fs, const std::string& what) {
  std::vector<Literal> out;
  for (const auto& f : fs) {
    if (!f.is_leaf()) throw PreconditionError(what + " must consist of literals");
    out.push_back(f.literal());
  }
  return out;
}

bool is_contradictory(const std::vector<Literal>& ls) {
  LiteralSet s(ls.begin(), ls.end());
  return !is_consistent(s);
}

std::string tilde_atom(const std::string& p) { return "@neg." + p; }

Literal tilde(const Literal& l) {
  if (l.is_negative()) return Literal::positive(tilde_atom(l.atom()));
  return l;
}

LiteralSet tilde(const LiteralSet& l) {
  if (!is_consistent(l)) return {Literal::bottom()};
  LiteralSet out;
  for (const auto& x : l) out.insert(tilde(x));
  return out;
}

LiteralSet tilde_effect(const LiteralSet& k) {
  if (!is_consistent(k)) return {Literal::bottom()};
  LiteralSet out = tilde(k);
  for (const auto& x : tilde(negate_all(k))) out.insert(x.negated());
  return out;
}

std::vector<Formula> tilde_formulas(const std::vector<Formula>& fs, const std::string& what) {
  auto ls = literal_leaves(fs, what);
  if (is_contradictory(ls)) return {Formula::bottom()};
  std::vector<Formula> out;
  for (const auto& l : ls) out.push_back(Formula::leaf(tilde(l)));
  return out;
}

void check_image_collisions(const AtomSet& sigma, const std::string& prefix) {
  for (const auto& p : sigma)
    if (sigma.count(prefix + p))
      throw ValidationError("reserved-prefix collision: '" + prefix + p +
                            "' is already an atom of the source domain");
}

AtomSet operator_names(const DomainStructure& d) {
  AtomSet out;
  for (const auto& o : d.operators) out.insert(o.name);
  return out;
}

void check_source(const CompilationScheme& s, const DomainStructure& d) {
  FormalismTag t = classify_domain(d);
  t.incomplete = s.source.incomplete;
  if (!specializes(t, s.source))
    throw PreconditionError("domain '" + d.name + "' is " + t.name() + ", outside the source " +
                            s.source.name() + " of " + s.name);
}

}  // namespace detail

using namespace detail;

std::string Preservation::str() const {
  switch (kind) {
    case Kind::Exact:
      return "Exact(" + std::to_string(k) + ")";
    case Kind::Linear:
      return "Linear(" + std::to_string(c) + "," + std::to_string(k) + ")";
    case Kind::Polynomial:
      return "Polynomial(" + descriptor + ")";
  }
  return "?";
}

CompilationScheme scheme_identity(FormalismTag tag) {
  CompilationScheme s;
  s.id = SchemeId::Identity;
  s.name = "identity";
  s.source = tag;
  s.target = tag;
  s.preservation = Preservation::exact(0);
  s.f_xi = [](const DomainStructure& d) { return d; };
  s.f_i = [](const DomainStructure&) { return LiteralSet{}; };
  s.f_g = [](const DomainStructure&) { return LiteralSet{}; };
  s.t_i = [](const AtomSet&, const LiteralSet& l) { return l; };
  s.t_g = [](const AtomSet&, const LiteralSet& l) { return l; };
  s.image = [](const AtomSet& a) { return a; };
  s.translate = [](const Instance&, const Plan& p) { return p; };
  s.size_bound = [](const DomainStructure&, std::size_t n) { return n; };
  s.components = {"identity"};
  return s;
}

// ---------------------------------------------------------------------------
// t6: S_LI -> S

CompilationScheme scheme_t6() {
  CompilationScheme s;
  s.id = SchemeId::T6;
  s.name = "t6";
  s.source = kSLI;
  s.target = kS;
  s.preservation = Preservation::exact(0);
  s.f_xi = [s](const DomainStructure& d) {
    check_source(s, d);
    check_image_collisions(d.atoms, "@neg.");
    DomainStructure out{d.name + "-t6", d.atoms, {}};
    for (const auto& p : d.atoms) out.atoms.insert(fresh_atom(SchemeId::T6, "neg", {p}));
    for (const auto& o : d.operators) {
      std::vector<ConditionalEffect> post;
      for (const auto& e : o.post) post.emplace_back(std::vector<Formula>{}, tilde_effect(e.effects()));
      out.operators.emplace_back(o.name, tilde_formulas(o.pre, "preconditions"), std::move(post));
    }
    return out;
  };
  s.f_i = [](const DomainStructure&) { return LiteralSet{}; };
  s.f_g = [](const DomainStructure&) { return LiteralSet{}; };
  s.image = [](const AtomSet& sigma) {
    AtomSet out = sigma;
    for (const auto& p : sigma) out.insert(tilde_atom(p));
    return out;
  };
  s.t_i = [image = s.image](const AtomSet& sigma, const LiteralSet& l) {
    return cwa(image(sigma), tilde(restrict_to(l, sigma)));
  };
  s.t_g = [](const AtomSet& sigma, const LiteralSet& l) {
    LiteralSet out;
    for (const auto& x : restrict_to(l, sigma)) out.insert(tilde(x));
    return out;
  };
  s.translate = [](const Instance&, const Plan& p) { return p; };
  s.size_bound = [](const DomainStructure&, std::size_t n) { return n; };
  s.components = {"t6"};
  return s;
}

// ---------------------------------------------------------------------------
// l8: S_LC -> S_C

namespace {

struct L8Names {
  std::string g;
  std::string check;
};

L8Names l8_names(const DomainStructure& d) {
  AtomSet taken = d.atoms;
  for (const auto& p : d.atoms) taken.insert(tilde_atom(p));
  NameSupply atoms(taken);
  NameSupply ops(operator_names(d));
  return {atoms.take(fresh_atom(SchemeId::L8, "g")), ops.take("@check")};
}

}  // namespace

CompilationScheme scheme_l8() {
  CompilationScheme s;
  s.id = SchemeId::L8;
  s.name = "l8";
  s.source = kSLC;
  s.target = kSC;
  s.preservation = Preservation::exact(1);
  s.f_xi = [s](const DomainStructure& d) {
    check_source(s, d);
    check_image_collisions(d.atoms, "@neg.");
    L8Names n = l8_names(d);
    DomainStructure out{d.name + "-l8", d.atoms, {}};
    for (const auto& p : d.atoms) out.atoms.insert(fresh_atom(SchemeId::L8, "neg", {p}));
    out.atoms.insert(n.g);
    std::vector<ConditionalEffect> cons;
    for (const auto& p : d.atoms)
      cons.emplace_back(std::vector<Formula>{pos(p), pos(tilde_atom(p))}, LiteralSet{Literal::bottom()});
    for (const auto& o : d.operators) {
      std::vector<ConditionalEffect> post;
      for (const auto& e : o.post)
        post.emplace_back(tilde_formulas(e.conditions(), "effect conditions"), tilde_effect(e.effects()));
      post.insert(post.end(), cons.begin(), cons.end());
      post.emplace_back(std::vector<Formula>{}, LiteralSet{Literal::negative(n.g)});
      out.operators.emplace_back(o.name, tilde_formulas(o.pre, "preconditions"), std::move(post));
    }
    std::vector<ConditionalEffect> check = cons;
    check.emplace_back(std::vector<Formula>{}, LiteralSet{Literal::positive(n.g)});
    out.operators.emplace_back(n.check, std::vector<Formula>{}, std::move(check));
    return out;
  };
  s.f_i = [](const DomainStructure& d) { return LiteralSet{Literal::negative(l8_names(d).g)}; };
  s.f_g = [](const DomainStructure& d) { return LiteralSet{Literal::positive(l8_names(d).g)}; };
  s.image = [](const AtomSet& sigma) {
    AtomSet out = sigma;
    for (const auto& p : sigma) out.insert(tilde_atom(p));
    return out;
  };
  s.t_i = [](const AtomSet& sigma, const LiteralSet& l) {
    LiteralSet r = restrict_to(l, sigma);
    return set_union(tilde(r), negate_all(tilde(negate_all(r))));
  };
  s.t_g = [](const AtomSet& sigma, const LiteralSet& l) { return tilde(restrict_to(l, sigma)); };
  s.translate = [](const Instance& p, const Plan& plan) {
    Plan out = plan;
    out.steps.push_back(l8_names(p.domain).check);
    return out;
  };
  s.size_bound = [](const DomainStructure&, std::size_t n) { return n + 1; };
  s.components = {"l8"};
  return s;
}

// ---------------------------------------------------------------------------

std::vector<std::string> scheme_names() {
  return {"identity", "t6", "l7", "l8", "t20", "t22b", "t22l", "t23"};
}

CompilationScheme scheme_by_name(const std::string& name) {
  if (name == "identity") return scheme_identity();
  if (name == "t6") return scheme_t6();
  if (name == "l7") return scheme_l7();
  if (name == "l8") return scheme_l8();
  if (name == "t20") return scheme_t20();
  if (name == "t22b") return scheme_t22(true);
  if (name == "t22l") return scheme_t22(false);
  if (name == "t23") return scheme_t23();
  throw PreconditionError("unknown scheme '" + name + "'");
}

CompilationScheme compose(const CompilationScheme& f, const CompilationScheme& g) {
  if (!specializes(f.target, g.source))
    throw PreconditionError("cannot compose " + f.name + " (target " + f.target.name() + ") with " +
                            g.name + " (source " + g.source.name() + ")");
  if (f.id == SchemeId::Identity) {
    CompilationScheme h = g;
    h.source = f.source;
    return h;
  }
  if (g.id == SchemeId::Identity) return f;
  CompilationScheme h;
  h.id = SchemeId::Composed;
  h.components = f.components;
  h.components.insert(h.components.end(), g.components.begin(), g.components.end());
  for (const auto& c : h.components) h.name += (h.name.empty() ? "" : "+") + c;
  h.source = f.source;
  h.target = g.target;

  using K = Preservation::Kind;
  const Preservation& a = f.preservation;
  const Preservation& b = g.preservation;
  if (a.kind == K::Polynomial || b.kind == K::Polynomial) {
    std::string da = a.kind == K::Polynomial ? a.descriptor : a.str();
    std::string db = b.kind == K::Polynomial ? b.descriptor : b.str();
    h.preservation = Preservation::polynomial(da + " then " + db);
  } else if (a.kind == K::Exact && b.kind == K::Exact) {
    h.preservation = Preservation::exact(a.k + b.k);
  } else {
    // len'' <= b.c * (a.c * len + a.k) + b.k
    h.preservation = {K::Linear, a.c * b.c, b.c * a.k + b.k, {}};
  }

  h.f_xi = [f, g](const DomainStructure& d) { return g.f_xi(f.f_xi(d)); };
  auto side = [f, g](const DomainStructure& d, bool init) {
    DomainStructure mid = f.f_xi(d);
    AtomSet rest;
    AtomSet img = f.image(d.atoms);
    for (const auto& a : mid.atoms)
      if (!img.count(a)) rest.insert(a);
    if (init) return set_union(g.f_i(mid), g.t_i(rest, f.f_i(d)));
    return set_union(g.f_g(mid), g.t_g(rest, f.f_g(d)));
  };
  h.f_i = [side](const DomainStructure& d) { return side(d, true); };
  h.f_g = [side](const DomainStructure& d) { return side(d, false); };
  h.t_i = [f, g](const AtomSet& sigma, const LiteralSet& l) {
    return g.t_i(f.image(sigma), f.t_i(sigma, l));
  };
  h.t_g = [f, g](const AtomSet& sigma, const LiteralSet& l) {
    return g.t_g(f.image(sigma), f.t_g(sigma, l));
  };
  h.image = [f, g](const AtomSet& sigma) { return g.image(f.image(sigma)); };
  h.translate = [f, g](const Instance& p, const Plan& plan) {
    return g.translate(compile_instance(f, p), f.translate(p, plan));
  };
  h.size_bound = [f, g](const DomainStructure& d, std::size_t n) {
    return g.size_bound(f.f_xi(d), f.size_bound(d, n));
  };
  return h;
}

CompilationScheme compose_all(const std::vector<CompilationScheme>& chain) {
  if (chain.empty()) return scheme_identity();
  CompilationScheme out = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) out = compose(out, chain[i]);
  return out;
}

Instance compile_instance(const CompilationScheme& f, const Instance& p) {
  FormalismTag t = classify_instance(p);
  if (!specializes(t, f.source))
    throw PreconditionError("instance is " + t.name() + ", outside the source " +
                            f.source.name() + " of " + f.name);
  Instance out;
  out.domain = f.f_xi(p.domain);
  out.init = set_union(f.f_i(p.domain), f.t_i(p.domain.atoms, p.init));
  out.goal = set_union(f.f_g(p.domain), f.t_g(p.domain.atoms, p.goal));
  return out;
}

Plan translate_plan(const CompilationScheme& f, const Instance& p, const Plan& plan) {
  if (!is_solution(p, plan)) throw PreconditionError("plan does not solve the source instance");
  return f.translate(p, plan);
}

}  // namespace plancomp
