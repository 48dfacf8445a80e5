#include "plancomp/gadgets.hpp"

#include <random>
#include <sstream>

#include "plancomp/error.hpp"
#include "plancomp/semantics.hpp"

namespace plancomp {

std::string cnf_atom(std::size_t i) { return "p" + std::to_string(i); }

Cnf3 parse_cnf(const std::string& text) {
  Cnf3 phi;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0, n = 3;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    LiteralSet clause;
    std::size_t count = 0;
    while (ls >> tok) {
      bool negative = tok[0] == '-';
      std::string a = negative ? tok.substr(1) : tok;
      std::size_t idx = 0;
      if (a.size() < 2 || a[0] != 'p' || a.find_first_not_of("0123456789", 1) != std::string::npos ||
          (idx = std::stoul(a.substr(1))) == 0)
        throw ParseError("bad CNF literal '" + tok + "'", lineno, 1);
      n = std::max(n, idx);
      clause.insert(Literal::of(cnf_atom(idx), !negative));
      ++count;
    }
    if (count == 0) continue;
    if (count != 3 || atoms_of(clause).size() != 3)
      throw ParseError("clause needs 3 literals on distinct atoms", lineno, 1);
    phi.clauses.insert(clause);
  }
  phi.n = n;
  return phi;
}

void check_cnf(const Cnf3& phi) {
  if (phi.n < 3) throw ValidationError("3CNF needs at least 3 atoms");
  AtomSet atoms;
  for (std::size_t i = 1; i <= phi.n; ++i) atoms.insert(cnf_atom(i));
  for (const auto& c : phi.clauses) {
    if (c.size() != 3 || atoms_of(c).size() != 3) throw ValidationError("malformed clause " + str(c));
    for (const auto& l : c)
      if (!l.is_atom() || !atoms.count(l.atom())) throw ValidationError("clause literal outside p1..pn");
  }
}

bool cnf_satisfiable(const Cnf3& phi) {
  check_cnf(phi);
  if (phi.n > 24) throw BoundError("too many atoms for a truth table");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << phi.n); ++m) {
    auto value = [&](const Literal& l) {
      bool v = (m >> (std::stoul(l.atom().substr(1)) - 1)) & 1;
      return l.is_positive() ? v : !v;
    };
    bool all = true;
    for (const auto& c : phi.clauses) {
      bool sat = false;
      for (const auto& l : c) sat = sat || value(l);
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::vector<LiteralSet> all_clauses(std::size_t n) {
  std::vector<LiteralSet> out;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      for (std::size_t c = b + 1; c <= n; ++c)
        for (int signs = 0; signs < 8; ++signs)
          out.push_back({Literal::of(cnf_atom(a), !(signs & 4)), Literal::of(cnf_atom(b), !(signs & 2)),
                         Literal::of(cnf_atom(c), !(signs & 1))});
  return out;
}

std::string hashcopy_atom(const std::string& p) { return "@hashcopy." + p; }

DomainStructure copy_domain(std::size_t n) {
  if (n < 1) throw PreconditionError("copy domain needs n >= 1");
  DomainStructure d{"copy" + std::to_string(n), {}, {}};
  std::vector<ConditionalEffect> post;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string p = cnf_atom(i), h = hashcopy_atom(p);
    d.atoms.insert({p, h});
    post.emplace_back(std::vector<Formula>{Formula::atom(p)}, LiteralSet{Literal::positive(h)});
    post.emplace_back(std::vector<Formula>{Formula::leaf(Literal::negative(p))}, LiteralSet{Literal::negative(h)});
  }
  d.operators.emplace_back("copy", std::vector<Formula>{}, std::move(post));
  return d;
}

std::string clause_atom(const LiteralSet& clause) {
  std::string out = "@clause";
  for (const auto& l : clause) out += "." + std::string(l.is_negative() ? "-" : "") + l.atom();
  return out;
}

DomainStructure unsat_gadget_domain(std::size_t n) {
  if (n < 3) throw PreconditionError("unsat gadget needs n >= 3");
  DomainStructure d{"unsat3cnf" + std::to_string(n), {"g"}, {}};
  for (std::size_t i = 1; i <= n; ++i) d.atoms.insert(cnf_atom(i));
  std::vector<Formula> conj;
  for (const auto& c : all_clauses(n)) {
    std::string pc = clause_atom(c);
    d.atoms.insert(pc);
    std::vector<Formula> disj;
    for (const auto& l : c) disj.push_back(Formula::leaf(l));
    disj.push_back(Formula::atom(pc));
    conj.push_back(disjoin_all(disj));
  }
  d.operators.emplace_back("refute", std::vector<Formula>{Formula::negation(conjoin_all(conj))},
                           std::vector<ConditionalEffect>{ConditionalEffect({}, {Literal::positive("g")})});
  return d;
}

Instance unsat_gadget_instance(const Cnf3& phi) {
  check_cnf(phi);
  Instance p{unsat_gadget_domain(phi.n), {Literal::negative("g")}, {Literal::positive("g")}};
  for (const auto& c : all_clauses(phi.n)) p.init.insert(Literal::of(clause_atom(c), !phi.clauses.count(c)));
  return p;
}

namespace {

class Gen {
 public:
  explicit Gen(const GenParams& p) : p_(p), rng_(p.seed) {
    for (std::size_t i = 1; i <= p.atom_count; ++i) atoms_.push_back(cnf_atom(i));
  }

  std::size_t below(std::size_t k) { return k == 0 ? 0 : static_cast<std::size_t>(rng_() % k); }
  bool coin() { return below(2) == 1; }
  const std::string& atom() { return atoms_[below(atoms_.size())]; }
  Literal literal() {
    const std::string& a = atom();
    return Literal::of(a, coin());
  }

  Formula formula(std::size_t depth) {
    switch (p_.tag.formula_class) {
      case FormulaClass::Atoms:
        return Formula::atom(atom());
      case FormulaClass::Literals:
        return Formula::leaf(literal());
      case FormulaClass::Boolean:
        break;
    }
    if (depth == 0) return Formula::leaf(literal());
    switch (below(4)) {
      case 0:
        return Formula::leaf(literal());
      case 1:
        return Formula::negation(formula(depth - 1));
      case 2: {
        Formula a = formula(depth - 1);
        return Formula::conjunction(a, formula(depth - 1));
      }
      default: {
        Formula a = formula(depth - 1);
        return Formula::disjunction(a, formula(depth - 1));
      }
    }
  }

  std::vector<Formula> formulas(std::size_t max) {
    std::vector<Formula> out;
    for (std::size_t k = below(max + 1); k > 0; --k) out.push_back(formula(p_.max_condition_depth));
    return out;
  }

  // Literals on distinct atoms, skipping those already in `used`.
  LiteralSet effect_literals(std::size_t count, LiteralSet& used) {
    LiteralSet out;
    for (std::size_t tries = 0; out.size() < count && tries < 4 * count + 4; ++tries) {
      Literal l = literal();
      if (atoms_of(out).count(l.atom()) || used.count(l)) continue;
      out.insert(l);
    }
    if (p_.unique_effect_literals) used.insert(out.begin(), out.end());
    return out;
  }

  Instance run() {
    Instance inst;
    inst.domain.name = "random";
    inst.domain.atoms.insert(atoms_.begin(), atoms_.end());
    std::size_t max_effects = std::max<std::size_t>(p_.max_effects, 1);
    for (std::size_t i = 1; i <= p_.operator_count; ++i) {
      std::vector<Formula> pre = formulas(2);
      std::vector<ConditionalEffect> post;
      LiteralSet used;
      if (p_.tag.conditional) {
        for (std::size_t k = 1 + below(max_effects); k > 0; --k) {
          std::vector<Formula> cond = formulas(2);
          LiteralSet eff = effect_literals(1, used);
          if (!eff.empty()) post.emplace_back(std::move(cond), std::move(eff));
        }
      } else {
        LiteralSet eff = effect_literals(1 + below(max_effects), used);
        if (!eff.empty()) post.emplace_back(std::vector<Formula>{}, std::move(eff));
      }
      inst.domain.operators.emplace_back("o" + std::to_string(i), std::move(pre), std::move(post));
    }
    for (const auto& a : atoms_) {
      std::size_t v = below(p_.tag.incomplete ? 3 : 2);
      if (v < 2) inst.init.insert(Literal::of(a, v == 1));
    }
    // Half of the goals come from the end of a short random walk, so that a
    // fair share of instances is solvable in one or more steps.
    if (coin() && !inst.domain.operators.empty()) {
      StateSpec s = StateSpec::of(inst.init);
      std::vector<StateSpec> walk{s};
      for (std::size_t k = 1 + below(4); k > 0; --k) {
        std::vector<StateSpec> next;
        for (const auto& o : inst.domain.operators) {
          ApplyOutcome r = apply_operator(s, o);
          if (!r.result.is_illegal() && r.result != s) next.push_back(r.result);
        }
        if (next.empty()) break;
        s = next[below(next.size())];
        walk.push_back(s);
      }
      // literals that are new since the second state of the walk, else since init
      std::vector<Literal> fresh;
      for (std::size_t from : {std::size_t{1}, std::size_t{0}}) {
        if (from >= walk.size() || !fresh.empty()) continue;
        for (const auto& l : s.literals())
          if (!walk[from].literals().count(l) && !inst.init.count(l) &&
              (p_.tag.formula_class != FormulaClass::Atoms || l.is_positive()))
            fresh.push_back(l);
      }
      for (std::size_t k = 1 + below(2); k > 0 && !fresh.empty(); --k) {
        const Literal& l = fresh[below(fresh.size())];
        if (!atoms_of(inst.goal).count(l.atom())) inst.goal.insert(l);
      }
      if (!inst.goal.empty()) return inst;
    }
    for (std::size_t k = 1 + below(2); k > 0; --k) {
      const std::string& a = atom();
      if (atoms_of(inst.goal).count(a)) continue;
      // prefer goals the initial state does not already satisfy
      bool positive;
      if (p_.tag.formula_class == FormulaClass::Atoms) positive = true;
      else if (inst.init.count(Literal::positive(a))) positive = false;
      else if (inst.init.count(Literal::negative(a))) positive = true;
      else positive = coin();
      inst.goal.insert(Literal::of(a, positive));
    }
    return inst;
  }

 private:
  GenParams p_;
  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
};

}  // namespace

Instance random_instance(const GenParams& p) {
  if (p.atom_count == 0) throw PreconditionError("generator needs at least one atom");
  return Gen(p).run();
}

}  // namespace plancomp
