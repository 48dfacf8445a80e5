#include "plancomp/text.hpp"


#include "plancomp/error.hpp"

namespace plancomp {

namespace {

struct Sexp {
  bool is_list = false;
  std::string atom;
  std::vector<Sexp> items;
  std::size_t line = 1, col = 1;

  bool is_symbol(const char* s) const { return !is_list && atom == s; }
  bool head_is(const char* s) const { return is_list && !items.empty() && items[0].is_symbol(s); }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

class Reader {
 public:
  explicit Reader(const std::string& text) : t_(text) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    skip();
    while (i_ < t_.size()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  void advance() {
    if (t_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip() {
    while (i_ < t_.size()) {
      char c = t_[i_];
      if (c == ';') {
        while (i_ < t_.size() && t_[i_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  Sexp read() {
    Sexp s;
    s.line = line_;
    s.col = col_;
    char c = t_[i_];
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '(') {
      s.is_list = true;
      advance();
      skip();
      while (true) {
        if (i_ >= t_.size()) throw ParseError("unterminated list", s.line, s.col);
        if (t_[i_] == ')') {
          advance();
          return s;
        }
        s.items.push_back(read());
        skip();
      }
    }
    while (i_ < t_.size()) {
      c = t_[i_];
      if (c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r') break;
      s.atom += c;
      advance();
    }
    return s;
  }

  const std::string& t_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

std::string symbol(const Sexp& s, const char* what) {
  if (s.is_list) s.fail(std::string("expected ") + what);
  return s.atom;
}

std::string name_of(const Sexp& s, const char* what) {
  std::string n = symbol(s, what);
  if (!is_user_atom_name(n) && !is_generated_name(n)) s.fail(std::string("invalid ") + what + " '" + n + "'");
  return n;
}

// Atom names are checked against Σ when one is given.
class Interp {
 public:
  explicit Interp(const AtomSet* sigma) : sigma_(sigma) {}

  std::string atom(const Sexp& s) {
    std::string a = name_of(s, "atom");
    if (sigma_ && !sigma_->count(a))
      throw ValidationError(std::to_string(s.line) + ":" + std::to_string(s.col) + ": undeclared atom '" + a + "'");
    return a;
  }

  Formula formula(const Sexp& s) {
    if (!s.is_list) {
      if (s.atom == "true") return Formula::top();
      if (s.atom == "false") return Formula::bottom();
      return Formula::atom(atom(s));
    }
    if (s.head_is("not")) {
      if (s.items.size() != 2) s.fail("(not F) takes one argument");
      return Formula::negation(formula(s.items[1]));
    }
    bool is_and = s.head_is("and");
    if (!is_and && !s.head_is("or")) s.fail("expected a formula");
    if (s.items.size() < 2) s.fail("(and/or ...) needs an argument");
    Formula acc = formula(s.items[1]);
    for (std::size_t i = 2; i < s.items.size(); ++i)
      acc = is_and ? Formula::conjunction(acc, formula(s.items[i])) : Formula::disjunction(acc, formula(s.items[i]));
    return acc;
  }

  Literal literal(const Sexp& s) {
    if (!s.is_list) {
      if (s.atom == "false") return Literal::bottom();
      if (s.atom == "true") s.fail("'true' is not a literal here");
      return Literal::positive(atom(s));
    }
    if (!s.head_is("not") || s.items.size() != 2 || s.items[1].is_list) s.fail("expected a literal");
    return Literal::negative(atom(s.items[1]));
  }

  LiteralSet literals(const Sexp& s, std::size_t from) {
    LiteralSet out;
    for (std::size_t i = from; i < s.items.size(); ++i) out.insert(literal(s.items[i]));
    return out;
  }

 private:
  const AtomSet* sigma_;
};

const Sexp& expect_list(const Sexp& s, const char* head, std::size_t min_items) {
  if (!s.head_is(head)) s.fail(std::string("expected (") + head + " ...)");
  if (s.items.size() < min_items) s.fail(std::string("(") + head + " ...) is too short");
  return s;
}

DomainStructure domain_of(const Sexp& s) {
  expect_list(s, "domain", 3);
  DomainStructure d;
  d.name = name_of(s.items[1], "domain name");
  const Sexp& atoms = expect_list(s.items[2], "atoms", 1);
  for (std::size_t i = 1; i < atoms.items.size(); ++i) {
    std::string a = name_of(atoms.items[i], "atom");
    if (a == "true" || a == "false") atoms.items[i].fail("reserved word used as atom");
    d.atoms.insert(a);
  }
  Interp in(&d.atoms);
  AtomSet names;
  for (std::size_t k = 3; k < s.items.size(); ++k) {
    const Sexp& op = expect_list(s.items[k], "operator", 4);
    if (op.items.size() != 4) op.fail("(operator NAME (pre ...) (post ...)) expected");
    std::string name = name_of(op.items[1], "operator name");
    if (!names.insert(name).second)
      throw ValidationError(std::to_string(op.line) + ":" + std::to_string(op.col) + ": duplicate operator name '" +
                            name + "'");
    const Sexp& pre = expect_list(op.items[2], "pre", 1);
    std::vector<Formula> fs;
    for (std::size_t i = 1; i < pre.items.size(); ++i) fs.push_back(in.formula(pre.items[i]));
    const Sexp& post = expect_list(op.items[3], "post", 1);
    std::vector<ConditionalEffect> effs;
    for (std::size_t i = 1; i < post.items.size(); ++i) {
      const Sexp& w = expect_list(post.items[i], "when", 3);
      if (w.items.size() != 3 || !w.items[1].is_list || !w.items[2].is_list)
        w.fail("(when (CONDITIONS) (LITERALS)) expected");
      std::vector<Formula> cond;
      for (const auto& c : w.items[1].items) cond.push_back(in.formula(c));
      LiteralSet eff;
      for (const auto& l : w.items[2].items) eff.insert(in.literal(l));
      eff.erase(Literal::top());
      if (eff.empty()) w.items[2].fail("effect set is empty");
      effs.emplace_back(std::move(cond), std::move(eff));
    }
    d.operators.emplace_back(std::move(name), std::move(fs), std::move(effs));
  }
  validate_domain(d);
  return d;
}

Instance instance_of(const Sexp& s, const DomainStructure& d) {
  expect_list(s, "instance", 4);
  if (s.items.size() != 4) s.fail("(instance (domain NAME) (init ...) (goal ...)) expected");
  Instance p;
  p.domain = d;
  Interp in(&d.atoms);
  p.init = in.literals(expect_list(s.items[2], "init", 1), 1);
  p.goal = in.literals(expect_list(s.items[3], "goal", 1), 1);
  validate_instance(p);
  return p;
}

std::string instance_domain_name(const Sexp& s) {
  expect_list(s, "instance", 2);
  const Sexp& dn = expect_list(s.items[1], "domain", 2);
  if (dn.items.size() != 2) dn.fail("(domain NAME) expected");
  return name_of(dn.items[1], "domain name");
}

Plan plan_of(const Sexp& s) {
  expect_list(s, "plan", 1);
  Plan p;
  for (std::size_t i = 1; i < s.items.size(); ++i) p.steps.push_back(name_of(s.items[i], "operator name"));
  return p;
}

const Sexp& only_form(const std::vector<Sexp>& forms) {
  if (forms.size() != 1) {
    std::size_t line = forms.empty() ? 1 : forms[1].line, col = forms.empty() ? 1 : forms[1].col;
    throw ParseError(forms.empty() ? "empty input" : "expected a single form", line, col);
  }
  return forms[0];
}

std::string literals_text(const LiteralSet& l) {
  std::string out;
  for (const auto& x : l) out += " " + x.str();
  return out;
}

}  // namespace

Document parse_document(const std::string& text, const std::vector<DomainStructure>& known) {
  Document doc;
  for (const auto& s : Reader(text).read_all()) {
    if (s.head_is("domain")) {
      doc.domains.push_back(domain_of(s));
    } else if (s.head_is("instance")) {
      std::string dn = instance_domain_name(s);
      const DomainStructure* d = nullptr;
      for (const auto& x : doc.domains)
        if (x.name == dn) d = &x;
      for (const auto& x : known)
        if (!d && x.name == dn) d = &x;
      if (!d) {
        doc.unresolved.push_back(dn);
        continue;
      }
      doc.instances.push_back(instance_of(s, *d));
    } else if (s.head_is("plan")) {
      doc.plans.push_back(plan_of(s));
    } else {
      s.fail("expected (domain ...), (instance ...) or (plan ...)");
    }
  }
  return doc;
}

DomainStructure parse_domain(const std::string& text) { return domain_of(only_form(Reader(text).read_all())); }

Instance parse_instance(const std::string& text, const DomainStructure& domain) {
  auto forms = Reader(text).read_all();
  const Sexp& s = only_form(forms);
  std::string dn = instance_domain_name(s);
  if (dn != domain.name) throw ValidationError("instance refers to domain '" + dn + "', not '" + domain.name + "'");
  return instance_of(s, domain);
}

Plan parse_plan(const std::string& text) { return plan_of(only_form(Reader(text).read_all())); }

Formula parse_formula(const std::string& text) {
  return Interp(nullptr).formula(only_form(Reader(text).read_all()));
}

std::string print_domain(const DomainStructure& d) {
  std::string out = "(domain " + d.name + "\n  (atoms";
  for (const auto& a : d.atoms) out += " " + a;
  out += ")";
  for (const auto& o : d.operators) {
    out += "\n  (operator " + o.name + "\n    (pre";
    for (const auto& f : o.pre) out += " " + f.str();
    out += ")\n    (post";
    for (const auto& e : o.post) {
      out += "\n      (when (";
      for (std::size_t i = 0; i < e.conditions().size(); ++i) out += (i ? " " : "") + e.conditions()[i].str();
      out += ") (" + literals_text(e.effects()).substr(1) + "))";
    }
    out += "))";
  }
  return out + ")\n";
}

std::string print_instance(const Instance& p) {
  return "(instance\n  (domain " + p.domain.name + ")\n  (init" + literals_text(p.init) + ")\n  (goal" +
         literals_text(p.goal) + "))\n";
}

std::string print_plan(const Plan& plan) {
  std::string out = "(plan";
  for (const auto& s : plan.steps) out += " " + s;
  return out + ")\n";
}

}  // namespace plancomp
