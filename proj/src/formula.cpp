#include "plancomp/formula.hpp"

namespace plancomp {

Formula::Formula() : Formula(Formula::top()) {}

Formula Formula::leaf(Literal l) {
  return Formula(std::make_shared<const Node>(Node{Kind::Leaf, std::move(l), {}}));
}

Formula Formula::negation(const Formula& f) {
  if (f.is_leaf()) return leaf(f.literal().negated());
  return Formula(std::make_shared<const Node>(Node{Kind::Not, Literal::top(), {f}}));
}

Formula Formula::conjunction(const Formula& a, const Formula& b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::And, Literal::top(), {a, b}}));
}

Formula Formula::disjunction(const Formula& a, const Formula& b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Or, Literal::top(), {a, b}}));
}

void Formula::collect_atoms(AtomSet& out) const {
  if (is_leaf()) {
    if (literal().is_atom()) out.insert(literal().atom());
    return;
  }
  for (const auto& c : node_->children) c.collect_atoms(out);
}

AtomSet Formula::atoms() const {
  AtomSet out;
  collect_atoms(out);
  return out;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

namespace {

void print_flat(const Formula& f, Formula::Kind k, std::string& out) {
  if (f.kind() == k) {
    print_flat(f.left(), k, out);
    out += ' ';
    out += f.right().str();
  } else {
    out += f.str();
  }
}

}  // namespace

std::string Formula::str() const {
  switch (kind()) {
    case Kind::Leaf:
      return literal().str();
    case Kind::Not:
      return "(not " + left().str() + ")";
    case Kind::And:
    case Kind::Or: {
      // the left spine prints as one n-ary node, which the parser folds back
      std::string out = kind() == Kind::And ? "(and " : "(or ";
      print_flat(*this, kind(), out);
      return out + ")";
    }
  }
  return {};
}

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.is_leaf()) {
    auto c = a.literal() <=> b.literal();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  return 0;
}

Formula conjoin_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i)
    acc = Formula::conjunction(acc, fs[i]);
  return acc;
}

Formula disjoin_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i)
    acc = Formula::disjunction(acc, fs[i]);
  return acc;
}

FormulaClass formula_class(const Formula& f) {
  if (!f.is_leaf()) return FormulaClass::Boolean;
  return f.literal().is_negative() ? FormulaClass::Literals : FormulaClass::Atoms;
}

std::optional<Literal> as_literal(const Formula& f) {
  if (f.is_leaf()) return f.literal();
  return std::nullopt;
}

}  // namespace plancomp
