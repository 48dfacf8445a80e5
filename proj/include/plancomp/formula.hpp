#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plancomp/literal.hpp"

namespace plancomp {

enum class Truth : signed char { False = -1, Unknown = 0, True = 1 };

enum class FormulaClass : unsigned char { Atoms = 0, Literals = 1, Boolean = 2 };

/// Immutable propositional formula over literal leaves. NOT never wraps a
/// leaf: negating a leaf yields the complementary leaf.
class Formula {
 public:
  enum class Kind : unsigned char { Leaf, Not, And, Or };

  Formula();  // the TOP leaf
  static Formula leaf(Literal l);
  static Formula atom(std::string name) {
    return leaf(Literal::positive(std::move(name)));
  }
  static Formula top() { return leaf(Literal::top()); }
  static Formula bottom() { return leaf(Literal::bottom()); }
  static Formula negation(const Formula& f);
  static Formula conjunction(const Formula& a, const Formula& b);
  static Formula disjunction(const Formula& a, const Formula& b);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind == Kind::Leaf; }
  // Leaf only.
  const Literal& literal() const { return node_->lit; }
  // Not: left(); And/Or: left() and right().
  const Formula& left() const { return node_->children[0]; }
  const Formula& right() const { return node_->children[1]; }

  AtomSet atoms() const;
  void collect_atoms(AtomSet& out) const;
  std::size_t size() const;  // node count

  /// Kleene evaluation; `lookup(atom)` gives the value of a positive atom.
  template <class Lookup>
  Truth evaluate3(const Lookup& lookup) const;
  /// Two-valued evaluation over a total assignment.
  template <class Lookup>
  bool evaluate(const Lookup& lookup) const {
    return evaluate3([&](const std::string& a) {
             return lookup(a) ? Truth::True : Truth::False;
           }) == Truth::True;
  }

  std::string str() const;

  friend int compare(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Formula& a, const Formula& b) {
    return compare(a, b) < 0;
  }

 private:
  struct Node {
    Kind kind;
    Literal lit;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Left fold with AND; empty input gives TOP.
Formula conjoin_all(const std::vector<Formula>& fs);
/// Left fold with OR; empty input gives BOTTOM.
Formula disjoin_all(const std::vector<Formula>& fs);

/// Atoms for positive-atom and constant leaves only; Literals when a negative
/// leaf occurs without connectives; Boolean as soon as a connective occurs.
FormulaClass formula_class(const Formula& f);

/// Literal leaf view: the literal if `f` is a leaf.
std::optional<Literal> as_literal(const Formula& f);

inline Truth truth_not(Truth t) { return static_cast<Truth>(-static_cast<int>(t)); }

template <class Lookup>
Truth Formula::evaluate3(const Lookup& lookup) const {
  switch (node_->kind) {
    case Kind::Leaf: {
      const Literal& l = node_->lit;
      if (l.is_top()) return Truth::True;
      if (l.is_bottom()) return Truth::False;
      Truth t = lookup(l.atom());
      return l.is_positive() ? t : truth_not(t);
    }
    case Kind::Not:
      return truth_not(left().evaluate3(lookup));
    case Kind::And: {
      Truth a = left().evaluate3(lookup);
      if (a == Truth::False) return a;
      Truth b = right().evaluate3(lookup);
      if (b == Truth::False) return b;
      return (a == Truth::True && b == Truth::True) ? Truth::True
                                                     : Truth::Unknown;
    }
    case Kind::Or: {
      Truth a = left().evaluate3(lookup);
      if (a == Truth::True) return a;
      Truth b = right().evaluate3(lookup);
      if (b == Truth::True) return b;
      return (a == Truth::False && b == Truth::False) ? Truth::False
                                                       : Truth::Unknown;
    }
  }
  return Truth::Unknown;
}

}  // namespace plancomp
