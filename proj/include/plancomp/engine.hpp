#pragma once

#include <string>
#include <vector>

#include "plancomp/model.hpp"
#include "plancomp/semantics.hpp"

namespace plancomp {

/// Index-based progression over one domain structure. Specs are one byte per
/// atom (-1 false, 0 unknown, 1 true) in canonical atom order. Results agree
/// with apply_operator; the reference implementation is the oracle in tests.
class Engine {
 public:
  using Spec = std::string;  // byte per atom, usable as a hash key

  explicit Engine(const DomainStructure& d);

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t operator_count() const { return ops_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  int atom_index(const std::string& a) const;

  Spec encode(const LiteralSet& l) const;
  LiteralSet decode(const Spec& s) const;

  /// Progresses `s` by operator `op`; false when the result is Illegal.
  bool apply(const Spec& s, std::size_t op, Spec& out) const;
  /// Literal goal check (G ⊆ S).
  bool satisfies(const Spec& s, const LiteralSet& goal) const;

  /// True when every precondition is a literal leaf or TOP and every effect
  /// is unconditional. On complete specs such a domain behaves like STRIPS.
  bool strips_like() const;

 private:
  struct Node {
    Formula::Kind kind;
    int atom;  // leaf: atom index, -1 TOP, -2 BOTTOM
    bool positive;
    int a, b;
  };
  struct CFormula {
    int root;
    std::vector<int> atoms;  // sorted atom indices
  };
  struct CEffect {
    std::vector<int> conditions;  // formula ids
    std::vector<std::pair<int, signed char>> lits;
    bool bottom = false;
  };
  struct COp {
    std::vector<int> pre;
    std::vector<CEffect> effects;
  };

  int compile(const Formula& f);
  int compile_node(const Formula& f, std::vector<int>& atoms);
  signed char eval(int node, const char* s) const;
  bool entails(const Spec& s, int f) const;
  bool satisfiable(const Spec& s, const std::vector<int>& fs) const;

  std::vector<std::string> atoms_;
  std::vector<Node> nodes_;
  std::vector<CFormula> formulas_;
  std::vector<COp> ops_;
  bool strips_like_ = true;
};

}  // namespace plancomp
