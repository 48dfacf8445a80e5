#pragma once

#include <compare>
#include <set>
#include <string>

namespace plancomp {

using AtomSet = std::set<std::string>;

/// An atom, a negated atom, or one of the constants TOP / BOTTOM.
class Literal {
 public:
  enum class Kind : unsigned char { Top, Bottom, Atom };

  static Literal top() { return Literal(Kind::Top, {}, true); }
  static Literal bottom() { return Literal(Kind::Bottom, {}, false); }
  static Literal positive(std::string atom) {
    return Literal(Kind::Atom, std::move(atom), true);
  }
  static Literal negative(std::string atom) {
    return Literal(Kind::Atom, std::move(atom), false);
  }
  static Literal of(std::string atom, bool positive) {
    return Literal(Kind::Atom, std::move(atom), positive);
  }

  Kind kind() const { return kind_; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_positive() const { return kind_ == Kind::Atom && positive_; }
  bool is_negative() const { return kind_ == Kind::Atom && !positive_; }
  // Empty for the two constants.
  const std::string& atom() const { return atom_; }

  Literal negated() const;
  std::string str() const;

  // Canonical order: TOP, BOTTOM, then by atom name with the positive
  // literal first.
  std::strong_ordering operator<=>(const Literal& other) const;
  bool operator==(const Literal& other) const = default;

 private:
  Literal(Kind k, std::string a, bool pos)
      : kind_(k), atom_(std::move(a)), positive_(pos) {}

  Kind kind_;
  std::string atom_;
  bool positive_;
};

using LiteralSet = std::set<Literal>;

LiteralSet positives(const LiteralSet& l);         // pos(L)
LiteralSet negatives(const LiteralSet& l);         // neg(L)
AtomSet atoms_of(const LiteralSet& l);             // σ(L)
LiteralSet negate_all(const LiteralSet& l);        // ¬L
LiteralSet positive_literals(const AtomSet& atoms);
LiteralSet negative_literals(const AtomSet& atoms);

/// No BOTTOM and no complementary pair.
bool is_consistent(const LiteralSet& l);
/// Every atom of `atoms` occurs in `l` with some polarity.
bool is_complete_over(const LiteralSet& l, const AtomSet& atoms);
/// The literals of `l` whose atom lies in `atoms` (constants dropped).
LiteralSet restrict_to(const LiteralSet& l, const AtomSet& atoms);
/// Closed-world completion: `l` plus ¬p for every p in `atoms` not in σ(l).
LiteralSet cwa(const AtomSet& atoms, const LiteralSet& l);

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b);
LiteralSet set_difference(const LiteralSet& a, const LiteralSet& b);
bool is_subset(const LiteralSet& a, const LiteralSet& b);

std::string str(const LiteralSet& l);

}  // namespace plancomp
