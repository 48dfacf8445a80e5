#include "plancomp/literal.hpp"

#include <algorithm>

namespace plancomp {

Literal Literal::negated() const {
  switch (kind_) {
    case Kind::Top:
      return bottom();
    case Kind::Bottom:
      return top();
    case Kind::Atom:
      break;
  }
  return Literal(Kind::Atom, atom_, !positive_);
}

std::string Literal::str() const {
  switch (kind_) {
    case Kind::Top:
      return "true";
    case Kind::Bottom:
      return "false";
    case Kind::Atom:
      break;
  }
  return positive_ ? atom_ : "(not " + atom_ + ")";
}

std::strong_ordering Literal::operator<=>(const Literal& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  if (auto c = atom_ <=> other.atom_; c != 0) return c;
  // positive sorts first
  return other.positive_ <=> positive_;
}

LiteralSet positives(const LiteralSet& l) {
  LiteralSet out;
  for (const auto& x : l)
    if (x.is_positive()) out.insert(x);
  return out;
}

LiteralSet negatives(const LiteralSet& l) {
  LiteralSet out;
  for (const auto& x : l)
    if (x.is_negative()) out.insert(x);
  return out;
}

AtomSet atoms_of(const LiteralSet& l) {
  AtomSet out;
  for (const auto& x : l)
    if (x.is_atom()) out.insert(x.atom());
  return out;
}

LiteralSet negate_all(const LiteralSet& l) {
  LiteralSet out;
  for (const auto& x : l) out.insert(x.negated());
  return out;
}

LiteralSet positive_literals(const AtomSet& atoms) {
  LiteralSet out;
  for (const auto& a : atoms) out.insert(Literal::positive(a));
  return out;
}

LiteralSet negative_literals(const AtomSet& atoms) {
  LiteralSet out;
  for (const auto& a : atoms) out.insert(Literal::negative(a));
  return out;
}

bool is_consistent(const LiteralSet& l) {
  for (const auto& x : l) {
    if (x.is_bottom()) return false;
    if (x.is_positive() && l.count(x.negated())) return false;
  }
  return true;
}

bool is_complete_over(const LiteralSet& l, const AtomSet& atoms) {
  for (const auto& a : atoms)
    if (!l.count(Literal::positive(a)) && !l.count(Literal::negative(a)))
      return false;
  return true;
}

LiteralSet restrict_to(const LiteralSet& l, const AtomSet& atoms) {
  LiteralSet out;
  for (const auto& x : l)
    if (x.is_atom() && atoms.count(x.atom())) out.insert(x);
  return out;
}

LiteralSet cwa(const AtomSet& atoms, const LiteralSet& l) {
  LiteralSet out = l;
  for (const auto& a : atoms)
    if (!l.count(Literal::positive(a)) && !l.count(Literal::negative(a)))
      out.insert(Literal::negative(a));
  return out;
}

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b) {
  LiteralSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

LiteralSet set_difference(const LiteralSet& a, const LiteralSet& b) {
  LiteralSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool is_subset(const LiteralSet& a, const LiteralSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string str(const LiteralSet& l) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : l) {
    if (!first) out += ", ";
    first = false;
    out += x.is_negative() ? "-" + x.atom() : x.str();
  }
  return out + "}";
}

}  // namespace plancomp
