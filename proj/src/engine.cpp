#include "plancomp/engine.hpp"

#include <algorithm>

#include "plancomp/error.hpp"

namespace plancomp {

Engine::Engine(const DomainStructure& d) : atoms_(d.atoms.begin(), d.atoms.end()) {
  for (const auto& o : d.operators) {
    COp op;
    for (const auto& f : o.pre) {
      if (!f.is_leaf()) strips_like_ = false;
      op.pre.push_back(compile(f));
    }
    for (const auto& e : o.post) {
      if (!e.unconditional()) strips_like_ = false;
      CEffect ce;
      for (const auto& f : e.conditions()) ce.conditions.push_back(compile(f));
      for (const auto& l : e.effects()) {
        if (l.is_bottom())
          ce.bottom = true;
        else
          ce.lits.emplace_back(atom_index(l.atom()), l.is_positive() ? 1 : -1);
      }
      op.effects.push_back(std::move(ce));
    }
    ops_.push_back(std::move(op));
  }
}

int Engine::atom_index(const std::string& a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) throw ValidationError("undeclared atom '" + a + "'");
  return static_cast<int>(it - atoms_.begin());
}

int Engine::compile(const Formula& f) {
  CFormula cf;
  cf.root = compile_node(f, cf.atoms);
  std::sort(cf.atoms.begin(), cf.atoms.end());
  cf.atoms.erase(std::unique(cf.atoms.begin(), cf.atoms.end()), cf.atoms.end());
  formulas_.push_back(std::move(cf));
  return static_cast<int>(formulas_.size()) - 1;
}

int Engine::compile_node(const Formula& f, std::vector<int>& atoms) {
  Node n{f.kind(), 0, true, -1, -1};
  if (f.is_leaf()) {
    const Literal& l = f.literal();
    if (l.is_top()) {
      n.atom = -1;
    } else if (l.is_bottom()) {
      n.atom = -2;
    } else {
      n.atom = atom_index(l.atom());
      n.positive = l.is_positive();
      atoms.push_back(n.atom);
    }
  } else {
    n.a = compile_node(f.left(), atoms);
    if (f.kind() != Formula::Kind::Not) n.b = compile_node(f.right(), atoms);
  }
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

signed char Engine::eval(int id, const char* s) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Formula::Kind::Leaf:
      if (n.atom == -1) return 1;
      if (n.atom == -2) return -1;
      {
        auto v = static_cast<signed char>(s[n.atom]);
        return n.positive ? v : static_cast<signed char>(-v);
      }
    case Formula::Kind::Not:
      return static_cast<signed char>(-eval(n.a, s));
    case Formula::Kind::And: {
      signed char x = eval(n.a, s);
      if (x < 0) return x;
      signed char y = eval(n.b, s);
      if (y < 0) return y;
      return (x > 0 && y > 0) ? 1 : 0;
    }
    case Formula::Kind::Or: {
      signed char x = eval(n.a, s);
      if (x > 0) return x;
      signed char y = eval(n.b, s);
      if (y > 0) return y;
      return (x < 0 && y < 0) ? -1 : 0;
    }
  }
  return 0;
}

bool Engine::entails(const Spec& s, int fid) const {
  const CFormula& f = formulas_[fid];
  signed char v = eval(f.root, s.data());
  if (v != 0) return v > 0;
  std::vector<int> open;
  for (int a : f.atoms)
    if (s[a] == 0) open.push_back(a);
  if (open.size() > kMaxEnumeratedAtoms) throw BoundError("too many open atoms for enumeration");
  Spec t = s;
  for (unsigned long long bits = 0; bits < (1ULL << open.size()); ++bits) {
    for (std::size_t i = 0; i < open.size(); ++i) t[open[i]] = ((bits >> i) & 1ULL) ? 1 : -1;
    if (eval(f.root, t.data()) <= 0) return false;
  }
  return true;
}

bool Engine::satisfiable(const Spec& s, const std::vector<int>& fs) const {
  bool all_true = true;
  for (int fid : fs) {
    signed char v = eval(formulas_[fid].root, s.data());
    if (v < 0) return false;
    if (v == 0) all_true = false;
  }
  if (all_true) return true;
  std::vector<int> open;
  for (int fid : fs)
    for (int a : formulas_[fid].atoms)
      if (s[a] == 0) open.push_back(a);
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());
  if (open.size() > kMaxEnumeratedAtoms) throw BoundError("too many open atoms for enumeration");
  Spec t = s;
  for (unsigned long long bits = 0; bits < (1ULL << open.size()); ++bits) {
    for (std::size_t i = 0; i < open.size(); ++i) t[open[i]] = ((bits >> i) & 1ULL) ? 1 : -1;
    bool ok = true;
    for (int fid : fs)
      if (eval(formulas_[fid].root, t.data()) <= 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

Engine::Spec Engine::encode(const LiteralSet& l) const {
  Spec s(atoms_.size(), 0);
  for (const auto& x : l)
    if (x.is_atom()) s[atom_index(x.atom())] = x.is_positive() ? 1 : -1;
  return s;
}

LiteralSet Engine::decode(const Spec& s) const {
  LiteralSet out;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (s[i] != 0) out.insert(Literal::of(atoms_[i], static_cast<signed char>(s[i]) > 0));
  return out;
}

bool Engine::apply(const Spec& s, std::size_t op_index, Spec& out) const {
  const COp& op = ops_[op_index];
  for (int f : op.pre)
    if (!entails(s, f)) return false;
  // marks: bit 0 positive active, bit 1 negative active
  thread_local std::vector<unsigned char> marks;
  marks.assign(atoms_.size(), 0);
  thread_local std::vector<unsigned char> state;  // 0 inactive, 1 active, 2 potential only
  state.assign(op.effects.size(), 0);
  bool bottom = false;
  for (std::size_t j = 0; j < op.effects.size(); ++j) {
    const CEffect& e = op.effects[j];
    bool active = true;
    for (int f : e.conditions)
      if (!entails(s, f)) {
        active = false;
        break;
      }
    if (active) {
      state[j] = 1;
      bottom = bottom || e.bottom;
      for (auto [a, v] : e.lits) marks[a] |= v > 0 ? 1 : 2;
    } else if (satisfiable(s, e.conditions)) {
      state[j] = 2;
    }
  }
  if (bottom) return false;
  for (unsigned char m : marks)
    if (m == 3) return false;
  for (std::size_t j = 0; j < op.effects.size(); ++j) {
    if (state[j] != 2) continue;
    const CEffect& e = op.effects[j];
    if (e.bottom) return false;
    for (auto [a, v] : e.lits)
      if (!(marks[a] & (v > 0 ? 1 : 2))) return false;
  }
  out = s;
  for (std::size_t a = 0; a < marks.size(); ++a) {
    if (marks[a] == 1) out[a] = 1;
    if (marks[a] == 2) out[a] = -1;
  }
  return true;
}

bool Engine::satisfies(const Spec& s, const LiteralSet& goal) const {
  for (const auto& l : goal) {
    if (!l.is_atom()) return false;
    if (static_cast<signed char>(s[atom_index(l.atom())]) != (l.is_positive() ? 1 : -1))
      return false;
  }
  return true;
}

bool Engine::strips_like() const { return strips_like_; }

}  // namespace plancomp
