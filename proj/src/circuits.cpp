#include "plancomp/circuits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "plancomp/error.hpp"

namespace plancomp {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::And:
      return "AND";
    case GateKind::Or:
      return "OR";
    case GateKind::Not:
      return "NOT";
    case GateKind::Const0:
      return "CONST0";
    case GateKind::Const1:
      return "CONST1";
    case GateKind::Input:
      return "INPUT";
  }
  return "?";
}

std::size_t Circuit::add(GateKind kind, std::vector<std::size_t> inputs) {
  gates.push_back(Gate{kind, std::move(inputs), 0});
  return gates.size() - 1;
}

std::size_t Circuit::add_input(std::size_t index) {
  gates.push_back(Gate{GateKind::Input, {}, index});
  input_count = std::max(input_count, index + 1);
  return gates.size() - 1;
}

namespace {

// Topological order of all gates; ValidationError on a cycle.
std::vector<std::size_t> topo_order(const Circuit& c) {
  check_circuit(c);
  std::vector<std::size_t> order;
  std::vector<int> mark(c.gates.size(), 0);  // 0 new, 1 on stack, 2 done
  for (std::size_t root = 0; root < c.gates.size(); ++root) {
    if (mark[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = 1;
    while (!stack.empty()) {
      auto& [g, next] = stack.back();
      if (next < c.gates[g].inputs.size()) {
        std::size_t in = c.gates[g].inputs[next++];
        if (mark[in] == 1) throw ValidationError("circuit has a cycle through gate " + std::to_string(in));
        if (mark[in] == 0) {
          mark[in] = 1;
          stack.emplace_back(in, 0);
        }
      } else {
        mark[g] = 2;
        order.push_back(g);
        stack.pop_back();
      }
    }
  }
  return order;
}

}  // namespace

void check_circuit(const Circuit& c) {
  if (c.output >= c.gates.size()) throw ValidationError("circuit output id out of range");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    for (auto in : g.inputs)
      if (in >= c.gates.size()) throw ValidationError("gate " + std::to_string(i) + " has a dangling input");
    switch (g.kind) {
      case GateKind::Not:
        if (g.inputs.size() != 1) throw ValidationError("NOT gate needs exactly one input");
        break;
      case GateKind::And:
      case GateKind::Or:
        if (g.inputs.empty()) throw ValidationError("AND/OR gate needs an input");
        break;
      case GateKind::Input:
        if (g.index >= c.input_count) throw ValidationError("input index out of range");
        [[fallthrough]];
      default:
        if (!g.inputs.empty()) throw ValidationError("constant/input gate with inputs");
    }
  }
}

CircuitMeasure measure(const Circuit& c) {
  std::vector<std::size_t> depth(c.gates.size(), 0);
  for (auto g : topo_order(c))
    for (auto in : c.gates[g].inputs) depth[g] = std::max(depth[g], depth[in] + 1);
  return {depth[c.output], c.gates.size()};
}

bool eval_circuit(const Circuit& c, const std::vector<bool>& w) {
  if (w.size() != c.input_count)
    throw ValidationError("word has " + std::to_string(w.size()) + " bits, circuit expects " +
                          std::to_string(c.input_count));
  std::vector<char> v(c.gates.size(), 0);
  for (auto id : topo_order(c)) {
    const Gate& g = c.gates[id];
    switch (g.kind) {
      case GateKind::And:
        v[id] = std::all_of(g.inputs.begin(), g.inputs.end(), [&](auto i) { return v[i]; });
        break;
      case GateKind::Or:
        v[id] = std::any_of(g.inputs.begin(), g.inputs.end(), [&](auto i) { return v[i]; });
        break;
      case GateKind::Not:
        v[id] = !v[g.inputs[0]];
        break;
      case GateKind::Const0:
        v[id] = 0;
        break;
      case GateKind::Const1:
        v[id] = 1;
        break;
      case GateKind::Input:
        v[id] = w[g.index];
        break;
    }
  }
  return v[c.output];
}

bool eval_circuit(const Circuit& c, const std::string& w) {
  std::vector<bool> bits;
  for (char ch : w) {
    if (ch != '0' && ch != '1') throw ValidationError("word must consist of 0 and 1");
    bits.push_back(ch == '1');
  }
  return eval_circuit(c, bits);
}

Circuit dedup(const Circuit& c) {
  std::vector<std::size_t> order = topo_order(c);
  std::vector<bool> live(c.gates.size(), false);
  live[c.output] = true;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (live[*it])
      for (auto in : c.gates[*it].inputs) live[in] = true;

  Circuit out;
  out.input_count = c.input_count;
  out.input_names = c.input_names;
  std::map<std::tuple<GateKind, std::vector<std::size_t>, std::size_t>, std::size_t> seen;
  std::vector<std::size_t> renum(c.gates.size(), 0);
  for (auto id : order) {
    if (!live[id]) continue;
    const Gate& g = c.gates[id];
    std::vector<std::size_t> ins;
    for (auto in : g.inputs) ins.push_back(renum[in]);
    if (g.kind == GateKind::And || g.kind == GateKind::Or) {
      std::sort(ins.begin(), ins.end());
      ins.erase(std::unique(ins.begin(), ins.end()), ins.end());
    }
    auto key = std::make_tuple(g.kind, ins, g.kind == GateKind::Input ? g.index : 0);
    auto [it, fresh] = seen.emplace(key, out.gates.size());
    if (fresh) out.gates.push_back(Gate{g.kind, std::move(ins), g.kind == GateKind::Input ? g.index : 0});
    renum[id] = it->second;
  }
  out.output = renum[c.output];
  return out;
}

std::string word_of(const AtomSet& sigma, const LiteralSet& complete) {
  std::string w;
  for (const auto& p : sigma) w += complete.count(Literal::positive(p)) ? '1' : '0';
  return w;
}

LiteralSet state_of_word(const AtomSet& sigma, const std::string& w) {
  if (w.size() != sigma.size()) throw ValidationError("word length does not match the atom count");
  LiteralSet out;
  std::size_t i = 0;
  for (const auto& p : sigma) {
    if (w[i] != '0' && w[i] != '1') throw ValidationError("word must consist of 0 and 1");
    out.insert(Literal::of(p, w[i++] == '1'));
  }
  return out;
}

Circuit build_plan_circuit(const DomainStructure& d, const LiteralSet& goal, const Plan& plan) {
  DomainStructure src = normalize_singleton_effects(d);
  for (const auto& o : src.operators) {
    for (const auto& f : o.pre)
      if (!f.is_leaf()) throw PreconditionError("circuit needs literal preconditions (operator " + o.name + ")");
    for (const auto& e : o.post)
      for (const auto& f : e.conditions())
        if (!f.is_leaf()) throw PreconditionError("circuit needs literal effect conditions (operator " + o.name + ")");
  }
  for (const auto& l : goal)
    if (!l.is_atom() || !d.atoms.count(l.atom())) throw ValidationError("goal literal outside the domain");
  auto steps = resolve_plan(src, plan);

  Circuit c;
  c.input_names.assign(d.atoms.begin(), d.atoms.end());
  c.input_count = d.atoms.size();
  std::size_t zero = c.add(GateKind::Const0);
  std::size_t one = c.add(GateKind::Const1);

  // Positive and negative wire per atom at the current level.
  std::map<std::string, std::pair<std::size_t, std::size_t>> level;
  std::size_t idx = 0;
  for (const auto& p : d.atoms) {
    std::size_t in = c.add_input(idx++);
    level[p] = {in, c.add(GateKind::Not, {in})};
  }
  auto wire = [&](const Literal& l) -> std::size_t {
    if (l.is_top()) return one;
    if (l.is_bottom()) return zero;
    const auto& [p, n] = level.at(l.atom());
    return l.is_positive() ? p : n;
  };
  auto conj = [&](std::vector<std::size_t> ins) { return ins.empty() ? one : c.add(GateKind::And, std::move(ins)); };
  auto disj = [&](std::vector<std::size_t> ins) { return ins.empty() ? zero : c.add(GateKind::Or, std::move(ins)); };

  std::vector<std::size_t> ok;  // one "step did not fail" wire per step
  for (std::size_t i : steps) {
    const Operator& o = src.operators[i];
    std::vector<std::size_t> pre;
    for (const auto& f : o.pre) pre.push_back(wire(f.literal()));
    std::size_t pre_ok = conj(pre);

    std::map<std::string, std::vector<std::size_t>> adds, dels;
    std::vector<std::size_t> failures{c.add(GateKind::Not, {pre_ok})};
    for (const auto& e : o.post) {
      std::vector<std::size_t> cond;
      for (const auto& f : e.conditions()) cond.push_back(wire(f.literal()));
      std::size_t act = conj(cond);
      const Literal& l = *e.effects().begin();
      if (l.is_bottom()) failures.push_back(act);
      else (l.is_positive() ? adds : dels)[l.atom()].push_back(act);
    }
    std::map<std::string, std::pair<std::size_t, std::size_t>> next;
    for (const auto& p : d.atoms) {
      auto a = adds.find(p);
      auto r = dels.find(p);
      if (a == adds.end() && r == dels.end()) {
        next[p] = level[p];
        continue;
      }
      std::size_t pos = disj(a == adds.end() ? std::vector<std::size_t>{} : a->second);
      std::size_t neg = disj(r == dels.end() ? std::vector<std::size_t>{} : r->second);
      failures.push_back(c.add(GateKind::And, {pos, neg}));
      std::size_t not_pos = c.add(GateKind::Not, {pos});
      std::size_t not_neg = c.add(GateKind::Not, {neg});
      const auto& [pw, nw] = level[p];
      next[p] = {c.add(GateKind::Or, {pos, c.add(GateKind::And, {pw, not_pos, not_neg})}),
                 c.add(GateKind::Or, {neg, c.add(GateKind::And, {nw, not_pos, not_neg})})};
    }
    ok.push_back(c.add(GateKind::Not, {c.add(GateKind::Or, std::move(failures))}));
    level = std::move(next);
  }
  std::vector<std::size_t> out = ok;
  for (const auto& l : goal) out.push_back(wire(l));
  c.output = conj(out);
  return dedup(c);
}

std::string export_gates(const Circuit& c) {
  CircuitMeasure m = measure(c);
  std::ostringstream os;
  os << "# inputs " << c.input_count << " output " << c.output << " depth " << m.depth << " size " << m.size
     << "\n";
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    os << i << ' ' << gate_kind_name(g.kind);
    if (g.kind == GateKind::Input) os << '(' << g.index << ')';
    for (auto in : g.inputs) os << ' ' << in;
    os << '\n';
  }
  return os.str();
}

std::string export_dot(const Circuit& c) {
  std::ostringstream os;
  os << "digraph circuit {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    std::string label = gate_kind_name(g.kind);
    if (g.kind == GateKind::Input) {
      label += "(" + std::to_string(g.index) + ")";
      if (g.index < c.input_names.size()) label += "\\n" + c.input_names[g.index];
    }
    os << "  g" << i << " [label=\"" << label << "\"" << (i == c.output ? ", shape=doublecircle" : "")
       << "];\n";
  }
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    for (auto in : c.gates[i].inputs) os << "  g" << in << " -> g" << i << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace plancomp
