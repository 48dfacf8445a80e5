#include "plancomp/planner.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "plancomp/engine.hpp"
#include "plancomp/error.hpp"
#include "plancomp/semantics.hpp"

namespace plancomp {

namespace {

struct SearchNode {
  int parent;
  int op;
  std::size_t depth;
};

// STRIPS view of a domain for stubborn-set pruning on complete specs.
// Literal ids: 2*atom for true, 2*atom+1 for false.
class StripsView {
 public:
  StripsView(const Engine& e, const DomainStructure& d) {
    std::size_t n = e.atom_count();
    achievers_.resize(2 * n);
    requirers_.resize(2 * n);
    for (std::size_t i = 0; i < d.operators.size(); ++i) {
      const Operator& o = d.operators[i];
      Op op{static_cast<int>(i), {}, {}};
      bool dead = false;
      LiteralSet eff;
      for (const auto& f : o.pre) {
        const Literal& l = f.literal();
        if (l.is_top()) continue;
        if (l.is_bottom()) {
          dead = true;
          continue;
        }
        op.pre.push_back(id(e.atom_index(l.atom()), l.is_positive()));
      }
      for (const auto& ce : o.post) eff.insert(ce.effects().begin(), ce.effects().end());
      if (!is_consistent(eff)) dead = true;
      for (const auto& l : eff)
        if (l.is_atom()) op.eff.push_back(id(e.atom_index(l.atom()), l.is_positive()));
      std::sort(op.pre.begin(), op.pre.end());
      op.pre.erase(std::unique(op.pre.begin(), op.pre.end()), op.pre.end());
      for (std::size_t k = 0; k + 1 < op.pre.size(); ++k)
        if ((op.pre[k] ^ 1) == op.pre[k + 1]) dead = true;
      if (dead) continue;
      int local = static_cast<int>(ops_.size());
      for (int l : op.pre) requirers_[l].push_back(local);
      for (int l : op.eff) achievers_[l].push_back(local);
      ops_.push_back(std::move(op));
    }
  }

  static int id(int atom, bool positive) { return 2 * atom + (positive ? 0 : 1); }
  static bool holds(const std::string& s, int lit) {
    auto v = static_cast<signed char>(s[lit / 2]);
    return (lit & 1) ? v < 0 : v > 0;
  }

  bool applicable(const std::string& s, int local) const {
    for (int l : ops_[local].pre)
      if (!holds(s, l)) return false;
    return true;
  }

  void apply(const std::string& s, int local, std::string& out) const {
    out = s;
    for (int l : ops_[local].eff) out[l / 2] = (l & 1) ? -1 : 1;
  }

  int source_index(int local) const { return ops_[local].index; }

  // Applicable operators of a strong stubborn set for `s`, in declaration
  // order. `goal` must be unsatisfied in `s`.
  std::vector<int> stubborn(const std::string& s, const std::vector<int>& goal) const {
    std::vector<char> in(ops_.size(), 0);
    std::vector<int> work;
    auto add_all = [&](const std::vector<int>& v) {
      for (int o : v)
        if (!in[o]) {
          in[o] = 1;
          work.push_back(o);
        }
    };
    for (int g : goal)
      if (!holds(s, g)) {
        add_all(achievers_[g]);
        break;
      }
    std::vector<int> out;
    while (!work.empty()) {
      int o = work.back();
      work.pop_back();
      const Op& op = ops_[o];
      int missing = -1;
      for (int l : op.pre)
        if (!holds(s, l)) {
          missing = l;
          break;
        }
      if (missing >= 0) {
        add_all(achievers_[missing]);
        continue;
      }
      out.push_back(o);
      for (int l : op.eff) {
        add_all(requirers_[l ^ 1]);
        add_all(achievers_[l ^ 1]);
      }
      for (int l : op.pre) add_all(achievers_[l ^ 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t size() const { return ops_.size(); }

 private:
  struct Op {
    int index;
    std::vector<int> pre;
    std::vector<int> eff;
  };
  std::vector<Op> ops_;
  std::vector<std::vector<int>> achievers_;
  std::vector<std::vector<int>> requirers_;
};

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SolutionFound:
      return "SolutionFound";
    case Verdict::NoSolution:
      return "NoSolution";
    case Verdict::BoundExceeded:
      return "BoundExceeded";
  }
  return "?";
}

SearchResult plan_exists(const Instance& p, const PlannerOptions& opts) {
  validate_instance(p);
  if (p.domain.atoms.size() > opts.max_atoms)
    throw BoundError("instance has " + std::to_string(p.domain.atoms.size()) +
                     " atoms, planner bound is " + std::to_string(opts.max_atoms));
  Engine engine(p.domain);
  SearchResult res;
  Engine::Spec init = engine.encode(p.init);

  bool prune = opts.stubborn_sets && engine.strips_like() &&
               is_complete_over(p.init, p.domain.atoms);
  std::optional<StripsView> view;
  std::vector<int> goal_ids;
  if (prune) {
    view.emplace(engine, p.domain);
    for (const auto& l : p.goal)
      goal_ids.push_back(StripsView::id(engine.atom_index(l.atom()), l.is_positive()));
    res.pruned = true;
  }

  std::vector<SearchNode> nodes{{-1, -1, 0}};
  std::vector<Engine::Spec> specs{init};
  auto reconstruct = [&](int n) {
    Plan plan;
    for (; nodes[n].parent >= 0; n = nodes[n].parent)
      plan.steps.push_back(p.domain.operators[nodes[n].op].name);
    std::reverse(plan.steps.begin(), plan.steps.end());
    return plan;
  };

  if (engine.satisfies(init, p.goal)) {
    res.verdict = Verdict::SolutionFound;
    return res;
  }
  std::unordered_map<std::string, int> seen{{init, 0}};
  std::deque<int> queue{0};
  bool truncated = false;
  Engine::Spec next;
  std::vector<int> candidates;
  while (!queue.empty()) {
    res.frontier_peak = std::max(res.frontier_peak, queue.size());
    int cur = queue.front();
    queue.pop_front();
    if (opts.max_steps && nodes[cur].depth >= *opts.max_steps) {
      truncated = true;
      continue;
    }
    if (opts.max_expansions && res.expanded >= opts.max_expansions) {
      res.verdict = Verdict::BoundExceeded;
      res.bound_depth = nodes[cur].depth;
      return res;
    }
    ++res.expanded;
    // copy: specs may reallocate while we push successors
    const Engine::Spec spec = specs[cur];
    if (prune) {
      candidates = view->stubborn(spec, goal_ids);
    } else {
      candidates.resize(engine.operator_count());
      for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = static_cast<int>(i);
    }
    for (int c : candidates) {
      int op;
      if (prune) {
        view->apply(spec, c, next);
        op = view->source_index(c);
      } else {
        if (!engine.apply(spec, static_cast<std::size_t>(c), next)) continue;
        op = c;
      }
      if (seen.count(next)) continue;
      int id = static_cast<int>(nodes.size());
      nodes.push_back({cur, op, nodes[cur].depth + 1});
      seen.emplace(next, id);
      if (engine.satisfies(next, p.goal)) {
        res.verdict = Verdict::SolutionFound;
        res.plan = reconstruct(id);
        return res;
      }
      specs.push_back(next);
      queue.push_back(id);
    }
  }
  if (truncated) {
    res.verdict = Verdict::BoundExceeded;
    res.bound_depth = *opts.max_steps;
  } else {
    res.verdict = Verdict::NoSolution;
  }
  return res;
}

bool validate(const Instance& p, const Plan& plan) { return is_solution(p, plan); }

bool accepts_word(const DomainStructure& d, const std::string& w, std::size_t c,
                  const PlannerOptions& opts) {
  if (!d.atoms.count("g")) throw PreconditionError("word acceptance needs an atom named g");
  if (w.size() + 1 != d.atoms.size())
    throw PreconditionError("word length " + std::to_string(w.size()) + " does not match " +
                            std::to_string(d.atoms.size() - 1) + " input atoms");
  Instance p{d, {Literal::negative("g")}, {Literal::positive("g")}};
  std::size_t i = 0;
  for (const auto& a : d.atoms) {
    if (a == "g") continue;
    char bit = w[i++];
    if (bit != '0' && bit != '1') throw PreconditionError("word must be a bit string");
    p.init.insert(Literal::of(a, bit == '1'));
  }
  PlannerOptions o = opts;
  o.max_steps = c;
  o.max_atoms = std::max(o.max_atoms, d.atoms.size());
  return plan_exists(p, o).found();
}

}  // namespace plancomp
