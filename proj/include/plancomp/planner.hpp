#pragma once

#include <optional>
#include <string>

#include "plancomp/model.hpp"

namespace plancomp {

struct PlannerOptions {
  std::optional<std::size_t> max_steps;
  std::size_t max_atoms = 10;
  std::size_t max_expansions = 0;  // 0: unlimited
  /// Strong stubborn set pruning. Only takes effect on instances with a
  /// complete init whose domain is STRIPS-like (see Engine::strips_like);
  /// otherwise ignored. Preserves existence and shortest length, not the
  /// lexicographic tie-break.
  bool stubborn_sets = false;
};

enum class Verdict { SolutionFound, NoSolution, BoundExceeded };

struct SearchResult {
  Verdict verdict = Verdict::NoSolution;
  Plan plan;                  // SolutionFound only
  std::size_t bound_depth = 0;  // BoundExceeded only
  std::size_t expanded = 0;
  std::size_t frontier_peak = 0;
  bool pruned = false;  // stubborn sets were in effect

  bool found() const { return verdict == Verdict::SolutionFound; }
};

/// Breadth-first search over state specifications. Operators are expanded in
/// declaration order and the goal is tested on generation, so without
/// pruning the plan is the lexicographically first among the shortest.
SearchResult plan_exists(const Instance& p, const PlannerOptions& opts = {});

bool validate(const Instance& p, const Plan& plan);

/// Word acceptance: Ξ's atoms are Σ_n plus the atom "g". Bit i of `w`
/// fixes the i-th atom of Σ_n in canonical order; init also has ¬g and the
/// goal is {g}; accepted iff a plan of at most `c` steps exists.
bool accepts_word(const DomainStructure& d, const std::string& w, std::size_t c,
                  const PlannerOptions& opts = {});

const char* verdict_name(Verdict v);

}  // namespace plancomp
