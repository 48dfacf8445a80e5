#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "plancomp/model.hpp"

namespace plancomp {

/// 3CNF over the atoms p1..pn. A clause is a set of 3 literals on pairwise
/// distinct atoms.
struct Cnf3 {
  std::size_t n = 3;
  std::set<LiteralSet> clauses;
};

std::string cnf_atom(std::size_t i);  // "p<i>", 1-based
/// One clause per line, literals separated by blanks, "-" for negation;
/// '#' starts a comment. n is the largest atom index, at least 3.
Cnf3 parse_cnf(const std::string& text);
/// ValidationError unless every clause has 3 literals over distinct atoms of p1..pn.
void check_cnf(const Cnf3& phi);
/// Truth-table satisfiability.
bool cnf_satisfiable(const Cnf3& phi);
/// All 8·C(n,3) clauses.
std::vector<LiteralSet> all_clauses(std::size_t n);

/// Σ_n ∪ Σ_n^# with the single operator "copy" = ⟨⊤, {pᵢ ⇒ pᵢ^#, ¬pᵢ ⇒ ¬pᵢ^#}⟩.
/// pᵢ^# is "@hashcopy.pᵢ".
DomainStructure copy_domain(std::size_t n);
std::string hashcopy_atom(const std::string& p);

/// "@clause.p1.-p2.p3" for the clause {p1, ¬p2, p3}.
std::string clause_atom(const LiteralSet& clause);
/// P_n ∪ D_n ∪ {g} with the single operator "refute" = ⟨{¬Φ_n}, {g}⟩.
DomainStructure unsat_gadget_domain(std::size_t n);
/// I_φ: clause atoms of φ false, the other D_n atoms true, g false, P_n
/// unknown; goal {g}. A one-step plan exists iff φ is unsatisfiable.
Instance unsat_gadget_instance(const Cnf3& phi);

struct GenParams {
  FormalismTag tag;
  std::size_t atom_count = 4;
  std::size_t operator_count = 3;
  std::size_t max_effects = 2;
  std::size_t max_condition_depth = 2;
  std::uint64_t seed = 0;
  /// No two conditional effects of one operator share an effect literal.
  bool unique_effect_literals = false;
};

/// Seeded generator (std::mt19937_64, draws reduced with %). The result
/// classifies within p.tag.
Instance random_instance(const GenParams& p);

}  // namespace plancomp
