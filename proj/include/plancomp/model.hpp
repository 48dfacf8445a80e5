#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plancomp/formula.hpp"
#include "plancomp/literal.hpp"

namespace plancomp {

/// Γ ⇒ L. Conditions are conjunctive; an empty set means unconditional.
/// Construction drops TOP leaves from both sides, sorts and dedups the
/// conditions, and rejects an empty effect set.
class ConditionalEffect {
 public:
  ConditionalEffect(std::vector<Formula> conditions, LiteralSet effects);

  const std::vector<Formula>& conditions() const { return conditions_; }
  const LiteralSet& effects() const { return effects_; }
  bool unconditional() const { return conditions_.empty(); }

  friend bool operator==(const ConditionalEffect&, const ConditionalEffect&) = default;

 private:
  std::vector<Formula> conditions_;
  LiteralSet effects_;
};

/// ⟨pre, post⟩ with a name. Preconditions are sorted and deduplicated;
/// effects keep declaration order (their 1-based position is the index j).
struct Operator {
  Operator(std::string name, std::vector<Formula> pre,
           std::vector<ConditionalEffect> post);

  std::string name;
  std::vector<Formula> pre;
  std::vector<ConditionalEffect> post;

  friend bool operator==(const Operator&, const Operator&) = default;
};

struct DomainStructure {
  std::string name;
  AtomSet atoms;
  std::vector<Operator> operators;  // declaration order is the index i

  const Operator* find(const std::string& op) const;
  std::optional<std::size_t> index_of(const std::string& op) const;

  friend bool operator==(const DomainStructure&, const DomainStructure&) = default;
};

struct Instance {
  DomainStructure domain;
  LiteralSet init;
  LiteralSet goal;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Plan {
  std::vector<std::string> steps;

  std::size_t size() const { return steps.size(); }
  friend bool operator==(const Plan&, const Plan&) = default;
};

// ---------------------------------------------------------------------------
// Formalism lattice

struct FormalismTag {
  FormulaClass formula_class = FormulaClass::Atoms;
  bool incomplete = false;
  bool conditional = false;

  std::string name() const;  // "S", "S_L", ..., "S_BIC"
  friend bool operator==(const FormalismTag&, const FormalismTag&) = default;
};

/// Parses "S", "S_LIC", ... (letters in any order after the underscore).
std::optional<FormalismTag> parse_tag(const std::string& name);
/// The 12 tags in the order S, S_L, S_B, S_I, S_LI, S_BI, S_C, S_LC, S_BC,
/// S_IC, S_LIC, S_BIC.
std::vector<FormalismTag> all_tags();

bool specializes(const FormalismTag& x, const FormalismTag& y);
FormalismTag join(const FormalismTag& x, const FormalismTag& y);

/// Tag of a domain structure alone (incomplete = false).
FormalismTag classify_domain(const DomainStructure& d);
FormalismTag classify_instance(const Instance& p);

// ---------------------------------------------------------------------------
// Well-formedness

bool is_user_atom_name(const std::string& name);
bool is_generated_name(const std::string& name);
/// Every mentioned atom declared, operator names unique and nonempty.
void validate_domain(const DomainStructure& d);
/// validate_domain plus: I and G over Σ, I consistent, G free of constants.
void validate_instance(const Instance& p);
std::vector<std::size_t> resolve_plan(const DomainStructure& d, const Plan& plan);

// ---------------------------------------------------------------------------
// Normalizations

DomainStructure normalize_singleton_effects(const DomainStructure& d);
/// Raises PreconditionError when a merge is needed in a non-Boolean domain.
DomainStructure normalize_unique_effect_literals(const DomainStructure& d);
/// Raises PreconditionError when an AND-fold is needed in a non-Boolean domain.
DomainStructure normalize_single_precondition(const DomainStructure& d);

namespace detail {
// Unchecked variants used by the schemes.
DomainStructure merge_effect_literals(const DomainStructure& d);
DomainStructure fold_preconditions(const DomainStructure& d);
}  // namespace detail

bool has_singleton_effects(const DomainStructure& d);
bool has_unique_effect_literals(const DomainStructure& d);
/// Largest number of conditional effects of one operator.
std::size_t max_effects(const DomainStructure& d);
std::size_t total_effects(const DomainStructure& d);

}  // namespace plancomp
