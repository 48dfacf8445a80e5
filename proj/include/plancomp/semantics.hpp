#pragma once

#include <optional>
#include <set>
#include <vector>

#include "plancomp/model.hpp"

namespace plancomp {

/// A consistent literal set, or the illegal specification.
class StateSpec {
 public:
  static StateSpec illegal() { return StateSpec(); }
  /// Raises ValidationError when `l` is not consistent.
  static StateSpec of(LiteralSet l);

  bool is_illegal() const { return !literals_.has_value(); }
  bool is_consistent() const { return literals_.has_value(); }
  // Consistent only.
  const LiteralSet& literals() const { return *literals_; }

  std::string str() const;
  friend bool operator==(const StateSpec&, const StateSpec&) = default;

 private:
  StateSpec() = default;
  std::optional<LiteralSet> literals_;
};

/// Set of true atoms of a total assignment.
using State = AtomSet;

enum class IllegalReason {
  SourceIllegal,
  PreNotEntailed,
  ActiveInconsistent,
  ActiveNotEqualPotential,
};

const char* reason_name(IllegalReason r);

struct ApplyOutcome {
  StateSpec result;
  std::optional<IllegalReason> reason;
};

/// Models enumerated per query are capped at 2^kMaxEnumeratedAtoms.
inline constexpr std::size_t kMaxEnumeratedAtoms = 24;

bool entails(const LiteralSet& s, const Formula& f);
bool entails(const StateSpec& s, const Formula& f);
bool entails_all(const LiteralSet& s, const std::vector<Formula>& fs);
/// Whether s ∪ fs has a model.
bool jointly_satisfiable(const LiteralSet& s, const std::vector<Formula>& fs);

LiteralSet active_effects(const LiteralSet& s, const std::vector<ConditionalEffect>& post);
LiteralSet potentially_active_effects(const LiteralSet& s,
                                      const std::vector<ConditionalEffect>& post);
LiteralSet active_effects(const State& s, const std::vector<ConditionalEffect>& post,
                          const AtomSet& sigma);

ApplyOutcome apply_operator(const StateSpec& s, const Operator& o);
StateSpec apply_plan(const StateSpec& s, const DomainStructure& d, const Plan& plan);
bool is_solution(const Instance& p, const Plan& plan);

std::set<State> enumerate_models(const StateSpec& s, const AtomSet& sigma,
                                  std::size_t max_atoms = 12);
/// θ_o; nullopt when undefined.
std::optional<State> transition(const State& s, const Operator& o);

/// The complete spec whose single model is `s`.
LiteralSet spec_of_state(const State& s, const AtomSet& sigma);

}  // namespace plancomp
