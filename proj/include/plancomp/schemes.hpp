#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plancomp/model.hpp"
#include "plancomp/names.hpp"

namespace plancomp {

struct Preservation {
  enum class Kind { Exact, Linear, Polynomial };
  Kind kind = Kind::Exact;
  std::size_t c = 1;  // Linear only
  std::size_t k = 0;  // Exact and Linear
  std::string descriptor;  // Polynomial only

  static Preservation exact(std::size_t k) { return {Kind::Exact, 1, k, {}}; }
  static Preservation polynomial(std::string d) { return {Kind::Polynomial, 1, 0, std::move(d)}; }
  std::string str() const;
};

/// ⟨f_ξ, f_i, f_g, t_i, t_g⟩ plus plan translation and bookkeeping. All
/// members are pure functions of their arguments.
struct CompilationScheme {
  SchemeId id = SchemeId::Identity;
  std::string name;
  FormalismTag source;
  FormalismTag target;
  Preservation preservation;

  std::function<DomainStructure(const DomainStructure&)> f_xi;
  std::function<LiteralSet(const DomainStructure&)> f_i;
  std::function<LiteralSet(const DomainStructure&)> f_g;
  std::function<LiteralSet(const AtomSet&, const LiteralSet&)> t_i;
  std::function<LiteralSet(const AtomSet&, const LiteralSet&)> t_g;
  /// Atoms of the target that t_i / t_g write for source atoms Σ.
  std::function<AtomSet(const AtomSet&)> image;
  /// Translates a source solution (precondition: it is one).
  std::function<Plan(const Instance&, const Plan&)> translate;
  /// Upper bound on the translated plan size for a source plan of `len`
  /// steps; equality for exact schemes.
  std::function<std::size_t(const DomainStructure&, std::size_t)> size_bound;

  std::vector<std::string> components;  // scheme names, application order
};

/// Identity on the formalism `tag` (source = target = tag).
CompilationScheme scheme_identity(FormalismTag tag = {FormulaClass::Boolean, true, true});
CompilationScheme scheme_t6();
CompilationScheme scheme_l7();
CompilationScheme scheme_l8();
CompilationScheme scheme_t20();
CompilationScheme scheme_t22(bool boolean_variant);
CompilationScheme scheme_t23();

/// "identity", "t6", "l7", "l8", "t20", "t22b", "t22l", "t23".
CompilationScheme scheme_by_name(const std::string& name);
std::vector<std::string> scheme_names();

/// Apply `f` first, then `g`. Requires f.target ⊑ g.source.
CompilationScheme compose(const CompilationScheme& f, const CompilationScheme& g);
CompilationScheme compose_all(const std::vector<CompilationScheme>& chain);

/// F(Π). Raises PreconditionError when Π does not classify within f.source.
Instance compile_instance(const CompilationScheme& f, const Instance& p);
/// Raises PreconditionError when Δ does not solve Π.
Plan translate_plan(const CompilationScheme& f, const Instance& p, const Plan& plan);

}  // namespace plancomp
