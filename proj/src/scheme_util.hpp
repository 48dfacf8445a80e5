#pragma once

// Helpers shared by the scheme implementations.

#include <string>
#include <vector>

#include "plancomp/error.hpp"
#include "plancomp/model.hpp"
#include "plancomp/schemes.hpp"

namespace plancomp::detail {

inline const FormalismTag kS{FormulaClass::Atoms, false, false};
inline const FormalismTag kSL{FormulaClass::Literals, false, false};
inline const FormalismTag kSB{FormulaClass::Boolean, false, false};
inline const FormalismTag kSLI{FormulaClass::Literals, true, false};
inline const FormalismTag kSBI{FormulaClass::Boolean, true, false};
inline const FormalismTag kSC{FormulaClass::Atoms, false, true};
inline const FormalismTag kSLC{FormulaClass::Literals, false, true};
inline const FormalismTag kSBC{FormulaClass::Boolean, false, true};
inline const FormalismTag kSLIC{FormulaClass::Literals, true, true};
inline const FormalismTag kSBIC{FormulaClass::Boolean, true, true};

inline Formula lit(const Literal& l) { return Formula::leaf(l); }
inline Formula pos(const std::string& a) { return Formula::leaf(Literal::positive(a)); }
inline Formula neg(const std::string& a) { return Formula::leaf(Literal::negative(a)); }

/// Literal leaves of a formula set; PreconditionError on a connective.
std::vector<Literal> literal_leaves(const std::vector<Formula>& fs, const std::string& what);
/// Contains BOTTOM or a complementary pair.
bool is_contradictory(const std::vector<Literal>& ls);

/// The "@neg." image of t6 / l8.
std::string tilde_atom(const std::string& p);
Literal tilde(const Literal& l);
/// ~L; {BOTTOM} when L is contradictory.
LiteralSet tilde(const LiteralSet& l);
/// ~K ∪ ¬~¬K; {BOTTOM} when K is contradictory.
LiteralSet tilde_effect(const LiteralSet& k);
/// ~ over a precondition / condition list of literal leaves.
std::vector<Formula> tilde_formulas(const std::vector<Formula>& fs, const std::string& what);
/// ValidationError when image(p) is itself a declared atom.
void check_image_collisions(const AtomSet& sigma, const std::string& prefix);

AtomSet operator_names(const DomainStructure& d);
void check_source(const CompilationScheme& s, const DomainStructure& d);

}  // namespace plancomp::detail
