#pragma once

#include <string>
#include <vector>

#include "plancomp/model.hpp"

namespace plancomp {

enum class GateKind { And, Or, Not, Const0, Const1, Input };

const char* gate_kind_name(GateKind k);

struct Gate {
  GateKind kind = GateKind::Const0;
  std::vector<std::size_t> inputs;  // gate ids
  std::size_t index = 0;            // Input only

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Unbounded fan-in circuit. Gate ids are positions in `gates`.
struct Circuit {
  std::vector<Gate> gates;
  std::size_t output = 0;
  std::size_t input_count = 0;
  std::vector<std::string> input_names;  // optional labels, one per input

  std::size_t add(GateKind kind, std::vector<std::size_t> inputs = {});
  std::size_t add_input(std::size_t index);
};

struct CircuitMeasure {
  std::size_t depth = 0;
  std::size_t size = 0;
};

/// ValidationError on a cycle, a dangling id or a malformed gate.
void check_circuit(const Circuit& c);
CircuitMeasure measure(const Circuit& c);
bool eval_circuit(const Circuit& c, const std::vector<bool>& w);
/// `w` as a '0'/'1' string; bit i is input i.
bool eval_circuit(const Circuit& c, const std::string& w);

/// Structural sharing: identical gates merged (AND/OR inputs as sets),
/// gates unreachable from the output dropped, ids renumbered topologically.
Circuit dedup(const Circuit& c);

/// Circuit over the atoms of `d` (input i = i-th atom in canonical order)
/// that is 1 on the word of a complete initial state I iff `plan` solves
/// ⟨d, I, goal⟩. Requires literal preconditions and effect conditions.
/// Depth is at most 5·|plan| + 2.
Circuit build_plan_circuit(const DomainStructure& d, const LiteralSet& goal, const Plan& plan);

/// Word of a complete state over Σ: bit i = 1 iff the i-th atom is true.
std::string word_of(const AtomSet& sigma, const LiteralSet& complete);
/// Complete literal set over Σ described by `w`.
LiteralSet state_of_word(const AtomSet& sigma, const std::string& w);

/// "ID KIND INPUT_IDS..." per line, preceded by a '#' header line.
std::string export_gates(const Circuit& c);
/// Graphviz DOT.
std::string export_dot(const Circuit& c);

}  // namespace plancomp
