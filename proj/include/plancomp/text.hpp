#pragma once

#include <string>
#include <vector>

#include "plancomp/model.hpp"

namespace plancomp {

// Grammar:
//   domain   := "(domain" NAME "(atoms" ATOM* ")" OP* ")"
//   OP       := "(operator" NAME "(pre" FORMULA* ")" "(post" EFF* "))"
//   EFF      := "(when" "(" FORMULA* ")" "(" LIT* "))"
//   FORMULA  := ATOM | "true" | "false" | "(not" FORMULA ")"
//             | "(and" FORMULA+ ")" | "(or" FORMULA+ ")"
//   LIT      := ATOM | "(not" ATOM ")" | "false"
//   instance := "(instance" "(domain" NAME ")" "(init" LIT* ")" "(goal" LIT* "))"
//   plan     := "(plan" NAME* ")"
// ';' starts a comment that runs to the end of the line.

/// Top-level forms of one text, in order. Instances resolve their domain
/// among the domains of the same text first, then among `known`.
struct Document {
  std::vector<DomainStructure> domains;
  std::vector<Instance> instances;
  std::vector<Plan> plans;
  std::vector<std::string> unresolved;  // domain names instances referred to but not found
};

Document parse_document(const std::string& text, const std::vector<DomainStructure>& known = {});

DomainStructure parse_domain(const std::string& text);
Instance parse_instance(const std::string& text, const DomainStructure& domain);
Plan parse_plan(const std::string& text);
Formula parse_formula(const std::string& text);

std::string print_domain(const DomainStructure& d);
std::string print_instance(const Instance& p);
std::string print_plan(const Plan& plan);

}  // namespace plancomp
