#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plancomp/model.hpp"
#include "plancomp/schemes.hpp"

namespace plancomp {

enum class SizeClass { Exact, Linear, Poly };

std::optional<SizeClass> parse_size_class(const std::string& s);
const char* size_class_name(SizeClass c);

struct RouteAnswer {
  enum class Kind { Chain, Impossible, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<std::string> chain;  // scheme names, application order
  std::string citation;            // Impossible only, e.g. "Cor. 12"
  std::string caveat;              // complexity assumption, when there is one

  std::string str() const;
};

/// Shortest chain of schemes from `source` to some tag ⊑ `target` whose
/// composition preserves plan size within `size`; otherwise the separation
/// result that rules it out. A source that already specializes the target
/// routes through the identity.
RouteAnswer route(const FormalismTag& source, const FormalismTag& target, SizeClass size);

/// Composition of the chain; identity on `source` for an identity chain.
CompilationScheme chain_scheme(const RouteAnswer& answer, const FormalismTag& source);

}  // namespace plancomp
