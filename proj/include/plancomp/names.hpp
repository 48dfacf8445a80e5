#pragma once

#include <initializer_list>
#include <string>

#include "plancomp/literal.hpp"

namespace plancomp {

enum class SchemeId { Identity, T6, L7, L8, T20, T22b, T22l, T23, Composed };

/// "@<family>.<part>.<part>..." (or "@<family>" without parts). Raises
/// PreconditionError when `family` is not declared for `scheme`.
std::string fresh_atom(SchemeId scheme, const std::string& family,
                       std::initializer_list<std::string> parts = {});

/// Hands out names not yet taken, appending "~2", "~3", ... on collision.
class NameSupply {
 public:
  explicit NameSupply(AtomSet taken = {}) : taken_(std::move(taken)) {}
  std::string take(const std::string& base);
  void reserve(const std::string& name) { taken_.insert(name); }
  bool taken(const std::string& name) const { return taken_.count(name) > 0; }

 private:
  AtomSet taken_;
};

}  // namespace plancomp
