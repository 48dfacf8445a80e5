#include "plancomp/names.hpp"

#include <map>
#include <set>

#include "plancomp/error.hpp"

namespace plancomp {

namespace {

const std::set<std::string>& families(SchemeId s) {
  static const std::map<SchemeId, std::set<std::string>> table = {
      {SchemeId::Identity, {}},
      {SchemeId::T6, {"neg"}},
      {SchemeId::L7, {"prime", "plus", "minus", "x", "g", "c0", "c1"}},
      {SchemeId::L8, {"neg", "g"}},
      {SchemeId::T20, {"plus", "minus", "hash", "op", "x", "c"}},
      {SchemeId::T22b, {"plus", "minus", "hash", "op", "x", "c"}},
      {SchemeId::T22l, {"plus", "minus", "hash", "op", "x", "c"}},
      {SchemeId::T23, {"f", "fdone"}},
      {SchemeId::Composed, {}},
  };
  return table.at(s);
}

}  // namespace

std::string fresh_atom(SchemeId scheme, const std::string& family,
                       std::initializer_list<std::string> parts) {
  if (!families(scheme).count(family))
    throw PreconditionError("atom family '" + family + "' is not used by this scheme");
  std::string out = "@" + family;
  for (const auto& p : parts) out += "." + p;
  return out;
}

std::string NameSupply::take(const std::string& base) {
  std::string name = base;
  for (int k = 2; taken_.count(name); ++k) name = base + "~" + std::to_string(k);
  taken_.insert(name);
  return name;
}

}  // namespace plancomp
