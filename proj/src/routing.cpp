#include "plancomp/routing.hpp"

#include <deque>
#include <map>

#include "plancomp/error.hpp"

namespace plancomp {

namespace {

// Rows and columns of the separation table.
enum class Group { BIC, LIC, BC, BI, B, LI };

Group group_of(const FormalismTag& t) {
  if (t.formula_class == FormulaClass::Boolean) {
    if (t.incomplete && t.conditional) return Group::BIC;
    if (t.conditional) return Group::BC;
    if (t.incomplete) return Group::BI;
    return Group::B;
  }
  return t.conditional ? Group::LIC : Group::LI;
}

struct Separation {
  const char* citation;
  bool polynomial;  // rules out polynomial growth too, not only linear
};

const char* kCaveat = "unless Σ₃ᵖ = Π₃ᵖ";

std::optional<Separation> separation(Group from, Group to) {
  using G = Group;
  static const std::map<std::pair<G, G>, Separation> table = {
      {{G::BIC, G::LIC}, {"Cor. 15", true}}, {{G::BIC, G::BC}, {"Cor. 15", true}},
      {{G::BIC, G::BI}, {"Cor. 12", false}}, {{G::BIC, G::B}, {"Cor. 15", true}},
      {{G::BIC, G::LI}, {"Cor. 15", true}},  {{G::LIC, G::BI}, {"Thm. 11", false}},
      {{G::LIC, G::B}, {"Cor. 12", false}},  {{G::LIC, G::LI}, {"Cor. 12", false}},
      {{G::BC, G::LIC}, {"Cor. 19", false}}, {{G::BC, G::BI}, {"Cor. 12", false}},
      {{G::BC, G::B}, {"Cor. 12", false}},   {{G::BC, G::LI}, {"Cor. 19", false}},
      {{G::BI, G::LIC}, {"Cor. 15", true}},  {{G::BI, G::BC}, {"Thm. 14", true}},
      {{G::BI, G::B}, {"Cor. 15", true}},    {{G::BI, G::LI}, {"Cor. 15", true}},
      {{G::B, G::LIC}, {"Thm. 18", false}},  {{G::B, G::LI}, {"Cor. 19", false}},
  };
  auto it = table.find({from, to});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// Tie order of the search.
const std::vector<std::string>& edge_names() {
  static const std::vector<std::string> names = {"t6", "l7", "l8", "t20", "t22b", "t22l", "t23"};
  return names;
}

std::string key(const FormalismTag& t) { return t.name(); }

}  // namespace

std::optional<SizeClass> parse_size_class(const std::string& s) {
  if (s == "exact") return SizeClass::Exact;
  if (s == "linear") return SizeClass::Linear;
  if (s == "poly" || s == "polynomial") return SizeClass::Poly;
  return std::nullopt;
}

const char* size_class_name(SizeClass c) {
  switch (c) {
    case SizeClass::Exact:
      return "exact";
    case SizeClass::Linear:
      return "linear";
    case SizeClass::Poly:
      return "poly";
  }
  return "?";
}

std::string RouteAnswer::str() const {
  switch (kind) {
    case Kind::Chain: {
      std::string out = "Chain(";
      for (std::size_t i = 0; i < chain.size(); ++i) out += (i ? ", " : "") + chain[i];
      return out + ")";
    }
    case Kind::Impossible:
      return "Impossible(" + citation + (caveat.empty() ? "" : ", " + caveat) + ")";
    case Kind::Unknown:
      return "Unknown";
  }
  return "?";
}

RouteAnswer route(const FormalismTag& source, const FormalismTag& target, SizeClass size) {
  RouteAnswer ans;
  if (specializes(source, target)) {
    ans.kind = RouteAnswer::Kind::Chain;
    ans.chain = {"identity"};
    return ans;
  }
  std::vector<CompilationScheme> edges;
  for (const auto& n : edge_names()) {
    CompilationScheme s = scheme_by_name(n);
    // No scheme preserves plan size linearly without doing so exactly.
    if (size != SizeClass::Poly && s.preservation.kind != Preservation::Kind::Exact) continue;
    edges.push_back(std::move(s));
  }
  std::map<std::string, std::pair<std::string, std::string>> parent;  // tag -> (prev tag, scheme)
  std::map<std::string, FormalismTag> tags;
  std::deque<FormalismTag> queue{source};
  tags[key(source)] = source;
  while (!queue.empty()) {
    FormalismTag cur = queue.front();
    queue.pop_front();
    for (const auto& e : edges) {
      if (!specializes(cur, e.source)) continue;
      FormalismTag next = e.target;
      if (tags.count(key(next))) continue;
      tags[key(next)] = next;
      parent[key(next)] = {key(cur), e.name};
      if (specializes(next, target)) {
        std::vector<std::string> chain;
        for (std::string k = key(next); k != key(source); k = parent[k].first)
          chain.insert(chain.begin(), parent[k].second);
        ans.kind = RouteAnswer::Kind::Chain;
        ans.chain = std::move(chain);
        return ans;
      }
      queue.push_back(next);
    }
  }
  if (auto sep = separation(group_of(source), group_of(target))) {
    if (sep->polynomial || size != SizeClass::Poly) {
      ans.kind = RouteAnswer::Kind::Impossible;
      ans.citation = sep->citation;
      if (sep->polynomial) ans.caveat = kCaveat;
    }
  }
  return ans;
}

CompilationScheme chain_scheme(const RouteAnswer& answer, const FormalismTag& source) {
  if (answer.kind != RouteAnswer::Kind::Chain) throw PreconditionError("route has no chain");
  std::vector<CompilationScheme> schemes;
  for (const auto& n : answer.chain)
    schemes.push_back(n == "identity" ? scheme_identity(source) : scheme_by_name(n));
  return compose_all(schemes);
}

}  // namespace plancomp
