#include "plancomp/files.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plancomp/error.hpp"

namespace plancomp {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw ValidationError("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

Document load_document(const std::string& path, const std::vector<DomainStructure>& known) {
  std::string text = read_file(path);
  Document doc = parse_document(text, known);
  if (doc.unresolved.empty()) return doc;
  std::vector<DomainStructure> extra = known;
  fs::path dir = fs::path(path).parent_path();
  for (const auto& name : doc.unresolved) {
    bool found = false;
    for (const auto& candidate : {dir / (name + ".sexp"), dir / "domain.sexp"}) {
      if (!fs::exists(candidate) || fs::equivalent(candidate, fs::path(path))) continue;
      for (auto& d : parse_document(read_file(candidate.string())).domains)
        if (d.name == name) {
          extra.push_back(std::move(d));
          found = true;
        }
      if (found) break;
    }
    if (!found) throw ValidationError("'" + path + "': no definition of domain '" + name + "'");
  }
  return parse_document(text, extra);
}

}  // namespace plancomp
