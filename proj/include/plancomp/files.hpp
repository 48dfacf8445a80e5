#pragma once

#include <string>
#include <vector>

#include "plancomp/text.hpp"

namespace plancomp {

std::string read_file(const std::string& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& text);

/// parse_document on a file. An instance whose domain the file does not
/// define is resolved against `known`, then "<name>.sexp" and finally
/// "domain.sexp" in the same directory. ValidationError if none matches.
Document load_document(const std::string& path, const std::vector<DomainStructure>& known = {});

}  // namespace plancomp
