#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tvl/structure.hpp"

namespace tvl {

/// A parsed group file: the group plus any named subgroups, in file order.
struct ParsedGroupFile {
  GroupPtr group;
  std::vector<std::pair<std::string, Subgroup>> subgroups;

  const Subgroup* find_subgroup(const std::string& name) const;
};

/// Read a JSON group file:
///   {"v":1,"name":str,"cayley":[[int]]}
/// or
///   {"v":1,"name":str,"permutations":{"degree":int,"generators":[[int]]}}
/// with an optional "subgroups":{str:[int]} map of full member lists.
/// Element indices refer to the file's own enumeration (Cayley row order, or
/// the breadth-first closure order for permutation files).
ParsedGroupFile parse_group_file(const std::filesystem::path& path,
                                 const Config& cfg = default_config());

/// Serialize back to the file schema (Cayley form), losslessly for
/// Cayley-sourced groups.
std::string group_file_to_json(const ParsedGroupFile& parsed);

void write_group_file(const std::filesystem::path& path, const ParsedGroupFile& parsed);

}  // namespace tvl
