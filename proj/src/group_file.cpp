#include "tvl/group_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tvl {

using ordered_json = nlohmann::ordered_json;

const Subgroup* ParsedGroupFile::find_subgroup(const std::string& name) const {
  for (const auto& [n, sub] : subgroups)
    if (n == name) return &sub;
  return nullptr;
}

namespace {

std::vector<std::vector<int>> int_matrix(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array())
      throw SchemaError(where + "[" + std::to_string(i) + "]: expected an array");
    std::vector<int> r;
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer())
        throw SchemaError(where + "[" + std::to_string(i) + "][" + std::to_string(k) +
                          "]: expected an integer");
      r.push_back(row[k].get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ParsedGroupFile parse_group_file(const std::filesystem::path& path, const Config& cfg) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path.string() + ": cannot open");
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw SchemaError(path.string() + ": expected a JSON object");
  if (j.contains("v") && (!j["v"].is_number_integer() || j["v"].get<int>() != 1))
    throw SchemaError(path.string() + ": unsupported schema version");
  if (!j.contains("name") || !j["name"].is_string())
    throw SchemaError(path.string() + ": missing string field 'name'");
  std::string name = j["name"].get<std::string>();

  bool has_cayley = j.contains("cayley");
  bool has_perms = j.contains("permutations");
  if (has_cayley == has_perms)
    throw SchemaError(path.string() + ": need exactly one of 'cayley' or 'permutations'");

  ParsedGroupFile out;
  if (has_cayley) {
    out.group = group_from_cayley(int_matrix(j["cayley"], path.string() + ": cayley"),
                                  name, cfg);
  } else {
    const auto& p = j["permutations"];
    if (!p.is_object() || !p.contains("degree") || !p["degree"].is_number_integer() ||
        !p.contains("generators"))
      throw SchemaError(path.string() +
                        ": 'permutations' needs integer 'degree' and 'generators'");
    out.group = group_from_permutations(
        p["degree"].get<int>(),
        int_matrix(p["generators"], path.string() + ": generators"), name, cfg);
  }

  if (j.contains("subgroups")) {
    const auto& subs = j["subgroups"];
    if (!subs.is_object()) throw SchemaError(path.string() + ": 'subgroups' must be an object");
    for (const auto& [sub_name, arr] : subs.items()) {
      if (!arr.is_array())
        throw SchemaError(path.string() + ": subgroups." + sub_name + ": expected an array");
      std::vector<int> members;
      for (const auto& v : arr) {
        if (!v.is_number_integer())
          throw SchemaError(path.string() + ": subgroups." + sub_name +
                            ": expected integers");
        members.push_back(v.get<int>());
      }
      try {
        out.subgroups.emplace_back(sub_name, Subgroup(out.group, std::move(members)));
      } catch (const NotASubgroup& e) {
        throw NotASubgroup(path.string() + ": subgroups." + sub_name + ": " + e.what());
      }
    }
  }
  return out;
}

std::string group_file_to_json(const ParsedGroupFile& parsed) {
  const Group& g = *parsed.group;
  ordered_json j;
  j["v"] = 1;
  j["name"] = g.name();
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < g.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < g.order(); ++k) row.push_back(g.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["cayley"] = std::move(rows);
  if (!parsed.subgroups.empty()) {
    ordered_json subs = ordered_json::object();
    for (const auto& [name, sub] : parsed.subgroups) subs[name] = sub.members();
    j["subgroups"] = std::move(subs);
  }
  return j.dump();
}

void write_group_file(const std::filesystem::path& path, const ParsedGroupFile& parsed) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(path.string() + ": cannot write");
  out << group_file_to_json(parsed) << "\n";
}

}  // namespace tvl
