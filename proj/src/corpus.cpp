#include "tvl/corpus.hpp"

#include <algorithm>

#include "tvl/group_file.hpp"

namespace tvl {

std::vector<GroupPtr> builtin_corpus() {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= 16; ++n) out.push_back(cyclic_group(n));
  for (int n = 4; n <= 16; n += 2) out.push_back(dihedral_group(n));
  out.push_back(quaternion_group());
  out.push_back(symmetric_group(3));
  out.push_back(symmetric_group(4));
  out.push_back(group_from_permutations(4, {{1, 0, 3, 2}, {1, 2, 0, 3}}, "A4"));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(4), "C2xC4").group);
  out.push_back(elementary_abelian_group(2, 3));
  out.push_back(direct_product(quaternion_group(), cyclic_group(2), "Q8xC2").group);
  out.push_back(direct_product(dihedral_group(8), cyclic_group(2), "D8xC2").group);
  out.push_back(central_product(cyclic_group(4), cyclic_group(4), {{0, 0}, {2, 2}}, "C4oC4").group);
  // Z(Q8) = {1, i^2}; amalgamate with the order-2 subgroup {0, 2} of C4
  out.push_back(central_product(quaternion_group(), cyclic_group(4), {{0, 0}, {2, 2}}, "Q8oC4").group);
  return out;
}

std::vector<std::filesystem::path> write_corpus_files(const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;
  for (const GroupPtr& g : builtin_corpus()) {
    std::string stem = g->name();
    std::replace(stem.begin(), stem.end(), '^', '_');
    auto path = directory / (stem + ".json");
    write_group_file(path, ParsedGroupFile{g, {}});
    written.push_back(path);
  }
  std::sort(written.begin(), written.end());
  return written;
}

}  // namespace tvl
