#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tvl/group.hpp"

namespace tvl {

/// The builtin fixture corpus: cyclic groups up to order 16, dihedral groups
/// up to order 16, Q8, S3, S4, A4, C2xC4, C2^3, Q8xC2, D8xC2, C4oC4, Q8oC4.
std::vector<GroupPtr> builtin_corpus();

/// Export the corpus as one JSON group file per group (Cayley form).
/// Returns the written paths, sorted.
std::vector<std::filesystem::path> write_corpus_files(const std::filesystem::path& directory);

}  // namespace tvl
