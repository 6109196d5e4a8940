#pragma once

namespace tvl {

/// Resource limits. The environment variable TRANSVERSAL_LAB_CAP, when set,
/// overrides both closure_cap and search_cap in default_config().
struct Config {
  long long closure_cap = 1'000'000;    // max elements enumerated by a closure
  long long search_cap = 10'000'000;    // brute-force search node budget
  int class_cap = 64;                   // max k(G) for the normal-subgroup lattice
};

const Config& default_config();

}  // namespace tvl
