#include "tvl/config.hpp"

#include <cstdlib>
#include <string>

namespace tvl {

static Config read_env_config() {
  Config cfg;
  if (const char* cap = std::getenv("TRANSVERSAL_LAB_CAP")) {
    try {
      long long v = std::stoll(cap);
      if (v > 0) {
        cfg.closure_cap = v;
        cfg.search_cap = v;
      }
    } catch (...) {
      // unparsable values are ignored, defaults stand
    }
  }
  return cfg;
}

const Config& default_config() {
  static const Config cfg = read_env_config();
  return cfg;
}

}  // namespace tvl
