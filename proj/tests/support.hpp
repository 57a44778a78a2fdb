#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "doctest.h"

namespace fct {

// FUSIONCAT_SEED overrides the default; the seed in use is always printed.
inline std::mt19937_64 seeded_rng(const std::string& what, uint64_t fallback = 20240611) {
  uint64_t seed = fallback;
  if (const char* s = std::getenv("FUSIONCAT_SEED")) seed = std::strtoull(s, nullptr, 10);
  std::cout << "[seed] " << what << " = " << seed << "\n";
  return std::mt19937_64(seed);
}

}  // namespace fct
