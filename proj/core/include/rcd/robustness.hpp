#pragma once

#include <cstdint>
#include <vector>

#include "rcd/decompose.hpp"

namespace rcd {

enum class ZPrimeStrategy {
  Random,  // uniform subsets of Z_i
  Cut,     // cut vertices of G[Z_i] first, then by degree in G[Z_i]
};

struct RobustnessOptions {
  int samples = 20;
  std::uint64_t seed = 0;
  int s_max = 5;
  double threshold = 3.0;
  ZPrimeStrategy strategy = ZPrimeStrategy::Random;
  int exact_limit = kExactLimitDefault;

  static constexpr int kExactLimitDefault = 15;
};

struct RobustnessSample {
  int cls = 0;  // 0-based class index
  VertexSet zprime;
  int contracted_n = 0;
  int tw_upper = 0;
  int tw_exact = -1;  // -1 when the contracted graph exceeds exact_limit
  double ratio = 0;   // (exact if known, else upper) / (p + |Z'| + 1)
};

struct RobustnessReport {
  std::vector<RobustnessSample> samples;
  double max_ratio = 0;
  double threshold = 0;
  bool pass = true;
};

// Samples Z' ⊆ Z_i with |Z'| <= s_max and bounds tw(G / (Z_i \ Z')). The
// first sample of each class uses Z' = ∅.
RobustnessReport verify_rcd(const Graph& g, const Rcd& rcd, const RobustnessOptions& opt);

}  // namespace rcd
