#pragma once

#include <cstdint>
#include <stdexcept>

#include "lehel/chains.hpp"

namespace lehel {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteResult {
  int min_uncovered = 0;
  Certificate witness;
  std::uint64_t cycles = 0;  // monochromatic cycles enumerated
};

/// Largest n accepted by the brute force (vertex sets are bitmasks).
constexpr int kBruteMaxVertices = 20;

/// Exact minimum of n - |V(C_blue) + V(C_red)| over vertex-disjoint pairs in
/// which each slot holds a monochromatic ell-cycle of that colour, a
/// degenerate cycle, or nothing. Cycles are enumerated in canonical form
/// (every block sorted, the least vertex in the first k-ell positions);
/// enumeration stops with BudgetExceeded after `budget` search nodes.
BruteResult brute_force_min_uncovered(const ColouringOracle& oracle,
                                      std::uint64_t budget = 50'000'000);

}  // namespace lehel
