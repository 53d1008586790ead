#pragma once

#include <cstdint>
#include <stdexcept>

#include "lehel/chains.hpp"

namespace lehel {

/// Thrown when an engine reaches a state that breaks one of its invariants.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Toggles the per-step structural re-validation performed by the engines
/// (on by default).
void set_invariant_checks(bool enabled);
bool invariant_checks_enabled();

/// Counters reported by the constructive engines.
struct EngineStats {
  int iterations = 0;          // improvement rounds
  std::uint64_t queries = 0;   // distinct oracle queries made by the run
  int relabelings = 0;         // restarts under a vertex relabeling
};

/// Blue-red ell-path covering all but k-2*ell vertices, grown from the edge
/// {1..k} by repeated one-edge extensions. The lead colour is the colour of
/// edge 1. Requires n >= k.
BlueRedPath find_blue_red_path(const ColouringOracle& oracle, EngineStats* stats = nullptr);

namespace detail {
void require(bool cond, const char* what);
}

}  // namespace lehel
