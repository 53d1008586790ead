#pragma once

#include "lehel/decomp.hpp"

namespace lehel {

/// Configuration evolved by the improvement loop: a monochromatic cycle and a
/// disjoint monochromatic path of the other colour.
struct EngineState {
  EllCycle cycle;
  Colour cycle_colour;
  EllPath path;

  int covered() const {
    return static_cast<int>(cycle.vseq().size() + path.vseq().size());
  }
};

/// Shortens the path from its far end until the state covers exactly
/// `target_covered` vertices. The difference must be a multiple of k-ell; it
/// may consume the whole path (the state then covers only the cycle).
EngineState trim_path(EngineState state, int target_covered);

/// Two vertex-disjoint monochromatic cycles of different colours (either may
/// be absent) leaving at most 4(k-ell) vertices uncovered.
Certificate partition_theorem_a(const ColouringOracle& oracle, EngineStats* stats = nullptr);

/// As partition_theorem_a with at most 2(k-ell) uncovered vertices. Requires
/// 3*ell <= k.
Certificate partition_theorem_b(const ColouringOracle& oracle, EngineStats* stats = nullptr);


}  // namespace lehel
