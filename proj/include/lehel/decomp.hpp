#pragma once

#include <optional>

#include "lehel/br_path.hpp"

namespace lehel {

/// A monochromatic ell-cycle and a disjoint monochromatic ell-path of the
/// other colour. `path_colour` is empty exactly when the path is empty.
struct CyclePath {
  EllCycle cycle;
  Colour cycle_colour;
  EllPath path;
  std::optional<Colour> path_colour;
};

/// Splits the vertex set into a monochromatic cycle with at least two edges
/// and a disjoint monochromatic path of the other colour, starting from
/// find_blue_red_path and lengthening its longer monochromatic section.
/// Requires n0 = n/(k-ell) >= 3.
CyclePath decompose_cycle_path(const ColouringOracle& oracle, EngineStats* stats = nullptr);

}  // namespace lehel
