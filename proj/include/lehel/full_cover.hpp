#pragma once

#include <utility>

#include "lehel/partition.hpp"

namespace lehel {

enum class CoverVariant { A, B };

/// A monochromatic 2-edge ell-cycle spanning L, |L| = 2(k-ell). Only edges
/// inside L are queried. Requires 2*ell < k.
std::pair<EllCycle, Colour> find_mono_two_edge_cycle(const ColouringOracle& oracle,
                                                      const VertexList& L);

/// Covers all n vertices: the theorem certificate plus 2-edge patches on the
/// leftover, taken in blocks of 2(k-ell) by ascending id, and a final
/// degenerate cycle of k-ell vertices when one remains. At most 4 items for
/// variant a, 3 for variant b.
Certificate cover_all_vertices(const ColouringOracle& oracle, CoverVariant variant,
                               EngineStats* stats = nullptr);

}  // namespace lehel
