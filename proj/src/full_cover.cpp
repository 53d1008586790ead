#include "lehel/full_cover.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>

namespace lehel {

namespace {

// Calls fn(subset) for each size-r subset of `from` in lexicographic order of
// positions; stops early when fn returns true.
template <typename Fn>
bool for_each_subset(const VertexList& from, int r, Fn fn) {
  const int n = static_cast<int>(from.size());
  if (r < 0 || r > n) return false;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  VertexList pick(r);
  for (;;) {
    for (int i = 0; i < r; ++i) pick[i] = from[idx[i]];
    if (fn(pick)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::pair<EllCycle, Colour> find_mono_two_edge_cycle(const ColouringOracle& oracle,
                                                      const VertexList& L) {
  const Params& p = oracle.params();
  if (2 * p.ell() == p.k())
    throw InvalidArgument("2-edge patches need 2*ell < k (at ell = k/2 both edges coincide)");
  if (static_cast<int>(L.size()) != 2 * p.step())
    throw InvalidArgument("patch set must have exactly 2(k-ell) = " + std::to_string(2 * p.step()) +
                          " vertices, got " + std::to_string(L.size()));
  VertexList set = L;
  std::sort(set.begin(), set.end());
  for (Vertex v : set)
    if (v < 1 || v > p.n()) throw InvalidArgument("patch vertex out of range");
  if (std::adjacent_find(set.begin(), set.end()) != set.end())
    throw InvalidArgument("patch set has a repeated vertex");

  std::optional<std::pair<EllCycle, Colour>> found;
  for_each_subset(set, p.k(), [&](const VertexList& e) {
    const Colour c = oracle.colour_of(e);
    VertexList rest;
    std::set_difference(set.begin(), set.end(), e.begin(), e.end(), std::back_inserter(rest));
    return for_each_subset(e, 2 * p.ell(), [&](const VertexList& shared) {
      VertexList f = rest;
      f.insert(f.end(), shared.begin(), shared.end());
      std::sort(f.begin(), f.end());
      if (oracle.colour_of(f) != c) return false;
      auto cyc = cycle_from_edges(p, {e, f});
      if (!cyc) return false;
      found.emplace(std::move(*cyc), c);
      return true;
    });
  });
  if (!found) throw InvariantViolation("no monochromatic 2-edge cycle on the patch set");
  return std::move(*found);
}

Certificate cover_all_vertices(const ColouringOracle& oracle, CoverVariant variant,
                               EngineStats* stats) {
  const Params& p = oracle.params();
  Certificate cert = variant == CoverVariant::A ? partition_theorem_a(oracle, stats)
                                                : partition_theorem_b(oracle, stats);
  const std::uint64_t q0 = oracle.query_count();
  cert.claim = variant == CoverVariant::A ? Claim::CoverA : Claim::CoverB;
  VertexList left = cert.uncovered;
  detail::require(left.size() % p.step() == 0, "cover: leftover is not a multiple of k-ell");
  std::size_t at = 0;
  const std::size_t block = 2 * static_cast<std::size_t>(p.step());
  while (left.size() - at >= block) {
    VertexList L(left.begin() + at, left.begin() + at + block);
    auto [cyc, colour] = find_mono_two_edge_cycle(oracle, L);
    cert.add_cycle(cyc, colour);
    at += block;
  }
  if (at < left.size()) cert.add_degenerate(VertexList(left.begin() + at, left.end()));
  cert.fill_uncovered();
  const std::size_t limit = variant == CoverVariant::A ? 4 : 3;
  detail::require(cert.uncovered.empty() && cert.items.size() <= limit, "cover: item bound exceeded");
  if (stats) stats->queries += oracle.query_count() - q0;
  return cert;
}

}  // namespace lehel
