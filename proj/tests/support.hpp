#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls library code beyond Params and ColouringOracle::colour_of.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "lehel/colouring.hpp"

namespace oracle {

using lehel::Colour;
using lehel::ColouringOracle;
using lehel::Params;
using lehel::Vertex;
using lehel::VertexList;

// All k-subsets of [n], sorted ascending inside, listed in colex order
// (compare largest elements first).
inline std::vector<VertexList> colex_order(int n, int k) {
  std::vector<VertexList> all;
  std::vector<int> mask(n, 0);
  std::fill(mask.end() - k, mask.end(), 1);
  do {
    VertexList s;
    for (int i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i + 1);
    all.push_back(s);
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(all.begin(), all.end(), [](const VertexList& a, const VertexList& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return all;
}

// Windows of a cyclic vertex sequence, as sorted sets.
inline std::vector<VertexList> windows(const Params& p, const VertexList& seq) {
  const int m = static_cast<int>(seq.size()) / p.step();
  std::vector<VertexList> out;
  for (int i = 0; i < m; ++i) {
    VertexList e;
    for (int j = 0; j < p.k(); ++j) e.push_back(seq[(i * p.step() + j) % seq.size()]);
    std::sort(e.begin(), e.end());
    out.push_back(e);
  }
  return out;
}

inline int common(const VertexList& a, const VertexList& b) {
  VertexList x;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(x));
  return static_cast<int>(x.size());
}

// An ell-cycle by definition: distinct vertices, m >= 2 windows, consecutive
// windows share exactly ell vertices (2*ell when m = 2).
inline bool is_cycle(const Params& p, const VertexList& seq) {
  if (seq.empty() || seq.size() % p.step() != 0) return false;
  std::set<Vertex> s(seq.begin(), seq.end());
  if (s.size() != seq.size() || *s.begin() < 1 || *s.rbegin() > p.n()) return false;
  auto w = windows(p, seq);
  const int m = static_cast<int>(w.size());
  if (m < 2) return false;
  if (m == 2) return common(w[0], w[1]) == (p.is_half() ? p.k() : 2 * p.ell());
  for (int i = 0; i < m; ++i)
    if (common(w[i], w[(i + 1) % m]) != p.ell()) return false;
  return true;
}

inline bool monochromatic(const ColouringOracle& o, const std::vector<VertexList>& edges, Colour c) {
  return std::all_of(edges.begin(), edges.end(), [&](const VertexList& e) { return o.colour_of(e) == c; });
}

// Minimum uncovered count over pairs (blue slot, red slot), each a
// monochromatic cycle of that colour, a set of k-ell vertices, or empty.
// Enumerates every ordered vertex sequence of every admissible length.
inline int naive_min_uncovered(const ColouringOracle& o) {
  const Params& p = o.params();
  const std::uint32_t full = 1u << p.n();
  std::vector<char> ok[2] = {std::vector<char>(full, 0), std::vector<char>(full, 0)};
  for (std::uint32_t m = 0; m < full; ++m)
    if (m == 0 || std::popcount(m) == p.step()) ok[0][m] = ok[1][m] = 1;
  for (std::uint32_t m = 1; m < full; ++m) {
    const int size = std::popcount(m);
    if (size % p.step() != 0 || size / p.step() < 2) continue;
    VertexList seq;
    for (int v = 1; v <= p.n(); ++v)
      if (m >> (v - 1) & 1u) seq.push_back(v);
    do {
      if (!is_cycle(p, seq)) continue;
      auto w = windows(p, seq);
      for (int c = 0; c < 2; ++c)
        if (!ok[c][m] && monochromatic(o, w, static_cast<Colour>(c))) ok[c][m] = 1;
    } while ((!ok[0][m] || !ok[1][m]) && std::next_permutation(seq.begin(), seq.end()));
  }
  int best = p.n();
  for (std::uint32_t b = 0; b < full; ++b)
    for (std::uint32_t r = 0; r < full; ++r)
      if (!(b & r) && ok[0][b] && ok[1][r]) best = std::min(best, p.n() - std::popcount(b | r));
  return best;
}

}  // namespace oracle
