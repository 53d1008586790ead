#include "lehel/decomp.hpp"

#include <algorithm>

namespace lehel {

namespace {

VertexList uncovered_of(const Params& p, const VertexList& vseq) {
  std::vector<char> used(p.n() + 1, 0);
  for (Vertex v : vseq) used[v] = 1;
  VertexList out;
  for (int v = 1; v <= p.n(); ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

VertexList slice(const VertexList& v, std::size_t from, std::size_t to) {
  return VertexList(v.begin() + from, v.begin() + to);
}

void append(VertexList& dst, const VertexList& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

CyclePath decompose_cycle_path(const ColouringOracle& oracle, EngineStats* stats) {
  const Params& p = oracle.params();
  if (p.n0() < 3) throw InvalidArgument("decompose_cycle_path needs n/(k-ell) >= 3");
  const std::uint64_t q0 = oracle.query_count();
  EngineStats inner;
  BlueRedPath start = find_blue_red_path(oracle, &inner);

  const int ell = p.ell(), step = p.step();
  VertexList vseq = start.path.vseq();
  int m = start.path.length();
  int m0 = start.turning_point;
  Colour lead = *start.lead;
  if (m - m0 > m0) {
    std::reverse(vseq.begin(), vseq.end());
    m0 = m - m0;
    lead = swap(lead);
  }
  detail::require(m >= 2, "decomp: path must have at least two edges");

  auto block = [&](int j) {  // S_j: first ell vertices of edge j (S_{m+1} = last ell)
    return slice(vseq, static_cast<std::size_t>(j - 1) * step, static_cast<std::size_t>(j - 1) * step + ell);
  };

  int rounds = 0;
  auto finish = [&](EllCycle cycle, Colour cc, EllPath path, std::optional<Colour> pc) {
    if (stats) {
      stats->iterations += rounds;  // local-search rounds only; path growth is not counted
      stats->queries = oracle.query_count() - q0;
    }
    return CyclePath{std::move(cycle), cc, std::move(path), pc};
  };

  while (m0 < m) {
    detail::require(rounds <= p.n0(), "decomp: round cap exceeded");
    ++rounds;
    VertexList z = uncovered_of(p, vseq);
    VertexList e = block(m0 + 1);
    append(e, z);
    append(e, block(m + 1));
    if (oracle.colour_of(e) == lead) {
      VertexList next = slice(vseq, 0, static_cast<std::size_t>(m0) * step + ell);
      append(next, z);
      VertexList rest = slice(vseq, static_cast<std::size_t>(m0 + 1) * step, vseq.size());
      next.insert(next.end(), rest.rbegin(), rest.rend());
      vseq = std::move(next);
      ++m0;
      if (invariant_checks_enabled()) {
        ColourProfile prof = colour_profile(oracle, assemble_path(p, vseq));
        detail::require(prof.kind != ColourProfile::Kind::Invalid && prof.turning_point == m0,
                        "decomp: improvement broke the blue-red structure");
      }
      continue;
    }
    // close the minority section with e
    VertexList cyc = slice(vseq, static_cast<std::size_t>(m0) * step, vseq.size());
    append(cyc, z);
    EllCycle cycle = assemble_cycle(p, std::move(cyc));
    EllPath path = m0 >= 2 ? assemble_path(p, slice(vseq, 0, static_cast<std::size_t>(m0 - 1) * step + ell))
                           : EllPath(p);
    std::optional<Colour> pc;
    if (!path.empty()) pc = lead;
    return finish(std::move(cycle), swap(lead), std::move(path), pc);
  }

  // monochromatic path: try to close it
  VertexList z = uncovered_of(p, vseq);
  VertexList first_inner = slice(vseq, ell, step);
  VertexList body = slice(vseq, step, vseq.size());  // e_2 .. e_m
  VertexList close1 = block(2), close2 = block(2);
  append(close1, first_inner);
  append(close1, block(m + 1));
  append(close2, z);
  append(close2, block(m + 1));
  ++rounds;
  if (oracle.colour_of(close1) == lead) {
    VertexList cyc = body;
    append(cyc, first_inner);
    return finish(assemble_cycle(p, std::move(cyc)), lead, EllPath(p), std::nullopt);
  }
  if (oracle.colour_of(close2) == lead) {
    VertexList cyc = body;
    append(cyc, z);
    return finish(assemble_cycle(p, std::move(cyc)), lead, EllPath(p), std::nullopt);
  }
  // both closing edges have the other colour: they form a two-edge cycle
  auto two = cycle_from_edges(p, {close1, close2});
  detail::require(two.has_value(), "decomp: closing edges do not form a cycle");
  EllPath path = m - 1 >= 3 ? assemble_path(p, slice(vseq, 2 * static_cast<std::size_t>(step),
                                                     static_cast<std::size_t>(m - 1) * step + ell))
                            : EllPath(p);
  std::optional<Colour> pc;
  if (!path.empty()) pc = lead;
  return finish(std::move(*two), swap(lead), std::move(path), pc);
}

}  // namespace lehel
