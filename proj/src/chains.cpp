#include "lehel/chains.hpp"

#include <algorithm>
#include <unordered_set>

namespace lehel {

namespace {

void check_distinct(const Params& params, const VertexList& vseq) {
  std::vector<char> seen(params.n() + 1, 0);
  for (Vertex v : vseq) {
    if (v < 1 || v > params.n()) throw InvalidArgument("vertex out of range");
    if (seen[v]) throw InvalidArgument("duplicate vertex " + std::to_string(v));
    seen[v] = 1;
  }
}

VertexList sorted_intersection(const VertexList& a, const VertexList& b) {
  VertexList sa = a, sb = b, out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

VertexList sorted_difference(const VertexList& a, const VertexList& remove1,
                             const VertexList& remove2) {
  VertexList out;
  for (Vertex v : a)
    if (std::find(remove1.begin(), remove1.end(), v) == remove1.end() &&
        std::find(remove2.begin(), remove2.end(), v) == remove2.end())
      out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VertexList segment(std::span<const Vertex> e, Segment which, const Params& p) {
  if (static_cast<int>(e.size()) != p.k()) throw InvalidArgument("edge view must have k vertices");
  switch (which) {
    case Segment::Minus:
      return VertexList(e.begin(), e.begin() + p.ell());
    case Segment::Plus:
      return VertexList(e.end() - p.ell(), e.end());
    case Segment::Interior:
      return VertexList(e.begin() + p.ell(), e.end() - p.ell());
  }
  return {};
}

VertexList segment(std::span<const Vertex> e, const std::vector<int>& positions,
                   const Params& p) {
  if (static_cast<int>(e.size()) != p.k()) throw InvalidArgument("edge view must have k vertices");
  VertexList out;
  for (int i : positions) {
    if (i < 1 || i > p.k()) throw InvalidArgument("position outside [k]");
    out.push_back(e[i - 1]);
  }
  return out;
}

// ---- EllPath ---------------------------------------------------------------

VertexList EllPath::edge(int i) const {
  if (i < 1 || i > length_) throw InvalidArgument("path edge index out of range");
  auto first = vseq_.begin() + (i - 1) * params_.step();
  return VertexList(first, first + params_.k());
}

std::vector<VertexList> EllPath::edges() const {
  std::vector<VertexList> out;
  for (int i = 1; i <= length_; ++i) out.push_back(edge(i));
  return out;
}

EllPath EllPath::subpath(int first, int last) const {
  if (first > last) return EllPath(params_);
  if (first < 1 || last > length_) throw InvalidArgument("subpath range out of bounds");
  auto begin = vseq_.begin() + (first - 1) * params_.step();
  auto end = vseq_.begin() + (last - 1) * params_.step() + params_.k();
  return assemble_path(params_, VertexList(begin, end));
}

EllPath assemble_path(const Params& params, VertexList vseq) {
  EllPath p(params);
  if (vseq.empty()) return p;
  int len = static_cast<int>(vseq.size());
  if (len < params.k() || (len - params.ell()) % params.step() != 0)
    throw InvalidArgument("path length must be m(k-ell)+ell with m >= 1");
  check_distinct(params, vseq);
  p.length_ = (len - params.ell()) / params.step();
  p.vseq_ = std::move(vseq);
  return p;
}

// ---- EllCycle --------------------------------------------------------------

VertexList EllCycle::edge(int i) const {
  int m = length_;
  int idx = ((i - 1) % m + m) % m;
  VertexList out(params_.k());
  int len = static_cast<int>(vseq_.size());
  for (int j = 0; j < params_.k(); ++j) out[j] = vseq_[(idx * params_.step() + j) % len];
  return out;
}

std::vector<VertexList> EllCycle::edges() const {
  std::vector<VertexList> out;
  for (int i = 1; i <= length_; ++i) out.push_back(edge(i));
  return out;
}

EllPath EllCycle::arc(int first, int count) const {
  if (count <= 0) return EllPath(params_);
  if (count >= length_) throw InvalidArgument("arc must omit at least one edge");
  int len = static_cast<int>(vseq_.size());
  int start = (((first - 1) % length_ + length_) % length_) * params_.step();
  VertexList out;
  for (int j = 0; j < count * params_.step() + params_.ell(); ++j)
    out.push_back(vseq_[(start + j) % len]);
  return assemble_path(params_, std::move(out));
}

EllCycle assemble_cycle(const Params& params, VertexList vseq) {
  int len = static_cast<int>(vseq.size());
  if (len % params.step() != 0) throw InvalidArgument("cycle length must be m(k-ell)");
  if (len / params.step() < 2) throw InvalidArgument("cycle needs at least two edges");
  check_distinct(params, vseq);
  EllCycle c(params);
  c.length_ = len / params.step();
  c.vseq_ = std::move(vseq);
  return c;
}

std::optional<EllCycle> cycle_from_edges(const Params& params,
                                         const std::vector<VertexList>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m < 2) return std::nullopt;
  for (const auto& e : edges)
    if (static_cast<int>(e.size()) != params.k()) return std::nullopt;
  VertexList vseq;
  if (m == 2) {
    VertexList common = sorted_intersection(edges[0], edges[1]);
    if (static_cast<int>(common.size()) != 2 * params.ell()) return std::nullopt;
    VertexList a(common.begin(), common.begin() + params.ell());
    VertexList b(common.begin() + params.ell(), common.end());
    VertexList mid0 = sorted_difference(edges[0], common, {});
    VertexList mid1 = sorted_difference(edges[1], common, {});
    for (const auto* part : {&a, &mid0, &b, &mid1}) vseq.insert(vseq.end(), part->begin(), part->end());
  } else {
    std::vector<VertexList> joints(m);  // joints[i] = edges[i-1] & edges[i]
    for (int i = 0; i < m; ++i) {
      joints[i] = sorted_intersection(edges[(i + m - 1) % m], edges[i]);
      if (static_cast<int>(joints[i].size()) != params.ell()) return std::nullopt;
    }
    for (int i = 0; i < m; ++i) {
      const VertexList& head = joints[i];
      const VertexList& tail = joints[(i + 1) % m];
      if (!sorted_intersection(head, tail).empty()) return std::nullopt;
      vseq.insert(vseq.end(), head.begin(), head.end());
      VertexList mid = sorted_difference(edges[i], head, tail);
      vseq.insert(vseq.end(), mid.begin(), mid.end());
    }
  }
  try {
    EllCycle c = assemble_cycle(params, std::move(vseq));
    // every window must reproduce the requested edge set
    for (int i = 0; i < m; ++i) {
      VertexList w = c.edge(i + 1), e = edges[i];
      std::sort(w.begin(), w.end());
      std::sort(e.begin(), e.end());
      if (w != e) return std::nullopt;
    }
    return c;
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

EllCycle splice(const EllCycle& cycle, const std::set<int>& remove,
                const std::vector<VertexList>& inserts) {
  const int m = cycle.length();
  if (remove.empty()) {
    if (!inserts.empty()) throw InvalidArgument("splice: inserts need a removed run");
    return cycle;
  }
  for (int i : remove)
    if (i < 1 || i > m) throw InvalidArgument("splice: edge index out of range");
  // locate the start of the removed run: an index whose predecessor is kept
  int start = -1;
  for (int i : remove) {
    int prev = (i - 2 + m) % m + 1;
    if (!remove.count(prev)) {
      if (start != -1) throw InvalidArgument("splice: removed edges must be contiguous");
      start = i;
    }
  }
  std::vector<VertexList> edges;
  if (start == -1) {
    // every edge removed
    edges = inserts;
  } else {
    int run = static_cast<int>(remove.size());
    edges = inserts;
    for (int j = 0; j < m - run; ++j) edges.push_back(cycle.edge(start + run + j));
  }
  auto c = cycle_from_edges(cycle.params(), edges);
  if (!c) throw InvalidArgument("splice: result is not a valid ell-cycle");
  // keep the original anchoring when edge 1 survives
  if (start != -1 && start != 1) {
    int run = static_cast<int>(remove.size());
    int ins = static_cast<int>(inserts.size());
    return rotate(*c, ins + ((1 - start - run) % m + m) % m);
  }
  return *c;
}

EllPath reverse(const EllPath& path) {
  VertexList v(path.vseq().rbegin(), path.vseq().rend());
  return assemble_path(path.params(), std::move(v));
}

EllCycle reverse(const EllCycle& cycle) {
  // edge i of the result is edge (m+1-i) read backwards
  const auto& s = cycle.vseq();
  int len = static_cast<int>(s.size());
  VertexList v(len);
  for (int j = 0; j < len; ++j) v[j] = s[((cycle.params().k() - 1 - j) % len + len) % len];
  return assemble_cycle(cycle.params(), std::move(v));
}

EllCycle rotate(const EllCycle& cycle, int by) {
  const auto& s = cycle.vseq();
  int len = static_cast<int>(s.size());
  int m = cycle.length();
  int shift = ((by % m + m) % m) * cycle.params().step();
  VertexList v(len);
  for (int j = 0; j < len; ++j) v[j] = s[(j + shift) % len];
  return assemble_cycle(cycle.params(), std::move(v));
}

ColourProfile colour_profile(const ColouringOracle& oracle, const EllPath& path) {
  ColourProfile prof;
  if (path.empty()) return prof;
  std::vector<Colour> cs;
  for (int i = 1; i <= path.length(); ++i) cs.push_back(oracle.colour_of(path.edge(i)));
  prof.lead = cs[0];
  int changes = 0;
  prof.turning_point = path.length();
  for (int i = 1; i < path.length(); ++i) {
    if (cs[i] != cs[i - 1]) {
      if (++changes == 1) prof.turning_point = i;
    }
  }
  if (changes == 0) prof.kind = ColourProfile::Kind::Monochromatic;
  else if (changes == 1) prof.kind = ColourProfile::Kind::BlueRed;
  else prof.kind = ColourProfile::Kind::Invalid;
  return prof;
}

// ---- Certificate -----------------------------------------------------------

int claim_bound(const Params& p, Claim claim) {
  switch (claim) {
    case Claim::TheoremA: return 4 * p.step();
    case Claim::TheoremB: return 2 * p.step();
    case Claim::CoverA:
    case Claim::CoverB: return 0;
    case Claim::None: break;
  }
  return p.n();
}

int Certificate::cycle_count() const { return static_cast<int>(items.size()); }

void Certificate::add_cycle(const EllCycle& c, Colour colour) {
  items.push_back({CertificateItem::Kind::Cycle, c.vseq(), colour});
}

void Certificate::add_degenerate(VertexList vertices) {
  std::sort(vertices.begin(), vertices.end());
  items.push_back({CertificateItem::Kind::Degenerate, std::move(vertices), std::nullopt});
}

void Certificate::fill_uncovered() {
  std::vector<char> covered(params.n() + 1, 0);
  for (const auto& it : items)
    for (Vertex v : it.vseq)
      if (v >= 1 && v <= params.n()) covered[v] = 1;
  uncovered.clear();
  for (int v = 1; v <= params.n(); ++v)
    if (!covered[v]) uncovered.push_back(v);
}

}  // namespace lehel
