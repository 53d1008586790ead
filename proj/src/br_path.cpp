#include "lehel/br_path.hpp"

#include <algorithm>
#include <atomic>

namespace lehel {

namespace {
std::atomic<bool> g_checks{true};
}

void set_invariant_checks(bool enabled) { g_checks = enabled; }
bool invariant_checks_enabled() { return g_checks; }

void detail::require(bool cond, const char* what) {
  if (!cond) throw InvariantViolation(what);
}

namespace {

VertexList uncovered_of(const Params& p, const VertexList& vseq) {
  std::vector<char> used(p.n() + 1, 0);
  for (Vertex v : vseq) used[v] = 1;
  VertexList out;
  for (int v = 1; v <= p.n(); ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

VertexList concat(std::initializer_list<const VertexList*> parts) {
  VertexList out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

VertexList slice(const VertexList& v, std::size_t from, std::size_t to) {
  return VertexList(v.begin() + from, v.begin() + to);
}

}  // namespace

BlueRedPath find_blue_red_path(const ColouringOracle& oracle, EngineStats* stats) {
  const Params& p = oracle.params();
  if (p.n() < p.k()) throw InvalidArgument("find_blue_red_path needs n >= k");
  const int ell = p.ell(), step = p.step(), inner = p.interior();
  const std::uint64_t q0 = oracle.query_count();

  VertexList vseq;
  for (int v = 1; v <= p.k(); ++v) vseq.push_back(v);
  int m = 1, m0 = 1;
  Colour lead = oracle.colour_of(vseq);
  int rounds = 0;

  auto check = [&] {
    if (!invariant_checks_enabled()) return;
    EllPath path = assemble_path(p, vseq);
    detail::require(path.length() == m, "br_path: length mismatch");
    ColourProfile prof = colour_profile(oracle, path);
    detail::require(prof.kind != ColourProfile::Kind::Invalid, "br_path: more than one colour change");
    detail::require(prof.turning_point == m0 && prof.lead == lead, "br_path: turning point mismatch");
  };

  for (;;) {
    VertexList z = uncovered_of(p, vseq);
    if (static_cast<int>(z.size()) == inner) break;
    detail::require(static_cast<int>(z.size()) >= 2 * p.k() - 3 * ell, "br_path: uncovered set too small");
    detail::require(rounds <= p.n0(), "br_path: round cap exceeded");
    ++rounds;
    VertexList z0 = slice(z, 0, ell);
    VertexList z1 = slice(z, ell, ell + inner);
    VertexList z2 = slice(z, ell + inner, ell + 2 * inner);
    const Colour tail = swap(lead);

    VertexList first_minus = slice(vseq, 0, ell);
    VertexList last_plus = slice(vseq, vseq.size() - ell, vseq.size());

    // (i) prepend at the lead end
    VertexList e_r = concat({&z0, &z1, &first_minus});
    if (oracle.colour_of(e_r) == lead) {
      vseq = concat({&z0, &z1, &vseq});
      ++m;
      ++m0;
      check();
      continue;
    }
    // (ii) append at the tail end
    VertexList e_b = concat({&last_plus, &z1, &z0});
    Colour cb = oracle.colour_of(e_b);
    if (m0 == m || cb == tail) {
      vseq = concat({&vseq, &z1, &z0});
      if (m0 == m && cb == lead) m0 = m + 1;
      ++m;
      check();
      continue;
    }
    // (iii) both end extensions have the wrong colour, so m0 < m
    detail::require(m0 < m, "br_path: expected a colour change");
    VertexList turn = slice(vseq, static_cast<std::size_t>(m0) * step,
                            static_cast<std::size_t>(m0) * step + ell);
    VertexList e = concat({&turn, &z2, &z0});
    if (oracle.colour_of(e) == lead) {
      // colour symmetry: read the path backwards
      std::reverse(vseq.begin(), vseq.end());
      m0 = m - m0;
      lead = tail;
    }
    const Colour new_lead = swap(lead);
    VertexList tail_part = slice(vseq, static_cast<std::size_t>(m0) * step, vseq.size());
    VertexList tail_rev(tail_part.rbegin(), tail_part.rend());
    VertexList lead_part = slice(vseq, 0, static_cast<std::size_t>(m0 - 1) * step + ell);
    vseq = concat({&tail_rev, &z2, &z0, &z1, &lead_part});
    m0 = (m - m0) + 2;
    ++m;
    lead = new_lead;
    check();
  }

  EllPath path = assemble_path(p, vseq);
  detail::require(static_cast<int>(vseq.size()) == p.n() - p.k() + 2 * ell, "br_path: wrong final size");
  detail::require(static_cast<int>(vseq.size()) % step == ell % step, "br_path: size congruence fails");
  if (stats) {
    stats->iterations += rounds;
    stats->queries = oracle.query_count() - q0;
  }
  return BlueRedPath{std::move(path), m0, lead};
}

}  // namespace lehel
