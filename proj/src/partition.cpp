#include "lehel/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace lehel {

namespace {

using Edges = std::vector<VertexList>;

template <typename... Parts>
VertexList cat(const Parts&... parts) {
  VertexList out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

VertexList slice(const VertexList& v, int from, int to) {
  return VertexList(v.begin() + from, v.begin() + to);
}

enum class Variant { A, B };

/// Result of one engine round: either a finished certificate or a state with
/// a strictly longer cycle.
struct Outcome {
  std::optional<Certificate> cert;
  std::optional<EngineState> next;
};

/// The improvement step reached a configuration too small for the case
/// analysis; the caller retries under a relabeling.
struct SmallCaseStuck : InvariantViolation {
  SmallCaseStuck() : InvariantViolation("partition: no move for m_c = 3, m_p = 1") {}
};

class Engine {
 public:
  Engine(const ColouringOracle& oracle, Variant variant, const EngineState& state)
      : oracle_(oracle), p_(oracle.params()), variant_(variant), cycle_(state.cycle),
        colour_(state.cycle_colour), path_(state.path) {
    load();
  }

  Outcome step() { return variant_ == Variant::A ? step_a() : step_b(); }

 private:
  // ---- geometry ------------------------------------------------------------

  void load() {
    mc_ = cycle_.length();
    mp_ = path_.length();
    std::vector<char> used(p_.n() + 1, 0);
    for (Vertex v : cycle_.vseq()) used[v] = 1;
    for (Vertex v : path_.vseq()) used[v] = 1;
    VertexList free;
    for (int v = 1; v <= p_.n(); ++v)
      if (!used[v]) free.push_back(v);
    const int r = p_.interior();
    const int sets = variant_ == Variant::A ? 3 : 2;
    detail::require(static_cast<int>(free.size()) >= sets * r, "partition: not enough free vertices");
    free_ = free;
    z_.assign(sets, {});
    for (int t = 0; t < sets; ++t) z_[t] = slice(free, t * r, (t + 1) * r);
  }

  int wrap(int i) const { return ((i - 1) % mc_ + mc_) % mc_ + 1; }

  VertexList S(int i) const {
    int at = (wrap(i) - 1) * p_.step();
    return slice(cycle_.vseq(), at, at + p_.ell());
  }
  VertexList I(int i) const {
    int at = (wrap(i) - 1) * p_.step();
    return slice(cycle_.vseq(), at + p_.ell(), at + p_.step());
  }
  VertexList Ia(int i) const { VertexList x = I(i); return slice(x, 0, p_.ell()); }
  VertexList Ib(int i) const {
    VertexList x = I(i);
    return slice(x, static_cast<int>(x.size()) - p_.ell(), static_cast<int>(x.size()));
  }
  VertexList Ce(int i) const { return cat(S(i), I(i), S(i + 1)); }

  VertexList Pe(int j) const { return path_.edge(j); }
  Edges path_edges() const { return path_.edges(); }
  Edges path_edges_reversed() const {
    Edges e = path_.edges();
    std::reverse(e.begin(), e.end());
    return e;
  }
  VertexList f1m() const { return slice(path_.vseq(), 0, p_.ell()); }
  VertexList fp() const {
    int len = static_cast<int>(path_.vseq().size());
    return slice(path_.vseq(), len - p_.ell(), len);
  }
  VertexList PI(int j) const {
    int at = (j - 1) * p_.step();
    return slice(path_.vseq(), at + p_.ell(), at + p_.step());
  }

  /// Scratch set t (1-based). In variant B, t = 3 stands for the interior of e_i.
  VertexList Z(int t, int i = 0) const {
    if (variant_ == Variant::B && t == 3) return I(i);
    return z_[t - 1];
  }
  VertexList u(int t, int i) const { return cat(S(i), Z(t, i), f1m()); }
  VertexList v(int t, int i) const { return cat(fp(), Z(t, i), S(i)); }
  VertexList w(int t) const { return cat(f1m(), Z(t), fp()); }

  bool blue(const VertexList& e) const { return oracle_.colour_of(e) == colour_; }
  bool red(const VertexList& e) const { return !blue(e); }
  Colour other() const { return swap(colour_); }

  // ---- constructions -------------------------------------------------------

  EllCycle build(const Edges& edges, const char* what) const {
    auto c = cycle_from_edges(p_, edges);
    if (!c) throw InvariantViolation(std::string("partition: construction failed: ") + what);
    return *c;
  }

  /// Cycle edges with e_first .. e_{first+count-1} replaced by `inserts`.
  Edges replaced(int first, int count, const Edges& inserts) const {
    Edges out = inserts;
    for (int j = 0; j < mc_ - count; ++j) out.push_back(Ce(first + count + j));
    return out;
  }

  /// The path closed through the given extra edges (from its last edge back to its first).
  Edges closed_path(const Edges& extra) const {
    Edges out = path_edges();
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }

  Outcome advance(EllCycle cycle, Colour colour, EllPath path, const char* what) const {
    detail::require(cycle.length() > mc_, what);
    if (invariant_checks_enabled())
      for (const auto& e : cycle.edges())
        if (oracle_.colour_of(e) != colour)
          throw InvariantViolation(std::string("partition: not monochromatic after ") + what);
    return Outcome{std::nullopt, EngineState{std::move(cycle), colour, std::move(path)}};
  }

  Outcome grow(const Edges& edges, EllPath path, const char* what) const {
    return advance(build(edges, what), colour_, std::move(path), what);
  }

  Outcome swap_roles(const Edges& red_cycle, EllPath blue_path, const char* what) const {
    return advance(build(red_cycle, what), other(), std::move(blue_path), what);
  }

  Outcome finish(std::vector<std::pair<EllCycle, Colour>> cycles) const {
    Certificate cert{p_, {}, {}, variant_ == Variant::A ? Claim::TheoremA : Claim::TheoremB};
    for (auto& [c, col] : cycles) cert.add_cycle(c, col);
    cert.fill_uncovered();
    return Outcome{std::move(cert), std::nullopt};
  }

  Outcome cycle_only() const { return finish({{cycle_, colour_}}); }

  Outcome pair_v(int i, int t1, int t2) const {
    return grow(replaced(i, 1, {v(t1, i), v(t2, i + 1)}), path_.subpath(1, mp_ - 1), "pair-v move");
  }
  Outcome pair_u(int i, int t1, int t2) const {
    return grow(replaced(i, 1, {u(t1, i), u(t2, i + 1)}), path_.subpath(2, mp_), "pair-u move");
  }

  void rotate_by(int by) {
    cycle_ = rotate(cycle_, by);
  }
  void reverse_path() { path_ = reverse(path_); }

  /// Renames edges / scratch sets until u^1_1 has the path colour. Returns an
  /// improvement instead when both u^1_1 and u^2_2 have the cycle colour.
  std::optional<Outcome> ensure_u11_red() {
    if (red(u(1, 1))) return std::nullopt;
    if (blue(u(2, 2))) return pair_u(1, 1, 2);
    rotate_by(1);
    std::swap(z_[0], z_[1]);
    detail::require(red(u(1, 1)), "renaming failed");
    return std::nullopt;
  }

  // ---- cycle-arc assembly for the final case analysis --------------------

  struct Arc {
    int from;
    int to;
    bool detour = false;
    int zx = 0;  // scratch set on the u-side of a detour
    int zy = 0;  // scratch set on the v-side
  };

  Arc chord(int from, int span) const { return Arc{wrap(from), wrap(from + span)}; }

  EllCycle assemble_arcs(const std::vector<Arc>& arcs, const char* what) const {
    std::map<int, Arc> by_from;
    int start = -1;
    for (const Arc& a : arcs) {
      if (!by_from.emplace(a.from, a).second)
        throw InvariantViolation(std::string("partition: two arcs leave one block in ") + what);
      if (a.detour) start = a.from;
    }
    detail::require(start != -1, "partition: arc set without detour");
    Edges edges;
    int at = start;
    std::size_t used = 0;
    do {
      auto it = by_from.find(at);
      if (it == by_from.end())
        throw InvariantViolation(std::string("partition: arcs do not close in ") + what);
      const Arc& a = it->second;
      if (a.detour) {
        edges.push_back(u(a.zx, a.from));
        for (auto& e : path_edges()) edges.push_back(e);
        edges.push_back(v(a.zy, a.to));
      } else {
        edges.push_back(cat(S(a.from), I(a.from), S(a.to)));
      }
      ++used;
      at = a.to;
    } while (at != start && used <= arcs.size());
    if (used != arcs.size())
      throw InvariantViolation(std::string("partition: arcs form several cycles in ") + what);
    return build(edges, what);
  }

  /// g_i for i in [m_c] with i = residue (mod 3), skipping `except`.
  void add_g_class(std::vector<Arc>& arcs, int residue, std::initializer_list<int> except) const {
    for (int i = 1; i <= mc_; ++i) {
      if (i % 3 != residue % 3) continue;
      if (std::find(except.begin(), except.end(), i) != except.end()) continue;
      arcs.push_back(chord(i, 3));
    }
  }

  // ---- variant A -----------------------------------------------------------

  Outcome step_a() {
    if (mp_ <= 1) return cycle_only();

    for (int t = 1; t <= 3; ++t)
      if (red(w(t))) return finish({{cycle_, colour_}, {build(closed_path({w(t)}), "close with w"), other()}});

    if (mc_ < mp_ + 2) return claim_long_cycle_a();

    detail::require(mc_ >= 4, "partition: m_c >= 4 after the length claim");
    for (int i = 1; i <= mc_; ++i) {
      if (blue(cat(S(i), I(i), S(i + 3)))) return shortcut_a(i, 3);
      if (mc_ > 4 && blue(cat(S(i), I(i), S(i + 4)))) return shortcut_a(i, 4);
    }
    return cases_a();
  }

  Outcome claim_long_cycle_a() {
    if (auto o = ensure_u11_red()) return *o;
    if (red(v(2, 1)))
      return swap_roles(closed_path({v(2, 1), u(1, 1)}), cycle_.arc(2, mc_ - 2), "claim 1: v21 red");
    if (blue(v(3, 2))) return pair_v(1, 2, 3);
    if (red(u(1, 2)))
      return swap_roles(closed_path({v(3, 2), u(1, 2)}), cycle_.arc(3, mc_ - 2), "claim 1: u12 red");
    return grow(replaced(1, 1, {v(2, 1), w(3), u(1, 2)}), path_.subpath(2, mp_ - 1),
                "claim 1: detour through w3");
  }

  /// A blue chord S_i I_i S_{i+span} shortcuts `span` edges of the cycle.
  Outcome shortcut_a(int i, int span) {
    auto shortcut = [&] { return build(replaced(i, span, {cat(S(i), I(i), S(i + span))}), "shortcut"); };
    if (red(u(1, i + 1)) && red(v(2, i + 1)))
      return finish({{shortcut(), colour_}, {build(closed_path({v(2, i + 1), u(1, i + 1)}), "shortcut close"), other()}});
    if (red(u(1, i + 1))) {
      // v^2_{i+1} has the cycle colour: read the path backwards
      reverse_path();
      std::swap(z_[0], z_[1]);
      detail::require(blue(u(1, i + 1)), "shortcut: symmetry failed");
    }
    if (red(u(2, i + 2)) && red(v(3, i + 2)))
      return finish({{shortcut(), colour_}, {build(closed_path({v(3, i + 2), u(2, i + 2)}), "shortcut close 2"), other()}});
    if (blue(u(2, i + 2))) return pair_u(i + 1, 1, 2);
    return grow(replaced(i + 1, 1, {u(1, i + 1), w(2), v(3, i + 2)}), path_.subpath(2, mp_ - 1),
                "shortcut detour through w2");
  }

  Outcome cases_a() {
    if (auto o = ensure_u11_red()) return *o;
    std::vector<Arc> arcs;
    if (red(v(2, 4))) {
      arcs.push_back(Arc{1, wrap(4), true, 1, 2});
      if (mc_ % 3 != 0) {
        add_g_class(arcs, 1, {1});
        add_g_class(arcs, 2, {});
        add_g_class(arcs, 0, {});
      } else {
        arcs.push_back(chord(4, 4));
        arcs.push_back(chord(2, 4));
        arcs.push_back(chord(3, 4));
        add_g_class(arcs, 2, {2, 5});
        add_g_class(arcs, 0, {3});
        add_g_class(arcs, 1, {1, 4});
      }
      return finish({{assemble_arcs(arcs, "case 1/2"), other()}});
    }
    if (mc_ == 4) {
      // v^2_4 has the cycle colour, so v^3_3 has the path colour
      if (blue(v(3, 3))) return pair_v(3, 3, 2);
      arcs.push_back(Arc{1, 3, true, 1, 3});
      arcs.push_back(chord(3, 3));
      arcs.push_back(chord(2, 3));
      return finish({{assemble_arcs(arcs, "case 5"), other()}});
    }
    if (blue(v(3, 5))) return pair_v(4, 2, 3);
    arcs.push_back(Arc{1, wrap(5), true, 1, 3});
    if (mc_ % 3 != 1) {
      arcs.push_back(chord(2, 4));
      arcs.push_back(chord(3, 4));
      add_g_class(arcs, 2, {2});
      add_g_class(arcs, 0, {3});
      add_g_class(arcs, 1, {1, 4});
    } else if (mc_ % 2 == 1) {
      for (int i = 2; i <= mc_; ++i) arcs.push_back(chord(i, 4));
    } else {
      for (int i : {5, 2, 6, 3, 7}) arcs.push_back(chord(i, 4));
      add_g_class(arcs, 0, {3, 6});
      add_g_class(arcs, 1, {1, 4, 7});
      add_g_class(arcs, 2, {2, 5, 8});
    }
    return finish({{assemble_arcs(arcs, "case 3/4"), other()}});
  }

  // ---- variant B -----------------------------------------------------------

  Outcome step_b() {
    if (mp_ == 0) return cycle_only();
    for (int t = 1; t <= 2; ++t)
      if (red(w(t))) return finish({{cycle_, colour_}, {build(closed_path({w(t)}), "close with w"), other()}});
    if (mc_ < mp_ + 2) return claim_long_cycle_b();
    if (mc_ < 4) return small_case_b();

    if (auto o = resolve_a_pair()) return *o;
    for (int j = 1; j <= mc_; ++j)
      if (blue(q(j))) return q_claim(j - 1);
    return endgame_b();
  }

  /// m_c = 3 and m_p = 1: close f_1 through any red edge on f_1^- + T + f_1^+,
  /// T ranging over the (k-2ell)-subsets of the free vertices.
  Outcome small_case_b() const {
    const int r = p_.interior();
    const int nf = static_cast<int>(free_.size());
    std::vector<char> pick(nf, 0);
    std::fill(pick.begin(), pick.begin() + r, 1);
    do {
      VertexList t;
      for (int i = 0; i < nf; ++i)
        if (pick[i]) t.push_back(free_[i]);
      VertexList g = cat(f1m(), t, fp());
      if (red(g)) return finish({{cycle_, colour_}, {build(closed_path({g}), "close f1"), other()}});
    } while (std::prev_permutation(pick.begin(), pick.end()));
    throw SmallCaseStuck();
  }

  Outcome claim_long_cycle_b() {
    if (auto o = ensure_u11_red()) return *o;
    if (red(v(2, 1)))
      return swap_roles(closed_path({v(2, 1), u(1, 1)}), cycle_.arc(2, mc_ - 2), "claim 1b: v21 red");
    if (red(v(3, 1)))
      return swap_roles(closed_path({v(3, 1), u(1, 1)}), cycle_.arc(2, mc_ - 2), "claim 1b: v31 red");
    if (blue(v(1, 2))) return pair_v(1, 2, 1);
    if (blue(v(2, 2))) return pair_v(1, 3, 2);
    if (red(u(2, 2)))
      return swap_roles(closed_path({v(1, 2), u(2, 2)}), cycle_.arc(3, mc_ - 2), "claim 1b: u22 red");
    if (red(u(1, 2)))
      return swap_roles(closed_path({v(2, 2), u(1, 2)}), cycle_.arc(3, mc_ - 2), "claim 1b: u12 red");
    return grow(replaced(1, 1, {v(3, 1), w(2), u(1, 2)}), path_.subpath(2, mp_ - 1),
                "claim 1b: detour through w2");
  }

  VertexList Pa1() const { return slice(PI(1), 0, p_.ell()); }
  VertexList Pbm() const {
    VertexList x = PI(mp_);
    return slice(x, static_cast<int>(x.size()) - p_.ell(), static_cast<int>(x.size()));
  }
  VertexList edge_a() const { return cat(f1m(), I(3), Ia(2)); }
  VertexList edge_a_prime() const { return cat(Pa1(), I(4), Ib(5)); }
  VertexList q(int i) const { return cat(Ia(i), I(i + 1), S(i + 4)); }

  /// Makes a = f_1^- + I_3 + first ell of I_2 carry the path colour.
  std::optional<Outcome> resolve_a_pair() {
    if (red(edge_a())) return std::nullopt;
    if (blue(edge_a_prime())) {
      VertexList x = cat(Pa1(), Z(2), fp());
      if (red(x)) return finish({{cycle_, colour_}, {build(closed_path({x}), "close with x"), other()}});
      return grow(replaced(3, 2, {edge_a(), w(1), x, edge_a_prime()}), path_.subpath(2, mp_ - 1),
                  "a and a' blue");
    }
    // mirror the cycle about e_3 & e_4 and swap the first two blocks of f_1
    cycle_ = rotate(reverse(cycle_), -5);
    VertexList pv = path_.vseq();
    std::swap_ranges(pv.begin(), pv.begin() + p_.ell(), pv.begin() + p_.ell());
    path_ = assemble_path(p_, std::move(pv));
    detail::require(red(edge_a()), "mirror: a' did not become a");
    for (int t = 1; t <= 2; ++t)
      if (red(w(t))) return finish({{cycle_, colour_}, {build(closed_path({w(t)}), "close with w"), other()}});
    return std::nullopt;
  }

  /// q_{o+1} has the cycle colour.
  Outcome q_claim(int o) {
    auto shortened = [&] { return build(replaced(o + 2, 3, {q(o + 1)}), "q shortcut"); };
    const int i3 = o + 3, i4 = o + 4;
    if (blue(u(3, i3))) {
      if (blue(u(1, i4))) return pair_u(i3, 3, 1);
      if (blue(v(2, i4)))
        return grow(replaced(i3, 1, {u(3, i3), w(1), v(2, i4)}), path_.subpath(2, mp_ - 1), "q: u33 w1 v24");
      return finish({{shortened(), colour_}, {build(closed_path({v(2, i4), u(1, i4)}), "q: close u14 v24"), other()}});
    }
    if (red(v(1, i3)))
      return finish({{shortened(), colour_}, {build(closed_path({v(1, i3), u(3, i3)}), "q: close u33 v13"), other()}});
    VertexList z2p = slice(Z(2), 0, p_.k() - 3 * p_.ell());
    VertexList b = cat(fp(), z2p, Ia(i3), S(i4));
    if (blue(b))
      return grow(replaced(i3, 1, {v(1, i3), b}), path_.subpath(1, mp_ - 1), "q: v13 b");
    return finish({{shortened(), colour_}, {build(closed_path({b, u(3, i3)}), "q: close u33 b"), other()}});
  }

  Edges q_run(int first, int last) const {  // q_first .. q_last, cyclic
    Edges out;
    for (int i = first; i <= last; ++i) out.push_back(q(i));
    return out;
  }

  Outcome endgame_b() {
    if (red(v(1, 4))) {
      Edges e = q_run(3, mc_);
      e.push_back(v(1, 4));
      for (auto& f : path_edges_reversed()) e.push_back(f);
      e.push_back(edge_a());
      return finish({{build(e, "endgame: v14 red"), other()}});
    }
    VertexList c = cat(fp(), I(4), Ia(5));
    if (blue(c)) return grow(replaced(4, 1, {v(1, 4), c}), path_.subpath(1, mp_ - 1), "endgame: v14 c");
    VertexList d = cat(Pbm(), Z(2), S(8));
    auto tail_cycle = [&](const Edges& closing) {
      Edges e = q_run(4, mc_);
      e.push_back(q(1));
      e.push_back(edge_a());
      for (auto& f : path_edges()) e.push_back(f);
      e.insert(e.end(), closing.begin(), closing.end());
      return e;
    };
    if (red(d)) return finish({{build(tail_cycle({d}), "endgame: d red"), other()}});
    VertexList d2 = cat(Pbm(), Z(1), S(7));
    if (blue(d2)) return grow(replaced(7, 1, {d2, d}), path_.subpath(1, mp_ - 1), "endgame: d d'");
    VertexList e = cat(S(7), Z(2), S(8));
    if (red(e)) return finish({{build(tail_cycle({d2, e}), "endgame: e red"), other()}});
    Edges cr = q_run(5, mc_);
    cr.push_back(q(1));
    cr.push_back(edge_a());
    for (auto& f : path_edges()) cr.push_back(f);
    cr.push_back(c);
    return swap_roles(cr, assemble_path(p_, e), "endgame: e blue");
  }

  const ColouringOracle& oracle_;
  Params p_;
  Variant variant_;
  EllCycle cycle_;
  Colour colour_;
  EllPath path_;
  int mc_ = 0;
  int mp_ = 0;
  std::vector<VertexList> z_;
  VertexList free_;
};


Certificate run_once(const ColouringOracle& oracle, Variant variant, EngineStats* stats) {
  const Params& p = oracle.params();
  const Claim claim = variant == Variant::A ? Claim::TheoremA : Claim::TheoremB;
  const std::uint64_t q0 = oracle.query_count();
  EngineStats local;
  auto done = [&](Certificate cert) {
    cert.claim = claim;
    cert.fill_uncovered();
    if (static_cast<int>(cert.uncovered.size()) > claim_bound(p, claim))
      throw InvariantViolation("partition: certificate exceeds the bound");
    if (stats) {
      stats->iterations = local.iterations;
      stats->queries = oracle.query_count() - q0;
    }
    return cert;
  };

  if (p.n0() < 3) return done(Certificate{p, {}, {}, claim});

  CyclePath start = decompose_cycle_path(oracle, &local);
  local.iterations = 0;  // count improvement rounds of this engine only
  auto lone = [&](const EllCycle& c, Colour col) {
    Certificate cert{p, {}, {}, claim};
    cert.add_cycle(c, col);
    return done(std::move(cert));
  };
  if (start.path.empty()) return lone(start.cycle, start.cycle_colour);
  if (variant == Variant::A && start.path.length() <= 2) return lone(start.cycle, start.cycle_colour);

  const int target = variant == Variant::A ? p.n() - 3 * p.k() + 4 * p.ell()
                                           : p.n() - 2 * p.k() + 3 * p.ell();
  EngineState state = trim_path(EngineState{start.cycle, start.cycle_colour, start.path}, target);

  const int cap = p.n0();
  for (;;) {
    detail::require(local.iterations <= cap, "partition: improvement cap exceeded");
    Engine engine(oracle, variant, state);
    Outcome out = engine.step();
    if (out.cert) return done(std::move(*out.cert));
    ++local.iterations;
    EngineState next = std::move(*out.next);
    if (invariant_checks_enabled()) {
      for (const auto& e : next.cycle.edges())
        detail::require(oracle.colour_of(e) == next.cycle_colour, "partition: cycle not monochromatic");
      if (!next.path.empty()) {
        ColourProfile prof = colour_profile(oracle, next.path);
        detail::require(prof.kind == ColourProfile::Kind::Monochromatic &&
                            prof.lead == swap(next.cycle_colour),
                        "partition: path not monochromatic in the other colour");
      }
      std::vector<char> seen(p.n() + 1, 0);
      for (Vertex x : next.cycle.vseq()) seen[x] = 1;
      for (Vertex x : next.path.vseq()) detail::require(!seen[x], "partition: cycle and path overlap");
    }
    if (!next.path.empty() && next.covered() > target) next = trim_path(std::move(next), target);
    detail::require(next.covered() >= target - p.ell(), "partition: coverage dropped");
    state = std::move(next);
  }
}

constexpr int kRelabelAttempts = 64;

Certificate run(const ColouringOracle& oracle, Variant variant, EngineStats* stats) {
  const Params& p = oracle.params();
  const std::uint64_t q0 = oracle.query_count();
  try {
    return run_once(oracle, variant, stats);
  } catch (const SmallCaseStuck&) {
  }
  for (int attempt = 1; attempt <= kRelabelAttempts; ++attempt) {
    std::vector<Vertex> perm(p.n() + 1, 0);
    std::iota(perm.begin() + 1, perm.end(), 1);
    std::mt19937_64 rng(static_cast<std::uint64_t>(attempt));
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    ColouringOracle view(p, [&oracle, &perm](std::span<const Vertex> e) {
      VertexList image;
      image.reserve(e.size());
      for (Vertex x : e) image.push_back(perm[x]);
      std::sort(image.begin(), image.end());
      return oracle.colour_of(image);
    });
    try {
      Certificate cert = run_once(view, variant, stats);
      for (auto& item : cert.items)
        for (Vertex& x : item.vseq) x = perm[x];
      cert.fill_uncovered();
      if (stats) {
        stats->queries = oracle.query_count() - q0;
        stats->relabelings = attempt;
      }
      return cert;
    } catch (const SmallCaseStuck&) {
    }
  }
  throw InvariantViolation("partition: relabeling attempts exhausted");
}

}  // namespace

EngineState trim_path(EngineState state, int target_covered) {
  const Params& p = state.cycle.params();
  int excess = state.covered() - target_covered;
  if (excess < 0 || excess % p.step() != 0)
    throw InvalidArgument("trim_path: target not reachable by removing whole edges");
  int drop = excess / p.step();
  if (drop == 0) return state;
  int m = state.path.length();
  if (drop > m) throw InvalidArgument("trim_path: path too short");
  state.path = state.path.subpath(1, m - drop);
  return state;
}

Certificate partition_theorem_a(const ColouringOracle& oracle, EngineStats* stats) {
  return run(oracle, Variant::A, stats);
}

Certificate partition_theorem_b(const ColouringOracle& oracle, EngineStats* stats) {
  if (!oracle.params().third_or_less()) throw InvalidArgument("variant b requires 3*ell <= k");
  return run(oracle, Variant::B, stats);
}

}  // namespace lehel
