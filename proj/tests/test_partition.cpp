#include "doctest.h"
#include "lehel/partition.hpp"
#include "lehel/verify.hpp"
#include "support.hpp"

using namespace lehel;

namespace {

// Independent check of a theorem certificate: at most one cycle per colour,
// disjoint valid monochromatic cycles, uncovered = the rest, within bound.
void check_theorem(const ColouringOracle& o, const Certificate& cert, int bound) {
  const Params& p = o.params();
  REQUIRE(cert.items.size() <= 2);
  std::set<Vertex> used;
  std::set<Colour> colours;
  for (const auto& it : cert.items) {
    REQUIRE(it.kind == CertificateItem::Kind::Cycle);
    REQUIRE(it.colour.has_value());
    CHECK(colours.insert(*it.colour).second);
    CHECK(oracle::is_cycle(p, it.vseq));
    CHECK(oracle::monochromatic(o, oracle::windows(p, it.vseq), *it.colour));
    for (Vertex v : it.vseq) CHECK(used.insert(v).second);
  }
  VertexList rest;
  for (int v = 1; v <= p.n(); ++v)
    if (!used.count(v)) rest.push_back(v);
  CHECK(cert.uncovered == rest);
  CHECK(static_cast<int>(rest.size()) <= bound);
  CHECK(static_cast<int>(rest.size()) % p.step() == 0);
}

}  // namespace

TEST_CASE("theorem a on monochromatic colourings") {
  Params p(12, 3, 1);
  ColouringOracle o(p, ColouringSpec::constant_colour(Colour::Blue));
  Certificate cert = partition_theorem_a(o);
  REQUIRE(cert.items.size() == 1);
  CHECK(cert.items[0].colour == Colour::Blue);
  CHECK(cert.uncovered.size() == 2);
  CHECK(cert.claim == Claim::TheoremA);
}

TEST_CASE("theorem a bound 4(k-ell) on random and split colourings") {
  for (auto [n, k, ell] : {std::tuple{24, 3, 1}, {24, 4, 2}, {27, 5, 2}, {30, 6, 3}, {32, 6, 2},
                           {12, 3, 1}, {8, 2, 1}, {20, 5, 1}, {18, 6, 3}}) {
    Params p(n, k, ell);
    for (int s = 0; s < 40; ++s) {
      ColouringOracle o(p, ColouringSpec::random(s, s % 3 == 0 ? 0.1 : s % 3 == 1 ? 0.5 : 0.9));
      EngineStats st;
      check_theorem(o, partition_theorem_a(o, &st), 4 * p.step());
      CHECK(st.iterations <= p.n0());
    }
    for (int t = 0; t <= k; ++t) {
      VertexList odd;
      for (int v = 1; v <= std::min(n, 11); v += 2) odd.push_back(v);
      ColouringOracle o(p, ColouringSpec::split(odd, t));
      check_theorem(o, partition_theorem_a(o), 4 * p.step());
    }
  }
}

TEST_CASE("theorem b bound 2(k-ell)") {
  for (auto [n, k, ell] : {std::tuple{24, 3, 1}, {32, 6, 2}, {30, 7, 2}, {12, 3, 1}, {20, 5, 1}, {36, 3, 1}}) {
    Params p(n, k, ell);
    for (int s = 0; s < 40; ++s) {
      ColouringOracle o(p, ColouringSpec::random(s, s % 3 == 0 ? 0.1 : s % 3 == 1 ? 0.5 : 0.9));
      EngineStats st;
      check_theorem(o, partition_theorem_b(o, &st), 2 * p.step());
      CHECK(st.iterations <= p.n0());
    }
    for (int t = 0; t <= k; ++t) {
      ColouringOracle o(p, ColouringSpec::split({2, 4, 6, 8, 10}, t));
      check_theorem(o, partition_theorem_b(o), 2 * p.step());
    }
  }
}

TEST_CASE("theorem b rejects ell > k/3") {
  ColouringOracle o(Params(24, 4, 2), ColouringSpec::random(1, 0.5));
  CHECK_THROWS_WITH_AS(partition_theorem_b(o), doctest::Contains("3*ell <= k"), InvalidArgument);
}

TEST_CASE("tiny hosts: n0 < 3 gives the empty certificate") {
  Params p(4, 3, 1);
  ColouringOracle o(p, ColouringSpec::random(0, 0.5));
  Certificate cert = partition_theorem_a(o);
  CHECK(cert.items.empty());
  CHECK(cert.uncovered.size() == 4);
  CHECK(verify_certificate(o, cert).ok());
}

TEST_CASE("small m_c = 3, m_p = 1 states of variant b are resolved") {
  // n0 = 6 hosts reach this configuration for some colourings
  for (auto [n, k, ell] : {std::tuple{12, 3, 1}, {30, 7, 2}}) {
    Params p(n, k, ell);
    int relabelled = 0;
    for (int s = 0; s < 300; ++s) {
      ColouringOracle o(p, ColouringSpec::random(s, 0.5));
      EngineStats st;
      check_theorem(o, partition_theorem_b(o, &st), 2 * p.step());
      relabelled += st.relabelings > 0;
    }
    MESSAGE(p.to_string() << ": " << relabelled << " of 300 runs restarted under a relabeling");
  }
}

TEST_CASE("trim path") {
  Params p(24, 3, 1);
  ColouringOracle o(p, ColouringSpec::random(2, 0.5));
  CyclePath cp = decompose_cycle_path(o);
  REQUIRE_FALSE(cp.path.empty());
  EngineState st{cp.cycle, cp.cycle_colour, cp.path};
  const int covered = st.covered();
  EngineState t = trim_path(st, covered - p.step());
  CHECK(t.covered() == covered - p.step());
  CHECK(t.path.vseq() == cp.path.subpath(1, cp.path.length() - 1).vseq());
  CHECK_THROWS_AS(trim_path(st, covered - 1), InvalidArgument);
  CHECK_THROWS_AS(trim_path(st, covered + p.step()), InvalidArgument);
}

TEST_CASE("invariant checks can be disabled without changing results") {
  Params p(32, 6, 2);
  for (int s = 0; s < 20; ++s) {
    ColouringOracle a(p, ColouringSpec::random(s, 0.5));
    ColouringOracle b(p, ColouringSpec::random(s, 0.5));
    set_invariant_checks(true);
    Certificate x = partition_theorem_a(a);
    set_invariant_checks(false);
    Certificate y = partition_theorem_a(b);
    set_invariant_checks(true);
    REQUIRE(x.items.size() == y.items.size());
    for (std::size_t i = 0; i < x.items.size(); ++i) CHECK(x.items[i].vseq == y.items[i].vseq);
  }
}
