#include "doctest.h"
#include "lehel/full_cover.hpp"
#include "lehel/verify.hpp"
#include "support.hpp"

using namespace lehel;

namespace {

// Counts queries outside `allowed` by wrapping the colouring.
struct Spy {
  const ColouringOracle& base;
  std::set<Vertex> allowed;
  int outside = 0;
  ColouringOracle oracle() {
    return ColouringOracle(base.params(), [this](std::span<const Vertex> e) {
      for (Vertex v : e)
        if (!allowed.count(v)) ++outside;
      return base.colour_of(e);
    });
  }
};

}  // namespace

TEST_CASE("two-edge cycle on monochromatic sets") {
  Params p(12, 3, 1);
  for (Colour c : {Colour::Blue, Colour::Red}) {
    ColouringOracle o(p, ColouringSpec::constant_colour(c));
    auto [cyc, col] = find_mono_two_edge_cycle(o, {1, 2, 3, 4});
    CHECK(col == c);
    CHECK(cyc.length() == 2);
    CHECK(std::set<Vertex>(cyc.vseq().begin(), cyc.vseq().end()) == std::set<Vertex>{1, 2, 3, 4});
    CHECK(oracle::common(oracle::windows(p, cyc.vseq())[0], oracle::windows(p, cyc.vseq())[1]) == 2);
  }
}

TEST_CASE("two-edge cycle exists whenever enumeration finds one") {
  // exhaustive pair enumeration as the reference
  for (auto [n, k, ell] : {std::tuple{24, 4, 1}, {24, 3, 1}, {27, 5, 2}, {32, 7, 3}, {20, 5, 1}}) {
    Params p(n, k, ell);
    for (int s = 0; s < 30; ++s) {
      ColouringOracle o(p, ColouringSpec::random(s, 0.5));
      VertexList L;
      for (int v = 0; v < 2 * p.step(); ++v) L.push_back(1 + (v * 5 + s) % n);
      std::sort(L.begin(), L.end());
      if (std::adjacent_find(L.begin(), L.end()) != L.end()) continue;
      bool exists = false;
      auto subsets = oracle::colex_order(2 * p.step(), k);
      for (const auto& a : subsets)
        for (const auto& b : subsets) {
          VertexList ea, eb;
          for (int i : a) ea.push_back(L[i - 1]);
          for (int i : b) eb.push_back(L[i - 1]);
          if (oracle::common(ea, eb) == 2 * ell && o.colour_of(ea) == o.colour_of(eb)) exists = true;
        }
      CHECK(exists);
      auto [cyc, col] = find_mono_two_edge_cycle(o, L);
      auto w = oracle::windows(p, cyc.vseq());
      CHECK(oracle::common(w[0], w[1]) == 2 * ell);
      CHECK(oracle::monochromatic(o, w, col));
      VertexList got = cyc.vseq();
      std::sort(got.begin(), got.end());
      CHECK(got == L);
    }
  }
}

TEST_CASE("two-edge cycle preconditions") {
  ColouringOracle half(Params(12, 4, 2), ColouringSpec::random(1, 0.5));
  CHECK_THROWS_AS(find_mono_two_edge_cycle(half, {1, 2, 3, 4}), InvalidArgument);
  ColouringOracle o(Params(12, 3, 1), ColouringSpec::random(1, 0.5));
  CHECK_THROWS_AS(find_mono_two_edge_cycle(o, {1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(find_mono_two_edge_cycle(o, {1, 2, 3, 3}), InvalidArgument);
}

TEST_CASE("patching queries only the patch set") {
  Params p(24, 4, 1);
  ColouringOracle base(p, ColouringSpec::random(9, 0.5));
  Spy spy{base, {3, 5, 8, 13, 21, 22}};
  ColouringOracle o = spy.oracle();
  find_mono_two_edge_cycle(o, {3, 5, 8, 13, 21, 22});
  CHECK(spy.outside == 0);
}

TEST_CASE("full cover of a monochromatic colouring, variant b") {
  Params p(12, 3, 1);
  ColouringOracle o(p, ColouringSpec::constant_colour(Colour::Blue));
  Certificate cert = cover_all_vertices(o, CoverVariant::B);
  CHECK(cert.uncovered.empty());
  REQUIRE(cert.items.size() == 2);
  CHECK(cert.items[0].colour == Colour::Blue);
  CHECK(cert.items[1].kind == CertificateItem::Kind::Degenerate);
  CHECK(cert.items[1].vseq.size() == 2);
  CHECK(verify_certificate(o, cert).ok());
}

TEST_CASE("full cover: every vertex, item limits") {
  for (auto [n, k, ell] : {std::tuple{24, 3, 1}, {27, 5, 2}, {32, 6, 2}, {32, 7, 3}, {30, 7, 2}, {12, 3, 1}}) {
    Params p(n, k, ell);
    for (int s = 0; s < 30; ++s) {
      ColouringOracle o(p, ColouringSpec::random(s + 11, 0.5));
      for (auto v : {CoverVariant::A, CoverVariant::B}) {
        if (v == CoverVariant::B && !p.third_or_less()) continue;
        Certificate cert = cover_all_vertices(o, v);
        CHECK(cert.uncovered.empty());
        CHECK(cert.items.size() <= (v == CoverVariant::A ? 4u : 3u));
        std::set<Vertex> used;
        for (const auto& it : cert.items) {
          for (Vertex x : it.vseq) CHECK(used.insert(x).second);
          if (it.kind == CertificateItem::Kind::Degenerate) {
            CHECK(static_cast<int>(it.vseq.size()) == p.step());
          } else {
            CHECK(oracle::is_cycle(p, it.vseq));
            CHECK(oracle::monochromatic(o, oracle::windows(p, it.vseq), *it.colour));
          }
        }
        CHECK(static_cast<int>(used.size()) == n);
        CHECK(verify_certificate(o, cert).ok());
      }
    }
  }
}

TEST_CASE("full cover at ell = k/2 needing a patch is refused") {
  Params p(24, 4, 2);
  int refused = 0, done = 0;
  for (int s = 0; s < 40; ++s) {
    ColouringOracle o(p, ColouringSpec::random(s, 0.5));
    try {
      Certificate cert = cover_all_vertices(o, CoverVariant::A);
      CHECK(verify_certificate(o, cert).ok());
      ++done;
    } catch (const InvalidArgument& e) {
      CHECK(std::string(e.what()).find("ell = k/2") != std::string::npos);
      ++refused;
    }
  }
  CHECK(refused + done == 40);
}
