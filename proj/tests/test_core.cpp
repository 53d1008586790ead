#include <cstdio>
#include <filesystem>
#include <random>
#include <thread>

#include "doctest.h"
#include "lehel/colouring.hpp"
#include "support.hpp"

using namespace lehel;

TEST_CASE("params validation") {
  CHECK_NOTHROW(Params(6, 3, 1));
  CHECK_NOTHROW(Params(24, 4, 2));
  CHECK_THROWS_AS(Params(7, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(Params(6, 3, 0), InvalidArgument);
  CHECK_THROWS_AS(Params(6, 3, 2), InvalidArgument);
  CHECK_THROWS_WITH(Params(7, 3, 1), doctest::Contains("(k-ell) must divide n"));
  Params p(27, 5, 2);
  CHECK(p.step() == 3);
  CHECK(p.interior() == 1);
  CHECK(p.n0() == 9);
  CHECK_FALSE(p.is_half());
  CHECK_FALSE(p.third_or_less());
  CHECK(Params(30, 6, 3).is_half());
  CHECK(Params(32, 6, 2).third_or_less());
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(32, 7) == 3365856);
  CHECK(binomial(5, 7) == 0);
  CHECK(Params(24, 3, 1).edge_count() == 2024);
}

TEST_CASE("colex rank: fixed values") {
  Params p(6, 3, 1);
  CHECK(colex_rank(VertexList{1, 2, 3}, p) == 0);
  CHECK(colex_rank(VertexList{4, 5, 6}, p) == 19);
  CHECK(colex_rank(VertexList{1, 2, 4}, p) == 1);
}

TEST_CASE("colex rank agrees with enumeration order") {
  for (auto [n, k] : {std::pair{6, 3}, {8, 2}, {9, 4}, {12, 5}, {12, 3}}) {
    Params p(n, k, 1);
    auto order = oracle::colex_order(n, k);
    REQUIRE(order.size() == p.edge_count());
    for (std::size_t j = 0; j < order.size(); ++j) {
      CHECK(colex_rank(order[j], p) == j);
      CHECK(colex_unrank(j, p) == order[j]);
    }
  }
}

TEST_CASE("colex round trip on all subsets up to n = 12") {
  for (int n = 2; n <= 12; ++n)
    for (int k = 2; k <= n; ++k)
      for (int ell = 1; 2 * ell <= k; ++ell) {
        if (n % (k - ell) != 0) continue;
        Params p(n, k, ell);
        for (std::uint64_t r = 0; r < p.edge_count(); ++r) {
          VertexList e = colex_unrank(r, p);
          REQUIRE(colex_rank(e, p) == r);
        }
      }
}

TEST_CASE("canonical edge rejects bad edges") {
  Params p(6, 3, 1);
  CHECK(canonical_edge(VertexList{5, 1, 3}, p) == VertexList{1, 3, 5});
  CHECK_THROWS_AS(canonical_edge(VertexList{1, 2}, p), InvalidArgument);
  CHECK_THROWS_AS(canonical_edge(VertexList{1, 2, 7}, p), InvalidArgument);
  CHECK_THROWS_AS(canonical_edge(VertexList{1, 2, 2}, p), InvalidArgument);
  CHECK_THROWS_AS(colex_rank(VertexList{0, 1, 2}, p), InvalidArgument);
}

TEST_CASE("constant, split and explicit colourings") {
  Params p(6, 3, 1);
  ColouringOracle blue(p, ColouringSpec::constant_colour(Colour::Blue));
  ColouringOracle red(p, ColouringSpec::constant_colour(Colour::Red));
  for (std::uint64_t r = 0; r < p.edge_count(); ++r) {
    CHECK(blue.colour_at_rank(r) == Colour::Blue);
    CHECK(red.colour_at_rank(r) == Colour::Red);
  }
  ColouringOracle split(p, ColouringSpec::split({1, 2, 3}, 2));
  CHECK(split.colour_of({1, 2, 4}) == Colour::Red);
  CHECK(split.colour_of({1, 4, 5}) == Colour::Blue);

  ColouringOracle split10(Params(10, 4, 2), ColouringSpec::split({1, 2, 3, 4, 5}, 3));
  CHECK(split10.colour_of({1, 2, 3, 9}) == Colour::Red);
  CHECK(split10.colour_of({1, 2, 8, 9}) == Colour::Blue);

  std::vector<std::uint8_t> bits(p.edge_count(), 0);
  bits[7] = 1;
  ColouringOracle expl(p, ColouringSpec::explicit_bits(bits));
  CHECK(expl.colour_at_rank(7) == Colour::Red);
  CHECK(expl.colour_of(colex_unrank(7, p)) == Colour::Red);
  CHECK(expl.colour_at_rank(6) == Colour::Blue);
  CHECK_THROWS_AS(ColouringOracle(p, ColouringSpec::explicit_bits(std::vector<std::uint8_t>(19, 0))),
                  InvalidArgument);
  CHECK_THROWS_AS(ColouringOracle(p, ColouringSpec::split({1, 9}, 1)), InvalidArgument);
}

TEST_CASE("random colouring follows the documented SplitMix64 rule") {
  Params p(12, 3, 1);
  const std::uint64_t seed = 42;
  const double pr = 0.3;
  ColouringOracle o(p, ColouringSpec::random(seed, pr));
  for (std::uint64_t r = 0; r < p.edge_count(); ++r) {
    std::uint64_t x = splitmix64(seed ^ (r * 0xD1B54A32D192ED03ULL));
    double u = static_cast<double>(x >> 11) * 0x1.0p-53;
    CHECK(o.colour_at_rank(r) == (u < pr ? Colour::Red : Colour::Blue));
  }
  // reference SplitMix64 output for state 0 after one increment
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("oracle determinism and query counting") {
  Params p(10, 3, 1);
  ColouringOracle a(p, ColouringSpec::random(7, 0.5));
  ColouringOracle b(p, ColouringSpec::random(7, 0.5));
  std::vector<VertexList> edges = oracle::colex_order(10, 3);
  std::mt19937 rng(1);
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const auto& e : edges) CHECK(a.colour_of(e) == b.colour_at_rank(colex_rank(e, p)));

  ColouringOracle c(p, ColouringSpec::random(7, 0.5));
  CHECK(c.query_count() == 0);
  for (int rep = 0; rep < 3; ++rep)
    for (int i = 0; i < 10; ++i) c.colour_of(edges[i]);
  CHECK(c.query_count() == 10);
  c.colour_of({3, 1, 2});
  c.colour_of({1, 2, 3});
  CHECK(c.query_count() == 11);
  c.materialize();
  CHECK(c.query_count() == 11);
  c.reset_query_count();
  CHECK(c.query_count() == 0);
}

TEST_CASE("concurrent queries agree") {
  Params p(12, 4, 1);
  ColouringOracle o(p, ColouringSpec::random(3, 0.5));
  ColouringOracle ref(p, ColouringSpec::random(3, 0.5));
  std::vector<std::thread> ts;
  std::atomic<int> bad{0};
  for (int t = 0; t < 4; ++t)
    ts.emplace_back([&, t] {
      for (std::uint64_t r = t; r < p.edge_count(); r += 2)
        if (o.colour_of(colex_unrank(r, p)) != ref.colour_at_rank(r)) ++bad;
    });
  for (auto& t : ts) t.join();
  CHECK(bad == 0);
  CHECK(o.query_count() == p.edge_count());
}

TEST_CASE("swapped and relabeled oracles") {
  Params p(8, 3, 1);
  ColouringOracle o(p, ColouringSpec::random(11, 0.5));
  ColouringOracle s = o.swapped();
  std::vector<Vertex> perm{0, 3, 1, 2, 8, 7, 6, 5, 4};
  ColouringOracle r = o.relabeled(perm);
  for (const auto& e : oracle::colex_order(8, 3)) {
    CHECK(s.colour_of(e) == swap(o.colour_of(e)));
    VertexList img;
    for (Vertex v : e) img.push_back(perm[v]);
    CHECK(r.colour_of(e) == o.colour_of(img));
  }
  CHECK_THROWS_AS(o.relabeled({0, 1, 1, 2, 3, 4, 5, 6, 7}), InvalidArgument);
  CHECK_THROWS_AS(o.relabeled({0, 1, 2}), InvalidArgument);
}

TEST_CASE("colouring file format") {
  Params p(6, 3, 1);
  ColouringOracle blue(p, ColouringSpec::constant_colour(Colour::Blue));
  CHECK(format_colouring(blue) == "6 3 1\n" + std::string(20, '0') + "\n");

  ColouringOracle loaded = parse_colouring("6 3 1\n" + std::string(20, '0'));
  for (std::uint64_t r = 0; r < 20; ++r) CHECK(loaded.colour_at_rank(r) == Colour::Blue);

  CHECK_THROWS_WITH_AS(parse_colouring("6 3 1\n" + std::string(19, '0') + "\n"),
                       doctest::Contains("expected 20"), InvalidArgument);
  CHECK_THROWS_AS(parse_colouring("6 3 1\n" + std::string(19, '0') + "2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_colouring("7 3 1\n" + std::string(35, '0') + "\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_colouring("garbage"), InvalidArgument);
}

TEST_CASE("save and load round trip") {
  const auto dir = std::filesystem::temp_directory_path();
  for (auto spec : {ColouringSpec::constant_colour(Colour::Red), ColouringSpec::random(5, 0.4),
                    ColouringSpec::split({1, 2, 3, 4}, 2)}) {
    Params p(12, 4, 2);
    ColouringOracle o(p, spec);
    const std::string path = (dir / "lehel_roundtrip.col").string();
    save_colouring(o, path);
    ColouringOracle back = load_colouring(path);
    CHECK(back.params() == p);
    CHECK(back.materialize() == o.materialize());
    std::remove(path.c_str());
  }
}
