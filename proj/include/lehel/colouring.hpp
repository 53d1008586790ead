#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lehel/params.hpp"

namespace lehel {

enum class Colour : std::uint8_t { Blue = 0, Red = 1 };

constexpr Colour swap(Colour c) { return c == Colour::Blue ? Colour::Red : Colour::Blue; }
const char* to_string(Colour c);

/// Sorted copy of `vertices` after checking it is a valid k-subset of [n].
VertexList canonical_edge(std::span<const Vertex> vertices, const Params& params);

/// Colex rank of a k-subset of [n]; {1..k} has rank 0.
std::uint64_t colex_rank(std::span<const Vertex> edge, const Params& params);
/// Inverse of colex_rank. The result is sorted ascending.
VertexList colex_unrank(std::uint64_t rank, const Params& params);

/// SplitMix64 finaliser, the generator behind seeded random colourings.
std::uint64_t splitmix64(std::uint64_t x);

/// How a colouring is produced.
struct ColouringSpec {
  enum class Kind { Explicit, Random, Split, Constant };
  Kind kind = Kind::Constant;
  std::vector<std::uint8_t> bits;  // Explicit: one entry per colex rank, 1 = Red
  std::uint64_t seed = 0;          // Random
  double p_red = 0.5;              // Random
  VertexList split_set;            // Split: edge is Red iff |e & A| >= threshold
  int threshold = 0;               // Split
  Colour constant = Colour::Blue;  // Constant

  static ColouringSpec explicit_bits(std::vector<std::uint8_t> bits);
  static ColouringSpec random(std::uint64_t seed, double p_red);
  static ColouringSpec split(VertexList set, int threshold);
  static ColouringSpec constant_colour(Colour c);
};

/// Total, deterministic 2-colouring of the complete k-uniform hypergraph on [n].
///
/// Queries are memoised and thread-safe; `query_count()` counts distinct edges
/// looked up so far.
class ColouringOracle {
 public:
  using Rule = std::function<Colour(std::span<const Vertex> sorted_edge)>;

  ColouringOracle(Params params, ColouringSpec spec);
  ColouringOracle(Params params, Rule rule);

  ColouringOracle(ColouringOracle&&) noexcept;
  ColouringOracle& operator=(ColouringOracle&&) noexcept;
  ~ColouringOracle();

  const Params& params() const { return params_; }
  const ColouringSpec* spec() const { return spec_ ? spec_.get() : nullptr; }

  /// Colour of the edge with the given vertices (any order).
  Colour colour_of(std::span<const Vertex> edge) const;
  Colour colour_of(std::initializer_list<Vertex> edge) const {
    return colour_of(std::span<const Vertex>(edge.begin(), edge.size()));
  }
  Colour colour_at_rank(std::uint64_t rank) const;

  std::uint64_t query_count() const;
  void reset_query_count();

  /// Colour of every edge, indexed by colex rank. Does not touch the query counter.
  std::vector<std::uint8_t> materialize() const;

  /// Oracle with every colour flipped.
  ColouringOracle swapped() const;
  /// Oracle on relabelled vertices: edge e gets the colour of {perm[v] : v in e}.
  /// `perm` is 1-based: perm[v] for v in 1..n (perm[0] unused).
  ColouringOracle relabeled(std::vector<Vertex> perm) const;

 private:
  struct Memo;

  Colour compute(std::span<const Vertex> sorted_edge, std::uint64_t rank) const;

  Params params_;
  std::shared_ptr<const ColouringSpec> spec_;
  std::shared_ptr<const std::vector<char>> split_mask_;
  Rule rule_;
  std::unique_ptr<Memo> memo_;
};

/// Writes the colouring file: header `n k ell`, then C(n,k) characters in colex order.
void save_colouring(const ColouringOracle& oracle, const std::string& path);
std::string format_colouring(const ColouringOracle& oracle);
ColouringOracle load_colouring(const std::string& path);
ColouringOracle parse_colouring(const std::string& text);

}  // namespace lehel
