#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lehel/colouring.hpp"
#include "lehel/params.hpp"

namespace lehel {

/// Which part of an ordered edge to select.
enum class Segment { Minus, Plus, Interior };

/// First ell (Minus), last ell (Plus) or middle k-2*ell (Interior) vertices of
/// an ordered k-tuple.
VertexList segment(std::span<const Vertex> edge_view, Segment which, const Params& params);
/// Vertices at the given 1-based positions of an ordered k-tuple.
VertexList segment(std::span<const Vertex> edge_view, const std::vector<int>& positions,
                   const Params& params);

/// An ell-path stored as its vertex sequence; edge i covers positions
/// (i-1)(k-ell) .. (i-1)(k-ell)+k-1. The empty path has no vertices.
class EllPath {
 public:
  explicit EllPath(Params params) : params_(params) {}

  const Params& params() const { return params_; }
  const VertexList& vseq() const { return vseq_; }
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }

  /// Ordered k-tuple of edge i, 1 <= i <= length().
  VertexList edge(int i) const;
  std::vector<VertexList> edges() const;

  /// Sub-path made of edges first..last (1-based, inclusive); empty if first > last.
  EllPath subpath(int first, int last) const;

  bool operator==(const EllPath& o) const { return vseq_ == o.vseq_; }

 private:
  friend EllPath assemble_path(const Params&, VertexList);
  Params params_;
  VertexList vseq_;
  int length_ = 0;
};

/// An ell-cycle stored as its cyclic vertex sequence; edge i is the cyclic
/// window of k vertices starting at (i-1)(k-ell).
///
/// With ell = k/2 and two edges both windows are the same k-set; such a cycle
/// is a closed walk and is flagged `collapsed()`.
class EllCycle {
 public:
  const Params& params() const { return params_; }
  const VertexList& vseq() const { return vseq_; }
  int length() const { return length_; }
  bool collapsed() const { return length_ == 2 && params_.is_half(); }

  VertexList edge(int i) const;  // 1-based, taken modulo length()
  std::vector<VertexList> edges() const;

  /// Path made of `count` consecutive edges starting at edge `first` (cyclic).
  EllPath arc(int first, int count) const;

  bool operator==(const EllCycle& o) const { return vseq_ == o.vseq_; }

 private:
  friend EllCycle assemble_cycle(const Params&, VertexList);
  explicit EllCycle(Params params) : params_(params) {}
  Params params_;
  VertexList vseq_;
  int length_ = 0;
};

/// Validating constructors. Throw InvalidArgument when the sequence has the
/// wrong length, repeats a vertex, or (for cycles) has fewer than two edges.
EllPath assemble_path(const Params& params, VertexList vseq);
EllCycle assemble_cycle(const Params& params, VertexList vseq);

/// Builds the ell-cycle whose edges, in cyclic order, are the given vertex
/// sets: consecutive sets must share exactly ell vertices (2*ell when there
/// are two sets) and the result must pass assemble_cycle. Returns nullopt
/// otherwise.
std::optional<EllCycle> cycle_from_edges(const Params& params,
                                         const std::vector<VertexList>& edges);

/// Removes a cyclically contiguous run of edges and inserts `inserts` in its
/// place. Throws InvalidArgument if the result is not a valid cycle.
EllCycle splice(const EllCycle& cycle, const std::set<int>& remove,
                const std::vector<VertexList>& inserts);

EllPath reverse(const EllPath& path);
EllCycle reverse(const EllCycle& cycle);
EllCycle rotate(const EllCycle& cycle, int by);

struct ColourProfile {
  enum class Kind { Monochromatic, BlueRed, Invalid };
  Kind kind = Kind::Monochromatic;
  /// Colour of edges 1..turning_point; empty for the empty path.
  std::optional<Colour> lead;
  int turning_point = 0;
};

/// Detects the single colour change of a blue-red path. Monochromatic paths
/// report turning_point = length.
ColourProfile colour_profile(const ColouringOracle& oracle, const EllPath& path);

/// A blue-red path together with its turning point and lead colour.
struct BlueRedPath {
  EllPath path;
  int turning_point = 0;
  std::optional<Colour> lead;
};

/// A degenerate cycle: exactly k-ell vertices, no colour.
struct DegenerateCycle {
  VertexList vertices;
};

struct CertificateItem {
  enum class Kind { Cycle, Degenerate };
  Kind kind = Kind::Cycle;
  VertexList vseq;              // traversal order for cycles
  std::optional<Colour> colour;  // none for degenerate items
};

/// Which covering claim a certificate makes; selects the automatic bound.
enum class Claim { None, TheoremA, TheoremB, CoverA, CoverB };

/// The uncovered-vertex bound a claim guarantees: 4(k-ell) for TheoremA,
/// 2(k-ell) for TheoremB, 0 for the cover claims, n otherwise.
int claim_bound(const Params& params, Claim claim);

struct Certificate {
  Params params;
  std::vector<CertificateItem> items;
  VertexList uncovered;  // sorted
  Claim claim = Claim::None;

  /// Number of items, degenerate cycles included.
  int cycle_count() const;
  void add_cycle(const EllCycle& c, Colour colour);
  void add_degenerate(VertexList vertices);
  /// Sets `uncovered` to [n] minus everything covered by the items.
  void fill_uncovered();
};

}  // namespace lehel
