#include "lehel/brute.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace lehel {

namespace {

using Mask = std::uint32_t;

/// Depth-first construction of ell-cycles of one colour, block by block.
class CycleSearch {
 public:
  CycleSearch(const ColouringOracle& oracle, Colour colour, std::uint64_t budget,
              std::uint64_t& nodes, std::vector<int>& witness_of, std::vector<VertexList>& seqs)
      : oracle_(oracle), p_(oracle.params()), colour_(colour), budget_(budget), nodes_(nodes),
        witness_of_(witness_of), seqs_(seqs) {}

  void run() {
    for (int m = 2; m <= p_.n0(); ++m) {
      m_ = m;
      len_ = m * p_.step();
      seq_.clear();
      used_ = 0;
      extend();
    }
  }

 private:
  bool window_ok(int i) const {  // window i (0-based) of the current sequence
    VertexList e;
    for (int j = 0; j < p_.k(); ++j) e.push_back(seq_[(i * p_.step() + j) % len_]);
    std::sort(e.begin(), e.end());
    return oracle_.colour_of(e) == colour_;
  }

  // Positions form blocks: a joint of ell vertices, then an interior of
  // k-2ell, repeated. Vertices inside a block increase; the least vertex of
  // the cycle sits in the first k-ell positions.
  void extend() {
    if (++nodes_ > budget_) throw BudgetExceeded("brute force budget exceeded");
    const int pos = static_cast<int>(seq_.size());
    if (pos == len_) {
      if (!window_ok(m_ - 1)) return;  // the only window that wraps around
      if (witness_of_[used_] < 0) {
        witness_of_[used_] = static_cast<int>(seqs_.size());
        seqs_.push_back(seq_);
      }
      return;
    }
    const int r = pos % p_.step();
    const bool block_start = r == 0 || r == p_.ell();
    const Vertex lo = block_start ? 1 : seq_.back() + 1;
    for (Vertex v = lo; v <= p_.n(); ++v) {
      if (used_ >> (v - 1) & 1u) continue;
      if (pos >= p_.step() && v < least_) continue;
      push(v);
      if (pos + 1 == p_.step()) least_ = *std::min_element(seq_.begin(), seq_.end());
      const int end = pos + 1;
      const bool closes = end >= p_.k() && (end - p_.k()) % p_.step() == 0 &&
                          (end - p_.k()) / p_.step() < m_ - 1;
      if (!closes || window_ok((end - p_.k()) / p_.step())) extend();
      pop();
    }
  }

  void push(Vertex v) {
    seq_.push_back(v);
    used_ |= Mask{1} << (v - 1);
  }
  void pop() {
    used_ &= ~(Mask{1} << (seq_.back() - 1));
    seq_.pop_back();
  }

  const ColouringOracle& oracle_;
  const Params& p_;
  Colour colour_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<int>& witness_of_;
  std::vector<VertexList>& seqs_;
  int m_ = 0, len_ = 0;
  VertexList seq_;
  Mask used_ = 0;
  Vertex least_ = 0;
};

}  // namespace

BruteResult brute_force_min_uncovered(const ColouringOracle& oracle, std::uint64_t budget) {
  const Params& p = oracle.params();
  if (p.n() > kBruteMaxVertices)
    throw BudgetExceeded("brute force supports n <= " + std::to_string(kBruteMaxVertices));
  const std::size_t full = std::size_t{1} << p.n();
  std::uint64_t nodes = 0;

  // witness index per vertex mask and colour; -1 = not spanned by a cycle
  std::vector<int> of[2] = {std::vector<int>(full, -1), std::vector<int>(full, -1)};
  std::vector<VertexList> seqs;
  for (Colour c : {Colour::Blue, Colour::Red})
    CycleSearch(oracle, c, budget, nodes, of[static_cast<int>(c)], seqs).run();

  // options per slot: empty, a cycle, or a degenerate cycle (k-ell vertices)
  auto is_degenerate = [&](Mask m) { return std::popcount(m) == p.step(); };
  auto usable = [&](int c, Mask m) { return m == 0 || of[c][m] >= 0 || is_degenerate(m); };

  // ties: fewer degenerate items, then smaller masks
  auto degenerate_items = [&](Mask b, Mask r) {
    return (b && of[0][b] < 0 ? 1 : 0) + (r && of[1][r] < 0 ? 1 : 0);
  };
  int best = p.n() + 1, best_deg = 3;
  Mask best_b = 0, best_r = 0;
  for (Mask b = 0; b < full; ++b) {
    if (!usable(0, b)) continue;
    const Mask rest = static_cast<Mask>(full - 1) & ~b;
    for (Mask r = rest;; r = (r - 1) & rest) {
      if (usable(1, r)) {
        const int left = p.n() - std::popcount(b) - std::popcount(r);
        const int deg = degenerate_items(b, r);
        if (left < best || (left == best && deg < best_deg)) {
          best = left;
          best_deg = deg;
          best_b = b;
          best_r = r;
        }
      }
      if (r == 0) break;
    }
  }

  Certificate cert{p, {}, {}, Claim::None};
  auto emit = [&](int c, Mask m) {
    if (m == 0) return;
    if (of[c][m] >= 0) {
      cert.items.push_back({CertificateItem::Kind::Cycle, seqs[of[c][m]], static_cast<Colour>(c)});
      return;
    }
    VertexList vs;
    for (int v = 1; v <= p.n(); ++v)
      if (m >> (v - 1) & 1u) vs.push_back(v);
    cert.add_degenerate(std::move(vs));
  };
  emit(0, best_b);
  emit(1, best_r);
  cert.fill_uncovered();
  return BruteResult{best, std::move(cert), seqs.size()};
}

}  // namespace lehel
