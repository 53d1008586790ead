#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehel {

using Vertex = int;
using VertexList = std::vector<Vertex>;

/// Raised for parameter triples or inputs that violate a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The triple (n, k, ell): host order, uniformity and overlap of consecutive
/// edges. Construction validates 0 < ell, 2*ell <= k and (k - ell) | n.
class Params {
 public:
  Params(int n, int k, int ell);

  int n() const { return n_; }
  int k() const { return k_; }
  int ell() const { return ell_; }

  /// k - ell: the number of new vertices each edge contributes along a chain.
  int step() const { return k_ - ell_; }
  /// k - 2*ell: the size of an edge interior.
  int interior() const { return k_ - 2 * ell_; }
  /// n / (k - ell).
  int n0() const { return n_ / step(); }

  bool is_half() const { return 2 * ell_ == k_; }
  bool third_or_less() const { return 3 * ell_ <= k_; }

  /// Number of k-subsets of [n].
  std::uint64_t edge_count() const;

  bool operator==(const Params&) const = default;

  std::string to_string() const;

 private:
  int n_;
  int k_;
  int ell_;
};

/// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(int n, int r);

}  // namespace lehel
