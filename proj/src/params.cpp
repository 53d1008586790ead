#include "lehel/params.hpp"

#include <limits>

namespace lehel {

Params::Params(int n, int k, int ell) : n_(n), k_(k), ell_(ell) {
  if (ell <= 0) throw InvalidArgument("ell must be positive");
  if (2 * ell > k) throw InvalidArgument("ell must satisfy 2*ell <= k");
  if (n <= 0) throw InvalidArgument("n must be positive");
  if (n % (k - ell) != 0) throw InvalidArgument("(k-ell) must divide n");
}

std::uint64_t Params::edge_count() const { return binomial(n_, k_); }

std::string Params::to_string() const {
  return "(n=" + std::to_string(n_) + ", k=" + std::to_string(k_) +
         ", ell=" + std::to_string(ell_) + ")";
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace lehel
