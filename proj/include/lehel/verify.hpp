#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lehel/chains.hpp"

namespace lehel {

struct Violation {
  std::string code;    // structure | colour | disjointness | partition | colours | count | bound | params
  std::string detail;
};

struct VerifyReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Re-checks a certificate from scratch using only chain validation and
/// oracle queries. `bound` limits the number of uncovered vertices; when
/// omitted the bound implied by the certificate's claim is used.
VerifyReport verify_certificate(const ColouringOracle& oracle, const Certificate& cert,
                                std::optional<int> bound = std::nullopt);

}  // namespace lehel
