#include "lehel/verify.hpp"

#include <algorithm>

namespace lehel {

VerifyReport verify_certificate(const ColouringOracle& oracle, const Certificate& cert,
                                std::optional<int> bound) {
  VerifyReport report;
  auto fail = [&](const char* code, std::string detail) {
    report.violations.push_back({code, std::move(detail)});
  };
  const Params& p = cert.params;
  if (!(p == oracle.params())) {
    fail("params", "certificate params " + p.to_string() + " differ from colouring " +
                       oracle.params().to_string());
    return report;
  }

  std::vector<int> owner(p.n() + 1, -1);
  auto claim_vertex = [&](Vertex v, int who, const std::string& where) {
    if (v < 1 || v > p.n()) {
      fail("structure", where + ": vertex " + std::to_string(v) + " outside [n]");
      return;
    }
    if (owner[v] != -1)
      fail("disjointness", where + ": vertex " + std::to_string(v) + " already used");
    else
      owner[v] = who;
  };

  int blue_cycles = 0, red_cycles = 0;
  for (std::size_t idx = 0; idx < cert.items.size(); ++idx) {
    const auto& item = cert.items[idx];
    const std::string where = "item " + std::to_string(idx);
    if (item.kind == CertificateItem::Kind::Degenerate) {
      if (static_cast<int>(item.vseq.size()) != p.step())
        fail("structure", where + ": degenerate cycle must have k-ell vertices");
      if (item.colour) fail("structure", where + ": degenerate cycle carries a colour");
    } else {
      try {
        EllCycle c = assemble_cycle(p, item.vseq);
        if (!item.colour) {
          fail("structure", where + ": cycle without a colour");
        } else {
          (*item.colour == Colour::Blue ? blue_cycles : red_cycles)++;
          for (int i = 1; i <= c.length(); ++i)
            if (oracle.colour_of(c.edge(i)) != *item.colour) {
              fail("colour", where + ": edge " + std::to_string(i) + " is not " + to_string(*item.colour));
              break;
            }
        }
      } catch (const InvalidArgument& e) {
        fail("structure", where + ": " + e.what());
      }
    }
    for (Vertex v : item.vseq) claim_vertex(v, static_cast<int>(idx), where);
  }
  for (Vertex v : cert.uncovered) claim_vertex(v, -2, "uncovered");
  for (int v = 1; v <= p.n(); ++v)
    if (owner[v] == -1) fail("partition", "vertex " + std::to_string(v) + " neither covered nor listed");

  const bool theorem = cert.claim == Claim::TheoremA || cert.claim == Claim::TheoremB;
  if (theorem) {
    if (cert.items.size() > 2) fail("count", "theorem certificates hold at most two cycles");
    if (blue_cycles > 1 || red_cycles > 1) fail("colours", "two cycles share a colour");
  }
  if (cert.claim == Claim::CoverA && cert.items.size() > 4)
    fail("count", "cover uses more than four cycles");
  if (cert.claim == Claim::CoverB && cert.items.size() > 3)
    fail("count", "cover uses more than three cycles");

  int limit = bound.value_or(claim_bound(p, cert.claim));
  if (static_cast<int>(cert.uncovered.size()) > limit)
    fail("bound", std::to_string(cert.uncovered.size()) + " uncovered vertices exceed the bound " +
                      std::to_string(limit));
  return report;
}

}  // namespace lehel
