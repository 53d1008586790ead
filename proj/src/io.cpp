#include "lehel/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lehel {

using nlohmann::json;

const char* to_string(Claim claim) {
  switch (claim) {
    case Claim::TheoremA: return "theorem_a";
    case Claim::TheoremB: return "theorem_b";
    case Claim::CoverA: return "cover_a";
    case Claim::CoverB: return "cover_b";
    case Claim::None: break;
  }
  return "none";
}

Claim claim_from_string(const std::string& name) {
  for (Claim c : {Claim::None, Claim::TheoremA, Claim::TheoremB, Claim::CoverA, Claim::CoverB})
    if (name == to_string(c)) return c;
  throw InvalidArgument("unknown claim '" + name + "'");
}

std::string certificate_to_json(const Certificate& cert, int indent) {
  json items = json::array();
  for (const auto& it : cert.items) {
    json j;
    j["kind"] = it.kind == CertificateItem::Kind::Cycle ? "cycle" : "degenerate";
    j["vseq"] = it.vseq;
    j["colour"] = it.colour ? json(to_string(*it.colour)) : json(nullptr);
    items.push_back(std::move(j));
  }
  json out;
  out["params"] = {{"n", cert.params.n()}, {"k", cert.params.k()}, {"ell", cert.params.ell()}};
  out["claim"] = to_string(cert.claim);
  out["items"] = std::move(items);
  out["uncovered"] = cert.uncovered;
  return out.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    const json& pj = j.at("params");
    Params p(pj.at("n").get<int>(), pj.at("k").get<int>(), pj.at("ell").get<int>());
    Certificate cert{p, {}, {}, Claim::None};
    if (j.contains("claim") && !j["claim"].is_null())
      cert.claim = claim_from_string(j["claim"].get<std::string>());
    for (const json& it : j.at("items")) {
      CertificateItem item;
      const std::string kind = it.at("kind").get<std::string>();
      if (kind == "cycle")
        item.kind = CertificateItem::Kind::Cycle;
      else if (kind == "degenerate")
        item.kind = CertificateItem::Kind::Degenerate;
      else
        throw InvalidArgument("unknown item kind '" + kind + "'");
      item.vseq = it.at("vseq").get<VertexList>();
      if (it.contains("colour") && !it["colour"].is_null()) {
        const std::string c = it["colour"].get<std::string>();
        if (c == "blue")
          item.colour = Colour::Blue;
        else if (c == "red")
          item.colour = Colour::Red;
        else
          throw InvalidArgument("unknown colour '" + c + "'");
      }
      cert.items.push_back(std::move(item));
    }
    cert.uncovered = j.at("uncovered").get<VertexList>();
    return cert;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
}

std::string certificate_to_dot(const Certificate& cert) {
  std::ostringstream out;
  out << "graph certificate {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < cert.items.size(); ++i) {
    const auto& it = cert.items[i];
    const char* colour = !it.colour ? "gray" : *it.colour == Colour::Blue ? "blue" : "red";
    out << "  subgraph cluster_" << i << " {\n    label=\""
        << (it.kind == CertificateItem::Kind::Cycle ? "cycle" : "degenerate") << ' ' << i << "\";\n";
    for (Vertex v : it.vseq) out << "    " << v << ";\n";
    if (it.kind == CertificateItem::Kind::Cycle && it.vseq.size() > 1) {
      for (std::size_t j = 0; j < it.vseq.size(); ++j) {
        std::size_t nxt = (j + 1) % it.vseq.size();
        if (it.vseq.size() == 2 && nxt == 0) break;
        out << "    " << it.vseq[j] << " -- " << it.vseq[nxt] << " [color=" << colour << "];\n";
      }
    }
    out << "  }\n";
  }
  if (!cert.uncovered.empty()) {
    out << "  subgraph cluster_uncovered {\n    label=\"uncovered\";\n";
    for (Vertex v : cert.uncovered) out << "    " << v << " [style=dashed];\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace lehel
