#include "lehel/colouring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lehel {

namespace {

constexpr std::uint64_t kDenseMemoLimit = std::uint64_t{1} << 26;
constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 31;

}  // namespace

const char* to_string(Colour c) { return c == Colour::Blue ? "blue" : "red"; }

VertexList canonical_edge(std::span<const Vertex> vertices, const Params& params) {
  if (static_cast<int>(vertices.size()) != params.k())
    throw InvalidArgument("edge must have exactly k vertices");
  VertexList e(vertices.begin(), vertices.end());
  std::sort(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1 || e[i] > params.n()) throw InvalidArgument("edge vertex out of range");
    if (i > 0 && e[i] == e[i - 1]) throw InvalidArgument("edge has a repeated vertex");
  }
  return e;
}

std::uint64_t colex_rank(std::span<const Vertex> edge, const Params& params) {
  VertexList e = canonical_edge(edge, params);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < e.size(); ++i) r += binomial(e[i] - 1, static_cast<int>(i) + 1);
  return r;
}

VertexList colex_unrank(std::uint64_t rank, const Params& params) {
  if (rank >= params.edge_count()) throw InvalidArgument("colex rank out of range");
  VertexList e(params.k());
  int hi = params.n();
  for (int i = params.k(); i >= 1; --i) {
    // largest v with C(v-1, i) <= rank
    int v = i;
    while (v + 1 <= hi && binomial(v, i) <= rank) ++v;
    e[i - 1] = v;
    rank -= binomial(v - 1, i);
    hi = v - 1;
  }
  return e;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

ColouringSpec ColouringSpec::explicit_bits(std::vector<std::uint8_t> bits) {
  ColouringSpec s;
  s.kind = Kind::Explicit;
  s.bits = std::move(bits);
  return s;
}

ColouringSpec ColouringSpec::random(std::uint64_t seed, double p_red) {
  ColouringSpec s;
  s.kind = Kind::Random;
  s.seed = seed;
  s.p_red = p_red;
  return s;
}

ColouringSpec ColouringSpec::split(VertexList set, int threshold) {
  ColouringSpec s;
  s.kind = Kind::Split;
  s.split_set = std::move(set);
  s.threshold = threshold;
  return s;
}

ColouringSpec ColouringSpec::constant_colour(Colour c) {
  ColouringSpec s;
  s.kind = Kind::Constant;
  s.constant = c;
  return s;
}

struct ColouringOracle::Memo {
  mutable std::mutex mutex;
  std::vector<std::int8_t> dense;
  std::unordered_map<std::uint64_t, Colour> sparse;
  std::uint64_t queries = 0;
};

ColouringOracle::ColouringOracle(Params params, ColouringSpec spec)
    : params_(params), memo_(std::make_unique<Memo>()) {
  switch (spec.kind) {
    case ColouringSpec::Kind::Explicit:
      if (spec.bits.size() != params.edge_count())
        throw InvalidArgument("explicit colouring must have C(n,k) = " +
                              std::to_string(params.edge_count()) + " entries, got " +
                              std::to_string(spec.bits.size()));
      for (auto b : spec.bits)
        if (b > 1) throw InvalidArgument("explicit colouring entries must be 0 or 1");
      break;
    case ColouringSpec::Kind::Random:
      if (!(spec.p_red >= 0.0 && spec.p_red <= 1.0))
        throw InvalidArgument("p_red must lie in [0, 1]");
      break;
    case ColouringSpec::Kind::Split: {
      if (spec.threshold < 0 || spec.threshold > params.k())
        throw InvalidArgument("split threshold must lie in [0, k]");
      auto mask = std::make_shared<std::vector<char>>(params.n() + 1, 0);
      for (Vertex v : spec.split_set) {
        if (v < 1 || v > params.n()) throw InvalidArgument("split set is not a subset of [n]");
        (*mask)[v] = 1;
      }
      split_mask_ = std::move(mask);
      break;
    }
    case ColouringSpec::Kind::Constant:
      break;
  }
  spec_ = std::make_shared<const ColouringSpec>(std::move(spec));
  if (params_.edge_count() <= kDenseMemoLimit) memo_->dense.assign(params_.edge_count(), -1);
}

ColouringOracle::ColouringOracle(Params params, Rule rule)
    : params_(params), rule_(std::move(rule)), memo_(std::make_unique<Memo>()) {
  if (params_.edge_count() <= kDenseMemoLimit) memo_->dense.assign(params_.edge_count(), -1);
}

ColouringOracle::ColouringOracle(ColouringOracle&&) noexcept = default;
ColouringOracle& ColouringOracle::operator=(ColouringOracle&&) noexcept = default;
ColouringOracle::~ColouringOracle() = default;

Colour ColouringOracle::compute(std::span<const Vertex> e, std::uint64_t rank) const {
  if (!spec_) return rule_(e);
  const ColouringSpec& s = *spec_;
  switch (s.kind) {
    case ColouringSpec::Kind::Explicit:
      return s.bits[rank] ? Colour::Red : Colour::Blue;
    case ColouringSpec::Kind::Random: {
      std::uint64_t x = splitmix64(s.seed ^ (rank * 0xD1B54A32D192ED03ULL));
      double u = static_cast<double>(x >> 11) * 0x1.0p-53;
      return u < s.p_red ? Colour::Red : Colour::Blue;
    }
    case ColouringSpec::Kind::Split: {
      int hits = 0;
      for (Vertex v : e) hits += (*split_mask_)[v];
      return hits >= s.threshold ? Colour::Red : Colour::Blue;
    }
    case ColouringSpec::Kind::Constant:
      return s.constant;
  }
  return Colour::Blue;
}

Colour ColouringOracle::colour_of(std::span<const Vertex> edge) const {
  VertexList e = canonical_edge(edge, params_);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < e.size(); ++i) r += binomial(e[i] - 1, static_cast<int>(i) + 1);
  {
    std::lock_guard lock(memo_->mutex);
    if (!memo_->dense.empty()) {
      if (memo_->dense[r] >= 0) return static_cast<Colour>(memo_->dense[r]);
    } else if (auto it = memo_->sparse.find(r); it != memo_->sparse.end()) {
      return it->second;
    }
  }
  Colour c = compute(e, r);
  std::lock_guard lock(memo_->mutex);
  if (!memo_->dense.empty()) {
    if (memo_->dense[r] < 0) {
      memo_->dense[r] = static_cast<std::int8_t>(c);
      ++memo_->queries;
    }
  } else if (memo_->sparse.emplace(r, c).second) {
    ++memo_->queries;
  }
  return c;
}

Colour ColouringOracle::colour_at_rank(std::uint64_t rank) const {
  VertexList e = colex_unrank(rank, params_);
  return colour_of(e);
}

std::uint64_t ColouringOracle::query_count() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->queries;
}

void ColouringOracle::reset_query_count() {
  std::lock_guard lock(memo_->mutex);
  memo_->queries = 0;
  if (!memo_->dense.empty())
    std::fill(memo_->dense.begin(), memo_->dense.end(), std::int8_t{-1});
  else
    memo_->sparse.clear();
}

std::vector<std::uint8_t> ColouringOracle::materialize() const {
  std::uint64_t total = params_.edge_count();
  if (total > kMaterializeLimit) throw InvalidArgument("colouring too large to materialise");
  std::vector<std::uint8_t> bits(total);
  VertexList e(params_.k());
  for (int i = 0; i < params_.k(); ++i) e[i] = i + 1;
  for (std::uint64_t r = 0; r < total; ++r) {
    bits[r] = static_cast<std::uint8_t>(compute(e, r));
    // next k-subset in colex order
    int i = 0;
    while (i + 1 < params_.k() && e[i] + 1 == e[i + 1]) {
      e[i] = i + 1;
      ++i;
    }
    ++e[i];
  }
  return bits;
}

ColouringOracle ColouringOracle::swapped() const {
  auto base = std::make_shared<ColouringOracle>(
      spec_ ? ColouringOracle(params_, *spec_) : ColouringOracle(params_, rule_));
  return ColouringOracle(params_, [base](std::span<const Vertex> e) {
    return swap(base->colour_of(e));
  });
}

ColouringOracle ColouringOracle::relabeled(std::vector<Vertex> perm) const {
  if (static_cast<int>(perm.size()) != params_.n() + 1)
    throw InvalidArgument("permutation must have n+1 entries (index 0 unused)");
  std::vector<char> seen(params_.n() + 1, 0);
  for (int v = 1; v <= params_.n(); ++v) {
    if (perm[v] < 1 || perm[v] > params_.n() || seen[perm[v]])
      throw InvalidArgument("not a permutation of [n]");
    seen[perm[v]] = 1;
  }
  auto base = std::make_shared<ColouringOracle>(
      spec_ ? ColouringOracle(params_, *spec_) : ColouringOracle(params_, rule_));
  return ColouringOracle(params_, [base, perm = std::move(perm)](std::span<const Vertex> e) {
    VertexList image;
    image.reserve(e.size());
    for (Vertex v : e) image.push_back(perm[v]);
    return base->colour_of(image);
  });
}

std::string format_colouring(const ColouringOracle& oracle) {
  const Params& p = oracle.params();
  auto bits = oracle.materialize();
  std::string out = std::to_string(p.n()) + " " + std::to_string(p.k()) + " " +
                    std::to_string(p.ell()) + "\n";
  out.reserve(out.size() + bits.size() + 1);
  for (auto b : bits) out.push_back(b ? '1' : '0');
  out.push_back('\n');
  return out;
}

void save_colouring(const ColouringOracle& oracle, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << format_colouring(oracle);
  if (!f) throw std::runtime_error("failed writing " + path);
}

ColouringOracle parse_colouring(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw InvalidArgument("colouring file: missing header");
  std::istringstream hs(header);
  int n = 0, k = 0, ell = 0;
  if (!(hs >> n >> k >> ell)) throw InvalidArgument("colouring file: malformed header");
  std::string extra;
  if (hs >> extra) throw InvalidArgument("colouring file: trailing data in header");
  Params params(n, k, ell);
  std::string body;
  std::getline(in, body);
  if (!body.empty() && body.back() == '\r') body.pop_back();
  std::string rest;
  while (std::getline(in, rest))
    if (!rest.empty() && rest != "\r") throw InvalidArgument("colouring file: data after body");
  if (body.size() != params.edge_count())
    throw InvalidArgument("colouring file: expected " + std::to_string(params.edge_count()) +
                          " bits, got " + std::to_string(body.size()));
  std::vector<std::uint8_t> bits(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1')
      throw InvalidArgument("colouring file: body must contain only 0 and 1");
    bits[i] = body[i] == '1';
  }
  return ColouringOracle(params, ColouringSpec::explicit_bits(std::move(bits)));
}

ColouringOracle load_colouring(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_colouring(ss.str());
}

}  // namespace lehel
