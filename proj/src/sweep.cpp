#include "lehel/sweep.hpp"

#include <algorithm>
#include <filesystem>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lehel/io.hpp"
#include "lehel/verify.hpp"

namespace lehel {

const char* to_string(Engine e) {
  switch (e) {
    case Engine::A: return "a";
    case Engine::B: return "b";
    case Engine::CoverA: return "cover_a";
    case Engine::CoverB: return "cover_b";
  }
  return "a";
}

Engine engine_from_string(const std::string& name) {
  for (Engine e : {Engine::A, Engine::B, Engine::CoverA, Engine::CoverB})
    if (name == to_string(e)) return e;
  throw InvalidArgument("unknown engine '" + name + "' (expected a, b, cover_a or cover_b)");
}

Certificate run_engine(const ColouringOracle& oracle, Engine engine, EngineStats* stats) {
  switch (engine) {
    case Engine::A: return partition_theorem_a(oracle, stats);
    case Engine::B: return partition_theorem_b(oracle, stats);
    case Engine::CoverA: return cover_all_vertices(oracle, CoverVariant::A, stats);
    case Engine::CoverB: return cover_all_vertices(oracle, CoverVariant::B, stats);
  }
  throw InvalidArgument("unknown engine");
}

void SweepSummary::merge(const SweepSummary& o) {
  if (o.failures && (!failures || o.first_failure < first_failure)) {
    first_failure = o.first_failure;
    first_error = o.first_error;
  }
  instances += o.instances;
  failures += o.failures;
  excluded += o.excluded;
  max_uncovered = std::max(max_uncovered, o.max_uncovered);
  for (const auto& [u, c] : o.histogram) histogram[u] += c;
  max_iterations = std::max(max_iterations, o.max_iterations);
  max_queries = std::max(max_queries, o.max_queries);
}

std::string SweepSummary::to_json(int indent) const {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [u, c] : histogram) hist[std::to_string(u)] = c;
  nlohmann::json j;
  j["instances"] = instances;
  j["failures"] = failures;
  j["excluded"] = excluded;
  j["max_uncovered"] = max_uncovered;
  j["histogram"] = std::move(hist);
  j["max_iterations"] = max_iterations;
  j["max_queries"] = max_queries;
  if (failures) {
    j["first_failure"] = first_failure;
    j["first_error"] = first_error;
  }
  return j.dump(indent);
}

namespace {

ColouringOracle instance(const Params& p, const SweepOptions& opt, std::uint64_t i) {
  if (opt.mode == SweepOptions::Mode::Random)
    return ColouringOracle(p, ColouringSpec::random(opt.seed + i, opt.p_red));
  std::vector<std::uint8_t> bits(p.edge_count());
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = static_cast<std::uint8_t>(i >> j & 1u);
  return ColouringOracle(p, ColouringSpec::explicit_bits(std::move(bits)));
}

void dump(const SweepOptions& opt, std::uint64_t i, const ColouringOracle& oracle,
          const Certificate* cert) {
  if (!opt.dump_dir) return;
  try {
    std::filesystem::create_directories(*opt.dump_dir);
    const std::string stem = *opt.dump_dir + "/failure_" + std::to_string(i);
    save_colouring(oracle, stem + ".col");
    if (cert) write_text_file(stem + ".json", certificate_to_json(*cert));
  } catch (const std::exception&) {
    // dumping is best effort; the summary still records the failure
  }
}

void run_range(const Params& p, const SweepOptions& opt, std::uint64_t from, std::uint64_t to,
               SweepSummary& out) {
  for (std::uint64_t i = from; i < to; ++i) {
    ColouringOracle oracle = instance(p, opt, i);
    ++out.instances;
    auto fail = [&](const std::string& why, const Certificate* cert) {
      if (!out.failures || i < out.first_failure) {
        out.first_failure = i;
        out.first_error = why;
      }
      ++out.failures;
      dump(opt, i, oracle, cert);
    };
    EngineStats stats;
    Certificate cert{p, {}, {}, Claim::None};
    try {
      cert = run_engine(oracle, opt.engine, &stats);
    } catch (const InvalidArgument& e) {
      const bool cover = opt.engine == Engine::CoverA || opt.engine == Engine::CoverB;
      if (cover && p.is_half()) {
        ++out.excluded;
        continue;
      }
      fail(e.what(), nullptr);
      continue;
    } catch (const std::exception& e) {
      fail(e.what(), nullptr);
      continue;
    }
    VerifyReport rep = verify_certificate(oracle, cert);
    if (!rep.ok()) {
      fail(rep.violations.front().code + ": " + rep.violations.front().detail, &cert);
      continue;
    }
    const int u = static_cast<int>(cert.uncovered.size());
    out.max_uncovered = std::max(out.max_uncovered, u);
    ++out.histogram[u];
    out.max_iterations = std::max(out.max_iterations, stats.iterations);
    out.max_queries = std::max(out.max_queries, stats.queries);
  }
}

}  // namespace

SweepSummary sweep(const Params& p, const SweepOptions& opt) {
  std::uint64_t total = opt.count;
  if (opt.mode == SweepOptions::Mode::Exhaustive) {
    if (p.edge_count() > static_cast<std::uint64_t>(opt.max_bits))
      throw InvalidArgument("exhaustive sweep needs C(n,k) <= " + std::to_string(opt.max_bits) +
                            " (got " + std::to_string(p.edge_count()) + ")");
    total = std::uint64_t{1} << p.edge_count();
  }
  const int jobs = std::max(1, opt.jobs);
  std::vector<SweepSummary> parts(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    const std::uint64_t from = std::min(total, chunk * t), to = std::min(total, chunk * (t + 1));
    if (jobs == 1)
      run_range(p, opt, from, to, parts[t]);
    else
      workers.emplace_back([&, t, from, to] { run_range(p, opt, from, to, parts[t]); });
  }
  for (auto& w : workers) w.join();
  SweepSummary total_summary;
  for (const auto& s : parts) total_summary.merge(s);
  return total_summary;
}

}  // namespace lehel
