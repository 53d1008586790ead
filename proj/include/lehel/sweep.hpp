#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lehel/full_cover.hpp"

namespace lehel {

enum class Engine { A, B, CoverA, CoverB };
const char* to_string(Engine e);
Engine engine_from_string(const std::string& name);

/// Runs one engine on one colouring and returns its certificate.
Certificate run_engine(const ColouringOracle& oracle, Engine engine, EngineStats* stats = nullptr);

struct SweepOptions {
  enum class Mode { Exhaustive, Random };
  Mode mode = Mode::Random;
  std::uint64_t count = 100;  // random mode: instance i uses seed + i
  std::uint64_t seed = 0;
  double p_red = 0.5;
  Engine engine = Engine::A;
  int jobs = 1;
  int max_bits = 24;             // exhaustive mode: C(n,k) limit
  std::optional<std::string> dump_dir;  // colouring + certificate of each failure
};

struct SweepSummary {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t excluded = 0;  // cover runs at ell = k/2 that need a 2-edge patch
  int max_uncovered = 0;
  std::map<int, std::uint64_t> histogram;  // uncovered count -> instances
  int max_iterations = 0;
  std::uint64_t max_queries = 0;
  std::uint64_t first_failure = 0;  // valid when failures > 0
  std::string first_error;

  void merge(const SweepSummary& other);
  std::string to_json(int indent = 2) const;
};

/// Runs the engine and the verifier on every colouring (exhaustive mode,
/// instance i = the colouring whose colex bit j is bit j of i) or on `count`
/// seeded random colourings. Instances are split into contiguous ranges over
/// `jobs` threads; the summary does not depend on `jobs`.
SweepSummary sweep(const Params& params, const SweepOptions& options);

}  // namespace lehel
