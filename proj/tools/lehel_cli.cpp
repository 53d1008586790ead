// Command-line front end: gen, partition, cover, verify, brute, sweep.
// Exit codes: 0 ok, 1 verification failed, 2 usage or bad input.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lehel/brute.hpp"
#include "lehel/io.hpp"
#include "lehel/sweep.hpp"
#include "lehel/verify.hpp"

using namespace lehel;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// "1,2,5-8" -> {1,2,5,6,7,8}
VertexList parse_vertex_set(const std::string& text) {
  VertexList out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        int lo = std::stoi(part.substr(0, dash)), hi = std::stoi(part.substr(dash + 1));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad vertex set '" + text + "'");
    }
  }
  return out;
}

Colour parse_colour(const std::string& s) {
  if (s == "blue") return Colour::Blue;
  if (s == "red") return Colour::Red;
  throw InvalidArgument("colour must be blue or red, got '" + s + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << '\n';
  else
    write_text_file(out_path, text + '\n');
}

void print_violations(const VerifyReport& rep) {
  for (const auto& v : rep.violations) std::cerr << v.code << ": " << v.detail << '\n';
}

struct GenArgs {
  int n = 0, k = 0, ell = 0;
  std::string kind = "random", set, colour = "blue", out;
  std::uint64_t seed = 0;
  double p_red = 0.5;
  int threshold = 0;
};

int cmd_gen(const GenArgs& a) {
  Params p(a.n, a.k, a.ell);
  ColouringSpec spec;
  if (a.kind == "random") {
    if (a.p_red < 0.0 || a.p_red > 1.0) throw InvalidArgument("--p-red must lie in [0, 1]");
    spec = ColouringSpec::random(a.seed, a.p_red);
  } else if (a.kind == "split") {
    spec = ColouringSpec::split(parse_vertex_set(a.set), a.threshold);
  } else if (a.kind == "const") {
    spec = ColouringSpec::constant_colour(parse_colour(a.colour));
  } else {
    throw InvalidArgument("--kind must be random, split or const");
  }
  save_colouring(ColouringOracle(p, std::move(spec)), a.out);
  return kOk;
}

struct RunArgs {
  std::string input, variant = "a", out, dot;
};

int cmd_run(const RunArgs& a, bool cover) {
  ColouringOracle oracle = load_colouring(a.input);
  if (a.variant != "a" && a.variant != "b") throw InvalidArgument("--variant must be a or b");
  const bool b = a.variant == "b";
  Engine engine = cover ? (b ? Engine::CoverB : Engine::CoverA) : (b ? Engine::B : Engine::A);
  Certificate cert = run_engine(oracle, engine);
  emit(certificate_to_json(cert), a.out);
  if (!a.dot.empty()) write_text_file(a.dot, certificate_to_dot(cert));
  VerifyReport rep = verify_certificate(oracle, cert);
  print_violations(rep);
  return rep.ok() ? kOk : kFailed;
}

struct VerifyArgs {
  std::string input, cert, bound = "auto";
};

int cmd_verify(const VerifyArgs& a) {
  ColouringOracle oracle = load_colouring(a.input);
  Certificate cert = certificate_from_json(read_text_file(a.cert));
  std::optional<int> bound;
  if (a.bound != "auto") {
    try {
      bound = std::stoi(a.bound);
    } catch (const std::logic_error&) {
      throw InvalidArgument("--bound must be an integer or auto");
    }
  }
  VerifyReport rep = verify_certificate(oracle, cert, bound);
  print_violations(rep);
  std::cout << (rep.ok() ? "ok" : "rejected") << '\n';
  return rep.ok() ? kOk : kFailed;
}

int cmd_brute(const std::string& input, std::uint64_t budget) {
  ColouringOracle oracle = load_colouring(input);
  BruteResult r = brute_force_min_uncovered(oracle, budget);
  std::cout << "{\"min_uncovered\": " << r.min_uncovered
            << ", \"witness\": " << certificate_to_json(r.witness, -1) << "}\n";
  VerifyReport rep = verify_certificate(oracle, r.witness, r.min_uncovered);
  print_violations(rep);
  return rep.ok() ? kOk : kFailed;
}

struct SweepArgs {
  int n = 0, k = 0, ell = 0;
  std::string mode = "random", engine = "a", dump;
  std::uint64_t count = 100, seed = 0;
  double p_red = 0.5;
  int jobs = 1;
};

int cmd_sweep(const SweepArgs& a) {
  Params p(a.n, a.k, a.ell);
  SweepOptions opt;
  if (a.mode == "exhaustive")
    opt.mode = SweepOptions::Mode::Exhaustive;
  else if (a.mode != "random")
    throw InvalidArgument("--mode must be exhaustive or random");
  opt.count = a.count;
  opt.seed = a.seed;
  opt.p_red = a.p_red;
  opt.engine = engine_from_string(a.engine);
  if ((opt.engine == Engine::B || opt.engine == Engine::CoverB) && !p.third_or_less())
    throw InvalidArgument("variant b requires 3*ell <= k");
  opt.jobs = a.jobs;
  if (!a.dump.empty()) opt.dump_dir = a.dump;
  SweepSummary s = sweep(p, opt);
  std::cout << s.to_json() << '\n';
  if (s.failures) std::cerr << "first failure at instance " << s.first_failure << ": " << s.first_error << '\n';
  return s.failures ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic ell-cycle partitions of 2-edge-coloured complete hypergraphs"};
  app.require_subcommand(1);

  GenArgs g;
  auto* gen = app.add_subcommand("gen", "write a colouring file");
  gen->add_option("--n", g.n, "vertices")->required();
  gen->add_option("--k", g.k, "uniformity")->required();
  gen->add_option("--ell", g.ell, "overlap")->required();
  gen->add_option("--kind", g.kind, "random | split | const");
  gen->add_option("--seed", g.seed, "random seed");
  gen->add_option("--p-red", g.p_red, "probability of red (random)");
  gen->add_option("--set", g.set, "split set A, e.g. 1-5 or 1,3,7");
  gen->add_option("--threshold", g.threshold, "edge is red iff |e & A| >= threshold");
  gen->add_option("--colour", g.colour, "blue | red (const)");
  gen->add_option("--out", g.out, "output file")->required();

  RunArgs pr, cv;
  auto* part = app.add_subcommand("partition", "two monochromatic cycles of different colours");
  auto* cover = app.add_subcommand("cover", "cover every vertex by monochromatic cycles");
  for (auto [sub, a] : {std::pair{part, &pr}, std::pair{cover, &cv}}) {
    sub->add_option("--input", a->input, "colouring file")->required();
    sub->add_option("--variant", a->variant, "a | b");
    sub->add_option("--out", a->out, "certificate JSON (default stdout)");
    sub->add_option("--dot", a->dot, "Graphviz output");
  }

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "check a certificate against a colouring");
  ver->add_option("--input", va.input, "colouring file")->required();
  ver->add_option("--cert", va.cert, "certificate JSON")->required();
  ver->add_option("--bound", va.bound, "uncovered bound, integer or auto");

  std::string brute_input;
  std::uint64_t budget = 50'000'000;
  auto* brute = app.add_subcommand("brute", "exact minimum uncovered count by enumeration");
  brute->add_option("--input", brute_input, "colouring file")->required();
  brute->add_option("--budget", budget, "search node limit");

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "run an engine and the verifier over many colourings");
  sw->add_option("--n", sa.n, "vertices")->required();
  sw->add_option("--k", sa.k, "uniformity")->required();
  sw->add_option("--ell", sa.ell, "overlap")->required();
  sw->add_option("--mode", sa.mode, "exhaustive | random");
  sw->add_option("--count", sa.count, "random instances");
  sw->add_option("--seed", sa.seed, "first seed");
  sw->add_option("--p-red", sa.p_red, "probability of red");
  sw->add_option("--engine", sa.engine, "a | b | cover_a | cover_b");
  sw->add_option("--jobs", sa.jobs, "worker threads");
  sw->add_option("--dump-dir", sa.dump, "write failing colourings and certificates here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(g);
    if (*part) return cmd_run(pr, false);
    if (*cover) return cmd_run(cv, true);
    if (*ver) return cmd_verify(va);
    if (*brute) return cmd_brute(brute_input, budget);
    if (*sw) return cmd_sweep(sa);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::runtime_error& e) {  // I/O, budget
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
