#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lehel/brute.hpp"
#include "lehel/io.hpp"
#include "lehel/sweep.hpp"
#include "lehel/verify.hpp"

namespace py = pybind11;
using namespace lehel;

namespace {

Colour colour_from(const std::string& s) {
  if (s == "blue") return Colour::Blue;
  if (s == "red") return Colour::Red;
  throw InvalidArgument("colour must be 'blue' or 'red'");
}

CoverVariant cover_variant(const std::string& v) {
  if (v == "a") return CoverVariant::A;
  if (v == "b") return CoverVariant::B;
  throw InvalidArgument("variant must be 'a' or 'b'");
}

py::dict stats_dict(const EngineStats& st) {
  py::dict d;
  d["iterations"] = st.iterations;
  d["queries"] = st.queries;
  d["relabelings"] = st.relabelings;
  return d;
}

}  // namespace

PYBIND11_MODULE(lehel, m) {
  m.doc() = "Monochromatic ell-cycle partitions of 2-edge-coloured complete hypergraphs";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Params>(m, "Params")
      .def(py::init<int, int, int>(), py::arg("n"), py::arg("k"), py::arg("ell"))
      .def_property_readonly("n", &Params::n)
      .def_property_readonly("k", &Params::k)
      .def_property_readonly("ell", &Params::ell)
      .def_property_readonly("step", &Params::step)
      .def_property_readonly("n0", &Params::n0)
      .def_property_readonly("edge_count", &Params::edge_count)
      .def("__eq__", &Params::operator==)
      .def("__repr__", &Params::to_string);

  m.def("colex_rank", [](const VertexList& e, const Params& p) { return colex_rank(e, p); });
  m.def("colex_unrank", &colex_unrank);

  py::class_<ColouringOracle>(m, "Colouring")
      .def_static("random", [](const Params& p, std::uint64_t seed, double p_red) {
            return ColouringOracle(p, ColouringSpec::random(seed, p_red));
          }, py::arg("params"), py::arg("seed"), py::arg("p_red") = 0.5)
      .def_static("split", [](const Params& p, const VertexList& a, int t) {
            return ColouringOracle(p, ColouringSpec::split(a, t));
          }, py::arg("params"), py::arg("set"), py::arg("threshold"))
      .def_static("constant", [](const Params& p, const std::string& c) {
            return ColouringOracle(p, ColouringSpec::constant_colour(colour_from(c)));
          }, py::arg("params"), py::arg("colour"))
      .def_static("from_bits", [](const Params& p, const std::vector<std::uint8_t>& bits) {
            return ColouringOracle(p, ColouringSpec::explicit_bits(bits));
          }, py::arg("params"), py::arg("bits"))
      .def_static("parse", &parse_colouring, py::arg("text"))
      .def_static("load", &load_colouring, py::arg("path"))
      .def_property_readonly("params", &ColouringOracle::params)
      .def("colour_of", [](const ColouringOracle& o, const VertexList& e) {
            return std::string(to_string(o.colour_of(e)));
          })
      .def_property_readonly("query_count", &ColouringOracle::query_count)
      .def("bits", &ColouringOracle::materialize)
      .def("swapped", &ColouringOracle::swapped)
      .def("relabeled", &ColouringOracle::relabeled, py::arg("perm"))
      .def("to_text", &format_colouring)
      .def("save", [](const ColouringOracle& o, const std::string& path) { save_colouring(o, path); });

  py::class_<Certificate>(m, "Certificate")
      .def_static("from_json", &certificate_from_json)
      .def_property_readonly("params", [](const Certificate& c) { return c.params; })
      .def_property_readonly("uncovered", [](const Certificate& c) { return c.uncovered; })
      .def_property_readonly("claim", [](const Certificate& c) { return std::string(to_string(c.claim)); })
      .def_property_readonly("items", [](const Certificate& c) {
        py::list out;
        for (const auto& it : c.items) {
          py::dict d;
          d["kind"] = it.kind == CertificateItem::Kind::Cycle ? "cycle" : "degenerate";
          d["vseq"] = it.vseq;
          d["colour"] = it.colour ? py::object(py::str(to_string(*it.colour))) : py::object(py::none());
          out.append(d);
        }
        return out;
      })
      .def("to_json", &certificate_to_json, py::arg("indent") = 2)
      .def("to_dot", &certificate_to_dot);

  auto with_stats = [](auto fn) {
    return [fn](const ColouringOracle& o) {
      EngineStats st;
      Certificate c = fn(o, &st);
      return py::make_tuple(c, stats_dict(st));
    };
  };
  m.def("partition_a", with_stats([](const ColouringOracle& o, EngineStats* s) { return partition_theorem_a(o, s); }),
        "Two monochromatic cycles of different colours; at most 4(k-ell) uncovered. Returns (certificate, stats).");
  m.def("partition_b", with_stats([](const ColouringOracle& o, EngineStats* s) { return partition_theorem_b(o, s); }),
        "As partition_a with at most 2(k-ell) uncovered; needs 3*ell <= k.");
  m.def("cover", [](const ColouringOracle& o, const std::string& variant) {
        EngineStats st;
        Certificate c = cover_all_vertices(o, cover_variant(variant), &st);
        return py::make_tuple(c, stats_dict(st));
      }, py::arg("colouring"), py::arg("variant") = "a");

  m.def("verify", [](const ColouringOracle& o, const Certificate& c, std::optional<int> bound) {
        py::list out;
        for (const auto& v : verify_certificate(o, c, bound).violations) out.append(py::make_tuple(v.code, v.detail));
        return out;
      }, py::arg("colouring"), py::arg("certificate"), py::arg("bound") = py::none(),
      "List of (code, detail) violations; empty when the certificate is valid.");

  m.def("brute_force", [](const ColouringOracle& o, std::uint64_t budget) {
        BruteResult r = brute_force_min_uncovered(o, budget);
        return py::make_tuple(r.min_uncovered, r.witness);
      }, py::arg("colouring"), py::arg("budget") = 50'000'000);

  m.def("sweep", [](const Params& p, const std::string& mode, std::uint64_t count, std::uint64_t seed,
                    const std::string& engine, int jobs, double p_red) {
        SweepOptions opt;
        if (mode == "exhaustive")
          opt.mode = SweepOptions::Mode::Exhaustive;
        else if (mode != "random")
          throw InvalidArgument("mode must be 'exhaustive' or 'random'");
        opt.count = count;
        opt.seed = seed;
        opt.engine = engine_from_string(engine);
        opt.jobs = jobs;
        opt.p_red = p_red;
        SweepSummary s;
        {
          py::gil_scoped_release release;
          s = sweep(p, opt);
        }
        return s.to_json();
      }, py::arg("params"), py::arg("mode") = "random", py::arg("count") = 100, py::arg("seed") = 0,
      py::arg("engine") = "a", py::arg("jobs") = 1, py::arg("p_red") = 0.5,
      "Summary JSON text.");
}
