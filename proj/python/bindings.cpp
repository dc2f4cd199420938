// Python bindings. Structured data crosses the boundary as JSON text; the
// dtcoords package turns it into dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "dtc/error.hpp"
#include "dtc/moves.hpp"
#include "dtc/multicurve.hpp"
#include "dtc/pa.hpp"
#include "dtc/relations.hpp"
#include "dtc/word_dsl.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

using Surface = std::shared_ptr<const dtc::PantsDecomposition>;

Surface surface_from(const std::string& spec) {
  for (const std::string& name : dtc::preset_names()) {
    if (name == spec) return std::make_shared<const dtc::PantsDecomposition>(dtc::preset(spec).decomposition);
  }
  return std::make_shared<const dtc::PantsDecomposition>(
      dtc::PantsDecomposition::build(dtc::GluingDescription::from_json(json::parse(spec))));
}

dtc::DTCoords coords_from(const std::string& text, const dtc::PantsDecomposition& pd) {
  return dtc::DTCoords::from_json(json::parse(text), pd);
}

json estimate_json(const dtc::DilatationEstimate& e) {
  return {{"lambda", e.lambda},
          {"log_lambda", e.log_lambda},
          {"iterations", e.iterations},
          {"converged", e.converged},
          {"residual", e.residual}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dehn-Thurston coordinates: exact mapping class actions on measured foliations";

  // Later registrations are tried first, so the most derived type goes last.
  py::register_exception<dtc::Error>(m, "DtcError", PyExc_RuntimeError);
  auto validation = py::register_exception<dtc::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<dtc::ParseError>(m, "ParseError", validation.ptr());

  m.def("preset_names", &dtc::preset_names);

  m.def("gluing", [](const std::string& surface) { return surface_from(surface)->gluing().to_json().dump(); },
        py::arg("surface"));

  m.def(
      "act",
      [](const std::string& surface, const std::string& coords, const std::string& word) {
        const Surface pd = surface_from(surface);
        const dtc::Transformed r = dtc::apply_word(dtc::parse_word(word, pd), coords_from(coords, *pd));
        return json{{"coords", r.coords.to_json(r.decomposition)},
                    {"decomposition", r.decomposition.gluing().to_json()}}
            .dump();
      },
      py::arg("surface"), py::arg("coords"), py::arg("word"));

  m.def(
      "invert_word",
      [](const std::string& surface, const std::string& word) {
        return dtc::format_word(dtc::invert_word(dtc::parse_word(word, surface_from(surface))));
      },
      py::arg("surface"), py::arg("word"));

  m.def(
      "count",
      [](const std::string& surface, const std::string& coords) {
        const Surface pd = surface_from(surface);
        return dtc::count_components(*pd, dtc::validate_integral(coords_from(coords, *pd), *pd));
      },
      py::arg("surface"), py::arg("coords"));

  m.def(
      "sample",
      [](const std::string& surface, int bound, std::uint64_t seed, const std::string& scope) {
        const Surface pd = surface_from(surface);
        return dtc::sample(*pd, bound, seed, dtc::scope_from_string(scope)).coords().to_json(*pd).dump();
      },
      py::arg("surface"), py::arg("bound"), py::arg("seed"), py::arg("scope") = "MF");

  m.def(
      "dilatation",
      [](const std::string& surface, const std::string& word, const std::optional<std::string>& coords,
         int max_iter, const std::string& tol) {
        const Surface pd = surface_from(surface);
        const dtc::DTCoords seed = coords ? coords_from(*coords, *pd) : dtc::canonical_seed(*pd);
        dtc::DilatationEstimate e;
        {
          py::gil_scoped_release release;
          e = dtc::estimate_dilatation(dtc::parse_word(word, pd), seed, max_iter, dtc::Rational::parse(tol));
        }
        return estimate_json(e).dump();
      },
      py::arg("surface"), py::arg("word"), py::arg("coords") = std::nullopt, py::arg("max_iter") = 2000,
      py::arg("tol") = "1e-9");

  m.def(
      "scan",
      [](const std::string& preset, int max_length, const std::string& tol, int threads) {
        dtc::ScanOptions opt;
        opt.max_word_length = max_length;
        opt.tol = dtc::Rational::parse(tol);
        opt.threads = threads;
        std::vector<dtc::ScanEntry> entries;
        {
          py::gil_scoped_release release;
          entries = dtc::spectrum_scan(preset, opt);
        }
        json out = json::array();
        for (const auto& e : entries) {
          out.push_back({{"word", e.word},
                         {"log_lambda", e.estimate.log_lambda},
                         {"converged", e.estimate.converged},
                         {"iterations", e.estimate.iterations}});
        }
        return out.dump();
      },
      py::arg("preset"), py::arg("max_length"), py::arg("tol") = "1e-9", py::arg("threads") = 0);

  m.def(
      "verify_relations",
      [](const std::string& surface, const std::string& suite, std::uint64_t seed, int samples, int bound) {
        dtc::SuiteOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        opt.bound = bound;
        return dtc::run_suite(suite, *surface_from(surface), opt).to_json().dump();
      },
      py::arg("surface"), py::arg("suite"), py::arg("seed") = 1, py::arg("samples") = 1000, py::arg("bound") = 20);
}
