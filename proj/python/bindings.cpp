// Python bindings. Ideal specifications and reports cross the boundary as JSON text;
// the wrapper package converts them to and from dicts.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wlpkit/apolar.hpp"
#include "wlpkit/errors.hpp"
#include "wlpkit/lefschetz.hpp"
#include "wlpkit/oracles.hpp"
#include "wlpkit/report.hpp"
#include "wlpkit/spec_io.hpp"
#include "wlpkit/version.hpp"

namespace py = pybind11;
using namespace wlpkit;

namespace {

EngineConfig make_config(std::uint64_t seed, unsigned trials, unsigned prime_bits, std::uint64_t coeff_bound,
                         bool certify) {
  EngineConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.prime_bits = prime_bits;
  cfg.coeff_bound = coeff_bound;
  cfg.certify = certify;
  cfg.validate();
  return cfg;
}

IdealSpec load(const std::string& text) {
  IdealSpec spec = parse_spec(text);
  spec.validate();
  return spec;
}

// Engine work runs without the GIL; only the JSON text comes back.
template <class F>
std::string run(F&& f) {
  py::gil_scoped_release release;
  return f().dump();
}

#define WLPKIT_CONFIG_ARGS                                                                                    \
  py::arg("seed") = 0, py::arg("trials") = 3, py::arg("prime_bits") = 31, py::arg("coeff_bound") = 10000, \
      py::arg("certify") = false

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hilbert functions and Lefschetz properties of artinian ideals";
  m.attr("__version__") = kVersion;

  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<NotArtinian>(m, "NotArtinian", PyExc_ValueError);
  py::register_exception<GenericityFailure>(m, "GenericityFailure", PyExc_RuntimeError);
  py::register_exception<DualPathMismatch>(m, "DualPathMismatch", PyExc_RuntimeError);

  m.def(
      "hilbert",
      [](const std::string& spec_text, std::uint64_t seed, unsigned trials, unsigned bits, std::uint64_t bound,
         bool certify) {
        const auto cfg = make_config(seed, trials, bits, bound, certify);
        const auto spec = load(spec_text);
        return run([&] { return hilbert_report(spec, hilbert_function(spec, cfg), cfg, matching_oracle(spec)); });
      },
      py::arg("spec"), WLPKIT_CONFIG_ARGS);

  m.def(
      "wlp",
      [](const std::string& spec_text, std::uint64_t seed, unsigned trials, unsigned bits, std::uint64_t bound,
         bool certify) {
        const auto cfg = make_config(seed, trials, bits, bound, certify);
        const auto spec = load(spec_text);
        return run([&] { return wlp_report(wlp_test(spec, cfg), cfg); });
      },
      py::arg("spec"), WLPKIT_CONFIG_ARGS);

  m.def(
      "slp",
      [](const std::string& spec_text, std::optional<unsigned> max_power, std::uint64_t seed, unsigned trials,
         unsigned bits, std::uint64_t bound, bool certify) {
        const auto cfg = make_config(seed, trials, bits, bound, certify);
        const auto spec = load(spec_text);
        return run([&] { return slp_report(slp_test(spec, cfg, max_power), cfg); });
      },
      py::arg("spec"), py::arg("max_power") = py::none(), WLPKIT_CONFIG_ARGS);

  m.def(
      "verify_hss",
      [](unsigned r_min, unsigned r_max, std::uint64_t seed, unsigned trials, unsigned bits, std::uint64_t bound,
         bool certify) {
        const auto cfg = make_config(seed, trials, bits, bound, certify);
        return run([&] {
          std::vector<ConjectureVerdict> rows;
          for (unsigned r = r_min; r <= r_max; ++r) rows.push_back(verify_conjecture(r, cfg));
          return conjecture_report(rows, cfg);
        });
      },
      py::arg("r_min") = 2, py::arg("r_max") = 13, WLPKIT_CONFIG_ARGS);

  m.def(
      "apolar",
      [](unsigned r, std::uint64_t seed, unsigned trials, unsigned bits, std::uint64_t bound, bool certify) {
        const auto cfg = make_config(seed, trials, bits, bound, certify);
        return run([&] {
          const auto g = elementary_squarefree_sum(r, r - 2);
          return apolar_report(r, gorenstein_hilbert(g, cfg), hf_gorenstein_G(r), check_S_generates(r, cfg),
                               linkage_check(r, cfg), cfg);
        });
      },
      py::arg("r"), WLPKIT_CONFIG_ARGS);

  m.def(
      "probe",
      [](unsigned r, unsigned s, std::vector<unsigned> exponents, std::uint64_t seed, unsigned trials, unsigned bits,
         std::uint64_t bound, bool certify) {
        const auto cfg = make_config(seed, trials, bits, bound, certify);
        if (exponents.size() == 1) exponents.assign(s, exponents.front());
        return run([&] { return wlp_report(probe_power_ideal(r, s, exponents, cfg), cfg, "probe"); });
      },
      py::arg("r"), py::arg("s"), py::arg("exponents"), WLPKIT_CONFIG_ARGS);

  m.def(
      "oracle_table",
      [](const std::string& name, unsigned r) {
        OracleTable t;
        if (name == "hf_square_ci") {
          t = hf_square_ci(r);
        } else if (name == "hf_gorenstein_G") {
          t = hf_gorenstein_G(r);
        } else if (name == "hf_acm_squares") {
          t = hf_acm_squares(r);
        } else {
          throw std::invalid_argument("unknown table \"" + name +
                                      "\"; available: hf_square_ci, hf_gorenstein_G, hf_acm_squares");
        }
        return oracle_report({t}, EngineConfig{}).dump();
      },
      py::arg("name"), py::arg("r"));
}
