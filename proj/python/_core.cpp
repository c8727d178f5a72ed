#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dehn/cli.hpp"
#include "dehn/error.hpp"
#include "dehn/io.hpp"

namespace py = pybind11;
using dehn::io::Json;

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

dehn::SlopeTuple tuple_of(const std::vector<std::string>& slopes) {
  dehn::SlopeTuple out;
  for (const auto& s : slopes) out.push_back(dehn::complete_slope(dehn::parse_slope(s)));
  return out;
}

std::vector<dehn::BigComplex> complexes(const std::vector<std::pair<std::string, std::string>>& values, int prec) {
  std::vector<dehn::BigComplex> out;
  for (const auto& [re, im] : values) out.emplace_back(dehn::BigReal(re, prec), dehn::BigReal(im, prec));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dehn filling invariants (JSON-in, JSON-out bindings)";

  static py::exception<dehn::Error> error(m, "DehnError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dehn::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("validate", [](const std::string& manifold) {
    auto r = dehn::potential_validate(dehn::io::manifold_from_json(parse(manifold)));
    std::vector<std::string> codes;
    for (const auto& v : r.violations) codes.push_back(v.code);
    return codes;
  });

  m.def(
      "make_symmetric_curve",
      [](const std::string& tau, const std::map<int, std::pair<std::string, std::string>>& seeds, int order,
         int prec) {
        auto t = dehn::parse_quadratic(tau);
        auto sigmas = dehn::symmetry_matrices(t);
        if (sigmas.empty()) throw dehn::Error(dehn::ErrorKind::BadCurve, "shape has no symmetry");
        std::map<int, dehn::BigComplex> s;
        for (const auto& [k, v] : seeds) s.insert_or_assign(k, dehn::BigComplex(dehn::BigReal(v.first, prec), dehn::BigReal(v.second, prec)));
        return dehn::io::manifold_to_json(dehn::make_symmetric_curve(t, sigmas.front(), s, order, prec).manifold).dump();
      },
      py::arg("tau"), py::arg("seeds"), py::arg("order") = 9, py::arg("precision_bits") = 256);

  m.def(
      "invariants",
      [](const std::string& manifold, const std::vector<std::string>& slopes, int prec) {
        dehn::FillingModel model(dehn::io::manifold_from_json(parse(manifold)));
        auto sol = dehn::solve_filling(model, tuple_of(slopes), prec);
        return dehn::io::invariants_to_json(sol, dehn::filling_invariants(model, sol)).dump();
      },
      py::arg("manifold"), py::arg("slopes"), py::arg("precision_bits") = 256);

  m.def(
      "search",
      [](const std::string& manifold, int min_norm, int max_norm, double tol, int threads, bool all_pairs) {
        dehn::FillingModel model(dehn::io::manifold_from_json(parse(manifold)));
        dehn::SearchOptions opt;
        opt.tol = tol;
        opt.threads = threads;
        opt.method = all_pairs ? dehn::PairMethod::AllPairs : dehn::PairMethod::SortedBucket;
        py::gil_scoped_release release;
        auto res = dehn::search_equal_pvol(model, {min_norm, max_norm}, opt);
        Json out = Json::array();
        for (const auto& p : res.pairs) out.push_back(dehn::io::pair_report_to_json(p));
        return out.dump();
      },
      py::arg("manifold"), py::arg("min_norm"), py::arg("max_norm"), py::arg("tol") = 1e-20, py::arg("threads") = 1,
      py::arg("all_pairs") = false);

  m.def(
      "classify",
      [](const std::vector<std::string>& taus, const std::vector<std::string>& slopes,
         const std::vector<std::string>& slopes_prime) {
        auto a = tuple_of(slopes), b = tuple_of(slopes_prime);
        if (a.size() != taus.size() || b.size() != taus.size()) {
          throw dehn::Error(dehn::ErrorKind::VarCountMismatch, "one shape and one slope per cusp");
        }
        dehn::Verdict v;
        if (taus.size() == 1) {
          v = dehn::classify_single(dehn::parse_quadratic(taus[0]), a[0].slope(), b[0].slope());
        } else if (taus.size() == 2) {
          v = dehn::classify_pair(dehn::parse_quadratic(taus[0]), dehn::parse_quadratic(taus[1]),
                                  {a[0].slope(), a[1].slope()}, {b[0].slope(), b[1].slope()});
        } else {
          throw dehn::Error(dehn::ErrorKind::VarCountMismatch, "one or two cusps");
        }
        return dehn::io::verdict_to_json(v).dump();
      },
      py::arg("taus"), py::arg("slopes"), py::arg("slopes_prime"));

  m.def("symmetries", [](const std::string& tau) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& s : dehn::symmetry_matrices(dehn::parse_quadratic(tau))) {
      out.emplace_back(s.to_string(), dehn::sigma_order(s).value_or(0));
    }
    return out;
  });

  m.def(
      "detect_dependence",
      [](const std::vector<std::pair<std::string, std::string>>& t, int bound, int prec) {
        return dehn::io::relation_to_json(dehn::detect_dependence(complexes(t, prec), bound, prec)).dump();
      },
      py::arg("t"), py::arg("exponent_bound") = 20, py::arg("precision_bits") = 256);

  m.def("verify_relations", [](const std::string& spec) {
    auto f = dehn::io::spec_from_json(parse(spec), 256);
    if (!f.slopes || !f.slopes_prime) throw dehn::Error(dehn::ErrorKind::Parse, "spec needs slopes and slopes_prime");
    return dehn::io::witness_to_json(dehn::verify_subgroup_relations(f.spec, *f.slopes, *f.slopes_prime,
                                                                      f.with_completions, f.shapes, f.holonomy))
        .dump();
  });

  m.def("read_pair_report", [](const std::string& report) {
    return dehn::io::pair_report_to_json(dehn::io::pair_report_from_json(parse(report), 256)).dump();
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = dehn::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
