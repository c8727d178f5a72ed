#include "dehn/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <regex>
#include <thread>

#include "dehn/error.hpp"
#include "dehn/io.hpp"

namespace dehn::cli {

namespace {

using io::Json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SlopeTuple parse_tuple(const std::string& text) {
  SlopeTuple out;
  for (const auto& part : split(text, ',')) out.push_back(complete_slope(parse_slope(part)));
  return out;
}

std::pair<SlopeTuple, SlopeTuple> parse_pair(const std::string& text) {
  auto halves = split(text, ';');
  if (halves.size() != 2) throw Usage("--pair expects \"slopes;slopes'\"");
  auto a = parse_tuple(halves[0]), b = parse_tuple(halves[1]);
  if (a.size() != b.size()) throw Usage("both halves of --pair need the same number of slopes");
  return {a, b};
}

// "x", "yi", "x+yi", "x-yi" with decimal x, y.
BigComplex parse_complex(const std::string& text, int prec) {
  static const std::regex re(R"(^([+-]?[0-9.eE]+(?:[eE][+-]?[0-9]+)?)?(?:([+-]?[0-9.eE]*)i)?$)");
  std::smatch m;
  if (text.empty() || !std::regex_match(text, m, re)) throw Usage("cannot parse complex number '" + text + "'");
  BigReal x(0L, prec), y(0L, prec);
  if (m[1].matched) x = BigReal(m[1].str(), prec);
  if (m[2].matched) {
    std::string s = m[2].str();
    if (s.empty() || s == "+") s = "1";
    if (s == "-") s = "-1";
    y = BigReal(s, prec);
  }
  return {x, y};
}

std::map<int, BigComplex> parse_seeds(const std::string& text, int prec) {
  std::map<int, BigComplex> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Usage("--seed entries look like order=coeff");
    int order = 0;
    try {
      order = std::stoi(item.substr(0, eq));
    } catch (const std::exception&) {
      throw Usage("bad seed order in '" + item + "'");
    }
    out.insert_or_assign(order, parse_complex(item.substr(eq + 1), prec));
  }
  return out;
}

Json violations_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"code", x.code}, {"detail", x.detail}});
  return v;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << io::dump(j);
  } else {
    io::write_text_file(out_path, io::dump(j));
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
    case ErrorKind::BadSlope:
    case ErrorKind::BadIndex: return 2;
    default: return 1;
  }
}

int env_precision(int fallback) {
  const char* env = std::getenv("DEHN_PRECISION_BITS");
  if (!env || !*env) return fallback;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw Usage("DEHN_PRECISION_BITS must be an integer");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  unsigned hw = std::thread::hardware_concurrency();
  cfg.threads = hw == 0 ? 1 : static_cast<int>(hw);

  CLI::App app{"Dehn filling invariants and equal-volume classification", "dehn"};
  app.require_subcommand(1);
  int precision = 0;
  app.add_option("--precision", precision, "working precision in bits (default 256)");

  std::string manifold_path, out_path, slopes_text, pair_text, expect, tau_text, tau1_text, tau2_text;
  std::string kind, curve1, curve2, seeds_text, spec_path, label, method = "sorted";
  int min_norm = 2, max_norm = 10, bound = 20;

  auto* validate = app.add_subcommand("validate", "check a manifold file");
  validate->add_option("manifold", manifold_path, "manifold file")->required();

  auto* make = app.add_subcommand("make", "build a synthetic manifold file");
  make->add_option("--kind", kind, "sgi | symmetric-curve")->required()->check(CLI::IsMember({"sgi", "symmetric-curve"}));
  make->add_option("--curve1", curve1, "1-cusp manifold file for cusp 1");
  make->add_option("--curve2", curve2, "1-cusp manifold file for cusp 2");
  make->add_option("--tau", tau_text, "exact cusp shape");
  make->add_option("--seed", seeds_text, "order=coeff,...");
  make->add_option("--order", cfg.truncation_order, "truncation order N")->check(CLI::Range(3, 1000));
  make->add_option("--label", label, "manifold label");
  make->add_option("--out", out_path, "output file")->required();

  auto* solve = app.add_subcommand("solve", "solve the filling equations");
  auto* invariants = app.add_subcommand("invariants", "core holonomies, lengths and volumes");
  for (auto* sc : {solve, invariants}) {
    sc->add_option("--manifold", manifold_path, "manifold file")->required();
    sc->add_option("--slopes", slopes_text, "p1/q1[,p2/q2]")->required();
    sc->add_option("--out", out_path, "output file");
  }

  auto* search = app.add_subcommand("search", "find fillings with equal pseudo complex volume");
  search->add_option("--manifold", manifold_path, "manifold file")->required();
  search->add_option("--min-norm", min_norm, "smallest |p|+|q|")->required();
  search->add_option("--max-norm", max_norm, "largest |p|+|q|")->required();
  search->add_option("--tol", cfg.tol, "cylinder-distance tolerance");
  search->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--bound", bound, "exponent bound for dependence detection");
  search->add_option("--method", method, "sorted | all-pairs")->check(CLI::IsMember({"sorted", "all-pairs"}));
  search->add_option("--out", out_path, "output file");

  auto* classify = app.add_subcommand("classify", "classify a pair of slope tuples");
  classify->add_option("--tau1", tau1_text, "cusp shape of cusp 1")->required();
  classify->add_option("--tau2", tau2_text, "cusp shape of cusp 2");
  classify->add_option("--pair", pair_text, "\"p1/q1,p2/q2;p1'/q1',p2'/q2'\"")->required();
  classify->add_option("--expect", expect, "expected verdict kind");

  auto* verify_pair_cmd = app.add_subcommand("verify-pair", "compare two fillings of one manifold");
  verify_pair_cmd->add_option("--manifold", manifold_path, "manifold file")->required();
  verify_pair_cmd->add_option("--pair", pair_text, "\"slopes;slopes'\"")->required();
  verify_pair_cmd->add_option("--bound", bound, "exponent bound for dependence detection");
  verify_pair_cmd->add_option("--expect", expect, "expected verdict kind");
  verify_pair_cmd->add_option("--out", out_path, "output file");

  auto* symmetries = app.add_subcommand("symmetries", "shape symmetries of a cusp shape");
  symmetries->add_option("--tau", tau_text, "cusp shape")->required();

  auto* verify_rel = app.add_subcommand("verify-relations", "check subgroup relation identities");
  verify_rel->add_option("--spec", spec_path, "matrix file")->required();
  verify_rel->add_option("--slopes", pair_text, "\"p1/q1,p2/q2;p1'/q1',p2'/q2'\"");

  std::vector<const char*> argv{"dehn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string help;
    if (auto* sc = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) help = sc->help();
    err << "dehn: " << e.what() << "\n" << help;
    return 2;
  }

  try {
    cfg.precision_bits = precision > 0 ? precision : env_precision(cfg.precision_bits);
    if (cfg.precision_bits < kMinPrecisionBits) throw Usage("precision must be at least 64 bits");
    const int prec = cfg.precision_bits;

    if (*validate) {
      NZPotential m = io::load_manifold(manifold_path);
      ValidationReport r = potential_validate(m);
      out << io::dump(Json{{"label", m.label}, {"valid", r.ok()}, {"violations", violations_json(r)}});
      return r.ok() ? 0 : 1;
    }

    if (*make) {
      NZPotential m;
      if (kind == "sgi") {
        if (curve1.empty() || curve2.empty()) throw Usage("make --kind sgi needs --curve1 and --curve2");
        NZPotential c1 = io::load_manifold(curve1), c2 = io::load_manifold(curve2);
        if (c1.n_cusps != 1 || c2.n_cusps != 1) throw Error(ErrorKind::BadCurve, "curve files must have one cusp");
        m = make_sgi(c1.phi, c2.phi, std::nullopt, c1.cusp_shapes[0].exact, c2.cusp_shapes[0].exact);
        m.label = label.empty() ? c1.label + "+" + c2.label : label;
      } else {
        if (tau_text.empty()) throw Usage("make --kind symmetric-curve needs --tau");
        QuadraticNumber tau = parse_quadratic(tau_text);
        auto sigmas = symmetry_matrices(tau);
        if (sigmas.empty()) throw Error(ErrorKind::BadCurve, "shape " + tau.to_string() + " has no symmetry");
        SymmetricCurve c = make_symmetric_curve(tau, sigmas.front(), parse_seeds(seeds_text, prec),
                                                cfg.truncation_order, prec);
        m = std::move(c.manifold);
        if (!label.empty()) m.label = label;
      }
      io::save_manifold(out_path, m);
      return 0;
    }

    if (*solve || *invariants) {
      FillingModel model(io::load_manifold(manifold_path));
      FillingSolution sol = solve_filling(model, parse_tuple(slopes_text), prec);
      if (*solve) {
        emit(io::solution_to_json(sol), out_path, out);
      } else {
        emit(io::invariants_to_json(sol, filling_invariants(model, sol)), out_path, out);
      }
      return 0;
    }

    if (*search) {
      FillingModel model(io::load_manifold(manifold_path));
      SearchOptions opt;
      opt.tol = cfg.tol;
      opt.threads = cfg.threads;
      opt.exponent_bound = bound;
      opt.precision_bits = prec;
      opt.method = method == "all-pairs" ? PairMethod::AllPairs : PairMethod::SortedBucket;
      SearchResult res = search_equal_pvol(model, SlopeRange{min_norm, max_norm}, opt);
      for (const auto& note : res.notes) err << "dehn: " << note << "\n";
      Json pairs = Json::array();
      for (const auto& p : res.pairs) pairs.push_back(io::pair_report_to_json(p));
      emit(pairs, out_path, out);
      return 0;
    }

    auto check_expect = [&](const std::optional<Verdict>& v) {
      if (expect.empty()) return 0;
      const std::string got = v ? verdict_kind_name(v->kind) : "shapes inexact";
      if (got == expect) return 0;
      err << "dehn: expected " << expect << ", got " << got << "\n";
      return 1;
    };

    if (*classify) {
      auto [a, b] = parse_pair(pair_text);
      QuadraticNumber tau1 = parse_quadratic(tau1_text);
      Verdict v;
      if (a.size() == 1) {
        v = classify_single(tau1, a[0].slope(), b[0].slope());
      } else if (a.size() == 2) {
        if (tau2_text.empty()) throw Usage("two-cusp classification needs --tau2");
        v = classify_pair(tau1, parse_quadratic(tau2_text), {a[0].slope(), a[1].slope()},
                          {b[0].slope(), b[1].slope()});
      } else {
        throw Usage("classify supports one or two cusps");
      }
      out << io::dump(io::verdict_to_json(v));
      return check_expect(v);
    }

    if (*verify_pair_cmd) {
      FillingModel model(io::load_manifold(manifold_path));
      auto [a, b] = parse_pair(pair_text);
      SearchOptions opt;
      opt.exponent_bound = bound;
      opt.precision_bits = prec;
      PairReport r = verify_pair(model, a, b, opt);
      emit(io::pair_report_to_json(r), out_path, out);
      return check_expect(r.verdict);
    }

    if (*symmetries) {
      QuadraticNumber tau = parse_quadratic(tau_text);
      if (tau.b <= 0) throw Error(ErrorKind::NotUpperHalfPlane, "shape must have positive imaginary part");
      Json list = Json::array();
      for (const auto& s : symmetry_matrices(tau)) {
        auto order = sigma_order(s);
        const QuadraticNumber lambda = QuadraticNumber::rational(s.a) + QuadraticNumber::rational(s.b) * tau;
        const QuadraticNumber mu = QuadraticNumber::rational(s.d) - QuadraticNumber::rational(s.b) * tau;
        list.push_back(Json{{"sigma", io::matrix_to_json(s)},
                            {"order", order ? Json(*order) : Json("infinite (capped)")},
                            {"a_plus_b_tau", io::quadratic_to_json(lambda)},
                            {"d_minus_b_tau", io::quadratic_to_json(mu)}});
      }
      out << io::dump(Json{{"tau", io::quadratic_to_json(tau)}, {"symmetries", list}});
      return 0;
    }

    if (*verify_rel) {
      io::SpecFile f = io::spec_from_json(io::read_json_file(spec_path), prec);
      if (!pair_text.empty()) {
        auto [a, b] = parse_pair(pair_text);
        if (a.size() != 2) throw Usage("--slopes needs two slopes per side");
        f.slopes = std::array<FillingSlope, 2>{a[0], a[1]};
        f.slopes_prime = std::array<FillingSlope, 2>{b[0], b[1]};
      }
      if (!f.slopes || !f.slopes_prime) throw Usage("slopes must come from --slopes or the spec file");
      RelationWitness w =
          verify_subgroup_relations(f.spec, *f.slopes, *f.slopes_prime, f.with_completions, f.shapes, f.holonomy);
      out << io::dump(io::witness_to_json(w));
      return w.all_pass() ? 0 : 1;
    }
  } catch (const Usage& e) {
    err << "dehn: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "dehn: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "dehn: Parse: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace dehn::cli
