#include "dehn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dehn/error.hpp"

namespace dehn::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw Error(ErrorKind::Parse, std::string(what) + " must be a string");
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::Parse, std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

Json real_to_json(const BigReal& x) { return x.to_string(); }

Json complex_to_json(const BigComplex& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

BigReal real_from_json(const Json& j, int precision_bits) { return BigReal(as_string(j, "real"), precision_bits); }

BigComplex complex_from_json(const Json& j, int precision_bits) {
  return {real_from_json(field(j, "re"), precision_bits), real_from_json(field(j, "im"), precision_bits)};
}

Json rational_to_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

Rational rational_from_json(const Json& j) { return parse_rational(as_string(j, "rational")); }

Json matrix_to_json(const Matrix2& m) {
  return Json::array({Json::array({rational_to_json(m.a), rational_to_json(m.b)}),
                      Json::array({rational_to_json(m.c), rational_to_json(m.d)})});
}

Matrix2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw Error(ErrorKind::Parse, "matrix must be [[a, b], [c, d]]");
  }
  return {rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
          rational_from_json(j[1][1])};
}

Json quadratic_to_json(const QuadraticNumber& q) {
  return Json{{"a", to_string(q.a)}, {"b", to_string(q.b)}, {"d", q.d}};
}

QuadraticNumber quadratic_from_json(const Json& j) {
  if (j.is_string()) return parse_quadratic(j.get<std::string>());
  return {rational_from_json(field(j, "a")), rational_from_json(field(j, "b")), as_long(field(j, "d"), "d")};
}

Json slope_to_json(const FillingSlope& s) { return Json{{"p", s.p}, {"q", s.q}, {"r", s.r}, {"s", s.s}}; }

FillingSlope slope_from_json(const Json& j) {
  if (j.is_string()) return complete_slope(parse_slope(j.get<std::string>()));
  long p = as_long(field(j, "p"), "p");
  long q = as_long(field(j, "q"), "q");
  if (j.contains("r") && j.contains("s")) return make_filling_slope(p, q, as_long(j["r"], "r"), as_long(j["s"], "s"));
  return complete_slope(make_slope(p, q));
}

Json manifold_to_json(const NZPotential& m) {
  Json shapes = Json::array();
  for (const auto& s : m.cusp_shapes) {
    shapes.push_back(Json{{"exact", s.exact ? quadratic_to_json(*s.exact) : Json(nullptr)},
                          {"approx", complex_to_json(s.approx)}});
  }
  Json phi = Json::array();
  for (const auto& [e, c] : m.phi.terms()) phi.push_back(Json{{"exp", e}, {"coeff", complex_to_json(c)}});
  return Json{{"label", m.label},
              {"n_cusps", m.n_cusps},
              {"precision_bits", m.precision_bits()},
              {"truncation_order", m.truncation_order()},
              {"base_cvol", complex_to_json(m.base_cvol)},
              {"cusp_shapes", shapes},
              {"phi", phi},
              {"sgi", m.sgi}};
}

NZPotential manifold_from_json(const Json& j) {
  const int prec = static_cast<int>(as_long(field(j, "precision_bits"), "precision_bits"));
  if (prec < kMinPrecisionBits) throw Error(ErrorKind::PrecisionTooLow, "precision_bits below 64");
  const int n = static_cast<int>(as_long(field(j, "n_cusps"), "n_cusps"));
  const int order = static_cast<int>(as_long(field(j, "truncation_order"), "truncation_order"));
  if (n < 1) throw Error(ErrorKind::Parse, "n_cusps must be positive");
  MultiSeries phi(n, order, prec);
  for (const auto& term : field(j, "phi")) {
    Exponent e = field(term, "exp").get<Exponent>();
    if (static_cast<int>(e.size()) != n) throw Error(ErrorKind::Parse, "exponent tuple length differs from n_cusps");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0 || x % 2 != 0; })) {
      throw Error(ErrorKind::Parse, "exponent tuples must be all-even and nonnegative");
    }
    if (total_degree(e) > order) throw Error(ErrorKind::Parse, "term exceeds the truncation order");
    phi.add_term(e, complex_from_json(field(term, "coeff"), prec));
  }
  NZPotential m;
  m.label = field(j, "label").get<std::string>();
  m.n_cusps = n;
  m.phi = std::move(phi);
  m.base_cvol = j.contains("base_cvol") ? complex_from_json(j["base_cvol"], prec) : BigComplex(prec);
  m.sgi = j.value("sgi", false);
  const Json& shapes = field(j, "cusp_shapes");
  if (!shapes.is_array()) throw Error(ErrorKind::Parse, "cusp_shapes must be an array");
  for (const auto& s : shapes) {
    CuspShape shape{std::nullopt, complex_from_json(field(s, "approx"), prec)};
    if (s.contains("exact") && !s["exact"].is_null()) shape.exact = quadratic_from_json(s["exact"]);
    m.cusp_shapes.push_back(std::move(shape));
  }
  return m;
}

Json verdict_to_json(const std::optional<Verdict>& v) {
  if (!v) return "shapes inexact";
  Json j{{"kind", verdict_kind_name(v->kind)}};
  switch (v->kind) {
    case VerdictKind::SwapRho: j["rho"] = matrix_to_json(v->rho); break;
    case VerdictKind::SigmaOrbit:
      j["sigma"] = matrix_to_json(v->sigma);
      j["power"] = v->power;
      j["cusp"] = v->coordinate;
      break;
    case VerdictKind::SigmaPhiOrbit:
      j["sigma"] = matrix_to_json(v->sigma);
      j["power"] = v->power;
      j["cusp"] = v->coordinate;
      j["phi"] = matrix_to_json(v->phi);
      j["phi_power"] = v->phi_power;
      break;
    case VerdictKind::Undetermined: j["reason"] = v->reason; break;
    default: break;
  }
  return j;
}

std::optional<Verdict> verdict_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "shapes inexact") return std::nullopt;
  const std::string kind = field(j, "kind").get<std::string>();
  Verdict v;
  if (kind == "Identity") v.kind = VerdictKind::Identity;
  else if (kind == "SwapRho") {
    v.kind = VerdictKind::SwapRho;
    v.rho = matrix_from_json(field(j, "rho"));
  } else if (kind == "SigmaOrbit" || kind == "SigmaPhiOrbit") {
    v.kind = kind == "SigmaOrbit" ? VerdictKind::SigmaOrbit : VerdictKind::SigmaPhiOrbit;
    v.sigma = matrix_from_json(field(j, "sigma"));
    v.power = static_cast<int>(as_long(field(j, "power"), "power"));
    v.coordinate = static_cast<int>(j.value("cusp", 1L));
    if (v.kind == VerdictKind::SigmaPhiOrbit) {
      v.phi = matrix_from_json(field(j, "phi"));
      v.phi_power = static_cast<int>(as_long(field(j, "phi_power"), "phi_power"));
    }
  } else if (kind == "Unrelated") v.kind = VerdictKind::Unrelated;
  else if (kind == "Undetermined") {
    v.kind = VerdictKind::Undetermined;
    v.reason = j.value("reason", std::string());
  } else {
    throw Error(ErrorKind::Parse, "unknown verdict kind '" + kind + "'");
  }
  return v;
}

Json relation_to_json(const std::optional<DependenceRelation>& rel) {
  if (!rel) return nullptr;
  return Json{{"exponents", rel->exponents},
              {"unity_order", rel->unity_order ? Json(*rel->unity_order) : Json(nullptr)},
              {"residual", real_to_json(rel->residual)}};
}

std::optional<DependenceRelation> relation_from_json(const Json& j, int precision_bits) {
  if (j.is_null()) return std::nullopt;
  DependenceRelation rel{field(j, "exponents").get<std::vector<long>>(), std::nullopt,
                         real_from_json(field(j, "residual"), precision_bits)};
  if (j.contains("unity_order") && !j["unity_order"].is_null()) rel.unity_order = j["unity_order"].get<int>();
  return rel;
}

Json pair_report_to_json(const PairReport& r) {
  Json slopes = Json::array(), slopes_prime = Json::array(), dep = Json::array();
  for (const auto& s : r.slopes) slopes.push_back(slope_to_json(s));
  for (const auto& s : r.slopes_prime) slopes_prime.push_back(slope_to_json(s));
  for (const auto& d : r.dependence) dep.push_back(Json{{"values", d.labels}, {"relation", relation_to_json(d.relation)}});
  return Json{{"slopes", slopes},
              {"slopes_prime", slopes_prime},
              {"pvol_diff", real_to_json(r.pvol_diff)},
              {"cvol_diff", real_to_json(r.cvol_diff)},
              {"dependence", dep},
              {"verdict", verdict_to_json(r.verdict)}};
}

PairReport pair_report_from_json(const Json& j, int precision_bits) {
  PairReport r;
  for (const auto& s : field(j, "slopes")) r.slopes.push_back(slope_from_json(s));
  for (const auto& s : field(j, "slopes_prime")) r.slopes_prime.push_back(slope_from_json(s));
  r.pvol_diff = real_from_json(field(j, "pvol_diff"), precision_bits);
  r.cvol_diff = real_from_json(field(j, "cvol_diff"), precision_bits);
  for (const auto& d : field(j, "dependence")) {
    r.dependence.push_back({field(d, "values").get<std::vector<std::string>>(),
                            relation_from_json(field(d, "relation"), precision_bits)});
  }
  r.verdict = verdict_from_json(field(j, "verdict"));
  return r;
}

Json witness_to_json(const RelationWitness& w) {
  auto scalars = [](const std::array<std::optional<Rational>, 4>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x ? Json(to_string(*x)) : Json("undefined"));
    return a;
  };
  return Json{{"k", scalars(w.k)},
              {"l", scalars(w.l)},
              {"n", scalars(w.n)},
              {"checks", w.checks},
              {"trichotomy_case", w.trichotomy_case},
              {"all_pass", w.all_pass()},
              {"notes", w.notes}};
}

Json solution_to_json(const FillingSolution& sol) {
  Json slopes = Json::array(), u = Json::array(), v = Json::array();
  for (const auto& s : sol.slopes) slopes.push_back(slope_to_json(s));
  for (const auto& x : sol.u) u.push_back(complex_to_json(x));
  for (const auto& x : sol.v) v.push_back(complex_to_json(x));
  return Json{{"slopes", slopes},
              {"u", u},
              {"v", v},
              {"residual", real_to_json(sol.residual)},
              {"precision_bits", sol.precision_bits},
              {"iterations", sol.iterations}};
}

Json invariants_to_json(const FillingSolution& sol, const FillingInvariants& inv) {
  Json j = solution_to_json(sol);
  Json t = Json::array(), lambda = Json::array();
  for (const auto& x : inv.t) t.push_back(complex_to_json(x));
  for (const auto& x : inv.lambda) lambda.push_back(complex_to_json(x));
  j["t"] = t;
  j["lambda"] = lambda;
  j["pvol"] = complex_to_json(inv.pvol);
  j["cvol"] = complex_to_json(inv.cvol);
  return j;
}

SpecFile spec_from_json(const Json& j, int precision_bits) {
  SpecFile f;
  f.spec.shape = parse_spec_shape(j.value("shape", std::string("coupled")));
  static const char* names[4] = {"A1", "A2", "A3", "A4"};
  static const char* primed[4] = {"A1p", "A2p", "A3p", "A4p"};
  for (int i = 0; i < 4; ++i) {
    f.spec.a[i] = matrix_from_json(field(j, names[i]));
    if (j.contains(primed[i]) && !j[primed[i]].is_null()) f.spec.a_prime[i] = matrix_from_json(j[primed[i]]);
  }
  auto slope_pair = [&](const char* key) -> std::optional<std::array<FillingSlope, 2>> {
    if (!j.contains(key)) return std::nullopt;
    const Json& a = j[key];
    if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::Parse, std::string(key) + " must list two slopes");
    return std::array<FillingSlope, 2>{slope_from_json(a[0]), slope_from_json(a[1])};
  };
  f.slopes = slope_pair("slopes");
  f.slopes_prime = slope_pair("slopes_prime");
  f.with_completions = j.value("with_completions", false);
  if (j.contains("shapes")) {
    const Json& s = j["shapes"];
    if (!s.is_array() || s.size() != 2) throw Error(ErrorKind::Parse, "shapes must list two cusp shapes");
    f.shapes = std::array<QuadraticNumber, 2>{quadratic_from_json(s[0]), quadratic_from_json(s[1])};
  }
  if (j.contains("holonomy")) {
    const Json& h = j["holonomy"];
    HolonomyData d{{complex_from_json(field(h, "t")[0], precision_bits), complex_from_json(field(h, "t")[1], precision_bits)},
                   {complex_from_json(field(h, "t_prime")[0], precision_bits),
                    complex_from_json(field(h, "t_prime")[1], precision_bits)}};
    f.holonomy = std::move(d);
  }
  return f;
}

Json spec_to_json(const SpecFile& s) {
  Json j{{"shape", spec_shape_name(s.spec.shape)}};
  static const char* names[4] = {"A1", "A2", "A3", "A4"};
  static const char* primed[4] = {"A1p", "A2p", "A3p", "A4p"};
  for (int i = 0; i < 4; ++i) {
    j[names[i]] = matrix_to_json(s.spec.a[i]);
    if (s.spec.a_prime[i]) j[primed[i]] = matrix_to_json(*s.spec.a_prime[i]);
  }
  if (s.slopes) j["slopes"] = Json::array({slope_to_json((*s.slopes)[0]), slope_to_json((*s.slopes)[1])});
  if (s.slopes_prime) {
    j["slopes_prime"] = Json::array({slope_to_json((*s.slopes_prime)[0]), slope_to_json((*s.slopes_prime)[1])});
  }
  j["with_completions"] = s.with_completions;
  if (s.shapes) j["shapes"] = Json::array({quadratic_to_json((*s.shapes)[0]), quadratic_to_json((*s.shapes)[1])});
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

NZPotential load_manifold(const std::filesystem::path& path) {
  try {
    return manifold_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

void save_manifold(const std::filesystem::path& path, const NZPotential& m) {
  write_text_file(path, dump(manifold_to_json(m)));
}

}  // namespace dehn::io
