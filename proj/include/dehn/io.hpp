#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "dehn/classify.hpp"
#include "dehn/filling.hpp"
#include "dehn/manifold.hpp"
#include "dehn/search.hpp"

namespace dehn::io {

using Json = nlohmann::json;

Json real_to_json(const BigReal& x);
Json complex_to_json(const BigComplex& z);
BigComplex complex_from_json(const Json& j, int precision_bits);
BigReal real_from_json(const Json& j, int precision_bits);

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json matrix_to_json(const Matrix2& m);
Matrix2 matrix_from_json(const Json& j);
Json quadratic_to_json(const QuadraticNumber& q);
QuadraticNumber quadratic_from_json(const Json& j);
Json slope_to_json(const FillingSlope& s);
FillingSlope slope_from_json(const Json& j);

Json manifold_to_json(const NZPotential& m);
// Rejects odd exponents and malformed fields with Parse errors.
NZPotential manifold_from_json(const Json& j);

Json verdict_to_json(const std::optional<Verdict>& v);
std::optional<Verdict> verdict_from_json(const Json& j);

Json relation_to_json(const std::optional<DependenceRelation>& rel);
std::optional<DependenceRelation> relation_from_json(const Json& j, int precision_bits);

Json pair_report_to_json(const PairReport& r);
PairReport pair_report_from_json(const Json& j, int precision_bits);

Json witness_to_json(const RelationWitness& w);

Json solution_to_json(const FillingSolution& sol);
Json invariants_to_json(const FillingSolution& sol, const FillingInvariants& inv);

// Matrix-file contents for verify-relations.
struct SpecFile {
  SubgroupSpec spec;
  std::optional<std::array<FillingSlope, 2>> slopes;
  std::optional<std::array<FillingSlope, 2>> slopes_prime;
  bool with_completions = false;
  std::optional<std::array<QuadraticNumber, 2>> shapes;
  std::optional<HolonomyData> holonomy;
};
SpecFile spec_from_json(const Json& j, int precision_bits);
Json spec_to_json(const SpecFile& s);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);

NZPotential load_manifold(const std::filesystem::path& path);
void save_manifold(const std::filesystem::path& path, const NZPotential& m);

}  // namespace dehn::io
