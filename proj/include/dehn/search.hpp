#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehn/classify.hpp"
#include "dehn/filling.hpp"
#include "dehn/relations.hpp"

namespace dehn {

struct SlopeRange {
  int min_norm = 2;
  int max_norm = 10;
};

// Canonical coprime slopes with min_norm <= |p| + |q| <= max_norm, ordered by
// norm, then q, then p, each with its deterministic completion.
std::vector<FillingSlope> enumerate_slopes(const SlopeRange& range);

using SlopeTuple = std::vector<FillingSlope>;

struct DependenceEntry {
  std::vector<std::string> labels;  // e.g. {"t1", "t'2"}
  std::optional<DependenceRelation> relation;
};

struct PairReport {
  SlopeTuple slopes;
  SlopeTuple slopes_prime;
  BigReal pvol_diff;
  BigReal cvol_diff;
  std::vector<DependenceEntry> dependence;
  std::optional<Verdict> verdict;  // empty means the shapes are inexact
};

enum class PairMethod { SortedBucket, AllPairs };

struct SearchOptions {
  double tol = 1e-20;
  int threads = 1;
  int exponent_bound = 20;
  int precision_bits = kDefaultPrecisionBits;
  PairMethod method = PairMethod::SortedBucket;
};

struct SearchResult {
  std::vector<PairReport> pairs;
  std::vector<std::string> notes;  // skipped slope tuples
  std::size_t tuples_solved = 0;
};

SearchResult search_equal_pvol(const FillingModel& model, const SlopeRange& range, const SearchOptions& options);

PairReport verify_pair(const FillingModel& model, const SlopeTuple& slopes, const SlopeTuple& slopes_prime,
                       const SearchOptions& options = {});

// Lexicographic order on (p, q) per cusp.
bool tuple_less(const SlopeTuple& a, const SlopeTuple& b);

}  // namespace dehn
