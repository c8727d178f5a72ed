#include "dehn/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "dehn/error.hpp"

namespace dehn {

namespace {

struct Solved {
  SlopeTuple slopes;
  FillingInvariants inv;
  double re = 0;
  double im = 0;
};

std::string tuple_string(const SlopeTuple& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + to_string(x.slope());
  return out;
}

std::vector<SlopeTuple> cartesian(const std::vector<FillingSlope>& slopes, int n) {
  std::vector<SlopeTuple> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<SlopeTuple> next;
    next.reserve(out.size() * slopes.size());
    for (const auto& prefix : out) {
      for (const auto& s : slopes) {
        SlopeTuple t = prefix;
        t.push_back(s);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::optional<Verdict> verdict_for(const FillingModel& model, const SlopeTuple& a, const SlopeTuple& b) {
  const auto& shapes = model.manifold().cusp_shapes;
  for (const auto& s : shapes) {
    if (!s.exact) return std::nullopt;
  }
  if (a.size() == 1) return classify_single(shapes[0].exact, a[0].slope(), b[0].slope());
  if (a.size() == 2) {
    return classify_pair(shapes[0].exact, shapes[1].exact, {a[0].slope(), a[1].slope()},
                         {b[0].slope(), b[1].slope()});
  }
  return std::nullopt;
}

PairReport populate(const FillingModel& model, const SlopeTuple& a, const FillingInvariants& ia,
                    const SlopeTuple& b, const FillingInvariants& ib, const SearchOptions& options) {
  PairReport r;
  r.slopes = a;
  r.slopes_prime = b;
  r.pvol_diff = cylinder_distance(ia.pvol, ib.pvol);
  r.cvol_diff = cylinder_distance(ia.cvol, ib.cvol);
  std::vector<BigComplex> values;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < ia.t.size(); ++k) {
    values.push_back(ia.t[k]);
    labels.push_back("t" + std::to_string(k + 1));
  }
  for (std::size_t k = 0; k < ib.t.size(); ++k) {
    values.push_back(ib.t[k]);
    labels.push_back("t'" + std::to_string(k + 1));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      DependenceEntry e;
      e.labels = {labels[i], labels[j]};
      e.relation = detect_dependence({values[i], values[j]}, options.exponent_bound, options.precision_bits);
      r.dependence.push_back(std::move(e));
    }
  }
  r.verdict = verdict_for(model, a, b);
  return r;
}

// Cylinder distance in double precision, used only as a conservative filter.
double approx_distance(const Solved& x, const Solved& y) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  double d_im = std::fmod(std::fabs(x.im - y.im), pi2);
  d_im = std::min(d_im, pi2 - d_im);
  return std::hypot(x.re - y.re, d_im);
}

}  // namespace

bool tuple_less(const SlopeTuple& a, const SlopeTuple& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const FillingSlope& x, const FillingSlope& y) { return x.slope() < y.slope(); });
}

std::vector<FillingSlope> enumerate_slopes(const SlopeRange& range) {
  if (range.min_norm < 2 || range.min_norm > range.max_norm) {
    throw Error(ErrorKind::BadSlope, "slope range needs 2 <= min_norm <= max_norm");
  }
  std::vector<FillingSlope> out;
  for (long n = range.min_norm; n <= range.max_norm; ++n) {
    for (long q = 0; q <= n; ++q) {
      const long a = n - q;
      std::vector<long> ps = a == 0 ? std::vector<long>{0} : std::vector<long>{-a, a};
      for (long p : ps) {
        if (std::gcd(p, q) != 1 || (q == 0 && p < 0)) continue;
        out.push_back(complete_slope(make_slope(p, q)));
      }
    }
  }
  return out;
}

SearchResult search_equal_pvol(const FillingModel& model, const SlopeRange& range, const SearchOptions& options) {
  const int n = model.n_cusps();
  std::vector<SlopeTuple> tuples = cartesian(enumerate_slopes(range), n);
  std::vector<std::optional<Solved>> solved(tuples.size());
  std::vector<std::string> errors(tuples.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        FillingSolution sol = solve_filling(model, tuples[i], options.precision_bits);
        Solved s{tuples[i], filling_invariants(model, sol)};
        s.re = s.inv.pvol.re().to_double();
        s.im = s.inv.pvol.im().to_double();
        solved[i] = std::move(s);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(options.threads, 1)), tuples.size()));
  if (workers == 1) {
    work(0, tuples.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (tuples.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t b = w * chunk, e = std::min(tuples.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  std::vector<const Solved*> ok;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (solved[i]) {
      ok.push_back(&*solved[i]);
    } else {
      result.notes.push_back("skipped " + tuple_string(tuples[i]) + ": " + errors[i]);
    }
  }
  result.tuples_solved = ok.size();

  const BigReal tol(options.tol, options.precision_bits);
  // Double-precision slack well above the rounding of the cached keys.
  const double slack = options.tol + 1e-9;
  std::vector<std::pair<std::size_t, std::size_t>> matches;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (approx_distance(*ok[i], *ok[j]) > slack) return;
    if (cylinder_distance(ok[i]->inv.pvol, ok[j]->inv.pvol) <= tol) matches.emplace_back(i, j);
  };
  if (options.method == PairMethod::AllPairs) {
    for (std::size_t i = 0; i < ok.size(); ++i) {
      for (std::size_t j = i + 1; j < ok.size(); ++j) consider(i, j);
    }
  } else {
    std::vector<std::size_t> order(ok.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      int c = mpfr_cmp(ok[x]->inv.pvol.re().raw(), ok[y]->inv.pvol.re().raw());
      if (c != 0) return c < 0;
      c = mpfr_cmp(ok[x]->inv.pvol.im().raw(), ok[y]->inv.pvol.im().raw());
      if (c != 0) return c < 0;
      return x < y;
    });
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        BigReal gap = ok[order[b]]->inv.pvol.re() - ok[order[a]]->inv.pvol.re();
        if (gap > tol) break;
        consider(std::min(order[a], order[b]), std::max(order[a], order[b]));
      }
    }
  }

  for (auto& [i, j] : matches) {
    if (tuple_less(ok[j]->slopes, ok[i]->slopes)) std::swap(i, j);
  }
  std::sort(matches.begin(), matches.end(), [&](const auto& x, const auto& y) {
    if (tuple_less(ok[x.first]->slopes, ok[y.first]->slopes)) return true;
    if (tuple_less(ok[y.first]->slopes, ok[x.first]->slopes)) return false;
    return tuple_less(ok[x.second]->slopes, ok[y.second]->slopes);
  });
  for (const auto& [i, j] : matches) {
    result.pairs.push_back(populate(model, ok[i]->slopes, ok[i]->inv, ok[j]->slopes, ok[j]->inv, options));
  }
  return result;
}

PairReport verify_pair(const FillingModel& model, const SlopeTuple& slopes, const SlopeTuple& slopes_prime,
                       const SearchOptions& options) {
  FillingSolution a = solve_filling(model, slopes, options.precision_bits);
  FillingSolution b = solve_filling(model, slopes_prime, options.precision_bits);
  return populate(model, slopes, filling_invariants(model, a), slopes_prime, filling_invariants(model, b), options);
}

}  // namespace dehn
