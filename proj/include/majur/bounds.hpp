#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "majur/errors.hpp"
#include "majur/hermitian.hpp"
#include "majur/majorization.hpp"
#include "majur/quantum.hpp"

namespace majur {

// Guard against combinatorial blow-up: one unit per eigenvalue call.
struct SubsetBudget {
  std::uint64_t max_evaluations = 1'000'000;
  bool forced = false;  // lifts the outcome-space size gates
};

enum class BoundKind { t, s, t_multi, s_multi, r_estimate };

inline const char* bound_label(BoundKind kind) {
  switch (kind) {
    case BoundKind::t: return "t";
    case BoundKind::s: return "s";
    case BoundKind::t_multi: return "t'";
    case BoundKind::s_multi: return "s'";
    case BoundKind::r_estimate: return "r_est";
  }
  return "?";
}

// A computed bound: the cumulative optimum values in outcome-count order,
// their increments (as printed), the sorted increments used in majorization
// verdicts, and the flattened (lattice-optimal) refinement.
struct BoundVector {
  BoundKind kind;
  CumulativeVector cumulative;     // clamped at the total
  std::vector<double> increments;  // natural order, may be unsorted
  WeightVector raw;                // increments sorted non-increasingly
  WeightVector flattened;          // flatness process applied to increments
  std::optional<double> lambda;
  std::optional<std::vector<double>> weights;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) {
    if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n - k + j)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  }
  return r;
}

struct BudgetMeter {
  const SubsetBudget& budget;
  std::uint64_t used = 0;

  // Charged per level before any enumeration starts, so refusal is cheap and
  // independent of thread scheduling.
  void charge(std::uint64_t evaluations, const char* where) {
    if (evaluations > budget.max_evaluations - used) {
      throw BudgetExceeded(std::string(where) + " needs " + std::to_string(evaluations) +
                           " further eigenvalue calls with " +
                           std::to_string(budget.max_evaluations - used) +
                           " left in the budget; raise --force-budget to proceed");
    }
    used += evaluations;
  }
};

// Visits all k-subsets of {0..n-1} as sorted index lists, lexicographically.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(const_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline void add_scaled(std::vector<Complex>& acc, double w, const HermitianOperator& op) {
  const auto& e = op.entries();
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * e[i];
}

inline double lmax_of(const std::vector<Complex>& flat, int dim) {
  return max_eigenvalue(HermitianOperator(dim, flat));
}

// Evaluates fn(i) for i in [0, count) on up to `jobs` threads and returns the
// maximum. Every index is computed exactly once and the reduction happens
// after all workers join, so the result is identical to sequential order.
template <typename Fn>
double parallel_max(std::size_t count, int jobs, Fn&& fn) {
  if (count == 0) return 0.0;
  if (jobs <= 1 || count == 1) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) best = std::max(best, fn(i));
    return best;
  }
  std::vector<double> results(count, -std::numeric_limits<double>::infinity());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) break;
        results[i] = fn(i);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  int n_threads = std::min<int>(jobs, static_cast<int>(count));
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return *std::max_element(results.begin(), results.end());
}

inline double int_pow(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

inline BoundVector make_bound(BoundKind kind, std::vector<double> cumulative,
                              std::optional<double> lambda,
                              std::optional<std::vector<double>> weights) {
  std::vector<double> increments(cumulative.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    increments[i] = std::max(cumulative[i] - prev, 0.0);
    prev = cumulative[i];
  }
  WeightVector raw(increments);
  WeightVector flat = flatten(increments);
  double total = cumulative.back();
  return BoundVector{kind,
                     CumulativeVector(std::move(cumulative), total),
                     std::move(increments),
                     std::move(raw),
                     std::move(flat),
                     lambda,
                     std::move(weights)};
}

inline void check_common_dimension(const std::vector<Measurement>& ms) {
  for (std::size_t x = 1; x < ms.size(); ++x) {
    if (ms[x].dim() != ms[0].dim()) {
      throw DimensionMismatch("measurements '" + ms[0].label() + "' and '" + ms[x].label() +
                              "' act on different dimensions");
    }
  }
}

}  // namespace detail

// DPMUR bound: T_k maximizes (lmax(sum_{a in I_k1} M_a + sum_{b in I_k2} N_b)/2)^2
// over index subsets with k1 + k2 = k + 1 and k1, k2 >= 1, capped at 1.
inline BoundVector dp_bound_t(const Measurement& m, const Measurement& n,
                              const SubsetBudget& budget = {}, int jobs = 1) {
  detail::check_common_dimension({m, n});
  const int nm = m.outcomes(), nn = n.outcomes();
  const int length = nm * nn;
  if (!budget.forced && length > 4096) {
    throw BudgetExceeded("direct-product outcome space " + std::to_string(length) +
                         " exceeds 4096; pass --force-budget to proceed");
  }
  const int d = m.dim();
  detail::BudgetMeter meter{budget};
  std::vector<double> cumulative(static_cast<std::size_t>(length), 0.0);
  double prev = 0.0;
  for (int k = 1; k <= length; ++k) {
    if (prev >= 1.0 - 1e-12) {
      cumulative[static_cast<std::size_t>(k - 1)] = 1.0;
      prev = 1.0;
      continue;
    }
    std::uint64_t evals = 0;
    std::vector<std::pair<int, std::vector<int>>> units;  // (k1, I_k1)
    for (int k1 = std::max(1, k + 1 - nn); k1 <= std::min(nm, k); ++k1) {
      int k2 = k + 1 - k1;
      evals += detail::saturating_mul(detail::binomial(nm, k1), detail::binomial(nn, k2));
    }
    if (evals == 0) {  // no feasible split; carry the previous level forward
      cumulative[static_cast<std::size_t>(k - 1)] = prev;
      continue;
    }
    meter.charge(evals, "dp_bound_t");
    for (int k1 = std::max(1, k + 1 - nn); k1 <= std::min(nm, k); ++k1) {
      detail::for_each_combination(nm, k1, [&](const std::vector<int>& i1) { units.emplace_back(k1, i1); });
    }
    double best = detail::parallel_max(units.size(), jobs, [&](std::size_t u) {
      const auto& [k1, i1] = units[u];
      const int k2 = k + 1 - k1;
      std::vector<Complex> base(static_cast<std::size_t>(d) * d, Complex(0.0, 0.0));
      for (int a : i1) detail::add_scaled(base, 1.0, m.effects()[static_cast<std::size_t>(a)]);
      double local = 0.0;
      detail::for_each_combination(nn, k2, [&](const std::vector<int>& i2) {
        std::vector<Complex> sum = base;
        for (int b : i2) detail::add_scaled(sum, 1.0, n.effects()[static_cast<std::size_t>(b)]);
        local = std::max(local, detail::lmax_of(sum, d));
      });
      return local;
    });
    double tk = std::min(1.0, (best / 2.0) * (best / 2.0));
    prev = std::max(prev, tk);
    cumulative[static_cast<std::size_t>(k - 1)] = prev;
  }
  return detail::make_bound(BoundKind::t, std::move(cumulative), std::nullopt, std::nullopt);
}

namespace detail {

// Shared enumeration for direct-sum bounds: S_k maximizes lmax of the sum of
// k operators drawn from the pooled list.
inline BoundVector pooled_sum_bound(BoundKind kind, const std::vector<HermitianOperator>& pool,
                                    int dim, std::optional<double> lambda,
                                    std::optional<std::vector<double>> weights,
                                    const SubsetBudget& budget, int jobs, const char* where) {
  const int total = static_cast<int>(pool.size());
  BudgetMeter meter{budget};
  std::vector<double> cumulative(pool.size(), 0.0);
  double prev = 0.0;
  for (int k = 1; k <= total; ++k) {
    if (prev >= 1.0 - 1e-12) {
      cumulative[static_cast<std::size_t>(k - 1)] = 1.0;
      prev = 1.0;
      continue;
    }
    meter.charge(binomial(total, k), where);
    // parallel over the smallest pooled index of the subset
    double best = parallel_max(static_cast<std::size_t>(total - k + 1), jobs, [&](std::size_t g) {
      std::vector<Complex> base(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
      add_scaled(base, 1.0, pool[g]);
      double local = 0.0;
      const int remaining = total - static_cast<int>(g) - 1;
      for_each_combination(remaining, k - 1, [&](const std::vector<int>& rest) {
        std::vector<Complex> sum = base;
        for (int r : rest) add_scaled(sum, 1.0, pool[g + 1 + static_cast<std::size_t>(r)]);
        local = std::max(local, lmax_of(sum, dim));
      });
      return local;
    });
    double sk = std::min(1.0, best);
    prev = std::max(prev, sk);
    cumulative[static_cast<std::size_t>(k - 1)] = prev;
  }
  return make_bound(kind, std::move(cumulative), lambda, std::move(weights));
}

}  // namespace detail

// DSMUR bound: pooled operators G_c(lambda) are lambda*M_c for c <= n and
// (1-lambda)*N_{c-n} above; S_k maximizes lmax over k-subsets of the pool.
inline BoundVector ds_bound_s(const Measurement& m, const Measurement& n, double lambda,
                              const SubsetBudget& budget = {}, int jobs = 1) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw LambdaOutOfRange("ds_bound_s lambda must lie in (0, 1]");
  }
  detail::check_common_dimension({m, n});
  const int pool_size = m.outcomes() + n.outcomes();
  if (!budget.forced && pool_size > 24) {
    throw BudgetExceeded("direct-sum pool of " + std::to_string(pool_size) +
                         " effects exceeds 24; pass --force-budget to proceed");
  }
  std::vector<HermitianOperator> pool;
  pool.reserve(static_cast<std::size_t>(pool_size));
  for (const auto& e : m.effects()) pool.push_back(e.scaled(lambda));
  for (const auto& e : n.effects()) pool.push_back(e.scaled(1.0 - lambda));
  return detail::pooled_sum_bound(BoundKind::s, pool, m.dim(), lambda, std::nullopt, budget, jobs,
                                  "ds_bound_s");
}

// Multi-measurement DPMUR bound. Subset sizes obey sum_x |I_x| = k + n - 1
// with every |I_x| >= 1, the n-measurement extension of k1 + k2 = k + 1;
// T'_k = max (lmax(sum_x sum_{a in I_x} M_{a|x})/n)^n, capped at 1.
inline BoundVector dp_multi_bound(const std::vector<Measurement>& ms,
                                  const SubsetBudget& budget = {}, int jobs = 1) {
  if (ms.size() < 2) throw InvalidArgument("dp_multi_bound needs at least two measurements");
  detail::check_common_dimension(ms);
  const int n = static_cast<int>(ms.size());
  const int d = ms[0].dim();
  std::uint64_t length64 = 1;
  int pool_size = 0;
  for (const auto& mx : ms) {
    length64 = detail::saturating_mul(length64, static_cast<std::uint64_t>(mx.outcomes()));
    pool_size += mx.outcomes();
  }
  if (!budget.forced && length64 > 4096) {
    throw BudgetExceeded("product outcome space exceeds 4096; pass --force-budget to proceed");
  }
  const int length = static_cast<int>(length64);

  // all (|I_1|..|I_n|) with given sum, each between 1 and the outcome count
  auto compositions = [&](int target) {
    std::vector<std::vector<int>> result;
    std::vector<int> sizes(static_cast<std::size_t>(n), 1);
    std::function<void(int, int)> rec = [&](int x, int remaining) {
      if (x == n - 1) {
        if (remaining >= 1 && remaining <= ms[static_cast<std::size_t>(x)].outcomes()) {
          sizes[static_cast<std::size_t>(x)] = remaining;
          result.push_back(sizes);
        }
        return;
      }
      int max_here = std::min(ms[static_cast<std::size_t>(x)].outcomes(), remaining - (n - 1 - x));
      for (int c = 1; c <= max_here; ++c) {
        sizes[static_cast<std::size_t>(x)] = c;
        rec(x + 1, remaining - c);
      }
    };
    rec(0, target);
    return result;
  };

  detail::BudgetMeter meter{budget};
  std::vector<double> cumulative(static_cast<std::size_t>(length), 0.0);
  double prev = 0.0;
  for (int k = 1; k <= length; ++k) {
    if (prev >= 1.0 - 1e-12) {
      cumulative[static_cast<std::size_t>(k - 1)] = 1.0;
      prev = 1.0;
      continue;
    }
    const int target = k + n - 1;
    if (target > pool_size) {  // infeasible; the cap has been reached before
      cumulative[static_cast<std::size_t>(k - 1)] = prev;
      continue;
    }
    auto comps = compositions(target);
    std::uint64_t evals = 0;
    for (const auto& comp : comps) {
      std::uint64_t c = 1;
      for (int x = 0; x < n; ++x) {
        c = detail::saturating_mul(
            c, detail::binomial(ms[static_cast<std::size_t>(x)].outcomes(), comp[static_cast<std::size_t>(x)]));
      }
      evals += c;
    }
    meter.charge(evals, "dp_multi_bound");

    // one unit per (composition, subset of the first measurement)
    std::vector<std::pair<const std::vector<int>*, std::vector<int>>> units;
    for (const auto& comp : comps) {
      detail::for_each_combination(ms[0].outcomes(), comp[0],
                                   [&](const std::vector<int>& i0) { units.emplace_back(&comp, i0); });
    }
    double best = detail::parallel_max(units.size(), jobs, [&](std::size_t u) {
      const auto& comp = *units[u].first;
      std::vector<Complex> base(static_cast<std::size_t>(d) * d, Complex(0.0, 0.0));
      for (int a : units[u].second) detail::add_scaled(base, 1.0, ms[0].effects()[static_cast<std::size_t>(a)]);
      double local = 0.0;
      std::function<void(int, const std::vector<Complex>&)> rec = [&](int x, const std::vector<Complex>& acc) {
        if (x == n) {
          local = std::max(local, detail::lmax_of(acc, d));
          return;
        }
        detail::for_each_combination(
            ms[static_cast<std::size_t>(x)].outcomes(), comp[static_cast<std::size_t>(x)],
            [&](const std::vector<int>& ix) {
              std::vector<Complex> sum = acc;
              for (int a : ix)
                detail::add_scaled(sum, 1.0, ms[static_cast<std::size_t>(x)].effects()[static_cast<std::size_t>(a)]);
              rec(x + 1, sum);
            });
      };
      rec(1, base);
      return local;
    });
    double tk = std::min(1.0, detail::int_pow(best / static_cast<double>(n), n));
    prev = std::max(prev, tk);
    cumulative[static_cast<std::size_t>(k - 1)] = prev;
  }
  return detail::make_bound(BoundKind::t_multi, std::move(cumulative), std::nullopt, std::nullopt);
}

// Multi-measurement DSMUR bound over the pooled weighted effects c_x M_{a|x}.
inline BoundVector ds_multi_bound(const std::vector<Measurement>& ms,
                                  const std::vector<double>& weights,
                                  const SubsetBudget& budget = {}, int jobs = 1) {
  if (ms.empty()) throw EmptySet("ds_multi_bound needs at least one measurement");
  if (weights.size() != ms.size()) {
    throw WeightMismatch("ds_multi_bound got " + std::to_string(weights.size()) + " weights for " +
                         std::to_string(ms.size()) + " measurements");
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw WeightMismatch("ds_multi_bound weights must be non-negative");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > kMajorizationTol) {
    throw WeightMismatch("ds_multi_bound weights sum to " + std::to_string(wsum));
  }
  detail::check_common_dimension(ms);
  std::vector<HermitianOperator> pool;
  for (std::size_t x = 0; x < ms.size(); ++x) {
    for (const auto& e : ms[x].effects()) pool.push_back(e.scaled(weights[x]));
  }
  if (!budget.forced && pool.size() > 24) {
    throw BudgetExceeded("direct-sum pool of " + std::to_string(pool.size()) +
                         " effects exceeds 24; pass --force-budget to proceed");
  }
  return detail::pooled_sum_bound(BoundKind::s_multi, pool, ms[0].dim(), std::nullopt,
                                  weights, budget, jobs, "ds_multi_bound");
}

namespace detail {

inline double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller pair, one value used.
inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform53(rng);
  double u2 = uniform53(rng);
  u1 = std::max(u1, 1e-300);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925 * u2);
}

inline PureState random_state(int dim, std::mt19937_64& rng) {
  while (true) {
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    for (auto& a : amps) {
      a = Complex(gaussian(rng), gaussian(rng));
      norm2 += std::norm(a);
    }
    if (norm2 < 1e-12) continue;
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    return PureState(std::move(amps));
  }
}

}  // namespace detail

// Heuristic lower estimate of the optimal direct-product levels R_k: the best
// observed sum of the k largest Born products over candidate states. States
// come from seeded random restarts with derivative-free hill climbing
// (spherical perturbations, step halved after 10 straight failures, six
// scales), plus deterministic candidates: the computational basis, the
// normalized effect columns of both measurements, and anything the caller
// supplies. Every reported level is achieved by an actual state, so the
// estimate can only sit below the true R_k (and hence below T_k).
inline BoundVector estimate_r(const Measurement& m, const Measurement& n, int restarts, int steps,
                              std::uint64_t seed, const std::vector<PureState>& candidates = {}) {
  if (restarts < 1) throw InvalidArgument("estimate_r needs restarts >= 1");
  if (steps < 1) throw InvalidArgument("estimate_r needs steps >= 1");
  detail::check_common_dimension({m, n});
  const int d = m.dim();
  const std::size_t levels = static_cast<std::size_t>(m.outcomes()) * static_cast<std::size_t>(n.outcomes());
  std::vector<double> best(levels, 0.0);

  // top-k prefix sums of the product distribution; folds into `best`
  auto evaluate = [&](const PureState& state, std::size_t want_k) {
    std::vector<double> p = born_probabilities(state, m);
    std::vector<double> q = born_probabilities(state, n);
    std::vector<double> products;
    products.reserve(levels);
    for (double a : p)
      for (double b : q) products.push_back(a * b);
    std::sort(products.begin(), products.end(), std::greater<>());
    double acc = 0.0, wanted = 0.0;
    for (std::size_t k = 0; k < levels; ++k) {
      acc += products[k];
      best[k] = std::max(best[k], acc);
      if (k + 1 == want_k) wanted = acc;
    }
    return wanted;
  };

  std::vector<PureState> starts;
  for (int b = 0; b < d; ++b) {
    std::vector<Complex> e(static_cast<std::size_t>(d), Complex(0.0, 0.0));
    e[static_cast<std::size_t>(b)] = Complex(1.0, 0.0);
    starts.emplace_back(std::move(e));
  }
  for (const Measurement* meas : {&m, &n}) {
    for (const auto& effect : meas->effects()) {
      for (int col = 0; col < d; ++col) {
        std::vector<Complex> v(static_cast<std::size_t>(d));
        double norm2 = 0.0;
        for (int row = 0; row < d; ++row) {
          v[static_cast<std::size_t>(row)] = effect.at(row, col);
          norm2 += std::norm(v[static_cast<std::size_t>(row)]);
        }
        if (norm2 < 1e-12) continue;
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& z : v) z *= inv;
        starts.emplace_back(std::move(v));
      }
    }
  }
  for (const auto& c : candidates) {
    if (c.dim() != d) throw DimensionMismatch("estimate_r candidate state has wrong dimension");
    starts.push_back(c);
  }
  PureState best_start = starts.front();
  double best_start_value = 0.0;
  for (const auto& s : starts) {
    double v = evaluate(s, 1);
    if (v > best_start_value) {
      best_start_value = v;
      best_start = s;
    }
  }

  auto climb = [&](PureState x, std::size_t k, std::mt19937_64& rng) {
    double value = evaluate(x, k);
    double scale = 0.25;
    int failures = 0, drops = 0;
    for (int step = 0; step < steps; ++step) {
      std::vector<Complex> amps = x.amplitudes();
      double norm2 = 0.0;
      for (auto& a : amps) {
        a += Complex(scale * detail::gaussian(rng), scale * detail::gaussian(rng));
        norm2 += std::norm(a);
      }
      if (norm2 < 1e-12) continue;
      double inv = 1.0 / std::sqrt(norm2);
      for (auto& a : amps) a *= inv;
      PureState y(std::move(amps));
      double v = evaluate(y, k);
      if (v > value) {
        x = std::move(y);
        value = v;
        failures = 0;
      } else if (++failures >= 10) {
        failures = 0;
        scale *= 0.5;
        if (++drops >= 6) break;
      }
    }
  };

  for (std::size_t k = 1; k <= levels; ++k) {
    for (int r = 0; r < restarts; ++r) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
      climb(detail::random_state(d, rng), k, rng);
    }
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(restarts));
    climb(best_start, k, rng);
  }

  for (std::size_t k = 1; k < levels; ++k) best[k] = std::max(best[k], best[k - 1]);
  return detail::make_bound(BoundKind::r_estimate, std::move(best), std::nullopt, std::nullopt);
}

// ---------------------------------------------------------------------------
// Scenario-level plumbing shared by the CLI and the verification suites.

enum class MurKind { dp, ds, dp_multi, ds_multi };

inline const char* to_string(MurKind kind) {
  switch (kind) {
    case MurKind::dp: return "DP";
    case MurKind::ds: return "DS";
    case MurKind::dp_multi: return "DP_MULTI";
    case MurKind::ds_multi: return "DS_MULTI";
  }
  return "?";
}

struct MurScenario {
  MurKind kind;
  std::vector<Measurement> measurements;
  double lambda = 0.5;          // ds only
  std::vector<double> weights;  // ds_multi only
};

inline void validate_scenario(const MurScenario& sc) {
  if ((sc.kind == MurKind::dp || sc.kind == MurKind::ds) && sc.measurements.size() != 2) {
    throw InvalidArgument(std::string(to_string(sc.kind)) + " scenarios take exactly two measurements");
  }
  if (sc.measurements.empty()) throw EmptySet("scenario has no measurements");
  detail::check_common_dimension(sc.measurements);
}

inline BoundVector compute_bound(const MurScenario& sc, const SubsetBudget& budget = {},
                                 int jobs = 1) {
  validate_scenario(sc);
  switch (sc.kind) {
    case MurKind::dp: return dp_bound_t(sc.measurements[0], sc.measurements[1], budget, jobs);
    case MurKind::ds: return ds_bound_s(sc.measurements[0], sc.measurements[1], sc.lambda, budget, jobs);
    case MurKind::dp_multi: return dp_multi_bound(sc.measurements, budget, jobs);
    case MurKind::ds_multi: return ds_multi_bound(sc.measurements, sc.weights, budget, jobs);
  }
  throw InvalidArgument("unknown scenario kind");
}

inline WeightVector joint_uncertainty(const PureState& state, const MurScenario& sc) {
  validate_scenario(sc);
  std::vector<std::vector<double>> borns;
  borns.reserve(sc.measurements.size());
  for (const auto& meas : sc.measurements) borns.push_back(born_probabilities(state, meas));
  switch (sc.kind) {
    case MurKind::dp: return direct_product(borns[0], borns[1]);
    case MurKind::ds: return direct_sum(borns[0], borns[1], sc.lambda);
    case MurKind::dp_multi: return direct_product(borns);
    case MurKind::ds_multi: return direct_sum(borns, sc.weights);
  }
  throw InvalidArgument("unknown scenario kind");
}

// Full chain of majorization verdicts for one state against one bound.
struct MurVerdict {
  WeightVector joint;
  bool joint_below_flattened = false;
  bool joint_below_raw = false;
  bool flattened_below_raw = false;
  LorenzCurve joint_curve;
  LorenzCurve flattened_curve;
  LorenzCurve raw_curve;

  bool chain_holds() const { return joint_below_flattened && joint_below_raw && flattened_below_raw; }
};

inline MurVerdict verify_mur(const PureState& state, const MurScenario& sc,
                             const BoundVector& bound) {
  WeightVector joint = joint_uncertainty(state, sc);
  MurVerdict v{joint,
               majorized_by(joint, bound.flattened),
               majorized_by(joint, bound.raw),
               majorized_by(bound.flattened, bound.raw),
               lorenz_curve(joint),
               lorenz_curve(bound.flattened),
               lorenz_curve(bound.raw)};
  return v;
}

inline MurVerdict verify_mur(const PureState& state, const MurScenario& sc,
                             const SubsetBudget& budget = {}, int jobs = 1) {
  return verify_mur(state, sc, compute_bound(sc, budget, jobs));
}

}  // namespace majur
