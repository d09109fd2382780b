#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "majur/bounds.hpp"
#include "majur/errors.hpp"
#include "majur/quantum.hpp"

namespace majur {

enum class GameKind { dp, ds };

// One Alice/Bob guessing game. DP draws a pair of outcomes from the two
// spatially separated boxes each round; DS first flips a lambda-coin to pick
// which measurement runs.
struct GameConfig {
  GameKind kind = GameKind::dp;
  PureState state;
  Measurement m;
  Measurement n;
  double lambda = 0.5;  // ds only
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int k = 1;
};

struct GameResult {
  std::vector<std::uint64_t> counts;  // histogram over the outcome space
  double empirical_top_k = 0.0;       // sum of the k largest frequencies
  double exact_top_k = 0.0;           // sum of the k largest Born probabilities
  double bound_value = 0.0;           // T_k (dp) or S_k (ds)
  double std_error = 0.0;             // sqrt(f (1-f) / trials)
};

namespace detail {

// Inverse-CDF sampling over the outcome list in measurement order. Exact and
// reproducible: the only randomness is the 53-bit uniform draw.
inline std::size_t sample_outcome(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  std::size_t i = static_cast<std::size_t>(it - cdf.begin());
  return std::min(i, cdf.size() - 1);
}

inline std::vector<double> cdf_of(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) cdf[i] = (acc += probs[i]);
  cdf.back() = std::max(cdf.back(), 1.0);
  return cdf;
}

inline double top_k_mass(std::vector<double> values, int k) {
  std::sort(values.begin(), values.end(), std::greater<>());
  double acc = 0.0;
  for (int i = 0; i < k; ++i) acc += values[static_cast<std::size_t>(i)];
  return acc;
}

}  // namespace detail

// Runs the game with a single std::mt19937_64 stream (the C++ standard
// engine, so identical seeds give identical results everywhere). Splitting
// trials across workers would need per-worker sub-streams and is not done
// here: one config, one stream.
inline GameResult simulate(const GameConfig& config, const SubsetBudget& budget = {},
                           int jobs = 1) {
  if (config.trials < 1) throw InvalidArgument("simulate needs trials >= 1");
  if (config.m.dim() != config.n.dim() || config.state.dim() != config.m.dim()) {
    throw DimensionMismatch("game state and measurements must share one dimension");
  }
  const std::vector<double> p = born_probabilities(config.state, config.m);
  const std::vector<double> q = born_probabilities(config.state, config.n);

  std::vector<double> exact;
  if (config.kind == GameKind::dp) {
    exact.reserve(p.size() * q.size());
    for (double a : p)
      for (double b : q) exact.push_back(a * b);
  } else {
    if (!(config.lambda > 0.0 && config.lambda <= 1.0)) {
      throw LambdaOutOfRange("ds game lambda must lie in (0, 1]");
    }
    exact.reserve(p.size() + q.size());
    for (double a : p) exact.push_back(config.lambda * a);
    for (double b : q) exact.push_back((1.0 - config.lambda) * b);
  }
  const int outcomes = static_cast<int>(exact.size());
  if (config.k < 1 || config.k > outcomes) {
    throw InvalidArgument("game k must lie in [1, " + std::to_string(outcomes) + "]");
  }

  GameResult result;
  result.counts.assign(static_cast<std::size_t>(outcomes), 0);
  std::mt19937_64 rng(config.seed);
  const std::vector<double> cdf_p = detail::cdf_of(p);
  const std::vector<double> cdf_q = detail::cdf_of(q);
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    if (config.kind == GameKind::dp) {
      std::size_t a = detail::sample_outcome(cdf_p, detail::uniform53(rng));
      std::size_t b = detail::sample_outcome(cdf_q, detail::uniform53(rng));
      ++result.counts[a * q.size() + b];
    } else {
      double coin = detail::uniform53(rng);
      if (coin < config.lambda) {
        ++result.counts[detail::sample_outcome(cdf_p, detail::uniform53(rng))];
      } else {
        ++result.counts[p.size() + detail::sample_outcome(cdf_q, detail::uniform53(rng))];
      }
    }
  }

  std::vector<double> frequencies(result.counts.size());
  for (std::size_t i = 0; i < result.counts.size(); ++i) {
    frequencies[i] = static_cast<double>(result.counts[i]) / static_cast<double>(config.trials);
  }
  result.empirical_top_k = detail::top_k_mass(frequencies, config.k);
  result.exact_top_k = detail::top_k_mass(exact, config.k);
  const BoundVector bound =
      config.kind == GameKind::dp
          ? dp_bound_t(config.m, config.n, budget, jobs)
          : ds_bound_s(config.m, config.n, config.lambda, budget, jobs);
  result.bound_value = bound.cumulative.partial_sums()[static_cast<std::size_t>(config.k - 1)];
  const double f = result.empirical_top_k;
  result.std_error = std::sqrt(std::max(f * (1.0 - f), 0.0) / static_cast<double>(config.trials));
  return result;
}

}  // namespace majur
