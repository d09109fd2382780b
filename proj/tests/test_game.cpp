#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "majur/game.hpp"

using namespace majur;

namespace {
constexpr double kPi = 3.14159265358979323846;

PureState zero_state() {
  return PureState({Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0)});
}
}  // namespace

TEST_CASE("degenerate DS game is deterministic") {
  GameConfig config{.kind = GameKind::ds,
                    .state = zero_state(),
                    .m = builtin_measurement("A"),
                    .n = builtin_measurement("B"),
                    .lambda = 1.0,
                    .trials = 10000,
                    .seed = 123,
                    .k = 1};
  GameResult r = simulate(config);
  CHECK(r.empirical_top_k == 1.0);
  CHECK(r.exact_top_k == Catch::Approx(1.0).margin(1e-12));
  CHECK(r.counts[0] == 10000);
}

TEST_CASE("same seed reproduces bitwise, different seeds differ") {
  GameConfig config{.kind = GameKind::dp,
                    .state = make_state(kPi / 4, kPi / 4),
                    .m = builtin_measurement("A"),
                    .n = builtin_measurement("B"),
                    .lambda = 0.5,
                    .trials = 20000,
                    .seed = 99,
                    .k = 2};
  GameResult r1 = simulate(config);
  GameResult r2 = simulate(config);
  CHECK(r1.counts == r2.counts);
  CHECK(r1.empirical_top_k == r2.empirical_top_k);

  config.seed = 100;
  GameResult r3 = simulate(config);
  CHECK(r1.counts != r3.counts);
}

TEST_CASE("dp game frequencies track the Born products") {
  GameConfig config{.kind = GameKind::dp,
                    .state = make_state(kPi / 4, kPi / 4),
                    .m = builtin_measurement("A"),
                    .n = builtin_measurement("B"),
                    .lambda = 0.5,
                    .trials = 1000000,
                    .seed = 42,
                    .k = 1};
  GameResult r = simulate(config);
  // exact top pair: p_2 = 1/2 against the largest B probability (1+1/sqrt2)/4
  const double expected = 0.5 * (1.0 + std::sqrt(0.5)) / 4.0;
  CHECK(r.exact_top_k == Catch::Approx(expected).margin(1e-12));
  CHECK(std::abs(r.empirical_top_k - r.exact_top_k) <= 4.0 * r.std_error);
  CHECK(r.empirical_top_k <= r.bound_value + 4.0 * r.std_error);
  CHECK(r.bound_value == Catch::Approx(0.5625).margin(1e-10));
}

TEST_CASE("ds game frequencies track the mixed distribution") {
  GameConfig config{.kind = GameKind::ds,
                    .state = zero_state(),
                    .m = builtin_measurement("A"),
                    .n = builtin_measurement("B"),
                    .lambda = 0.5,
                    .trials = 1000000,
                    .seed = 42,
                    .k = 1};
  GameResult r = simulate(config);
  CHECK(r.exact_top_k == Catch::Approx(0.5).margin(1e-12));
  CHECK(std::abs(r.empirical_top_k - 0.5) <= 4.0 * r.std_error);
  CHECK(r.empirical_top_k <= r.bound_value + 4.0 * r.std_error);
  CHECK(r.bound_value == Catch::Approx(0.5).margin(1e-10));
}

TEST_CASE("empirical histogram converges in total variation") {
  GameConfig config{.kind = GameKind::ds,
                    .state = make_state(0.4, 1.1),
                    .m = builtin_measurement("A"),
                    .n = builtin_measurement("B"),
                    .lambda = 0.3,
                    .trials = 1000000,
                    .seed = 7,
                    .k = 1};
  GameResult r = simulate(config);
  auto p = born_probabilities(config.state, config.m);
  auto q = born_probabilities(config.state, config.n);
  std::vector<double> exact;
  for (double v : p) exact.push_back(config.lambda * v);
  for (double v : q) exact.push_back((1 - config.lambda) * v);
  double tv = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    tv += std::abs(exact[i] - static_cast<double>(r.counts[i]) / 1e6);
  }
  tv *= 0.5;
  CHECK(tv <= 5.0 * std::sqrt(static_cast<double>(exact.size()) / 1e6));
}

TEST_CASE("game input contracts") {
  GameConfig bad_k{.kind = GameKind::ds,
                   .state = zero_state(),
                   .m = builtin_measurement("A"),
                   .n = builtin_measurement("B"),
                   .lambda = 0.5,
                   .trials = 100,
                   .seed = 1,
                   .k = 9};
  CHECK_THROWS_AS(simulate(bad_k), InvalidArgument);
  GameConfig no_trials{.kind = GameKind::dp,
                       .state = zero_state(),
                       .m = builtin_measurement("A"),
                       .n = builtin_measurement("B"),
                       .lambda = 0.5,
                       .trials = 0,
                       .seed = 1,
                       .k = 1};
  CHECK_THROWS_AS(simulate(no_trials), InvalidArgument);
}
