#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "majur/hermitian.hpp"
#include "oracles.hpp"

using namespace majur;

namespace {

// raw complex matmul, test-local
std::vector<Complex> multiply(const HermitianOperator& a, const HermitianOperator& b) {
  const int d = a.dim();
  std::vector<Complex> out(static_cast<std::size_t>(d) * d, Complex(0.0, 0.0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        out[static_cast<std::size_t>(i) * d + j] += a.at(i, k) * b.at(k, j);
  return out;
}

}  // namespace

TEST_CASE("projector from basis vector") {
  auto p = projector_from_vector({Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0)});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(p.at(i, j) - ((i == 0 && j == 0) ? Complex(1, 0) : Complex(0, 0))) < 1e-15);
}

TEST_CASE("projector from unnormalized symmetric vector") {
  auto p = projector_from_vector({Complex(1, 0), Complex(1, 0)});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(p.at(i, j).real() == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("projector from complex vector has the right phases") {
  // (|0> - i|1> - i|2> + |3>)/2; entry (0,1) = v_0 conj(v_1) = (1/2)(i/2)
  auto p = projector_from_vector({Complex(1, 0), Complex(0, -1), Complex(0, -1), Complex(1, 0)});
  CHECK(p.trace() == Catch::Approx(1.0).margin(1e-10));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(p.at(i, j)) == Catch::Approx(0.25).margin(1e-12));
  CHECK(p.at(0, 1).real() == Catch::Approx(0.0).margin(1e-12));
  CHECK(p.at(0, 1).imag() == Catch::Approx(0.25).margin(1e-12));

  // idempotent within 1e-10
  auto pp = multiply(p, p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(pp[static_cast<std::size_t>(i) * 4 + j] - p.at(i, j)) < 1e-10);
}

TEST_CASE("projector rejects the zero vector") {
  CHECK_THROWS_AS(projector_from_vector({Complex(0, 0), Complex(1e-13, 0)}), ZeroVector);
}

TEST_CASE("weighted_sum basics") {
  auto p = projector_from_vector({Complex(1, 0), Complex(0, 0)});
  auto q = projector_from_vector({Complex(0, 0), Complex(1, 0)});
  auto zero_weight = weighted_sum({{1.0, p}, {0.0, q}});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(zero_weight.at(i, j) - p.at(i, j)) < 1e-15);

  auto half_identities = weighted_sum({{0.5, HermitianOperator::identity(4)},
                                       {0.5, HermitianOperator::identity(4)}});
  for (int i = 0; i < 4; ++i) CHECK(half_identities.at(i, i).real() == Catch::Approx(1.0));

  CHECK_THROWS_AS(weighted_sum({{1.0, p}, {1.0, HermitianOperator::identity(4)}}),
                  DimensionMismatch);
  CHECK_THROWS_AS(weighted_sum({{-0.5, p}}), InvalidArgument);
}

TEST_CASE("sum of two projectors with overlap 1/2 has top eigenvalue 1.5") {
  // analytic spectrum of P_a + P_b is {1 +- |<a|b>|, 0, 0}
  auto pa = projector_from_vector({Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0)});
  auto pb = projector_from_vector({Complex(1, 0), Complex(0, -1), Complex(0, -1), Complex(1, 0)});
  auto sum = weighted_sum({{1.0, pa}, {1.0, pb}});
  CHECK(max_eigenvalue(sum) == Catch::Approx(1.5).margin(1e-10));
  CHECK(oracles::power_iteration_lmax(sum) == Catch::Approx(1.5).margin(1e-8));
}

TEST_CASE("max eigenvalue of identity and zero") {
  CHECK(max_eigenvalue(HermitianOperator::identity(4)) == Catch::Approx(1.0).margin(1e-12));
  CHECK(max_eigenvalue(HermitianOperator::zero(3)) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("hermiticity is validated, not repaired") {
  std::vector<std::vector<Complex>> bad{{Complex(1, 0), Complex(0.5, 0)},
                                        {Complex(0.4, 0), Complex(1, 0)}};
  CHECK_THROWS_AS(HermitianOperator(bad), NotHermitian);
  std::vector<std::vector<Complex>> bad_diag{{Complex(1, 1e-3), Complex(0, 0)},
                                             {Complex(0, 0), Complex(1, 0)}};
  CHECK_THROWS_AS(HermitianOperator(bad_diag), NotHermitian);
}

TEST_CASE("eigenvalue shift and scale equivariance") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + static_cast<int>(rng() % 7);
    auto h = oracles::random_hermitian(d, rng);
    double lmax = max_eigenvalue(h);

    for (double t : {-2.0, -0.7, 0.3, 2.0}) {
      auto shifted = weighted_sum({{1.0, h}, {std::abs(t), HermitianOperator::identity(d)}});
      if (t < 0) {
        // negative shifts via direct entry arithmetic
        std::vector<Complex> e = h.entries();
        for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i) * d + i] += t;
        shifted = HermitianOperator(d, std::move(e));
      }
      CHECK(max_eigenvalue(shifted) == Catch::Approx(lmax + t).margin(1e-9));
    }
    for (double c : {0.5, 1.5, 4.0}) {
      CHECK(max_eigenvalue(h.scaled(c)) == Catch::Approx(c * lmax).margin(1e-9));
    }
  }
}

TEST_CASE("spectrum sums to the trace and dominates the diagonal") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 2 + static_cast<int>(rng() % 7);
    auto h = oracles::random_hermitian(d, rng);
    auto values = eigenvalues(h);
    double sum = 0.0;
    for (double v : values) sum += v;
    CHECK(sum == Catch::Approx(h.trace()).margin(1e-8));
    double lmax = values.back();
    CHECK(lmax >= h.trace() / d - 1e-10);
    for (int i = 0; i < d; ++i) CHECK(lmax >= h.at(i, i).real() - 1e-10);
  }
}

TEST_CASE("agrees with the power-iteration oracle on random matrices") {
  std::mt19937_64 rng(123456);
  const int dims[] = {2, 3, 4, 6};
  for (int trial = 0; trial < 1000; ++trial) {
    auto h = oracles::random_hermitian(dims[trial % 4], rng);
    CHECK(max_eigenvalue(h) == Catch::Approx(oracles::power_iteration_lmax(h)).margin(1e-8));
  }
}
