// Test-only reference implementations, kept independent of the library code
// paths they cross-check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "majur/hermitian.hpp"
#include "majur/quantum.hpp"

namespace oracles {

// Increments of the least concave majorant of the cumulative polyline
// {(k, sum of the first k increments)}, via a monotone-stack upper hull.
inline std::vector<double> concave_majorant_increments(const std::vector<double>& increments) {
  const std::size_t n = increments.size();
  std::vector<double> heights(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) heights[i + 1] = heights[i] + increments[i];

  // upper hull of the points (k, heights[k]) scanned left to right
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    while (hull.size() >= 2) {
      std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
      double cross = (static_cast<double>(b - a)) * (heights[k] - heights[a]) -
                     (static_cast<double>(k - a)) * (heights[b] - heights[a]);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }

  std::vector<double> result(n, 0.0);
  for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
    std::size_t a = hull[seg], b = hull[seg + 1];
    double slope = (heights[b] - heights[a]) / static_cast<double>(b - a);
    for (std::size_t k = a; k < b; ++k) result[k] = slope;
  }
  return result;
}

// Largest eigenvalue by shifted power iteration on complex vectors. The
// shift makes the spectrum positive so the dominant eigenvalue in magnitude
// is the algebraic maximum.
inline double power_iteration_lmax(const majur::HermitianOperator& h, int max_iters = 50000) {
  const int d = h.dim();
  double shift = 1.0;
  for (int i = 0; i < d; ++i) {
    double row = 0.0;
    for (int j = 0; j < d; ++j) row += std::abs(h.at(i, j));
    shift = std::max(shift, row + 1.0);
  }
  std::vector<majur::Complex> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    v[static_cast<std::size_t>(i)] = majur::Complex(1.0 + 0.137 * i, 0.211 * i);
  }
  double norm2 = 0.0;
  for (const auto& z : v) norm2 += std::norm(z);
  for (auto& z : v) z /= std::sqrt(norm2);

  double rayleigh = 0.0, prev = 1e300;
  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<majur::Complex> w(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      majur::Complex acc(shift * v[static_cast<std::size_t>(i)]);
      for (int j = 0; j < d; ++j) acc += h.at(i, j) * v[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = acc;
    }
    double wnorm2 = 0.0;
    majur::Complex dot(0.0, 0.0);
    for (int i = 0; i < d; ++i) {
      wnorm2 += std::norm(w[static_cast<std::size_t>(i)]);
      dot += std::conj(v[static_cast<std::size_t>(i)]) * w[static_cast<std::size_t>(i)];
    }
    rayleigh = dot.real() - shift;
    double wnorm = std::sqrt(wnorm2);
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / wnorm;
    if (std::abs(rayleigh - prev) < 1e-13 && iter > 8) break;
    prev = rayleigh;
  }
  return rayleigh;
}

// Random Hermitian matrix with entries of magnitude about 1.
inline majur::HermitianOperator random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<majur::Complex> e(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    e[static_cast<std::size_t>(i) * d + i] = majur::Complex(gauss(rng), 0.0);
    for (int j = i + 1; j < d; ++j) {
      majur::Complex z(gauss(rng) * 0.70710678, gauss(rng) * 0.70710678);
      e[static_cast<std::size_t>(i) * d + j] = z;
      e[static_cast<std::size_t>(j) * d + i] = std::conj(z);
    }
  }
  return majur::HermitianOperator(d, std::move(e));
}

inline std::vector<double> random_increments(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> y(n);
  for (auto& v : y) v = uniform(rng);
  y[rng() % n] += 0.2;  // avoid the all-tiny corner
  return y;
}

inline std::vector<double> random_sorted_distribution(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& v : p) sum += (v = uniform(rng) + 1e-6);
  for (auto& v : p) v /= sum;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

// Robin Hood transfer from a larger to a smaller entry: the result is
// majorized by the input. Iterated, it produces strictly "flatter" vectors.
inline std::vector<double> doubly_averaged(std::vector<double> p, int moves, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < moves; ++t) {
    std::size_t i = rng() % p.size(), j = rng() % p.size();
    if (p[i] < p[j]) std::swap(i, j);
    if (i == j) continue;
    double delta = 0.5 * uniform(rng) * (p[i] - p[j]);
    p[i] -= delta;
    p[j] += delta;
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

inline majur::PureState random_pure_state(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::vector<majur::Complex> amps(static_cast<std::size_t>(d));
    double norm2 = 0.0;
    for (auto& a : amps) {
      a = majur::Complex(gauss(rng), gauss(rng));
      norm2 += std::norm(a);
    }
    if (norm2 < 1e-12) continue;
    for (auto& a : amps) a /= std::sqrt(norm2);
    return majur::PureState(std::move(amps));
  }
}

}  // namespace oracles
