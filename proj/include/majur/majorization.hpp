#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "majur/errors.hpp"

namespace majur {

// Comparison tolerance for all majorization verdicts; eigenvalue round-off
// must not flip them.
inline constexpr double kMajorizationTol = 1e-9;
// Components/increments below this are rejected, above it but negative are
// clamped to zero.
inline constexpr double kNegativeTol = 1e-12;

// Non-negative weights in non-increasing order with a fixed total. Sorting
// and clamping happen at construction; the value is immutable afterwards.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> components) : components_(std::move(components)) {
    if (components_.empty()) throw EmptySet("weight vector must have at least one component");
    for (double& c : components_) {
      if (!std::isfinite(c)) throw InvalidArgument("weight vector component is not finite");
      if (c < -kNegativeTol) {
        throw NegativeIncrement("weight vector component " + std::to_string(c) +
                                " below clamping tolerance");
      }
      c = std::max(c, 0.0);
    }
    std::sort(components_.begin(), components_.end(), std::greater<>());
    total_ = 0.0;
    for (double c : components_) total_ += c;
    if (total_ <= 0.0) throw InvalidArgument("weight vector total must be positive");
  }

  const std::vector<double>& components() const { return components_; }
  double total() const { return total_; }
  std::size_t size() const { return components_.size(); }
  double operator[](std::size_t i) const { return i < components_.size() ? components_[i] : 0.0; }

  // prefix sums, index 1..size()
  std::vector<double> cumulative() const {
    std::vector<double> c(components_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i) c[i] = (acc += components_[i]);
    return c;
  }

  WeightVector scaled(double c) const {
    if (!(c > 0.0)) throw InvalidArgument("weight vector scale must be positive");
    std::vector<double> scaled_components(components_);
    for (double& v : scaled_components) v *= c;
    return WeightVector(std::move(scaled_components));
  }

 private:
  std::vector<double> components_;
  double total_ = 0.0;
};

// Non-decreasing partial sums. Increments of a lattice join need not be
// sorted, so the raw join lives here rather than in WeightVector.
class CumulativeVector {
 public:
  CumulativeVector(std::vector<double> partial_sums, double total)
      : partial_sums_(std::move(partial_sums)), total_(total) {
    if (partial_sums_.empty()) throw EmptySet("cumulative vector must be non-empty");
    if (partial_sums_.front() < -kNegativeTol) {
      throw NegativeIncrement("cumulative vector starts below zero");
    }
    for (std::size_t i = 1; i < partial_sums_.size(); ++i) {
      if (partial_sums_[i] < partial_sums_[i - 1] - kNegativeTol) {
        throw NegativeIncrement("cumulative vector decreases at position " + std::to_string(i));
      }
    }
    if (std::abs(partial_sums_.back() - total_) > kMajorizationTol) {
      throw TotalMismatch("cumulative vector does not end at its declared total");
    }
  }

  const std::vector<double>& partial_sums() const { return partial_sums_; }
  double total() const { return total_; }
  std::size_t size() const { return partial_sums_.size(); }

  std::vector<double> increments() const {
    std::vector<double> inc(partial_sums_.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < partial_sums_.size(); ++i) {
      inc[i] = std::max(partial_sums_[i] - prev, 0.0);
      prev = partial_sums_[i];
    }
    return inc;
  }

 private:
  std::vector<double> partial_sums_;
  double total_;
};

// Piecewise-linear interpolation of (k, sum of the k largest entries),
// starting at (0, 0).
struct LorenzCurve {
  std::vector<double> heights;  // heights[k] for k = 0..n

  double height_at(double k) const {
    if (k <= 0.0) return heights.front();
    if (k >= static_cast<double>(heights.size() - 1)) return heights.back();
    std::size_t lo = static_cast<std::size_t>(k);
    double frac = k - static_cast<double>(lo);
    return heights[lo] + frac * (heights[lo + 1] - heights[lo]);
  }
};

// true iff x is majorized by y (x "under" y: every k-prefix sum of x is at
// most that of y). Vectors of different lengths are zero-padded.
inline bool majorized_by(const WeightVector& x, const WeightVector& y) {
  if (std::abs(x.total() - y.total()) > kMajorizationTol) {
    throw TotalMismatch("majorization compares vectors of equal total");
  }
  const std::size_t n = std::max(x.size(), y.size());
  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    px += x[k];
    py += y[k];
    if (px > py + kMajorizationTol) return false;
  }
  return true;
}

inline LorenzCurve lorenz_curve(const WeightVector& x) {
  LorenzCurve curve;
  curve.heights.resize(x.size() + 1);
  curve.heights[0] = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) curve.heights[i + 1] = (acc += x[i]);
  return curve;
}

// Lattice join, step 1: coordinatewise maxima of the prefix sums. The result
// dominates every input cumulatively but its increments may be unsorted.
inline CumulativeVector join(const std::vector<WeightVector>& vectors) {
  if (vectors.empty()) throw EmptySet("join of an empty set");
  const double total = vectors.front().total();
  std::size_t n = 0;
  for (const auto& v : vectors) {
    if (std::abs(v.total() - total) > kMajorizationTol) {
      throw TotalMismatch("join requires equal totals");
    }
    n = std::max(n, v.size());
  }
  std::vector<double> sums(n, 0.0);
  for (const auto& v : vectors) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += v[k];
      sums[k] = std::max(sums[k], acc);
    }
  }
  return CumulativeVector(std::move(sums), total);
}

// Flatness process F: repeatedly locate the first ascent y_j > y_{j-1},
// search downwards for the largest i whose left neighbour stays above the
// run average a = mean(y_i..y_j) (the virtual y_0 = +inf makes i = 1 always
// admissible), and level the run to a. Each pass merges at least two
// distinct blocks, so at most n-1 passes happen. The fixed point is the
// increment sequence of the least concave majorant of the partial sums.
inline WeightVector flatten(std::vector<double> increments) {
  if (increments.empty()) throw EmptySet("flatten of an empty vector");
  for (double& y : increments) {
    if (!std::isfinite(y)) throw InvalidArgument("flatten increment is not finite");
    if (y < -kNegativeTol) {
      throw NegativeIncrement("flatten increment " + std::to_string(y) + " is negative");
    }
    y = std::max(y, 0.0);
  }
  const std::size_t n = increments.size();
  std::vector<double> prefix(n + 1, 0.0);
  while (true) {
    std::size_t j = n;
    for (std::size_t c = 1; c < n; ++c) {
      if (increments[c] > increments[c - 1]) {
        j = c;
        break;
      }
    }
    if (j == n) break;
    for (std::size_t c = 0; c < n; ++c) prefix[c + 1] = prefix[c] + increments[c];
    // candidate run is i..j; admissible when the entry left of the run stays
    // at or above the run average (a run starting at position 0 always is)
    for (std::size_t i = j;; --i) {
      double avg = (prefix[j + 1] - prefix[i]) / static_cast<double>(j - i + 1);
      if (i == 0 || increments[i - 1] >= avg) {
        for (std::size_t c = i; c <= j; ++c) increments[c] = avg;
        break;
      }
    }
  }
  return WeightVector(std::move(increments));
}

inline WeightVector flatten(const CumulativeVector& y) { return flatten(y.increments()); }

// Unique least upper bound of a finite set in the majorization lattice.
inline WeightVector optimal_upper_bound(const std::vector<WeightVector>& vectors) {
  return flatten(join(vectors));
}

}  // namespace majur
