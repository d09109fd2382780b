#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "majur/errors.hpp"
#include "majur/hermitian.hpp"
#include "majur/majorization.hpp"

namespace majur {

// Unit-norm complex amplitude vector.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw EmptySet("pure state needs at least one amplitude");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw InvalidArgument("pure state amplitude is not finite");
      }
      norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > 1e-10) {
      throw InvalidArgument("pure state norm deviates from 1 by " + std::to_string(norm2 - 1.0));
    }
  }

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

 private:
  std::vector<Complex> amplitudes_;
};

// |psi_{theta,phi}> = cos(theta)sin(phi)|0> + cos(theta)cos(phi)|1> + sin(theta)|2> + 0|3>.
// Angles in radians; degree conversion happens at the CLI boundary.
inline PureState make_state(double theta, double phi) {
  return PureState({Complex(std::cos(theta) * std::sin(phi), 0.0),
                    Complex(std::cos(theta) * std::cos(phi), 0.0),
                    Complex(std::sin(theta), 0.0), Complex(0.0, 0.0)});
}

// Ordered POVM: positive effects summing to the identity.
class Measurement {
 public:
  Measurement(std::string label, std::vector<HermitianOperator> effects)
      : label_(std::move(label)), effects_(std::move(effects)) {
    if (effects_.empty()) throw InvalidMeasurement("measurement has no effects");
    const int d = effects_.front().dim();
    std::vector<Complex> sum(static_cast<std::size_t>(d) * d, Complex(0.0, 0.0));
    for (std::size_t a = 0; a < effects_.size(); ++a) {
      const auto& m = effects_[a];
      if (m.dim() != d) throw DimensionMismatch("measurement effects have mixed dimensions");
      if (min_eigenvalue(m) < -kHermitianTol) {
        throw InvalidMeasurement("effect " + std::to_string(a) + " of measurement '" + label_ +
                                 "' is not positive semidefinite");
      }
      const auto& e = m.entries();
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e[i];
    }
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Complex expect = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        if (std::abs(sum[static_cast<std::size_t>(i) * d + j] - expect) > kHermitianTol) {
          throw InvalidMeasurement("effects of measurement '" + label_ +
                                   "' do not sum to the identity");
        }
      }
    }
  }

  const std::string& label() const { return label_; }
  const std::vector<HermitianOperator>& effects() const { return effects_; }
  int dim() const { return effects_.front().dim(); }
  int outcomes() const { return static_cast<int>(effects_.size()); }

 private:
  std::string label_;
  std::vector<HermitianOperator> effects_;
};

// The built-in four-dimensional measurements. A and B are mutually unbiased;
// C1..C3 are the multi-measurement set.
inline Measurement builtin_measurement(const std::string& name) {
  const Complex i(0.0, 1.0);
  auto basis = [](int k) {
    std::vector<Complex> v(4, Complex(0.0, 0.0));
    v[k] = Complex(1.0, 0.0);
    return v;
  };
  auto projectors = [&name](const std::vector<std::vector<Complex>>& vectors) {
    std::vector<HermitianOperator> effects;
    effects.reserve(vectors.size());
    for (const auto& v : vectors) effects.push_back(projector_from_vector(v));
    return Measurement(name, std::move(effects));
  };

  if (name == "A" || name == "C1") {
    return projectors({basis(0), basis(1), basis(2), basis(3)});
  }
  if (name == "B") {
    return projectors({{0.5, -0.5 * i, -0.5 * i, 0.5},
                       {0.5, -0.5 * i, 0.5 * i, -0.5},
                       {0.5, 0.5 * i, -0.5 * i, -0.5},
                       {0.5, 0.5 * i, 0.5 * i, 0.5}});
  }
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  if (name == "C2") {
    return projectors({basis(0),
                       {0.0, 0.0, r2, r2},
                       {0.0, r3, r3, -r3},
                       {0.0, 2.0 * r6, -r6, r6}});
  }
  if (name == "C3") {
    return projectors({{0.0, 0.0, r2, r2},
                       basis(1),
                       {r3, 0.0, r3, -r3},
                       {2.0 * r6, 0.0, -r6, r6}});
  }
  throw UnknownName("unknown measurement name '" + name + "' (expected A, B, C1, C2 or C3)");
}

// Born rule p_a = <psi|M_a|psi>, in outcome order. Values are clamped to
// [0, 1]; sorting happens only when a WeightVector is built from them.
inline std::vector<double> born_probabilities(const PureState& state, const Measurement& m) {
  if (state.dim() != m.dim()) throw DimensionMismatch("state/measurement dimension mismatch");
  std::vector<double> p(m.effects().size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    p[a] = std::clamp(expectation(m.effects()[a], state.amplitudes()), 0.0, 1.0);
  }
  return p;
}

namespace detail {

inline void check_probability_list(const std::vector<double>& p, const char* what) {
  if (p.empty()) throw EmptySet(std::string(what) + " requires non-empty probability lists");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -kNegativeTol) {
      throw InvalidArgument(std::string(what) + " probability entries must be non-negative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kMajorizationTol) {
    throw TotalMismatch(std::string(what) + " probability list sums to " + std::to_string(sum));
  }
}

}  // namespace detail

// Spatially-separated joint uncertainty: all pairwise products, sorted.
inline WeightVector direct_product(const std::vector<double>& p, const std::vector<double>& q) {
  detail::check_probability_list(p, "direct_product");
  detail::check_probability_list(q, "direct_product");
  std::vector<double> products;
  products.reserve(p.size() * q.size());
  for (double a : p)
    for (double b : q) products.push_back(std::max(a, 0.0) * std::max(b, 0.0));
  return WeightVector(std::move(products));
}

inline WeightVector direct_product(const std::vector<std::vector<double>>& lists) {
  if (lists.empty()) throw EmptySet("direct_product of no distributions");
  for (const auto& p : lists) detail::check_probability_list(p, "direct_product");
  std::vector<double> acc{1.0};
  for (const auto& p : lists) {
    std::vector<double> next;
    next.reserve(acc.size() * p.size());
    for (double a : acc)
      for (double b : p) next.push_back(a * std::max(b, 0.0));
    acc = std::move(next);
  }
  return WeightVector(std::move(acc));
}

// Temporally-separated joint uncertainty: lambda p (+) (1-lambda) q, sorted.
inline WeightVector direct_sum(const std::vector<double>& p, const std::vector<double>& q,
                               double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw LambdaOutOfRange("direct_sum lambda must lie in [0, 1]");
  }
  detail::check_probability_list(p, "direct_sum");
  detail::check_probability_list(q, "direct_sum");
  std::vector<double> merged;
  merged.reserve(p.size() + q.size());
  for (double a : p) merged.push_back(lambda * std::max(a, 0.0));
  for (double b : q) merged.push_back((1.0 - lambda) * std::max(b, 0.0));
  return WeightVector(std::move(merged));
}

inline WeightVector direct_sum(const std::vector<std::vector<double>>& lists,
                               const std::vector<double>& weights) {
  if (lists.size() != weights.size()) {
    throw WeightMismatch("direct_sum weight count differs from distribution count");
  }
  if (lists.empty()) throw EmptySet("direct_sum of no distributions");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw WeightMismatch("direct_sum weights must be non-negative");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > kMajorizationTol) {
    throw WeightMismatch("direct_sum weights sum to " + std::to_string(wsum));
  }
  std::vector<double> merged;
  for (std::size_t x = 0; x < lists.size(); ++x) {
    detail::check_probability_list(lists[x], "direct_sum");
    for (double v : lists[x]) merged.push_back(weights[x] * std::max(v, 0.0));
  }
  return WeightVector(std::move(merged));
}

}  // namespace majur
