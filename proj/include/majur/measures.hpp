#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "majur/bounds.hpp"
#include "majur/errors.hpp"
#include "majur/majorization.hpp"
#include "majur/quantum.hpp"

namespace majur {

// Shannon entropy in bits, 0 log 0 := 0. The total need not be 1: the
// unnormalized extension is what the super-additivity identities are about,
// so no implicit normalization ever happens here.
inline double shannon_entropy(const WeightVector& x) {
  double h = 0.0;
  for (double c : x.components()) {
    if (c > 0.0) h -= c * std::log2(c);
  }
  return h;
}

// U = S - M: total minus the largest component. Non-negative Schur-concave.
inline double measure_U(const WeightVector& x) { return x.total() - x[0]; }

// V = log2 of the product of the components. Rejects zero components instead
// of returning -inf; the measure is simply not defined there.
inline double measure_V(const WeightVector& x) {
  double v = 0.0;
  for (double c : x.components()) {
    if (c <= 0.0) throw ZeroComponent("measure_V undefined: vector has a zero component");
    v += std::log2(c);
  }
  return v;
}

// Gap between the uncertainty of a joint distribution and of its bound, per
// measure. The V gap is absent whenever either vector has a zero component.
struct GapReport {
  double shannon = 0.0;
  double u = 0.0;
  std::optional<double> v;
};

inline GapReport uncertainty_gaps(const WeightVector& joint, const WeightVector& bound) {
  GapReport g;
  g.shannon = shannon_entropy(joint) - shannon_entropy(bound);
  g.u = measure_U(joint) - measure_U(bound);
  bool v_defined = true;
  for (double c : joint.components()) v_defined = v_defined && c > 0.0;
  for (double c : bound.components()) v_defined = v_defined && c > 0.0;
  if (v_defined) g.v = measure_V(joint) - measure_V(bound);
  return g;
}

// xi_DP and xi_DS for one state and one measurement pair, computed against
// the flattened bounds. Both are non-negative for every Schur-concave
// measure because the bound majorizes the joint uncertainty.
struct PairGaps {
  GapReport dp;  // p (x) q against F(t)
  GapReport ds;  // lambda p (+) (1-lambda) q against F(s(lambda))
};

inline PairGaps uncertainty_gaps(const PureState& state, const Measurement& m,
                                 const Measurement& n, double lambda = 0.5,
                                 const SubsetBudget& budget = {}, int jobs = 1) {
  std::vector<double> p = born_probabilities(state, m);
  std::vector<double> q = born_probabilities(state, n);
  PairGaps gaps;
  gaps.dp = uncertainty_gaps(direct_product(p, q), dp_bound_t(m, n, budget, jobs).flattened);
  gaps.ds = uncertainty_gaps(direct_sum(p, q, lambda),
                             ds_bound_s(m, n, lambda, budget, jobs).flattened);
  return gaps;
}

}  // namespace majur
