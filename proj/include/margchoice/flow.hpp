#pragma once

// Constructive feasibility for conditional choice systems: given weights
// mu(y) over an abstract index set, a feasible set h(y) for each index, and a
// target choice distribution lambda, either build pi(.|y) supported in h(y)
// with lambda(a) = sum_y mu(y) pi(a|y), or exhibit a set A with
// lambda(A) < sum_{h(y) subset of A} mu(y).
//
// Network: s -> a (capacity lambda(a)), a -> y when a in h(y) (capacity 1),
// y -> t (capacity mu(y)). Max flow is computed exactly with shortest
// augmenting paths; the cut is read off the residual graph.

#include <optional>
#include <vector>

#include "margchoice/domain.hpp"

namespace margchoice {

struct FlowProblem {
  std::vector<Rational> source_weights;  // mu(y), summing to 1
  std::vector<Menu> allowed;             // h(y), nonempty
  ChoiceDistribution lambda;
};

struct FlowResult {
  bool feasible = false;
  Rational max_flow = 0;
  /// pi[y] supported in allowed[y]; filled iff feasible.
  std::vector<ChoiceDistribution> pi;
  /// Alternatives unreachable from the source in the final residual graph;
  /// set iff infeasible.
  std::optional<Menu> cut;
  /// sum_{h(y) subset of cut} mu(y) - lambda(cut) > 0 when infeasible.
  Rational cut_deficit = 0;
};

/// Throws InvalidParameters on malformed problems.
FlowResult solve_flow(const FlowProblem& problem);

struct Rationalization {
  bool feasible = false;
  std::optional<StochasticChoiceFunction> pi;  // over the support of mu
  std::optional<Menu> cut;
  Rational cut_deficit = 0;
};

/// Unrestricted rationalizability: index set = support(mu), h = identity.
Rationalization rationalize(const MarginalDataset& dataset);

}  // namespace margchoice
