#pragma once

// Random utility analysis on marginal data.
//
// Feasibility reduces to core membership of lambda in Core(v_mu); a witness
// distribution over orders is recovered by writing lambda as a convex
// combination of the marginal-contribution vertices, solved exactly with the
// in-repo simplex. The witness is one of possibly many: the pivoting rule is
// deterministic, so the same input always yields the same output.

#include <map>
#include <vector>

#include "margchoice/core_geometry.hpp"
#include "margchoice/domain.hpp"

namespace margchoice {

struct OrderDistribution {
  std::map<PreferenceOrder, Rational> weights;  // positive weights only

  Rational probability_where(const std::function<bool(const PreferenceOrder&)>& pred) const;
  friend bool operator==(const OrderDistribution&, const OrderDistribution&) = default;
};

struct RumResult {
  bool feasible = false;
  OrderDistribution nu;                // set iff feasible
  CoreMembershipReport certificate;    // violated constraints when infeasible
};

/// Throws TooManyOrders when n exceeds `order_cap`.
RumResult rum_rationalize(const MarginalDataset& dataset, std::size_t order_cap = kDefaultOrderEnumerationCap);

/// sum over orders of nu(order) * vertex(order) of Core(v).
std::vector<Rational> mix_extreme_points(const CooperativeGame& v, const OrderDistribution& nu);

/// Conditional choice probabilities pi(a|A) = nu(T[A,a]) induced on the
/// support menus of `mu`.
StochasticChoiceFunction induced_conditionals(const MenuDistribution& mu, const OrderDistribution& nu);

/// Throws PairSupportMissing naming the first pair {a,b} with mu({a,b}) = 0.
void require_pair_support(const MarginalDataset& dataset);

/// lambda(A) == v_mu(A), i.e. A is ranked below its complement by every
/// rationalizing population. Throws PairSupportMissing, NotRationalizable.
bool inferior_test(const MarginalDataset& dataset, Menu set);

/// All menus with lambda(A) == v_mu(A), ascending by size (always ends in X).
/// Throws PairSupportMissing, NotRationalizable, Internal if they are not nested.
std::vector<Menu> inferior_chain(const MarginalDataset& dataset);

/// (lambda(A) - v(A)) / (1 - v(A) - v(A^c)): an upper bound on the probability
/// that A is ranked entirely above A^c and a lower bound on the probability
/// that A is not ranked entirely below A^c, for every rationalizing nu.
/// Throws DegenerateDenominator, NotRationalizable.
Rational superiority_bound(const MarginalDataset& dataset, Menu set);

/// Whether the rationalizing distribution over orders is unique: lambda lies
/// on an edge or vertex of Core(v_mu), i.e. at least n-2 proper menus are
/// tight. Returns false when the dataset is not rationalizable.
/// Throws PairSupportMissing.
bool unique_rum(const MarginalDataset& dataset);

}  // namespace margchoice
