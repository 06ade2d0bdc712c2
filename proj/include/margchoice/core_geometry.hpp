#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "margchoice/domain.hpp"
#include "margchoice/games.hpp"

namespace margchoice {

inline constexpr std::size_t kDefaultOrderEnumerationCap = 8;

struct MenuDeficit {
  Menu menu;
  Rational deficit;  // v(A) - lambda(A) > 0
};

struct CoreMembershipReport {
  bool member = false;
  std::vector<MenuDeficit> violated;  // ascending bitmask
  std::vector<Menu> tight;            // lambda(A) == v(A), A proper and nonempty
  /// Smallest slack lambda(A) - v(A) over proper nonempty A (lowest bitmask on
  /// ties); empty when n == 1.
  std::optional<std::pair<Menu, Rational>> min_slack;
};

/// Exact scan of lambda(A) >= v(A) over every nonempty proper A.
/// Throws UniverseMismatch when sizes differ.
CoreMembershipReport core_contains(const CooperativeGame& v, const ChoiceDistribution& lambda);

/// Same scan on v_mu, cross-checked against the dual family
/// lambda(A) <= sum_{B meets A} mu(B) evaluated directly from mu's support.
/// A disagreement between the two families throws Internal.
CoreMembershipReport core_contains(const MarginalDataset& dataset);

/// Marginal-contribution vector p(a) = v(L(a) + a) - v(L(a)) for the lower
/// contour sets L of `order`. Throws NotConvex.
ChoiceDistribution extreme_point(const CooperativeGame& v, const PreferenceOrder& order);

/// Same as extreme_point without the convexity check.
std::vector<Rational> marginal_contribution_vector(const CooperativeGame& v, const PreferenceOrder& order);

/// Every order's extreme point, keyed by order. Throws NotConvex and
/// TooManyOrders (n above `order_cap`). For strictly convex games the n!
/// points are checked to be pairwise distinct (Internal otherwise).
std::map<PreferenceOrder, ChoiceDistribution> all_extreme_points(
    const CooperativeGame& v, std::size_t order_cap = kDefaultOrderEnumerationCap);

/// True iff no proper constraint is tight. Throws NotInCore.
bool interior_test(const CooperativeGame& v, const ChoiceDistribution& lambda);

}  // namespace margchoice
