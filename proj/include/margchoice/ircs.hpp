#pragma once

// Independent random consideration sets with an always-available outside
// option x*. Menus are keyed by their part inside X; x* is implicit.

#include <vector>

#include "margchoice/core_geometry.hpp"
#include "margchoice/domain.hpp"

namespace margchoice {

inline constexpr const char* kOutsideOptionLabel = "x*";

struct StarDataset {
  Universe universe;             // excludes x*
  MenuDistribution mu;           // A-part of each observed menu A + x*
  std::vector<Rational> lambda;  // choice shares of the alternatives in X
  Rational outside;              // lambda(x*) = 1 - sum lambda

  std::size_t n() const { return universe.n(); }
  /// Distribution over X + x*, with x* at index n.
  ChoiceDistribution lambda_star() const;
};

/// Throws NegativeProbability, SumNotOne (shares of X above 1).
StarDataset make_star_dataset(Universe universe, MenuDistribution mu, std::vector<Rational> lambda);

/// From parsed JSON. An "x*" entry in lambda is optional; when present it must
/// equal 1 - sum of the others exactly (SumNotOne otherwise).
StarDataset validate_star_dataset(const RawDataset& raw);

struct IrcsSolution {
  PreferenceOrder order;
  std::vector<Rational> gamma;  // indexed by alternative
};

/// Throws SingletonSupportMissing naming the first a with mu({a, x*}) = 0.
void require_singleton_support(const StarDataset& dataset);

/// t_1..t_n along `order` (t_k belongs to the k-th best alternative).
/// Values above 1 are kept. If an earlier t_i > 1 drives a later denominator
/// to zero or below, the recursion stops there and the returned vector is
/// shorter than n; such an order never rationalizes.
/// Throws SingletonSupportMissing.
std::vector<Rational> ircs_t_vector(const StarDataset& dataset, const PreferenceOrder& order);

/// One solution per order whose t-vector is complete and <= 1, in
/// lexicographic order of rankings. Throws SingletonSupportMissing,
/// TooManyOrders.
std::vector<IrcsSolution> ircs_rationalize(const StarDataset& dataset,
                                           std::size_t order_cap = kDefaultOrderEnumerationCap);

/// lambda(a) = sum_A mu(A) gamma_a prod_{b in A, b > a} (1 - gamma_b); index n
/// holds lambda(x*) = sum_A mu(A) prod_{b in A} (1 - gamma_b).
/// Throws InvalidParameters unless gamma is in [0,1]^n.
ChoiceDistribution ircs_forward(const MenuDistribution& mu, const PreferenceOrder& order,
                                const std::vector<Rational>& gamma);

}  // namespace margchoice
