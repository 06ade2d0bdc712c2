#pragma once

// Forward simulators from model parameters to marginal data, plus seeded
// random parameter draws with small denominators.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "margchoice/domain.hpp"
#include "margchoice/ircs.hpp"
#include "margchoice/luce.hpp"
#include "margchoice/rum.hpp"
#include "margchoice/twostage.hpp"

namespace margchoice {

/// lambda(a) = sum_{A containing a} mu(A) nu(orders ranking a first in A).
ChoiceDistribution gen_rum(const MenuDistribution& mu, const OrderDistribution& nu);

MarginalDataset gen_luce(const Universe& universe, const MenuDistribution& mu, const LuceWeights& u);

StarDataset gen_ircs(const Universe& universe, const MenuDistribution& mu, const PreferenceOrder& order,
                     const std::vector<Rational>& gamma);

/// Temptation/self-control agent: menu utility max(u+v) - max(v), then the
/// argmax of u+v inside the chosen menu.
struct TscAgent {
  std::vector<Rational> u;
  std::vector<Rational> v;
};

/// Menu utility of `menu` for `agent`.
Rational tsc_menu_utility(const TscAgent& agent, Menu menu);

/// Population of weighted agents choosing among `collection` by strict
/// maximization at both stages. Throws TieEncountered, InvalidParameters.
MarginalDataset gen_tsc(const Universe& universe, const std::vector<std::pair<TscAgent, Rational>>& population,
                        const FeasibleCollection& collection);

/// u = 2 at `a` and 0 elsewhere, v = indicator of the complement of `menu`.
/// Chooses `menu` then `a` strictly whenever a lies in bar(menu).
TscAgent committed_agent(std::size_t n, Menu menu, std::size_t a);

/// Seeded draws. All weights are multiples of 1/k for small k.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform_index(std::size_t bound);  // [0, bound)
  bool coin(double p = 0.5);
  /// `k` nonnegative rationals summing to 1 with denominator dividing
  /// the sum of `k` draws from [0, max_weight] (positive when `positive`).
  std::vector<Rational> simplex(std::size_t k, int max_weight = 9, bool positive = false);
  /// Random nonempty menu.
  Menu menu(std::size_t n);
  /// Distribution over up to `max_support` distinct random menus, plus any
  /// `forced` menus, all with positive mass.
  MenuDistribution menu_distribution(std::size_t n, std::size_t max_support, const std::vector<Menu>& forced = {});
  PreferenceOrder order(std::size_t n);
  OrderDistribution order_distribution(std::size_t n, std::size_t max_support);
  /// Strictly positive weights from {1..max_weight}, normalized.
  LuceWeights luce_weights(std::size_t n, int max_weight = 9);
  /// Entries from {0, 1/d, ..., 1}.
  std::vector<Rational> unit_interval_vector(std::size_t n, int d = 6);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Universe {a, b, c, ...} (then a1, b1, ... past 26).
Universe default_universe(std::size_t n);

}  // namespace margchoice
