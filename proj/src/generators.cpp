#include "margchoice/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace margchoice {

ChoiceDistribution gen_rum(const MenuDistribution& mu, const OrderDistribution& nu) {
  std::vector<Rational> lambda(mu.n(), Rational(0));
  for (const auto& [menu, w] : mu.support())
    for (const auto& [order, p] : nu.weights) {
      if (order.n() != mu.n()) throw Error(ErrorCode::UniverseMismatch, "order and menus disagree on n");
      lambda[order.top_of(menu)] += w * p;
    }
  return ChoiceDistribution::make(std::move(lambda));
}

MarginalDataset gen_luce(const Universe& universe, const MenuDistribution& mu, const LuceWeights& u) {
  return {universe, mu, luce_forward(mu, u)};
}

StarDataset gen_ircs(const Universe& universe, const MenuDistribution& mu, const PreferenceOrder& order,
                     const std::vector<Rational>& gamma) {
  const auto star = ircs_forward(mu, order, gamma);
  std::vector<Rational> lambda(star.values().begin(), star.values().end() - 1);
  return make_star_dataset(universe, mu, std::move(lambda));
}

namespace {

Rational max_over(Menu menu, const std::function<Rational(std::size_t)>& f) {
  auto items = menu.elements();
  Rational best = f(items.front());
  for (std::size_t a : items) best = std::max(best, f(a));
  return best;
}

}  // namespace

Rational tsc_menu_utility(const TscAgent& agent, Menu menu) {
  return max_over(menu, [&](std::size_t a) { return Rational(agent.u[a] + agent.v[a]); }) -
         max_over(menu, [&](std::size_t a) { return agent.v[a]; });
}

MarginalDataset gen_tsc(const Universe& universe, const std::vector<std::pair<TscAgent, Rational>>& population,
                        const FeasibleCollection& collection) {
  const std::size_t n = universe.n();
  if (collection.n() != n) throw Error(ErrorCode::UniverseMismatch, "collection and universe disagree on n");
  Rational total = 0;
  std::map<Menu, Rational> mu;
  std::vector<Rational> lambda(n, Rational(0));
  for (const auto& [agent, weight] : population) {
    if (agent.u.size() != n || agent.v.size() != n)
      throw Error(ErrorCode::InvalidParameters, "agent utilities must have one entry per alternative");
    if (weight <= 0) throw Error(ErrorCode::InvalidParameters, "agent weights must be positive");
    total += weight;

    std::optional<Menu> chosen;
    Rational best;
    bool tie = false;
    for (Menu m : collection.menus()) {
      const Rational value = tsc_menu_utility(agent, m);
      if (!chosen || value > best) {
        chosen = m;
        best = value;
        tie = false;
      } else if (value == best) {
        tie = true;
      }
    }
    if (tie) throw Error(ErrorCode::TieEncountered, "agent is indifferent between feasible menus");

    std::optional<std::size_t> pick;
    tie = false;
    for (std::size_t a : chosen->elements()) {
      const Rational value = agent.u[a] + agent.v[a];
      if (!pick || value > agent.u[*pick] + agent.v[*pick]) {
        pick = a;
        tie = false;
      } else if (value == agent.u[*pick] + agent.v[*pick]) {
        tie = true;
      }
    }
    if (tie)
      throw Error(ErrorCode::TieEncountered, "agent is indifferent inside {" + universe.format(*chosen) + "}");
    mu[*chosen] += weight;
    lambda[*pick] += weight;
  }
  if (total != 1) throw Error(ErrorCode::InvalidParameters, "agent weights sum to " + to_string(total));
  return {universe, MenuDistribution::make(n, std::move(mu)), ChoiceDistribution::make(std::move(lambda))};
}

TscAgent committed_agent(std::size_t n, Menu menu, std::size_t a) {
  TscAgent agent{std::vector<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(0))};
  agent.u[a] = 2;
  for (std::size_t b = 0; b < n; ++b)
    if (!menu.contains(b)) agent.v[b] = 1;
  return agent;
}

std::size_t RandomSource::uniform_index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

bool RandomSource::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::vector<Rational> RandomSource::simplex(std::size_t k, int max_weight, bool positive) {
  std::uniform_int_distribution<int> draw(positive ? 1 : 0, max_weight);
  std::vector<long> w(k);
  long total = 0;
  do {
    total = 0;
    for (auto& x : w) total += x = draw(rng_);
  } while (total == 0);
  std::vector<Rational> out;
  out.reserve(k);
  for (long x : w) {
    Rational r(x, total);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

Menu RandomSource::menu(std::size_t n) {
  const Menu::Bits full = Menu::full(n).bits();
  return Menu(static_cast<Menu::Bits>(1 + uniform_index(full)));
}

MenuDistribution RandomSource::menu_distribution(std::size_t n, std::size_t max_support,
                                                 const std::vector<Menu>& forced) {
  std::set<Menu> menus(forced.begin(), forced.end());
  const std::size_t available = (std::size_t{1} << n) - 1;
  const std::size_t target = std::min(available, menus.size() + 1 + uniform_index(std::max<std::size_t>(max_support, 1)));
  while (menus.size() < target) menus.insert(menu(n));
  const auto weights = simplex(menus.size(), 9, true);
  std::map<Menu, Rational> mu;
  std::size_t i = 0;
  for (Menu m : menus) mu.emplace(m, weights[i++]);
  return MenuDistribution::make(n, std::move(mu));
}

PreferenceOrder RandomSource::order(std::size_t n) {
  std::vector<std::size_t> ranking(n);
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  std::shuffle(ranking.begin(), ranking.end(), rng_);
  return PreferenceOrder::make(std::move(ranking));
}

OrderDistribution RandomSource::order_distribution(std::size_t n, std::size_t max_support) {
  std::set<PreferenceOrder> orders;
  const std::size_t target = 1 + uniform_index(std::max<std::size_t>(max_support, 1));
  for (std::size_t tries = 0; orders.size() < target && tries < 10 * target; ++tries) orders.insert(order(n));
  const auto weights = simplex(orders.size(), 9, true);
  OrderDistribution nu;
  std::size_t i = 0;
  for (const auto& o : orders) nu.weights.emplace(o, weights[i++]);
  return nu;
}

LuceWeights RandomSource::luce_weights(std::size_t n, int max_weight) {
  return LuceWeights::make(simplex(n, max_weight, true));
}

std::vector<Rational> RandomSource::unit_interval_vector(std::size_t n, int d) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(static_cast<long>(uniform_index(static_cast<std::size_t>(d) + 1)), d);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

Universe default_universe(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label(1, static_cast<char>('a' + i % 26));
    if (i >= 26) label += std::to_string(i / 26);
    labels.push_back(label);
  }
  return Universe(std::move(labels));
}

}  // namespace margchoice
