#include "margchoice/rum.hpp"

#include <algorithm>

#include "margchoice/simplex.hpp"

namespace margchoice {

Rational OrderDistribution::probability_where(const std::function<bool(const PreferenceOrder&)>& pred) const {
  Rational total = 0;
  for (const auto& [order, w] : weights)
    if (pred(order)) total += w;
  return total;
}

std::vector<Rational> mix_extreme_points(const CooperativeGame& v, const OrderDistribution& nu) {
  std::vector<Rational> out(v.n(), Rational(0));
  for (const auto& [order, w] : nu.weights) {
    const auto p = marginal_contribution_vector(v, order);
    for (std::size_t a = 0; a < v.n(); ++a) out[a] += w * p[a];
  }
  return out;
}

StochasticChoiceFunction induced_conditionals(const MenuDistribution& mu, const OrderDistribution& nu) {
  std::map<Menu, ChoiceDistribution> conditionals;
  for (const auto& [menu, w] : mu.support()) {
    std::vector<Rational> p(mu.n(), Rational(0));
    for (const auto& [order, weight] : nu.weights) p[order.top_of(menu)] += weight;
    conditionals.emplace(menu, ChoiceDistribution::make(std::move(p)));
  }
  return StochasticChoiceFunction::make(std::move(conditionals));
}

RumResult rum_rationalize(const MarginalDataset& dataset, std::size_t order_cap) {
  const std::size_t n = dataset.n();
  if (n > order_cap)
    throw Error(ErrorCode::TooManyOrders, std::to_string(n) + " alternatives exceed the order enumeration cap of " +
                                              std::to_string(order_cap));
  const auto v = game_from_mu(dataset.mu);
  RumResult result;
  result.certificate = core_contains(v, dataset.lambda);
  if (!result.certificate.member) return result;

  const auto orders = all_orders(n);
  LinearProgram lp;
  lp.cols = orders.size();
  std::vector<std::vector<Rational>> columns;
  columns.reserve(orders.size());
  for (const auto& order : orders) columns.push_back(marginal_contribution_vector(v, order));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Rational> row(orders.size());
    for (std::size_t j = 0; j < orders.size(); ++j) row[j] = columns[j][a];
    lp.add_row(std::move(row), dataset.lambda[a]);
  }
  lp.add_row(std::vector<Rational>(orders.size(), Rational(1)), Rational(1));

  const auto solution = solve_lp(lp);
  if (solution.status != LpStatus::Optimal)
    throw Error(ErrorCode::Internal, "core member is not a convex combination of marginal-contribution vertices");
  for (std::size_t j = 0; j < orders.size(); ++j)
    if (solution.x[j] > 0) result.nu.weights.emplace(orders[j], solution.x[j]);

  if (mix_extreme_points(v, result.nu) != dataset.lambda.values())
    throw Error(ErrorCode::Internal, "order decomposition does not reproduce lambda");
  result.feasible = true;
  return result;
}

void require_pair_support(const MarginalDataset& dataset) {
  const std::size_t n = dataset.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (dataset.mu.weight(Menu::of({a, b})) == 0)
        throw Error(ErrorCode::PairSupportMissing,
                    "mu({" + dataset.universe.format(Menu::of({a, b})) + "}) = 0");
}

namespace {

CoreMembershipReport rationalizable_report(const MarginalDataset& dataset) {
  require_pair_support(dataset);
  auto report = core_contains(game_from_mu(dataset.mu), dataset.lambda);
  if (!report.member) {
    const auto& first = report.violated.front();
    throw Error(ErrorCode::NotRationalizable, "lambda({" + dataset.universe.format(first.menu) + "}) falls short of v_mu by " +
                                                  to_string(first.deficit));
  }
  return report;
}

}  // namespace

bool inferior_test(const MarginalDataset& dataset, Menu set) {
  if (set.empty() || !set.subset_of(dataset.universe.full()))
    throw Error(ErrorCode::InvalidParameters, "inferior_test needs a nonempty menu inside the universe");
  rationalizable_report(dataset);
  const auto v = game_from_mu(dataset.mu);
  return dataset.lambda.mass(set) == v(set);
}

std::vector<Menu> inferior_chain(const MarginalDataset& dataset) {
  auto report = rationalizable_report(dataset);
  std::vector<Menu> chain = report.tight;
  chain.push_back(dataset.universe.full());
  std::stable_sort(chain.begin(), chain.end(), [](Menu x, Menu y) { return x.size() < y.size(); });
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!chain[k - 1].strict_subset_of(chain[k]))
      throw Error(ErrorCode::Internal, "tight menus {" + dataset.universe.format(chain[k - 1]) + "} and {" +
                                           dataset.universe.format(chain[k]) + "} are not nested");
  return chain;
}

Rational superiority_bound(const MarginalDataset& dataset, Menu set) {
  if (set.empty() || !set.subset_of(dataset.universe.full()))
    throw Error(ErrorCode::InvalidParameters, "superiority_bound needs a nonempty menu inside the universe");
  const auto v = game_from_mu(dataset.mu);
  const auto report = core_contains(v, dataset.lambda);
  if (!report.member) throw Error(ErrorCode::NotRationalizable, "lambda is outside Core(v_mu)");
  const Rational denominator = 1 - v(set) - v(set.complement(dataset.n()));
  if (denominator <= 0)
    throw Error(ErrorCode::DegenerateDenominator,
                "no menu straddles {" + dataset.universe.format(set) + "} and its complement");
  return (dataset.lambda.mass(set) - v(set)) / denominator;
}

bool unique_rum(const MarginalDataset& dataset) {
  require_pair_support(dataset);
  const auto report = core_contains(game_from_mu(dataset.mu), dataset.lambda);
  if (!report.member) return false;
  const std::size_t n = dataset.n();
  // Tight proper menus form a chain, so their count is the number of distinct
  // sizes fixed; an edge of the core leaves exactly one size free.
  return report.tight.size() + 2 >= n;
}

}  // namespace margchoice
