#include "margchoice/oracle.hpp"

#include "margchoice/simplex.hpp"

namespace margchoice {

bool oracle_rationalizable(const MarginalDataset& dataset) {
  const std::size_t n = dataset.n();
  const auto& support = dataset.mu.support();
  if (n > kOracleMaxAlternatives || support.size() > kOracleMaxSupport)
    throw Error(ErrorCode::TooLarge, "oracle limited to n <= 6 and at most 20 support menus");

  std::vector<std::pair<Menu, std::size_t>> vars;  // (A, a) for a in A
  for (const auto& [menu, w] : support)
    for (std::size_t a : menu.elements()) vars.emplace_back(menu, a);

  LinearProgram lp;
  lp.cols = vars.size();
  for (const auto& [menu, w] : support) {
    std::vector<Rational> row(vars.size(), Rational(0));
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (vars[j].first == menu) row[j] = 1;
    lp.add_row(std::move(row), Rational(1));
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Rational> row(vars.size(), Rational(0));
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (vars[j].second == a) row[j] = dataset.mu.weight(vars[j].first);
    lp.add_row(std::move(row), dataset.lambda[a]);
  }
  return solve_lp(lp).status == LpStatus::Optimal;
}

OracleRumResult oracle_rum(const MarginalDataset& dataset) {
  const std::size_t n = dataset.n();
  if (n > kOracleRumMaxAlternatives) throw Error(ErrorCode::TooLarge, "RUM oracle limited to n <= 5");
  const auto orders = all_orders(n);

  LinearProgram lp;
  lp.cols = orders.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Rational> row(orders.size(), Rational(0));
    for (std::size_t j = 0; j < orders.size(); ++j)
      for (const auto& [menu, w] : dataset.mu.support())
        if (menu.contains(a) && orders[j].top_of(menu) == a) row[j] += w;
    lp.add_row(std::move(row), dataset.lambda[a]);
  }
  lp.add_row(std::vector<Rational>(orders.size(), Rational(1)), Rational(1));

  OracleRumResult result;
  const auto solution = solve_lp(lp);
  if (solution.status != LpStatus::Optimal) return result;
  result.feasible = true;
  for (std::size_t j = 0; j < orders.size(); ++j)
    if (solution.x[j] > 0) result.nu.weights.emplace(orders[j], solution.x[j]);
  return result;
}

}  // namespace margchoice
