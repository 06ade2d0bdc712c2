#include "margchoice/core_geometry.hpp"

#include <set>

namespace margchoice {

namespace {

// lambda(A) for every bitmask, built incrementally from the lowest set bit.
std::vector<Rational> subset_masses(const ChoiceDistribution& lambda) {
  const std::size_t n = lambda.n();
  std::vector<Rational> mass(std::size_t{1} << n, Rational(0));
  for (std::size_t mask = 1; mask < mass.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    mass[mask] = mass[mask & (mask - 1)] + lambda[low];
  }
  return mass;
}

}  // namespace

CoreMembershipReport core_contains(const CooperativeGame& v, const ChoiceDistribution& lambda) {
  if (lambda.n() != v.n())
    throw Error(ErrorCode::UniverseMismatch, "choice distribution over " + std::to_string(lambda.n()) +
                                                 " alternatives, game over " + std::to_string(v.n()));
  CoreMembershipReport report;
  const auto mass = subset_masses(lambda);
  const std::size_t full = mass.size() - 1;
  Rational slack;
  for (std::size_t mask = 1; mask < full; ++mask) {
    slack = mass[mask] - v.values()[mask];
    const Menu menu(static_cast<Menu::Bits>(mask));
    if (slack < 0)
      report.violated.push_back({menu, -slack});
    else if (slack == 0)
      report.tight.push_back(menu);
    if (!report.min_slack || slack < report.min_slack->second) report.min_slack.emplace(menu, slack);
  }
  report.member = report.violated.empty();
  return report;
}

CoreMembershipReport core_contains(const MarginalDataset& dataset) {
  const auto v = game_from_mu(dataset.mu);
  auto report = core_contains(v, dataset.lambda);

  // Dual family: lambda(A) <= mass of menus meeting A.
  const auto mass = subset_masses(dataset.lambda);
  bool dual_ok = true;
  for (std::size_t mask = 1; mask < mass.size() && dual_ok; ++mask) {
    const Menu a(static_cast<Menu::Bits>(mask));
    Rational hit = 0;
    for (const auto& [menu, w] : dataset.mu.support())
      if (menu.intersects(a)) hit += w;
    if (mass[mask] > hit) dual_ok = false;
  }
  if (dual_ok != report.member)
    throw Error(ErrorCode::Internal, "lower and upper inequality families disagree on core membership");
  return report;
}

std::vector<Rational> marginal_contribution_vector(const CooperativeGame& v, const PreferenceOrder& order) {
  if (order.n() != v.n()) throw Error(ErrorCode::UniverseMismatch, "order and game sizes differ");
  std::vector<Rational> p(v.n());
  Menu below;
  const auto& ranking = order.ranking();
  for (auto it = ranking.rbegin(); it != ranking.rend(); ++it) {
    const Menu with_a = below.with(*it);
    p[*it] = v(with_a) - v(below);
    below = with_a;
  }
  return p;
}

ChoiceDistribution extreme_point(const CooperativeGame& v, const PreferenceOrder& order) {
  if (!classify(v).convex) throw Error(ErrorCode::NotConvex, "extreme-point formula requires a convex game");
  return ChoiceDistribution::make(marginal_contribution_vector(v, order));
}

std::map<PreferenceOrder, ChoiceDistribution> all_extreme_points(const CooperativeGame& v, std::size_t order_cap) {
  if (v.n() > order_cap)
    throw Error(ErrorCode::TooManyOrders, std::to_string(v.n()) + " alternatives exceed the order enumeration cap of " +
                                              std::to_string(order_cap));
  const auto cls = classify(v);
  if (!cls.convex) throw Error(ErrorCode::NotConvex, "extreme-point formula requires a convex game");
  std::map<PreferenceOrder, ChoiceDistribution> out;
  for (const auto& order : all_orders(v.n()))
    out.emplace(order, ChoiceDistribution::make(marginal_contribution_vector(v, order)));
  if (cls.strictly_convex) {
    std::set<std::vector<Rational>> distinct;
    for (const auto& [order, p] : out) distinct.insert(p.values());
    if (distinct.size() != out.size())
      throw Error(ErrorCode::Internal, "strictly convex game produced coinciding extreme points");
  }
  return out;
}

bool interior_test(const CooperativeGame& v, const ChoiceDistribution& lambda) {
  const auto report = core_contains(v, lambda);
  if (!report.member) throw Error(ErrorCode::NotInCore, "choice distribution violates a core constraint");
  return report.tight.empty();
}

}  // namespace margchoice
