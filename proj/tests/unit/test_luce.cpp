#include <cmath>

#include "catch2/catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "margchoice/core_geometry.hpp"
#include "margchoice/generators.hpp"
#include "margchoice/luce.hpp"
#include "margchoice/rum.hpp"

using namespace margchoice;
using namespace fixtures;

namespace {

double max_gap(const std::vector<double>& x, const std::vector<Rational>& y) {
  double gap = 0;
  for (std::size_t i = 0; i < x.size(); ++i) gap = std::max(gap, std::fabs(x[i] - y[i].get_d()));
  return gap;
}

Menu swapped(Menu m, std::size_t a, std::size_t b) {
  Menu out = m.without(a).without(b);
  if (m.contains(a)) out = out.with(b);
  if (m.contains(b)) out = out.with(a);
  return out;
}

// Averages mu with its image under the transposition of a and b.
MenuDistribution symmetrized(const MenuDistribution& mu, std::size_t a, std::size_t b) {
  std::map<Menu, Rational> w;
  for (const auto& [menu, p] : mu.support()) {
    w[menu] += p / 2;
    w[swapped(menu, a, b)] += p / 2;
  }
  return MenuDistribution::make(mu.n(), w);
}

std::vector<Menu> all_pairs(std::size_t n) {
  std::vector<Menu> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(Menu::of({a, b}));
  return pairs;
}

}  // namespace

TEST_CASE("Luce weights") {
  CHECK(LuceWeights::make(Rs({"1/4", "3/4"})).n() == 2);
  CHECK(code_of([] { LuceWeights::make(Rs({"0", "1"})); }) == ErrorCode::InvalidParameters);
  CHECK(code_of([] { LuceWeights::make(Rs({"1/2", "1/3"})); }) == ErrorCode::InvalidParameters);
  CHECK(LuceWeights::normalized(Rs({"2", "6"})).values() == Rs({"1/4", "3/4"}));
}

TEST_CASE("Luce forward map") {
  const auto u = abc();
  const auto w = LuceWeights::make(Rs({"0.2", "0.3", "0.5"}));
  CHECK(luce_forward(mu_of(u, {{"a,b,c", "1"}}), w).values() == w.values());
  CHECK(luce_forward(doubleton_mu(), LuceWeights::make(Rs({"1/3", "1/3", "1/3"}))) == ChoiceDistribution::uniform(3));

  const auto two = ab();
  const auto mu = mu_of(two, {{"a", "1/2"}, {"a,b", "1/2"}});
  CHECK(luce_forward(mu, LuceWeights::make(Rs({"1/2", "1/2"}))).values() == Rs({"3/4", "1/4"}));

  // Direct evaluation: lambda(a) = sum over menus holding a of mu(A) u(a)/u(A).
  const auto dense = dense_mu();
  const auto fig = luce_forward(dense, w);
  Rational expected = 0;
  for (const auto& [menu, p] : dense.support()) {
    if (!menu.contains(0)) continue;
    Rational total = 0;
    for (std::size_t x : menu.elements()) total += w[x];
    expected += p * w[0] / total;
  }
  CHECK(fig[0] == expected);
}

TEST_CASE("Luce inversion on exact examples") {
  const auto u = abc();
  auto inv = luce_invert(dataset(u, mu_of(u, {{"a,b,c", "1"}}), Rs({"0.2", "0.3", "0.5"})));
  REQUIRE(inv.exact);
  CHECK(inv.exact->values() == Rs({"0.2", "0.3", "0.5"}));
  CHECK(inv.residual < 1e-10);

  inv = luce_invert(MarginalDataset{u, doubleton_mu(), ChoiceDistribution::uniform(3)});
  REQUIRE(inv.exact);
  CHECK(inv.exact->values() == Rs({"1/3", "1/3", "1/3"}));

  const auto two = ab();
  inv = luce_invert(dataset(two, mu_of(two, {{"a", "1/2"}, {"a,b", "1/2"}}), Rs({"3/4", "1/4"})));
  REQUIRE(inv.exact);
  CHECK(inv.exact->values() == Rs({"1/2", "1/2"}));
  CHECK(max_gap(inv.u, Rs({"1/2", "1/2"})) < 1e-8);
}

TEST_CASE("Luce inversion errors") {
  const auto u = abc();
  CHECK(code_of([&] { luce_invert(MarginalDataset{u, temptation_mu(), ChoiceDistribution::uniform(3)}); }) ==
        ErrorCode::PairCoverageMissing);
  const auto v = game_from_mu(dense_mu());
  const MarginalDataset vertex{u, dense_mu(), extreme_point(v, order_of(u, "a>b>c"))};
  CHECK(code_of([&] { luce_invert(vertex); }) == ErrorCode::NotInterior);
  const MarginalDataset outside{u, dense_mu(), ChoiceDistribution::point_mass(3, 0)};
  CHECK(code_of([&] { luce_invert(outside); }) == ErrorCode::NotInterior);
  const MarginalDataset coverage{u, doubleton_mu(), ChoiceDistribution::uniform(3)};
  CHECK_NOTHROW(require_pair_coverage(coverage));

  LuceOptions tight;
  tight.max_iterations = 1;
  tight.snap_to_rational = false;
  const auto w = LuceWeights::make(Rs({"1/10", "3/10", "6/10"}));
  const MarginalDataset hard{u, dense_mu(), luce_forward(dense_mu(), w)};
  CHECK(code_of([&] { luce_invert(hard, tight); }) == ErrorCode::NoConvergence);
}

TEST_CASE("exchangeability") {
  CHECK(exchangeable(doubleton_mu(), 0, 1));
  CHECK(exchangeable(doubleton_mu(), 0, 2));
  CHECK(exchangeable(doubleton_mu(), 1, 2));
  CHECK_FALSE(exchangeable(dense_mu(), 0, 2));
  CHECK(exchangeable(dense_mu(), 0, 1));
  CHECK(exchangeable(mu_of(abc(), {{"a,b,c", "1"}}), 0, 2));
  CHECK(code_of([] { exchangeable(doubleton_mu(), 1, 1); }) == ErrorCode::SameAlternative);
}

TEST_CASE("Luce round trip, interior image and RUM compatibility") {
  RandomSource rs(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rs.uniform_index(4);
    const auto mu = rs.menu_distribution(n, 4, all_pairs(n));
    const auto w = rs.luce_weights(n);
    const auto lambda = luce_forward(mu, w);
    const MarginalDataset d{default_universe(n), mu, lambda};
    CHECK(interior_test(game_from_mu(mu), lambda));
    CHECK(rum_rationalize(d).feasible);
    const auto inv = luce_invert(d);
    CHECK(max_gap(inv.u, w.values()) < 1e-8);
    CHECK(inv.residual < 1e-10);
    if (inv.exact) CHECK(luce_forward(mu, *inv.exact) == lambda);
  }
}

TEST_CASE("exchangeable alternatives keep the order of their weights") {
  RandomSource rs(43);
  int strict = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rs.uniform_index(4);
    const std::size_t a = rs.uniform_index(n);
    std::size_t b = rs.uniform_index(n - 1);
    if (b >= a) ++b;
    const bool covered = rs.coin();
    const auto mu = symmetrized(rs.menu_distribution(n, 5, covered ? all_pairs(n) : std::vector<Menu>{}), a, b);
    REQUIRE(exchangeable(mu, a, b));
    const auto w = rs.luce_weights(n);
    const auto lambda = luce_forward(mu, w);
    if (w[a] >= w[b]) CHECK(lambda[a] >= lambda[b]);
    if (w[b] >= w[a]) CHECK(lambda[b] >= lambda[a]);
    if (covered) {
      CHECK((lambda[a] >= lambda[b]) == (w[a] >= w[b]));
      if (w[a] != w[b]) ++strict;
    }
  }
  CHECK(strict > 50);
}

TEST_CASE("without a shared competitor the converse ordering can fail") {
  const auto two = ab();
  const auto mu = mu_of(two, {{"a", "1/2"}, {"b", "1/2"}});
  REQUIRE(exchangeable(mu, 0, 1));
  const auto lambda = luce_forward(mu, LuceWeights::make(Rs({"3/4", "1/4"})));
  CHECK(lambda == ChoiceDistribution::uniform(2));
  CHECK(lambda[1] >= lambda[0]);
}
