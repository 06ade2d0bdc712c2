#include "catch2/catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "margchoice/core_geometry.hpp"
#include "margchoice/flow.hpp"
#include "margchoice/generators.hpp"
#include "margchoice/oracle.hpp"
#include "margchoice/rum.hpp"

using namespace margchoice;
using namespace fixtures;

TEST_CASE("oracle on small fixed datasets") {
  const auto u = abc();
  const MarginalDataset sym{u, doubleton_mu(), ChoiceDistribution::uniform(3)};
  CHECK(oracle_rationalizable(sym));
  const auto r = oracle_rum(sym);
  REQUIRE(r.feasible);
  CHECK(gen_rum(sym.mu, r.nu) == sym.lambda);
  CHECK(gen_rum(sym.mu, cyclic_nu()) == sym.lambda);

  const auto two = ab();
  const MarginalDataset none{two, mu_of(two, {{"a", "1"}}), ChoiceDistribution::point_mass(2, 1)};
  CHECK_FALSE(oracle_rationalizable(none));
  CHECK_FALSE(oracle_rum(none).feasible);

  CHECK(oracle_rationalizable(MarginalDataset{u, dense_mu(), ChoiceDistribution::uniform(3)}));

  const auto v = game_from_mu(dense_mu());
  const MarginalDataset vertex{u, dense_mu(), extreme_point(v, order_of(u, "c>a>b"))};
  const auto rv = oracle_rum(vertex);
  REQUIRE(rv.feasible);
  REQUIRE(rv.nu.weights.size() == 1);
  CHECK(rv.nu.weights.begin()->first == order_of(u, "c>a>b"));
}

TEST_CASE("oracle size limits") {
  std::vector<std::string> labels{"a", "b", "c", "d", "e", "f", "g"};
  const Universe seven(labels);
  const MarginalDataset big{seven, MenuDistribution::make(7, {{Menu::full(7), Rational(1)}}), ChoiceDistribution::uniform(7)};
  CHECK(code_of([&] { oracle_rationalizable(big); }) == ErrorCode::TooLarge);
  const auto six = default_universe(6);
  const MarginalDataset mid{six, MenuDistribution::make(6, {{Menu::full(6), Rational(1)}}), ChoiceDistribution::uniform(6)};
  CHECK(oracle_rationalizable(mid));
  CHECK(code_of([&] { oracle_rum(mid); }) == ErrorCode::TooLarge);

  std::map<Menu, Rational> many;
  for (Menu::Bits b = 1; b <= 21; ++b) many[Menu(b)] = Rational(1, 21);
  const MarginalDataset wide{default_universe(5), MenuDistribution::make(5, many), ChoiceDistribution::uniform(5)};
  CHECK(code_of([&] { oracle_rationalizable(wide); }) == ErrorCode::TooLarge);
}

TEST_CASE("oracles agree with the characterizations") {
  RandomSource rs(79);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rs.uniform_index(4);
    const auto mu = rs.menu_distribution(n, 6);
    const auto lambda = rs.coin() ? gen_rum(mu, rs.order_distribution(n, 3)) : ChoiceDistribution::make(rs.simplex(n, 4));
    const MarginalDataset d{default_universe(n), mu, lambda};
    const bool direct = oracle_rationalizable(d);
    CHECK(direct == rationalize(d).feasible);
    CHECK(direct == core_contains(d).member);
    const auto rum = oracle_rum(d);
    CHECK(rum.feasible == direct);
    if (rum.feasible) {
      ++feasible;
      CHECK(gen_rum(mu, rum.nu) == lambda);
    }
  }
  CHECK(feasible > 100);
}
