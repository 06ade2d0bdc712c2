#include <cstdlib>

#include "catch2/catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "margchoice/core_geometry.hpp"
#include "margchoice/generators.hpp"
#include "margchoice/ircs.hpp"
#include "margchoice/luce.hpp"

using namespace margchoice;
using namespace fixtures;

TEST_CASE("gen_rum on fixed datasets") {
  const auto u = abc();
  CHECK(gen_rum(doubleton_mu(), cyclic_nu()) == ChoiceDistribution::uniform(3));
  const auto v = game_from_mu(dense_mu());
  for (const auto& o : all_orders(3)) {
    const auto point = nu_of({{o, Rational(1)}});
    CHECK(gen_rum(dense_mu(), point) == extreme_point(v, o));
  }
  const auto nu = nu_of({{order_of(u, "a>b>c"), R("1/5")}, {order_of(u, "b>a>c"), R("4/5")}});
  CHECK(gen_rum(mu_of(u, {{"a,b,c", "1"}}), nu).values() == Rs({"1/5", "4/5", "0"}));
}

TEST_CASE("gen_luce and gen_ircs") {
  const auto u = abc();
  const auto d = gen_luce(u, doubleton_mu(), LuceWeights::make(Rs({"1/3", "1/3", "1/3"})));
  CHECK(d.lambda == ChoiceDistribution::uniform(3));
  CHECK(d.mu == doubleton_mu());

  const auto two = ab();
  const auto star = gen_ircs(two, symmetric_star().mu, order_of(two, "a>b"), Rs({"1/2", "2/3"}));
  CHECK(star.lambda == Rs({"1/3", "1/3"}));
  CHECK(star.outside == R("1/3"));
}

TEST_CASE("random draws are reproducible and well formed") {
  RandomSource a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + a.uniform_index(6);
    CHECK(n == 1 + b.uniform_index(6));
    const auto mu = a.menu_distribution(n, 5);
    CHECK(mu == b.menu_distribution(n, 5));
    const auto s = a.simplex(n, 9, true);
    CHECK(s == b.simplex(n, 9, true));
    Rational total = 0;
    for (const auto& x : s) {
      CHECK(x > 0);
      total += x;
    }
    CHECK(total == 1);
    const auto w = a.luce_weights(n);
    CHECK(w.values() == b.luce_weights(n).values());
    for (const auto& x : a.unit_interval_vector(n)) CHECK((x >= 0 && x <= 1));
    b.unit_interval_vector(n);
    const auto nu = a.order_distribution(n, 3);
    CHECK(nu.weights.size() <= 3);
    b.order_distribution(n, 3);
  }
  RandomSource c(1);
  const auto mu = c.menu_distribution(3, 2, {Menu::of({0, 1}), Menu::of({1, 2})});
  CHECK(mu.weight(Menu::of({0, 1})) > 0);
  CHECK(mu.weight(Menu::of({1, 2})) > 0);
}

TEST_CASE("default universe labels") {
  CHECK(default_universe(3).labels() == std::vector<std::string>{"a", "b", "c"});
  ::setenv("MARGINAL_CHOICE_MAX_N", "28", 1);
  const auto big = default_universe(28);
  ::unsetenv("MARGINAL_CHOICE_MAX_N");
  CHECK(big.label(25) == "z");
  CHECK(big.label(26) == "a1");
  CHECK(big.label(27) == "b1");
}
