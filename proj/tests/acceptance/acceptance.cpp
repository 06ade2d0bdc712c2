// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "../unit/fixtures.hpp"
#include "margchoice/availability.hpp"
#include "margchoice/core_geometry.hpp"
#include "margchoice/flow.hpp"
#include "margchoice/generators.hpp"
#include "margchoice/ircs.hpp"
#include "margchoice/luce.hpp"
#include "margchoice/oracle.hpp"
#include "margchoice/rum.hpp"
#include "margchoice/twostage.hpp"

using namespace margchoice;
using namespace fixtures;

namespace {

struct Check {
  std::size_t failures = 0;
  std::string first;

  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

// Simplex grid with step 1/k: all (i, j, k-i-j)/k.
std::vector<std::vector<Rational>> grid(long k) {
  std::vector<std::vector<Rational>> points;
  for (long i = 0; i <= k; ++i)
    for (long j = 0; i + j <= k; ++j)
      points.push_back({Rational(i) / k, Rational(j) / k, Rational(k - i - j) / k});
  return points;
}

std::vector<Menu> all_pairs(std::size_t n) {
  std::vector<Menu> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(Menu::of({a, b}));
  return pairs;
}

std::vector<Menu> singletons(std::size_t n) {
  std::vector<Menu> out;
  for (std::size_t a = 0; a < n; ++a) out.push_back(Menu::singleton(a));
  return out;
}

void two_order_distributions(Check& check) {
  const auto u = abc();
  const auto mu = doubleton_mu();
  const auto uniform = ChoiceDistribution::uniform(3);
  check(gen_rum(mu, cyclic_nu()) == uniform, "nu gives non-uniform lambda");
  check(gen_rum(mu, reverse_cyclic_nu()) == uniform, "nu' gives non-uniform lambda");
  const auto r = rum_rationalize(MarginalDataset{u, mu, uniform});
  check(r.feasible, "rum_rationalize rejects uniform lambda");
  check(r.feasible && gen_rum(mu, r.nu) == uniform, "returned nu does not reproduce lambda");
  const auto pi = induced_conditionals(mu, cyclic_nu());
  const auto pi_prime = induced_conditionals(mu, reverse_cyclic_nu());
  for (Menu m : all_pairs(3))
    check(pi.conditionals().at(m) != pi_prime.conditionals().at(m), "binary menu " + u.format(m) + " agrees");
}

void outside_option_pair(Check& check) {
  const auto d = symmetric_star();
  const auto u = d.universe;
  check(ircs_t_vector(d, order_of(u, "a>b")) == Rs({"1/2", "2/3"}), "t-vector for a>b");
  check(ircs_t_vector(d, order_of(u, "b>a")) == Rs({"1/2", "2/3"}), "t-vector for b>a");
  const auto solutions = ircs_rationalize(d);
  check(solutions.size() == 2, "expected 2 solutions");
  for (const auto& s : solutions) {
    const auto lambda = ircs_forward(d.mu, s.order, s.gamma);
    check(lambda.values() == Rs({"1/3", "1/3", "1/3"}), "forward map of " + s.order.format(u));
  }
  if (solutions.size() == 2) {
    check(solutions[0].gamma == Rs({"1/2", "2/3"}), "gamma for a>b");
    check(solutions[1].gamma == Rs({"2/3", "1/2"}), "gamma for b>a");
  }
}

void temptation_grid(Check& check) {
  const auto u = abc();
  const auto mu = temptation_mu();
  const auto collection = FeasibleCollection::parse(u, "{a};{c};{a,b};{b,c};{a,b,c}");
  const std::vector<Rational> marked = Rs({"1/4", "1/2", "1/4"});
  std::size_t tsc_accepted = 0, plain_accepted = 0;
  for (const auto& p : grid(20)) {
    const MarginalDataset d{u, mu, ChoiceDistribution::make(p)};
    const bool tsc = tsc_rationalize(d, collection).rationalizable;
    check(tsc == (p == marked), "TSC verdict at (" + to_string(p[0]) + ", " + to_string(p[1]) + ", " + to_string(p[2]) + ")");
    tsc_accepted += tsc;
    const bool region = p[0] >= R("1/4") && p[2] >= R("1/4") && p[0] + p[1] >= R("1/2") && p[1] + p[2] >= R("1/2");
    const bool plain = rationalize(d).feasible;
    check(plain == region, "plain verdict differs from the four inequalities");
    check(plain == oracle_rationalizable(d), "plain verdict differs from the oracle");
    plain_accepted += plain;
  }
  check(tsc_accepted == 1, "TSC accepted " + std::to_string(tsc_accepted) + " grid points");
  check(plain_accepted > 1, "shaded region is a single point");
}

void dense_core_grid(Check& check) {
  const auto mu = dense_mu();
  const auto v = game_from_mu(mu);
  const auto vertices = all_extreme_points(v);
  std::set<std::vector<Rational>> distinct;
  for (const auto& [o, p] : vertices) {
    distinct.insert(p.values());
    check(core_contains(v, p).member, "vertex outside the core");
  }
  check(vertices.size() == 6 && distinct.size() == 6, "expected 6 distinct vertices");
  for (const auto& p : grid(50)) {
    const auto lambda = ChoiceDistribution::make(p);
    check(core_contains(v, lambda).member == direct_in_core(mu, lambda), "core membership differs from inequalities");
  }
}

void three_way(Check& check) {
  RandomSource rs(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rs.uniform_index(5);
    const auto mu = rs.menu_distribution(n, 1 + rs.uniform_index(8));
    const auto lambda = rs.coin() ? gen_rum(mu, rs.order_distribution(n, 3)) : ChoiceDistribution::make(rs.simplex(n, 6));
    const MarginalDataset d{default_universe(n), mu, lambda};
    const bool core = core_contains(d).member;
    const bool flow = rationalize(d).feasible;
    const bool direct = oracle_rationalizable(d);
    const bool rum = oracle_rum(d).feasible;
    check(core == flow && flow == direct && direct == rum, "disagreement at trial " + std::to_string(trial));
  }
}

void luce_round_trip(Check& check) {
  RandomSource rs(2025);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rs.uniform_index(5);
    const auto mu = rs.menu_distribution(n, 1 + rs.uniform_index(5), all_pairs(n));
    const auto w = rs.luce_weights(n);
    const auto lambda = luce_forward(mu, w);
    check(interior_test(game_from_mu(mu), lambda), "forward image not interior");
    const auto inv = luce_invert(MarginalDataset{default_universe(n), mu, lambda});
    double gap = 0;
    for (std::size_t a = 0; a < n; ++a) gap = std::max(gap, std::fabs(inv.u[a] - w[a].get_d()));
    check(gap < 1e-8, "round-trip error at trial " + std::to_string(trial));
  }
}

void ircs_inverse(Check& check) {
  RandomSource rs(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rs.uniform_index(5);
    const auto mu = rs.menu_distribution(n, rs.uniform_index(5), singletons(n));
    const auto o = rs.order(n);
    const auto gamma = rs.unit_interval_vector(n);
    const auto d = gen_ircs(default_universe(n), mu, o, gamma);
    std::vector<Rational> along;
    for (std::size_t a : o.ranking()) along.push_back(gamma[a]);
    check(ircs_t_vector(d, o) == along, "t-vector differs from gamma at trial " + std::to_string(trial));
    bool found = false;
    for (const auto& s : ircs_rationalize(d)) found = found || (s.order == o && s.gamma == gamma);
    check(found, "generating pair missing at trial " + std::to_string(trial));
  }
}

void availability(Check& check) {
  RandomSource rs(2027);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rs.uniform_index(6);
    const auto lambda = ChoiceDistribution::make(rs.simplex(n, 6));
    std::vector<Rational> xi(n);
    for (std::size_t a = 0; a < n; ++a)
      xi[a] = lambda[a] + (1 - lambda[a]) * Rational(static_cast<long>(rs.uniform_index(7))) / 6;
    const auto built = construct_mu(AvailabilityVector::make(xi), lambda);
    check(built.iterations <= n * (std::size_t{1} << (n - 1)), "iteration bound exceeded");
    check(AvailabilityVector::induced(built.mu).values() == xi, "xi_mu differs from xi");
    check(rationalize(MarginalDataset{default_universe(n), built.mu, lambda}).feasible, "constructed mu not rationalizing");
  }
}

void inferior_sets(Check& check) {
  RandomSource rs(2028);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rs.uniform_index(3);
    const auto u = default_universe(n);
    Menu a = rs.menu(n);
    if (a == Menu::full(n)) a = a.without(rs.uniform_index(n));
    const Menu rest = a.complement(n);
    // Orders ranking every member of rest above every member of a.
    OrderDistribution nu;
    const std::size_t k = 1 + rs.uniform_index(3);
    const auto weights = rs.simplex(k, 5, true);
    for (std::size_t i = 0; i < k; ++i) {
      auto top = rs.order(n).ranking();
      std::vector<std::size_t> ranking;
      for (std::size_t x : top)
        if (rest.contains(x)) ranking.push_back(x);
      for (std::size_t x : top)
        if (a.contains(x)) ranking.push_back(x);
      nu.weights[PreferenceOrder::make(ranking)] += weights[i];
    }
    const auto mu = rs.menu_distribution(n, 3, all_pairs(n));
    const MarginalDataset d{u, mu, gen_rum(mu, nu)};
    check(inferior_test(d, a), "planted inferior set not detected at trial " + std::to_string(trial));
    const auto tight = core_contains(d).tight;
    for (std::size_t i = 0; i < tight.size(); ++i)
      for (std::size_t j = i + 1; j < tight.size(); ++j)
        check(tight[i].subset_of(tight[j]) || tight[j].subset_of(tight[i]), "tight sets not a chain");
    const auto chain = inferior_chain(d);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) check(chain[i].strict_subset_of(chain[i + 1]), "chain not nested");
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    OrderDistribution full;
    const auto orders = all_orders(n);
    for (const auto& o : orders) full.weights[o] = Rational(1) / static_cast<long>(orders.size());
    std::map<Menu, Rational> everything;
    for (Menu::Bits b = 1; b < (Menu::Bits{1} << n); ++b) everything[Menu(b)] = Rational(1) / ((1L << n) - 1);
    const auto mu = MenuDistribution::make(n, everything);
    const MarginalDataset d{default_universe(n), mu, gen_rum(mu, full)};
    for (Menu::Bits b = 1; b + 1 < (Menu::Bits{1} << n); ++b)
      check(!inferior_test(d, Menu(b)), "proper set inferior under full-support nu");
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two order distributions, one uniform marginal", 1, two_order_distributions},
      {2, "IRCS t-vectors and two solutions with an outside option", 1, outside_option_pair},
      {3, "TSC point and rationalizable region on a 0.05 grid", 5, temptation_grid},
      {4, "six vertices and core on a 0.02 grid", 5, dense_core_grid},
      {5, "core, flow, definition and RUM agree on 1000 datasets", 60, three_way},
      {6, "Luce round trip on 200 datasets", 60, luce_round_trip},
      {7, "IRCS inverse consistency on 200 datasets", 60, ircs_inverse},
      {8, "availability construction on 200 datasets", 30, availability},
      {9, "inferior sets under planted and full-support nu", 10, inferior_sets},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(seconds < c.limit_seconds, "over the time limit");
    const bool ok = check.failures == 0;
    failed += !ok;
    std::printf("%s  %d  %-62s %7.3f s", ok ? "PASS" : "FAIL", c.id, c.name, seconds);
    if (!ok) std::printf("  (%zu failures; first: %s)", check.failures, check.first.c_str());
    std::printf("\n");
  }
  return failed == 0 ? 0 : 1;
}
