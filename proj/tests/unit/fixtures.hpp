#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "margchoice/domain.hpp"
#include "margchoice/games.hpp"
#include "margchoice/ircs.hpp"
#include "margchoice/rum.hpp"

namespace fixtures {

using namespace margchoice;

/// Code of the margchoice::Error thrown by `f`, if any.
inline std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Rational R(const char* text) { return parse_rational(text); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(R(s));
  return out;
}

inline Universe abc() { return Universe({"a", "b", "c"}); }
inline Universe ab() { return Universe({"a", "b"}); }

inline MenuDistribution mu_of(const Universe& u, std::initializer_list<std::pair<const char*, const char*>> items) {
  std::map<Menu, Rational> m;
  for (const auto& [key, value] : items) m[u.parse_menu(key)] = R(value);
  return MenuDistribution::make(u.n(), std::move(m));
}

inline MarginalDataset dataset(const Universe& u, const MenuDistribution& mu, std::vector<Rational> lambda) {
  return {u, mu, ChoiceDistribution::make(std::move(lambda))};
}

// Mass on all seven menus; the core is a hexagon.
inline MenuDistribution dense_mu() {
  return mu_of(abc(), {{"a", "0.1"}, {"b", "0.1"}, {"c", "0.15"}, {"a,b", "0.3"}, {"a,c", "0.1"}, {"b,c", "0.1"},
                       {"a,b,c", "0.15"}});
}

inline MenuDistribution doubleton_mu() {
  return mu_of(abc(), {{"a,b", "1/4"}, {"a,c", "1/4"}, {"b,c", "1/4"}, {"a,b,c", "1/4"}});
}

inline MenuDistribution temptation_mu() { return mu_of(abc(), {{"a", "1/4"}, {"c", "1/4"}, {"a,b", "1/4"}, {"b,c", "1/4"}}); }

inline PreferenceOrder order_of(const Universe& u, const std::string& text) {
  std::vector<std::size_t> ranking;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('>', start);
    if (end == std::string::npos) end = text.size();
    ranking.push_back(u.index_of(text.substr(start, end - start)));
    start = end + 1;
  }
  return PreferenceOrder::make(std::move(ranking));
}

inline OrderDistribution nu_of(std::map<PreferenceOrder, Rational> weights) {
  OrderDistribution nu;
  nu.weights = std::move(weights);
  return nu;
}

// The cyclic nu and its mirror give the same uniform marginal on doubleton_mu.
inline OrderDistribution cyclic_nu() {
  const auto u = abc();
  OrderDistribution nu;
  for (const char* o : {"a>b>c", "b>c>a", "c>a>b"}) nu.weights[order_of(u, o)] = R("1/3");
  return nu;
}
inline OrderDistribution reverse_cyclic_nu() {
  const auto u = abc();
  OrderDistribution nu;
  for (const char* o : {"a>c>b", "c>b>a", "b>a>c"}) nu.weights[order_of(u, o)] = R("1/3");
  return nu;
}

inline StarDataset symmetric_star() {
  const auto u = ab();
  return make_star_dataset(u, mu_of(u, {{"a", "1/3"}, {"b", "1/3"}, {"a,b", "1/3"}}), Rs({"1/3", "1/3"}));
}

// v(A) summed straight from the support of mu, no transforms.
inline Rational direct_v(const MenuDistribution& mu, Menu a) {
  Rational total = 0;
  for (const auto& [menu, w] : mu.support())
    if (menu.subset_of(a)) total += w;
  return total;
}

// Core membership from the definition of v, independent of the games module.
inline bool direct_in_core(const MenuDistribution& mu, const ChoiceDistribution& lambda) {
  const Menu::Bits full = Menu::full(mu.n()).bits();
  for (Menu::Bits b = 1; b < full; ++b)
    if (lambda.mass(Menu(b)) < direct_v(mu, Menu(b))) return false;
  return true;
}

}  // namespace fixtures
