#include "margchoice/ircs.hpp"

#include <map>
#include <optional>

namespace margchoice {

ChoiceDistribution StarDataset::lambda_star() const {
  std::vector<Rational> p = lambda;
  p.push_back(outside);
  return ChoiceDistribution::make(std::move(p));
}

StarDataset make_star_dataset(Universe universe, MenuDistribution mu, std::vector<Rational> lambda) {
  if (mu.n() != universe.n() || lambda.size() != universe.n())
    throw Error(ErrorCode::UniverseMismatch, "menus, shares and alternatives disagree on n");
  Rational total = 0;
  for (const auto& p : lambda) {
    if (p < 0) throw Error(ErrorCode::NegativeProbability, "lambda entry " + to_string(p));
    total += p;
  }
  if (total > 1) throw Error(ErrorCode::SumNotOne, "lambda over X sums to " + to_string(total) + ", above 1");
  StarDataset d{std::move(universe), std::move(mu), std::move(lambda), 1 - total};
  return d;
}

StarDataset validate_star_dataset(const RawDataset& raw) {
  for (const auto& label : raw.alternatives)
    if (label == kOutsideOptionLabel)
      throw Error(ErrorCode::InvalidUniverse, "\"x*\" is the implicit outside option, not an alternative");
  Universe universe(raw.alternatives);
  auto mu = parse_menu_weights(universe, raw.mu);

  std::vector<std::pair<std::string, std::string>> entries;
  std::optional<Rational> stated_outside;
  for (const auto& entry : raw.lambda) {
    if (entry.first != kOutsideOptionLabel) {
      entries.push_back(entry);
      continue;
    }
    try {
      stated_outside = parse_rational(entry.second);
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "lambda[\"x*\"]: " + e.detail());
    }
  }
  auto lambda = parse_label_weights(universe, entries, "lambda");
  StarDataset d;
  try {
    d = make_star_dataset(std::move(universe), std::move(mu), std::move(lambda));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("lambda: ") + e.detail());
  }
  if (stated_outside && *stated_outside != d.outside)
    throw Error(ErrorCode::SumNotOne, "lambda[\"x*\"] = " + to_string(*stated_outside) + " but 1 - sum over X = " +
                                          to_string(d.outside));
  return d;
}

void require_singleton_support(const StarDataset& dataset) {
  for (std::size_t a = 0; a < dataset.n(); ++a)
    if (dataset.mu.weight(Menu::singleton(a)) == 0)
      throw Error(ErrorCode::SingletonSupportMissing, "mu({" + dataset.universe.label(a) + ", x*}) = 0");
}

std::vector<Rational> ircs_t_vector(const StarDataset& dataset, const PreferenceOrder& order) {
  require_singleton_support(dataset);
  const std::size_t n = dataset.n();
  if (order.n() != n) throw Error(ErrorCode::UniverseMismatch, "order and dataset disagree on n");
  std::vector<Rational> t;
  t.reserve(n);
  Menu above;  // A_{k-1}
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t a = order.ranking()[k];
    // Aggregate mu by B = A* meet A_{k-1} over menus containing a_k, then sum
    // over B with weight prod_{a_i in B} (1 - t_i).
    std::map<Menu, Rational> by_b;
    for (const auto& [menu, w] : dataset.mu.support())
      if (menu.contains(a)) by_b[menu & above] += w;
    Rational denominator = 0;
    for (const auto& [b, mass] : by_b) {
      Rational weight = mass;
      for (std::size_t i = 0; i < k; ++i)
        if (b.contains(order.ranking()[i])) weight *= 1 - t[i];
      denominator += weight;
    }
    if (denominator <= 0) break;
    t.push_back(dataset.lambda[a] / denominator);
    above = above.with(a);
  }
  return t;
}

ChoiceDistribution ircs_forward(const MenuDistribution& mu, const PreferenceOrder& order,
                                const std::vector<Rational>& gamma) {
  const std::size_t n = mu.n();
  if (order.n() != n || gamma.size() != n)
    throw Error(ErrorCode::UniverseMismatch, "order, gamma and menus disagree on n");
  for (const auto& g : gamma)
    if (g < 0 || g > 1) throw Error(ErrorCode::InvalidParameters, "consideration probability outside [0,1]");
  std::vector<Rational> lambda(n + 1, Rational(0));
  for (const auto& [menu, w] : mu.support()) {
    Rational none_yet = w;  // mu(A) * prod over better members of (1 - gamma)
    for (std::size_t a : order.ranking()) {
      if (!menu.contains(a)) continue;
      lambda[a] += none_yet * gamma[a];
      none_yet *= 1 - gamma[a];
    }
    lambda[n] += none_yet;
  }
  return ChoiceDistribution::make(std::move(lambda));
}

std::vector<IrcsSolution> ircs_rationalize(const StarDataset& dataset, std::size_t order_cap) {
  require_singleton_support(dataset);
  const std::size_t n = dataset.n();
  if (n > order_cap)
    throw Error(ErrorCode::TooManyOrders, std::to_string(n) + " alternatives exceed the order enumeration cap of " +
                                              std::to_string(order_cap));
  const auto target = dataset.lambda_star();
  std::vector<IrcsSolution> out;
  for (const auto& order : all_orders(n)) {
    const auto t = ircs_t_vector(dataset, order);
    if (t.size() != n) continue;
    bool ok = true;
    for (const auto& x : t) ok = ok && x <= 1;
    if (!ok) continue;
    IrcsSolution s{order, std::vector<Rational>(n)};
    for (std::size_t k = 0; k < n; ++k) s.gamma[order.ranking()[k]] = t[k];
    if (ircs_forward(dataset.mu, order, s.gamma) != target)
      throw Error(ErrorCode::Internal, "t-recursion solution for " + order.format(dataset.universe) +
                                           " does not reproduce lambda");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace margchoice
