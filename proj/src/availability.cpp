#include "margchoice/availability.hpp"

#include <algorithm>
#include <map>

namespace margchoice {

AvailabilityVector AvailabilityVector::make(std::vector<Rational> xi) {
  for (const auto& x : xi)
    if (x < 0 || x > 1) throw Error(ErrorCode::InvalidParameters, "availability " + to_string(x) + " outside [0,1]");
  AvailabilityVector v;
  v.xi_ = std::move(xi);
  return v;
}

AvailabilityVector AvailabilityVector::induced(const MenuDistribution& mu) {
  std::vector<Rational> xi(mu.n(), Rational(0));
  for (const auto& [menu, w] : mu.support())
    for (std::size_t a : menu.elements()) xi[a] += w;
  return make(std::move(xi));
}

bool potentially_rationalizable(const AvailabilityVector& xi, const ChoiceDistribution& lambda) {
  if (xi.n() != lambda.n()) throw Error(ErrorCode::UniverseMismatch, "xi and lambda disagree on n");
  for (std::size_t a = 0; a < xi.n(); ++a)
    if (lambda[a] > xi[a]) return false;
  return true;
}

AvailabilityConstruction construct_mu(const AvailabilityVector& xi, const ChoiceDistribution& lambda) {
  const std::size_t n = xi.n();
  if (!potentially_rationalizable(xi, lambda)) {
    std::size_t a = 0;
    while (lambda[a] <= xi[a]) ++a;
    throw Error(ErrorCode::NotPotentiallyRationalizable, "alternative " + std::to_string(a) + " has lambda " +
                                                             to_string(lambda[a]) + " above availability " +
                                                             to_string(xi[a]));
  }
  std::map<Menu, Rational> mu;
  std::vector<Rational> have(n, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    if (lambda[a] > 0) {
      mu[Menu::singleton(a)] = lambda[a];
      have[a] = lambda[a];
    }

  const std::size_t limit = n << (n - 1);
  std::size_t iterations = 0;
  for (std::size_t i = 0; i < n;) {
    if (have[i] == xi[i]) {
      ++i;
      continue;
    }
    auto best = mu.end();
    for (auto it = mu.begin(); it != mu.end(); ++it)
      if (!it->first.contains(i) && (best == mu.end() || it->second > best->second)) best = it;
    if (best == mu.end())
      throw Error(ErrorCode::Internal, "no support menu avoids a deficient alternative");
    const Menu from = best->first;
    const Rational t = std::min<Rational>(best->second, xi[i] - have[i]);
    best->second -= t;
    if (best->second == 0) mu.erase(best);
    mu[from.with(i)] += t;
    have[i] += t;
    if (++iterations > limit)
      throw Error(ErrorCode::Internal, "mass shifting exceeded n 2^(n-1) iterations");
  }
  return {MenuDistribution::make(n, std::move(mu)), iterations};
}

}  // namespace margchoice
