#include "margchoice/games.hpp"

namespace margchoice {

CooperativeGame CooperativeGame::make(std::size_t n, std::vector<Rational> values) {
  if (n == 0 || n > kHardMaxAlternatives) throw Error(ErrorCode::InvalidParameters, "game size out of range");
  if (values.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::InvalidParameters, "game needs 2^n values");
  if (values.front() != 0) throw Error(ErrorCode::InvalidParameters, "v(empty) must be 0");
  if (values.back() != 1) throw Error(ErrorCode::InvalidParameters, "v(X) must be 1");
  CooperativeGame g;
  g.n_ = n;
  g.values_ = std::move(values);
  return g;
}

void zeta_transform(std::vector<Rational>& f, std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < size; ++mask)
      if (mask & bit) f[mask] += f[mask ^ bit];
  }
}

void mobius_transform(std::vector<Rational>& f, std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < size; ++mask)
      if (mask & bit) f[mask] -= f[mask ^ bit];
  }
}

CooperativeGame game_from_mu(const MenuDistribution& mu) {
  const std::size_t n = mu.n();
  std::vector<Rational> f(std::size_t{1} << n, Rational(0));
  for (const auto& [menu, w] : mu.support()) f[menu.bits()] = w;
  zeta_transform(f, n);
  return CooperativeGame::make(n, std::move(f));
}

MobiusVector mobius(const CooperativeGame& v) {
  MobiusVector out{v.n(), v.values()};
  mobius_transform(out.z, v.n());
  return out;
}

CooperativeGame game_from_mobius(const MobiusVector& z) {
  std::vector<Rational> f = z.z;
  zeta_transform(f, z.n);
  return CooperativeGame::make(z.n, std::move(f));
}

namespace {

// Calls fn(A, i, j) with the second difference for every A and i < j outside A.
template <typename Fn>
bool all_second_differences(const CooperativeGame& v, Fn&& fn) {
  const std::size_t n = v.n();
  const std::size_t size = std::size_t{1} << n;
  const auto& val = v.values();
  Rational diff;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bi = std::size_t{1} << i;
      if (a & bi) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t bj = std::size_t{1} << j;
        if (a & bj) continue;
        diff = val[a | bi | bj] - val[a | bi] - val[a | bj] + val[a];
        if (!fn(diff)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool strictly_supermodular_local(const CooperativeGame& v) {
  return all_second_differences(v, [](const Rational& d) { return d > 0; });
}

GameClassification classify(const CooperativeGame& v) {
  GameClassification c;
  const MobiusVector z = mobius(v);
  c.totally_monotone = true;
  for (const auto& value : z.z)
    if (value < 0) {
      c.totally_monotone = false;
      break;
    }
  c.convex = all_second_differences(v, [](const Rational& d) { return d >= 0; });
  if (c.totally_monotone) {
    c.strictly_convex = true;
    for (std::size_t i = 0; i < v.n() && c.strictly_convex; ++i)
      for (std::size_t j = i + 1; j < v.n(); ++j)
        if (z(Menu::of({i, j})) <= 0) {
          c.strictly_convex = false;
          break;
        }
  } else {
    c.strictly_convex = c.convex && strictly_supermodular_local(v);
  }
  return c;
}

}  // namespace margchoice
