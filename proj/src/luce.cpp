#include "margchoice/luce.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "margchoice/core_geometry.hpp"

namespace margchoice {

LuceWeights LuceWeights::make(std::vector<Rational> u) {
  Rational total = 0;
  for (const auto& w : u) {
    if (w <= 0) throw Error(ErrorCode::InvalidParameters, "Luce weights must be strictly positive");
    total += w;
  }
  if (u.empty() || total != 1) throw Error(ErrorCode::InvalidParameters, "Luce weights must sum to 1");
  LuceWeights out;
  out.u_ = std::move(u);
  return out;
}

LuceWeights LuceWeights::normalized(std::vector<Rational> u) {
  Rational total = 0;
  for (const auto& w : u) {
    if (w <= 0) throw Error(ErrorCode::InvalidParameters, "Luce weights must be strictly positive");
    total += w;
  }
  for (auto& w : u) w /= total;
  return make(std::move(u));
}

ChoiceDistribution luce_forward(const MenuDistribution& mu, const LuceWeights& u) {
  if (u.n() != mu.n()) throw Error(ErrorCode::UniverseMismatch, "weights and menus use different universes");
  std::vector<Rational> lambda(mu.n(), Rational(0));
  for (const auto& [menu, w] : mu.support()) {
    Rational total = 0;
    for (std::size_t b : menu.elements()) total += u[b];
    const Rational scale = w / total;
    for (std::size_t a : menu.elements()) lambda[a] += scale * u[a];
  }
  return ChoiceDistribution::make(std::move(lambda));
}

std::vector<double> luce_forward(const MenuDistribution& mu, const std::vector<double>& u) {
  std::vector<double> lambda(mu.n(), 0.0);
  for (const auto& [menu, w] : mu.support()) {
    double total = 0;
    for (std::size_t b : menu.elements()) total += u[b];
    const double scale = w.get_d() / total;
    for (std::size_t a : menu.elements()) lambda[a] += scale * u[a];
  }
  return lambda;
}

void require_pair_coverage(const MarginalDataset& dataset) {
  const std::size_t n = dataset.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Menu pair = Menu::of({a, b});
      bool covered = false;
      for (const auto& [menu, w] : dataset.mu.support())
        if (pair.subset_of(menu)) {
          covered = true;
          break;
        }
      if (!covered)
        throw Error(ErrorCode::PairCoverageMissing, "no support menu contains {" + dataset.universe.format(pair) + "}");
    }
}

namespace {

double max_residual(const std::vector<double>& a, const std::vector<double>& b) {
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

void normalize(std::vector<double>& u) {
  const double total = std::accumulate(u.begin(), u.end(), 0.0);
  for (auto& x : u) x /= total;
}

std::optional<LuceWeights> snap(const MarginalDataset& dataset, const std::vector<double>& u, long max_den) {
  for (long den = 10; den <= max_den; den *= 10) {
    std::vector<Rational> q;
    q.reserve(u.size());
    for (double x : u) {
      Rational r = nearest_rational(x, den);
      if (r <= 0) break;
      q.push_back(r);
    }
    if (q.size() != u.size()) continue;
    auto candidate = LuceWeights::normalized(std::move(q));
    if (luce_forward(dataset.mu, candidate) == dataset.lambda) return candidate;
  }
  return std::nullopt;
}

}  // namespace

LuceInversion luce_invert(const MarginalDataset& dataset, const LuceOptions& options) {
  require_pair_coverage(dataset);
  const auto v = game_from_mu(dataset.mu);
  bool interior = false;
  try {
    interior = interior_test(v, dataset.lambda);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInCore) throw;
    throw Error(ErrorCode::NotInterior, "lambda lies outside Core(v_mu)");
  }
  if (!interior) throw Error(ErrorCode::NotInterior, "lambda lies on the boundary of Core(v_mu)");

  const std::size_t n = dataset.n();
  std::vector<double> target(n);
  for (std::size_t a = 0; a < n; ++a) target[a] = dataset.lambda[a].get_d();

  LuceInversion out;
  std::vector<double> u(n, 1.0 / static_cast<double>(n));
  std::vector<double> image = luce_forward(dataset.mu, u);
  double residual = max_residual(image, target);
  double step = 1.0;
  std::size_t iter = 0;
  std::vector<double> candidate(n);
  for (; iter < options.max_iterations && residual >= options.tolerance; ++iter) {
    bool accepted = false;
    for (int attempt = 0; attempt < 8 && !accepted; ++attempt) {
      for (std::size_t a = 0; a < n; ++a) candidate[a] = u[a] * std::pow(target[a] / image[a], step);
      normalize(candidate);
      auto candidate_image = luce_forward(dataset.mu, candidate);
      const double candidate_residual = max_residual(candidate_image, target);
      if (candidate_residual < residual || attempt == 7) {
        // The undamped update always raises the Luce log-likelihood, so the
        // last attempt falls back to it even if the residual went up.
        if (attempt == 7 && !(candidate_residual < residual)) {
          for (std::size_t a = 0; a < n; ++a) candidate[a] = u[a] * target[a] / image[a];
          normalize(candidate);
          candidate_image = luce_forward(dataset.mu, candidate);
        }
        u = candidate;
        image = std::move(candidate_image);
        residual = max_residual(image, target);
        accepted = true;
        step = std::min(1.0, step * 2.0);
      } else {
        step *= 0.5;
      }
    }
  }
  out.u = u;
  out.residual = residual;
  out.iterations = iter;
  if (residual >= options.tolerance)
    throw Error(ErrorCode::NoConvergence, "residual " + std::to_string(residual) + " after " + std::to_string(iter) +
                                              " iterations");
  if (options.snap_to_rational) out.exact = snap(dataset, u, options.max_snap_denominator);
  return out;
}

bool exchangeable(const MenuDistribution& mu, std::size_t a, std::size_t b) {
  if (a == b) throw Error(ErrorCode::SameAlternative, "exchangeability needs two distinct alternatives");
  if (a >= mu.n() || b >= mu.n()) throw Error(ErrorCode::UnknownAlternative, "alternative index out of range");
  // Conditions with both sides outside the support hold trivially, so only
  // support menus holding exactly one of a, b need checking.
  for (const auto& [menu, w] : mu.support()) {
    if (menu.contains(a) == menu.contains(b)) continue;
    const Menu swapped = menu.contains(a) ? menu.without(a).with(b) : menu.without(b).with(a);
    if (mu.weight(swapped) != w) return false;
  }
  return true;
}

}  // namespace margchoice
