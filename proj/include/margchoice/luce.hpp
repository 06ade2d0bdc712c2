#pragma once

// Luce model on marginal data: forward map, inversion, exchangeability.

#include <optional>
#include <vector>

#include "margchoice/domain.hpp"

namespace margchoice {

/// Strictly positive weights summing to one.
class LuceWeights {
 public:
  LuceWeights() = default;
  /// Throws InvalidParameters on non-positive entries or a sum other than 1.
  static LuceWeights make(std::vector<Rational> u);
  /// Scales a positive vector to sum to one.
  static LuceWeights normalized(std::vector<Rational> u);

  std::size_t n() const { return u_.size(); }
  const Rational& operator[](std::size_t i) const { return u_[i]; }
  const std::vector<Rational>& values() const { return u_; }

 private:
  std::vector<Rational> u_;
};

/// lambda(a) = sum_{A containing a} mu(A) u(a) / u(A), exactly.
ChoiceDistribution luce_forward(const MenuDistribution& mu, const LuceWeights& u);
/// Floating-point version used inside the inversion.
std::vector<double> luce_forward(const MenuDistribution& mu, const std::vector<double>& u);

struct LuceOptions {
  double tolerance = 1e-10;         // max-norm residual on lambda
  std::size_t max_iterations = 100000;
  bool snap_to_rational = true;     // try low-denominator exact weights
  long max_snap_denominator = 1000000;
};

struct LuceInversion {
  std::vector<double> u;
  double residual = 0;  // max_a |luce_forward(mu, u)(a) - lambda(a)|
  std::size_t iterations = 0;
  /// Exact weights whose forward image equals lambda exactly, when the
  /// rounding pass finds them.
  std::optional<LuceWeights> exact;
};

/// Every pair of alternatives lies in some support menu of mu.
/// Throws PairCoverageMissing naming an uncovered pair.
void require_pair_coverage(const MarginalDataset& dataset);

/// Recovers the unique Luce weights for lambda in the relative interior of
/// Core(v_mu). Multiplicative fixed point u <- normalize(u * lambda / lambda_hat)
/// with step halving when the residual fails to drop.
/// Throws PairCoverageMissing, NotInterior, NoConvergence.
LuceInversion luce_invert(const MarginalDataset& dataset, const LuceOptions& options = {});

/// mu(A + a) == mu(A + b) for every A avoiding a and b. Throws SameAlternative.
bool exchangeable(const MenuDistribution& mu, std::size_t a, std::size_t b);

}  // namespace margchoice
