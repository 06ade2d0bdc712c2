#pragma once

// Availability-only data: per-alternative availability xi(a) instead of a
// full menu distribution.

#include <vector>

#include "margchoice/domain.hpp"

namespace margchoice {

class AvailabilityVector {
 public:
  AvailabilityVector() = default;
  /// Throws InvalidParameters unless every entry is in [0,1].
  static AvailabilityVector make(std::vector<Rational> xi);
  /// xi_mu(a) = sum of mu(A) over A containing a.
  static AvailabilityVector induced(const MenuDistribution& mu);

  std::size_t n() const { return xi_.size(); }
  const Rational& operator[](std::size_t i) const { return xi_[i]; }
  const std::vector<Rational>& values() const { return xi_; }
  friend bool operator==(const AvailabilityVector&, const AvailabilityVector&) = default;

 private:
  std::vector<Rational> xi_;
};

/// lambda(a) <= xi(a) for every a. Throws UniverseMismatch.
bool potentially_rationalizable(const AvailabilityVector& xi, const ChoiceDistribution& lambda);

struct AvailabilityConstruction {
  MenuDistribution mu;
  std::size_t iterations = 0;  // mass shifts performed
};

/// Starts from lambda on singletons and repeatedly moves mass from the largest
/// support menu avoiding the first deficient alternative (lowest bitmask on
/// ties) to that menu plus the alternative, until xi_mu = xi.
/// Throws NotPotentiallyRationalizable; Internal if more than n 2^(n-1)
/// shifts are needed.
AvailabilityConstruction construct_mu(const AvailabilityVector& xi, const ChoiceDistribution& lambda);

}  // namespace margchoice
