#pragma once

// Brute-force verifiers built straight from the model definitions, for
// cross-checking the characterizations at tiny scale.

#include "margchoice/domain.hpp"
#include "margchoice/rum.hpp"

namespace margchoice {

inline constexpr std::size_t kOracleMaxAlternatives = 6;
inline constexpr std::size_t kOracleMaxSupport = 20;
inline constexpr std::size_t kOracleRumMaxAlternatives = 5;

/// Feasibility of pi(a|A) >= 0, sum_a pi(a|A) = 1 for every support menu,
/// sum_A mu(A) pi(a|A) = lambda(a). Throws TooLarge.
bool oracle_rationalizable(const MarginalDataset& dataset);

struct OracleRumResult {
  bool feasible = false;
  OrderDistribution nu;  // set iff feasible
};

/// Feasibility of lambda(a) = sum_{A containing a} mu(A) nu(orders ranking a
/// first in A) over nu in the simplex on all n! orders. Throws TooLarge.
OracleRumResult oracle_rum(const MarginalDataset& dataset);

}  // namespace margchoice
