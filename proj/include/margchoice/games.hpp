#pragma once

// Cooperative games on the subset lattice of the universe, stored densely by
// bitmask. v(empty) = 0 and v(X) = 1 always hold.

#include <cstddef>
#include <vector>

#include "margchoice/domain.hpp"

namespace margchoice {

class CooperativeGame {
 public:
  CooperativeGame() = default;
  /// `values` has 2^n entries indexed by bitmask. Throws InvalidParameters
  /// unless v(empty) = 0 and v(X) = 1.
  static CooperativeGame make(std::size_t n, std::vector<Rational> values);

  std::size_t n() const { return n_; }
  const Rational& operator()(Menu set) const { return values_[set.bits()]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const CooperativeGame&, const CooperativeGame&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

/// Möbius transform (Harsanyi dividends): v(A) = sum_{B subset of A} z(B).
struct MobiusVector {
  std::size_t n = 0;
  std::vector<Rational> z;  // 2^n entries; z[0] == 0

  const Rational& operator()(Menu set) const { return z[set.bits()]; }
  friend bool operator==(const MobiusVector&, const MobiusVector&) = default;
};

struct GameClassification {
  bool totally_monotone = false;
  bool convex = false;
  bool strictly_convex = false;
};

/// In-place subset-sum (zeta) transform: f(A) <- sum_{B subset of A} f(B).
void zeta_transform(std::vector<Rational>& f, std::size_t n);
/// In-place inverse of zeta_transform.
void mobius_transform(std::vector<Rational>& f, std::size_t n);

/// v_mu(A) = sum_{B subset of A} mu(B).
CooperativeGame game_from_mu(const MenuDistribution& mu);

MobiusVector mobius(const CooperativeGame& v);

/// Cumulative reconstruction of the game from its transform.
CooperativeGame game_from_mobius(const MobiusVector& z);

/// Total monotonicity is z >= 0. Convexity uses the local second-difference
/// test v(A+i+j) - v(A+i) - v(A+j) + v(A) >= 0. For totally monotone games
/// strict convexity is z({a,b}) > 0 for every pair; otherwise it is the strict
/// version of the local test.
GameClassification classify(const CooperativeGame& v);

/// Strict local second-difference test, independent of the Möbius route.
bool strictly_supermodular_local(const CooperativeGame& v);

}  // namespace margchoice
