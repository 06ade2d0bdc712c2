#pragma once

// Exact-rational simplex for small dense programs in equality form:
//   A x = b, x >= 0, optionally maximizing c . x.
// Two-phase tableau method with Bland's rule (lowest-index entering column,
// lowest-index leaving basic variable on ratio ties), so results are
// deterministic and the method cannot cycle.

#include <cstddef>
#include <optional>
#include <vector>

#include "margchoice/rational.hpp"

namespace margchoice {

struct LinearProgram {
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> rows;  // each of size `cols`
  std::vector<Rational> rhs;                // one per row
  std::optional<std::vector<Rational>> maximize;

  /// Appends a row `coefficients . x = value`.
  void add_row(std::vector<Rational> coefficients, Rational value);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;  // basic feasible solution when not Infeasible
  Rational objective = 0;   // c . x when an objective was given
  std::size_t pivots = 0;
};

LpSolution solve_lp(const LinearProgram& program);

}  // namespace margchoice
