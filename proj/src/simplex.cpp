#include "margchoice/simplex.hpp"

#include "margchoice/error.hpp"

namespace margchoice {

void LinearProgram::add_row(std::vector<Rational> coefficients, Rational value) {
  if (coefficients.size() != cols) throw Error(ErrorCode::Internal, "LP row has the wrong width");
  rows.push_back(std::move(coefficients));
  rhs.push_back(std::move(value));
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp) : m_(lp.rows.size()), n_(lp.cols), width_(lp.cols + lp.rows.size()) {
    t_.assign(m_, std::vector<Rational>(width_, Rational(0)));
    rhs_.resize(m_);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = lp.rhs[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
      rhs_[i] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
      t_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  // Minimizes cost . x over columns [0, allowed) starting from the current
  // basis. Returns false when unbounded.
  bool minimize(const std::vector<Rational>& cost, std::size_t allowed) {
    std::vector<Rational> reduced(width_);
    auto recompute = [&] {
      for (std::size_t j = 0; j < width_; ++j) {
        reduced[j] = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (sgn(t_[i][j]) != 0 && sgn(cost[basis_[i]]) != 0) reduced[j] -= cost[basis_[i]] * t_[i][j];
      }
    };
    recompute();
    while (true) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < allowed; ++j)
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter == width_) return true;

      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
      // Update reduced costs with the new pivot row.
      const Rational factor = reduced[enter];
      for (std::size_t j = 0; j < width_; ++j)
        if (sgn(t_[leave][j]) != 0) reduced[j] -= factor * t_[leave][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational inv = 1 / t_[row][col];
    auto& pr = t_[row];
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(pr[j]) != 0) pr[j] *= inv;
    rhs_[row] *= inv;
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(pr[j]) != 0) nonzero.push_back(j);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || sgn(t_[i][col]) == 0) continue;
      const Rational factor = t_[i][col];
      for (std::size_t j : nonzero) t_[i][j] -= factor * pr[j];
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  // After phase 1, pivots basic artificials out wherever the row still has a
  // nonzero structural entry. Rows without one are redundant and stay put.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    return x;
  }

  Rational artificial_total() const {
    Rational total = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) total += rhs_[i];
    return total;
  }

  std::size_t width() const { return width_; }
  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t m_, n_, width_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& program) {
  if (program.rows.size() != program.rhs.size()) throw Error(ErrorCode::Internal, "LP row/rhs mismatch");
  for (const auto& row : program.rows)
    if (row.size() != program.cols) throw Error(ErrorCode::Internal, "LP row has the wrong width");
  if (program.maximize && program.maximize->size() != program.cols)
    throw Error(ErrorCode::Internal, "LP objective has the wrong width");

  LpSolution out;
  Tableau tab(program);

  std::vector<Rational> phase1(tab.width(), Rational(0));
  for (std::size_t j = program.cols; j < tab.width(); ++j) phase1[j] = 1;
  tab.minimize(phase1, program.cols);
  if (tab.artificial_total() != 0) {
    out.status = LpStatus::Infeasible;
    out.pivots = tab.pivots();
    return out;
  }
  tab.drive_out_artificials();

  out.status = LpStatus::Optimal;
  if (program.maximize) {
    std::vector<Rational> cost(tab.width(), Rational(0));
    for (std::size_t j = 0; j < program.cols; ++j) cost[j] = -(*program.maximize)[j];
    if (!tab.minimize(cost, program.cols)) out.status = LpStatus::Unbounded;
  }
  out.x = tab.solution();
  if (program.maximize)
    for (std::size_t j = 0; j < program.cols; ++j) out.objective += (*program.maximize)[j] * out.x[j];
  out.pivots = tab.pivots();
  return out;
}

}  // namespace margchoice
