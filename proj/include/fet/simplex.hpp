#pragma once

#include <cstdint>
#include <vector>

#include "fet/common.hpp"

namespace fet {

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Dense two-phase tableau simplex for  min c.x  s.t.  A x <= b, x >= 0.
// Scalar is double (tolerance 1e-9) or an exact rational type (tolerance 0,
// Bland's rule throughout). Duals follow the convention y <= 0 for <= rows,
// so the dual objective is b.y.
template <typename Scalar>
class DenseSimplex {
 public:
  DenseSimplex(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b,
               std::vector<Scalar> c, Scalar tol)
      : rows_(a.size()),
        cols_(c.size()),
        a_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)),
        tol_(tol) {
    for (const auto& row : a_) {
      if (row.size() != static_cast<std::size_t>(cols_)) {
        throw BadParams("ragged constraint matrix");
      }
    }
    if (b_.size() != static_cast<std::size_t>(rows_)) throw BadParams("rhs length mismatch");
  }

  // feasibility_only stops after phase one.
  LpStatus solve(bool feasibility_only = false);

  const Scalar& objective() const { return objective_; }
  // Structural variable values.
  std::vector<Scalar> primal() const;
  // One dual value per constraint row (y_i = -reduced cost of slack i).
  std::vector<Scalar> duals() const;

 private:
  Scalar zero() const { return Scalar(0); }
  bool is_negative(const Scalar& v) const { return v < -tol_; }
  bool is_positive(const Scalar& v) const { return v > tol_; }

  void build_tableau();
  void compute_reduced_costs(const std::vector<Scalar>& costs);
  int pick_entering(bool bland) const;
  int pick_leaving(int enter) const;
  void pivot(int row, int enter);
  LpStatus run_phase(const std::vector<Scalar>& costs, bool bland_only);

  int rows_;
  int cols_;
  std::vector<std::vector<Scalar>> a_;
  std::vector<Scalar> b_;
  std::vector<Scalar> c_;
  Scalar tol_;

  int width_ = 0;           // structural + slack + artificial
  int art_begin_ = 0;
  std::vector<std::vector<Scalar>> t_;  // rows_ x width_
  std::vector<Scalar> rhs_;
  std::vector<int> basis_;
  std::vector<Scalar> reduced_;  // current reduced-cost row
  Scalar objective_{};
  bool exclude_artificials_ = false;
};

template <typename Scalar>
void DenseSimplex<Scalar>::build_tableau() {
  int artificials = 0;
  for (int i = 0; i < rows_; ++i) {
    if (b_[i] < zero()) ++artificials;
  }
  art_begin_ = cols_ + rows_;
  width_ = cols_ + rows_ + artificials;
  t_.assign(rows_, std::vector<Scalar>(width_, zero()));
  rhs_ = b_;
  basis_.assign(rows_, -1);
  int art = art_begin_;
  for (int i = 0; i < rows_; ++i) {
    bool flip = b_[i] < zero();
    for (int j = 0; j < cols_; ++j) {
      t_[i][j] = flip ? -a_[i][j] : a_[i][j];
    }
    t_[i][cols_ + i] = flip ? Scalar(-1) : Scalar(1);
    if (flip) rhs_[i] = -b_[i];
    if (flip) {
      t_[i][art] = Scalar(1);
      basis_[i] = art++;
    } else {
      basis_[i] = cols_ + i;
    }
  }
}

template <typename Scalar>
void DenseSimplex<Scalar>::compute_reduced_costs(const std::vector<Scalar>& costs) {
  reduced_ = costs;
  objective_ = zero();
  for (int i = 0; i < rows_; ++i) {
    const Scalar& cb = costs[basis_[i]];
    if (cb == zero()) continue;
    for (int j = 0; j < width_; ++j) {
      reduced_[j] -= cb * t_[i][j];
    }
    objective_ += cb * rhs_[i];
  }
}

template <typename Scalar>
int DenseSimplex<Scalar>::pick_entering(bool bland) const {
  int limit = exclude_artificials_ ? art_begin_ : width_;
  int best = -1;
  for (int j = 0; j < limit; ++j) {
    if (!is_negative(reduced_[j])) continue;
    if (bland) return j;
    if (best == -1 || reduced_[j] < reduced_[best]) best = j;
  }
  return best;
}

template <typename Scalar>
int DenseSimplex<Scalar>::pick_leaving(int enter) const {
  int best = -1;
  for (int i = 0; i < rows_; ++i) {
    if (!is_positive(t_[i][enter])) continue;
    if (best == -1) {
      best = i;
      continue;
    }
    // Compare rhs_i / t_i vs rhs_best / t_best without dividing.
    Scalar lhs = rhs_[i] * t_[best][enter];
    Scalar rhs = rhs_[best] * t_[i][enter];
    if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[best])) best = i;
  }
  return best;
}

template <typename Scalar>
void DenseSimplex<Scalar>::pivot(int row, int enter) {
  Scalar p = t_[row][enter];
  for (int j = 0; j < width_; ++j) t_[row][j] = t_[row][j] / p;
  rhs_[row] = rhs_[row] / p;
  t_[row][enter] = Scalar(1);
  for (int i = 0; i < rows_; ++i) {
    if (i == row) continue;
    Scalar factor = t_[i][enter];
    if (factor == zero()) continue;
    for (int j = 0; j < width_; ++j) t_[i][j] -= factor * t_[row][j];
    rhs_[i] -= factor * rhs_[row];
    t_[i][enter] = zero();
  }
  Scalar rfactor = reduced_[enter];
  if (rfactor != zero()) {
    for (int j = 0; j < width_; ++j) reduced_[j] -= rfactor * t_[row][j];
    objective_ += rfactor * rhs_[row];
    reduced_[enter] = zero();
  }
  basis_[row] = enter;
}

template <typename Scalar>
LpStatus DenseSimplex<Scalar>::run_phase(const std::vector<Scalar>& costs, bool bland_only) {
  compute_reduced_costs(costs);
  long iterations = 0;
  long bland_after = 64L * (rows_ + width_);
  long hard_cap = 20000L * (rows_ + width_) + 100000L;
  while (true) {
    bool bland = bland_only || iterations > bland_after;
    int enter = pick_entering(bland);
    if (enter < 0) return LpStatus::Optimal;
    int leave = pick_leaving(enter);
    if (leave < 0) return LpStatus::Unbounded;
    pivot(leave, enter);
    if (++iterations > hard_cap) throw InternalError("simplex iteration cap hit");
  }
}

template <typename Scalar>
LpStatus DenseSimplex<Scalar>::solve(bool feasibility_only) {
  build_tableau();
  bool exact = tol_ == zero();
  if (art_begin_ < width_) {
    std::vector<Scalar> phase1(width_, zero());
    for (int j = art_begin_; j < width_; ++j) phase1[j] = Scalar(1);
    LpStatus st = run_phase(phase1, exact);
    if (st == LpStatus::Unbounded) throw InternalError("phase one unbounded");
    // Feasible iff the artificial total can be driven to (numerical) zero.
    Scalar feas_tol = exact ? zero() : Scalar(1e-9);
    if (objective_ > feas_tol) return LpStatus::Infeasible;
    // Drive leftover artificials out of the basis where possible.
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (int j = 0; j < art_begin_; ++j) {
        if (is_positive(t_[i][j]) || is_negative(t_[i][j])) {
          pivot(i, j);
          break;
        }
      }
    }
  }
  if (feasibility_only) {
    objective_ = zero();
    return LpStatus::Optimal;
  }
  // Phase two: artificial columns are barred from entering.
  exclude_artificials_ = true;
  std::vector<Scalar> phase2(width_, zero());
  for (int j = 0; j < cols_; ++j) phase2[j] = c_[j];
  LpStatus st = run_phase(phase2, exact);
  if (st == LpStatus::Unbounded) return st;
  return LpStatus::Optimal;
}

template <typename Scalar>
std::vector<Scalar> DenseSimplex<Scalar>::primal() const {
  std::vector<Scalar> x(cols_, Scalar(0));
  for (int i = 0; i < rows_; ++i) {
    if (basis_[i] < cols_) x[basis_[i]] = rhs_[i];
  }
  return x;
}

template <typename Scalar>
std::vector<Scalar> DenseSimplex<Scalar>::duals() const {
  std::vector<Scalar> y(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i) {
    y[i] = -reduced_[cols_ + i];
  }
  return y;
}

}  // namespace fet
