// Two-phase primal simplex over a dense tableau. Entering and leaving
// variables follow Bland's rule (lowest index), which rules out cycling on
// the heavily degenerate difference-constraint programs built in lp.cpp.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "intershift/lp.hpp"

namespace intershift {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-7;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its last entry is minus the objective.
  double& cost(std::size_t c) { return at(rows_, c); }
  double objective() const { return -at(rows_, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Loads an objective over the columns and prices out the basic columns.
  void set_objective(const std::vector<double>& costs) {
    for (std::size_t c = 0; c <= cols_; ++c) at(rows_, c) = c < costs.size() ? costs[c] : 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double f = at(rows_, basis_[r]);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(rows_, c) -= f * at(r, c);
    }
  }

  // Returns false when the objective is unbounded below.
  bool optimize(const std::vector<bool>& allowed, std::size_t& pivots) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (allowed[c] && at(rows_, c) < -kCostTol) {
          enter = c;
          break;
        }
      }
      if (enter == cols_) return true;

      std::size_t leave = rows_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= kPivotTol) continue;
        const double ratio = rhs(r) / a;
        const bool tie = leave < rows_ && std::abs(ratio - best_ratio) <= 1e-12;
        if ((!tie && ratio < best_ratio) || (tie && basis_[r] < basis_[leave])) {
          best_ratio = std::min(best_ratio, ratio);
          leave = r;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& p) {
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    if (!p.nonneg[j]) throw std::invalid_argument("solve_lp requires nonnegative variables");
    if (p.absolute[j]) throw std::invalid_argument("solve_lp requires a linear objective");
  }

  LpResult result;
  const std::size_t n = p.num_vars;
  const std::size_t m = p.constraints.size();
  if (m == 0) {
    // Minimum at the origin unless some cost is negative.
    for (double c : p.objective) {
      if (c < 0.0) {
        result.status = LpStatus::kUnbounded;
        return result;
      }
    }
    result.status = LpStatus::kOptimal;
    result.x.assign(n, 0.0);
    return result;
  }

  // Normalise to nonnegative right-hand sides and count auxiliary columns.
  struct Row {
    std::vector<double> a;
    Relation rel;
    double b;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  std::size_t slacks = 0, artificials = 0;
  for (const auto& c : p.constraints) {
    Row r{c.coefficients, c.relation, c.rhs};
    if (r.b < 0.0) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      if (r.rel == Relation::kLessEqual) {
        r.rel = Relation::kGreaterEqual;
      } else if (r.rel == Relation::kGreaterEqual) {
        r.rel = Relation::kLessEqual;
      }
    }
    if (r.rel != Relation::kEqual) ++slacks;
    if (r.rel != Relation::kLessEqual) ++artificials;
    rows.push_back(std::move(r));
  }

  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slacks;
  const std::size_t cols = n + slacks + artificials;
  Tableau t(m, cols);
  std::size_t next_slack = first_slack, next_art = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = rows[r].a[j];
    t.rhs(r) = rows[r].b;
    switch (rows[r].rel) {
      case Relation::kLessEqual:
        t.at(r, next_slack) = 1.0;
        t.basis()[r] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t.at(r, next_slack++) = -1.0;
        t.at(r, next_art) = 1.0;
        t.basis()[r] = next_art++;
        break;
      case Relation::kEqual:
        t.at(r, next_art) = 1.0;
        t.basis()[r] = next_art++;
        break;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (artificials > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t c = first_artificial; c < cols; ++c) phase1[c] = 1.0;
    t.set_objective(phase1);
    t.optimize(allowed, result.pivots);
    if (t.objective() > kFeasTol) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < first_artificial) continue;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > kPivotTol) {
          t.pivot(r, c);
          ++result.pivots;
          break;
        }
      }
    }
    for (std::size_t c = first_artificial; c < cols; ++c) allowed[c] = false;
  }

  std::vector<double> phase2(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = p.objective[j];
  t.set_objective(phase2);
  if (!t.optimize(allowed, result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) result.x[t.basis()[r]] = std::max(0.0, t.rhs(r));
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.objective += p.objective[j] * result.x[j];
  result.status = LpStatus::kOptimal;
  return result;
}

}  // namespace intershift
