#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "latcut/gauge.hpp"

namespace latcut {

/// Covering-form LP: minimize a nonnegative objective over
///   { s >= 0 : row . s >= 1 for every row },
/// all coefficients nonnegative. The canonical objective is sum(s).
struct LPProblem {
  size_t num_vars;
  std::vector<std::vector<Rational>> rows;

  LPProblem(size_t n, std::vector<std::vector<Rational>> rs)
      : num_vars(n), rows(std::move(rs)) {
    if (num_vars == 0) throw ParamOutOfRange("LP needs at least one variable");
    if (rows.empty()) throw ParamOutOfRange("LP needs at least one row");
    for (const auto& row : rows) {
      if (row.size() != num_vars) throw ParamOutOfRange("row length mismatch");
      bool has_positive = false;
      for (const auto& a : row) {
        if (a < 0) throw ParamOutOfRange("row coefficients must be nonnegative");
        if (a > 0) has_positive = true;
      }
      if (!has_positive) throw InfeasibleProblem("row without positive coefficient");
    }
  }

  static LPProblem from_cut_rows(const std::vector<CutRow>& cut_rows) {
    std::vector<std::vector<Rational>> rs;
    rs.reserve(cut_rows.size());
    for (const auto& r : cut_rows) rs.push_back(r.coeffs);
    size_t n = rs.empty() ? 1 : rs[0].size();
    return LPProblem(n, std::move(rs));
  }
};

/// Exact optimum with a dual certificate. `dual` proves optimality:
/// dual >= 0, dual^T A <= objective, and sum(dual) == value.
struct LPSolution {
  Rational value;
  std::vector<Rational> point;
  std::vector<size_t> tight_rows;
  std::vector<Rational> dual;
};

namespace detail {

/// Dense two-phase simplex over exact rationals, Bland's rule throughout.
class Simplex {
 public:
  Simplex(const LPProblem& p) : n_(p.num_vars), m_(p.rows.size()) {
    cols_ = n_ + 2 * m_;
    tab_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < n_; ++j) tab_[i][j] = p.rows[i][j];
      tab_[i][n_ + i] = -1;            // surplus
      tab_[i][n_ + m_ + i] = 1;        // artificial
      tab_[i][cols_] = 1;              // rhs
      basis_[i] = n_ + m_ + i;
    }
  }

  LPSolution solve(const std::vector<Rational>& objective) {
    // Phase 1: drive out the artificials.
    std::vector<Rational> phase1(cols_, Rational(0));
    for (size_t i = 0; i < m_; ++i) phase1[n_ + m_ + i] = 1;
    run(phase1, /*ban_artificials=*/false);
    if (objective_value(phase1) != 0)
      throw InfeasibleProblem("phase-1 optimum positive");  // cannot happen for valid rows
    // Phase 2.
    std::vector<Rational> cost(cols_, Rational(0));
    for (size_t j = 0; j < n_; ++j) cost[j] = objective[j];
    run(cost, /*ban_artificials=*/true);

    LPSolution sol;
    sol.point.assign(n_, Rational(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.point[basis_[i]] = tab_[i][cols_];
    sol.value = objective_value(cost);
    sol.dual.assign(m_, Rational(0));
    for (size_t i = 0; i < m_; ++i) {
      // Initial artificial columns form the identity, so their current
      // entries are B^{-1}; prices follow as c_B . B^{-1} e_i.
      Rational y(0);
      for (size_t r = 0; r < m_; ++r) y += cost[basis_[r]] * tab_[r][n_ + m_ + i];
      sol.dual[i] = y;
    }
    return sol;
  }

 private:
  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v(0);
    for (size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * tab_[i][cols_];
    return v;
  }

  void run(const std::vector<Rational>& cost, bool ban_artificials) {
    for (;;) {
      // Reduced costs from scratch keeps the pivot loop simple and exact.
      size_t enter = cols_;
      for (size_t j = 0; j < cols_; ++j) {
        if (ban_artificials && j >= n_ + m_) continue;
        if (is_basic(j)) continue;
        Rational red = cost[j];
        for (size_t i = 0; i < m_; ++i) red -= cost[basis_[i]] * tab_[i][j];
        if (red < 0) { enter = j; break; }  // Bland: lowest index
      }
      if (enter == cols_) return;  // optimal

      size_t leave = m_;
      Rational best_ratio;
      for (size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) throw UnboundedProblem("improving direction without bound");
      pivot(leave, enter);
    }
  }

  bool is_basic(size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  void pivot(size_t row, size_t col) {
    Rational piv = tab_[row][col];
    for (auto& x : tab_[row]) x /= piv;
    for (size_t i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      Rational factor = tab_[i][col];
      for (size_t j = 0; j <= cols_; ++j) tab_[i][j] -= factor * tab_[row][j];
    }
    basis_[row] = col;
  }

  size_t n_, m_, cols_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<size_t> basis_;
};

}  // namespace detail

/// Exact check that (point, dual) is an optimal primal-dual pair.
inline void certify_optimal(const LPProblem& p, const std::vector<Rational>& objective,
                            const LPSolution& sol) {
  Rational primal(0);
  for (size_t j = 0; j < p.num_vars; ++j) {
    if (sol.point[j] < 0) throw InternalError("negative primal coordinate");
    primal += objective[j] * sol.point[j];
  }
  if (primal != sol.value) throw InternalError("objective mismatch");
  Rational dual_value(0);
  for (size_t i = 0; i < p.rows.size(); ++i) {
    Rational lhs(0);
    for (size_t j = 0; j < p.num_vars; ++j) lhs += p.rows[i][j] * sol.point[j];
    if (lhs < 1) throw InternalError("primal infeasible row");
    if (sol.dual[i] < 0) throw InternalError("negative dual multiplier");
    dual_value += sol.dual[i];
  }
  for (size_t j = 0; j < p.num_vars; ++j) {
    Rational col(0);
    for (size_t i = 0; i < p.rows.size(); ++i) col += sol.dual[i] * p.rows[i][j];
    if (col > objective[j]) throw InternalError("dual infeasible column");
  }
  if (dual_value != sol.value) throw InternalError("weak duality gap at optimum");
}

/// Minimize an arbitrary nonnegative objective over the covering polyhedron.
inline LPSolution solve_min(const LPProblem& p, const std::vector<Rational>& objective) {
  if (objective.size() != p.num_vars) throw ParamOutOfRange("objective length mismatch");
  for (const auto& c : objective)
    if (c < 0) throw ParamOutOfRange("objective must be nonnegative");
  LPSolution sol = detail::Simplex(p).solve(objective);
  for (size_t i = 0; i < p.rows.size(); ++i) {
    Rational lhs(0);
    for (size_t j = 0; j < p.num_vars; ++j) lhs += p.rows[i][j] * sol.point[j];
    if (lhs == 1) sol.tight_rows.push_back(i);
  }
  certify_optimal(p, objective, sol);
  return sol;
}

/// The closure-strength LP: minimize sum(s).
inline LPSolution solve_min_sum(const LPProblem& p) {
  return solve_min(p, std::vector<Rational>(p.num_vars, Rational(1)));
}

/// Restriction of the LP to the corner rays. Every dropped ray must be a
/// corner ray itself or a strict convex combination of two corner rays; the
/// optimal value is preserved (asserted in tests, not assumed here).
inline LPProblem corner_ray_reduce(const LPProblem& p, const std::vector<Ray2>& rays,
                                   const std::vector<size_t>& corner_indices) {
  if (rays.size() != p.num_vars) throw ParamOutOfRange("ray count must match LP variables");
  for (size_t idx : corner_indices)
    if (idx >= rays.size()) throw ParamOutOfRange("corner index out of range");
  for (size_t j = 0; j < rays.size(); ++j) {
    if (std::find(corner_indices.begin(), corner_indices.end(), j) != corner_indices.end())
      continue;
    bool representable = false;
    for (size_t u : corner_indices) {
      if (rays[j] == rays[u]) { representable = true; break; }
    }
    for (size_t a = 0; !representable && a < corner_indices.size(); ++a)
      for (size_t b = a + 1; !representable && b < corner_indices.size(); ++b) {
        const Ray2& ru = rays[corner_indices[a]];
        const Ray2& rv = rays[corner_indices[b]];
        Ray2 d{ru.d1 - rv.d1, ru.d2 - rv.d2};
        if (d.is_zero()) continue;
        Rational lambda = d.d1 != 0 ? (rays[j].d1 - rv.d1) / d.d1 : (rays[j].d2 - rv.d2) / d.d2;
        if (lambda <= 0 || lambda >= 1) continue;
        if (rv.d1 + lambda * d.d1 == rays[j].d1 && rv.d2 + lambda * d.d2 == rays[j].d2)
          representable = true;
      }
    if (!representable)
      throw NotConvexCombination("ray " + std::to_string(j) +
                                 " is not a convex combination of two corner rays");
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(p.rows.size());
  for (const auto& row : p.rows) {
    std::vector<Rational> r;
    r.reserve(corner_indices.size());
    for (size_t idx : corner_indices) r.push_back(row[idx]);
    rows.push_back(std::move(r));
  }
  return LPProblem(corner_indices.size(), std::move(rows));
}

}  // namespace latcut
