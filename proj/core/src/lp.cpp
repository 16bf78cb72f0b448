#include "setcalc/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace setcalc {

void LinearProgram::add(Vec coeffs, Relation rel, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("constraint width mismatch");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Two-phase primal simplex with Bland's rule on a dense rational tableau.
// Free variables are split x = u - v; GreaterEqual rows carry a surplus
// column; rows are sign-normalized to nonnegative right-hand sides.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp)
      : lp_(lp), n_(lp.num_vars), m_(static_cast<int>(lp.constraints.size())) {
    flip_.assign(m_, Rational(1));
    surplus_col_.assign(m_, -1);
    art_col_.assign(m_, -1);
    row_of_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) row_of_[i] = i;

    int cols = 2 * n_;
    for (int i = 0; i < m_; ++i)
      if (lp.constraints[i].rel == Relation::GreaterEqual) surplus_col_[i] = cols++;
    first_art_ = cols;
    for (int i = 0; i < m_; ++i) {
      const auto& c = lp.constraints[i];
      if (c.rhs < 0) flip_[i] = -1;
      // A flipped surplus enters with coefficient +1 and can seed the basis.
      bool surplus_seeds = c.rel == Relation::GreaterEqual && flip_[i] == -1;
      if (!surplus_seeds) art_col_[i] = cols++;
    }
    ncols_ = cols;

    tab_.assign(m_, Vec(ncols_ + 1, Rational(0)));
    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      const auto& c = lp.constraints[i];
      for (int k = 0; k < n_; ++k) {
        tab_[i][k] = flip_[i] * c.coeffs[k];
        tab_[i][n_ + k] = -tab_[i][k];
      }
      if (surplus_col_[i] >= 0) tab_[i][surplus_col_[i]] = -flip_[i];
      if (art_col_[i] >= 0) tab_[i][art_col_[i]] = 1;
      tab_[i][ncols_] = flip_[i] * c.rhs;
      basis_[i] = art_col_[i] >= 0 ? art_col_[i] : surplus_col_[i];
    }
  }

  LpOutcome run() {
    LpOutcome out;
    if (first_art_ < ncols_) {
      Vec cost(ncols_ + 1, Rational(0));
      for (int j = first_art_; j < ncols_; ++j) cost[j] = 1;
      reduce_cost_row(cost);
      iterate(cost, /*allow_art=*/true);
      if (-cost[ncols_] > 0) return infeasible_outcome();
      purge_artificials();
    }

    Vec cost(ncols_ + 1, Rational(0));
    for (int k = 0; k < n_; ++k) {
      Rational c = lp_.objective[k];
      if (lp_.sense == Sense::Maximize) c = -c;
      cost[k] = c;
      cost[n_ + k] = -c;
    }
    reduce_cost_row(cost);
    int unbounded_col = iterate(cost, /*allow_art=*/false);
    if (unbounded_col >= 0) return unbounded_outcome(unbounded_col);

    out.status = LpStatus::Optimal;
    out.point = extract_point();
    out.value = dot(lp_.objective, out.point);
    out.duals = extract_duals(cost_basis_vector());
    if (lp_.sense == Sense::Maximize)
      for (auto& d : out.duals) d = -d;
    return out;
  }

 private:
  const LinearProgram& lp_;
  int n_, m_, first_art_ = 0, ncols_ = 0;
  std::vector<Vec> tab_;
  std::vector<int> basis_;
  std::vector<Rational> flip_;
  std::vector<int> surplus_col_, art_col_;
  std::vector<int> row_of_;  // surviving tableau row -> original constraint

  void pivot(int r, int q, Vec& cost) {
    Rational inv = 1 / tab_[r][q];
    for (auto& x : tab_[r]) x *= inv;
    for (int i = 0; i < static_cast<int>(tab_.size()); ++i) {
      if (i == r || tab_[i][q] == 0) continue;
      Rational f = tab_[i][q];
      for (int j = 0; j <= ncols_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    if (cost[q] != 0) {
      Rational f = cost[q];
      for (int j = 0; j <= ncols_; ++j) cost[j] -= f * tab_[r][j];
    }
    basis_[r] = q;
  }

  void reduce_cost_row(Vec& cost) {
    for (size_t i = 0; i < tab_.size(); ++i) {
      if (cost[basis_[i]] == 0) continue;
      Rational f = cost[basis_[i]];
      for (int j = 0; j <= ncols_; ++j) cost[j] -= f * tab_[i][j];
    }
  }

  // Returns -1 on optimality, else the entering column proving unboundedness.
  int iterate(Vec& cost, bool allow_art) {
    const int limit = allow_art ? ncols_ : first_art_;
    for (;;) {
      int q = -1;
      for (int j = 0; j < limit; ++j)
        if (cost[j] < 0) {
          q = j;
          break;
        }
      if (q < 0) return -1;
      int r = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(tab_.size()); ++i) {
        if (tab_[i][q] <= 0) continue;
        Rational ratio = tab_[i][ncols_] / tab_[i][q];
        if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) return q;
      pivot(r, q, cost);
    }
  }

  // After a zero-cost phase 1, pivot artificial variables out of the basis;
  // rows that reduce to 0 = 0 over the real columns are dropped as redundant.
  void purge_artificials() {
    Vec dummy(ncols_ + 1, Rational(0));
    for (int i = static_cast<int>(tab_.size()) - 1; i >= 0; --i) {
      if (basis_[i] < first_art_) continue;
      int q = -1;
      for (int j = 0; j < first_art_; ++j)
        if (tab_[i][j] != 0) {
          q = j;
          break;
        }
      if (q >= 0) {
        pivot(i, q, dummy);
      } else {
        tab_.erase(tab_.begin() + i);
        basis_.erase(basis_.begin() + i);
        row_of_.erase(row_of_.begin() + i);
      }
    }
  }

  Vec extract_point() const {
    Vec z(ncols_, Rational(0));
    for (size_t i = 0; i < tab_.size(); ++i) z[basis_[i]] = tab_[i][ncols_];
    Vec x(n_);
    for (int k = 0; k < n_; ++k) x[k] = z[k] - z[n_ + k];
    return x;
  }

  // Original-system column of variable j restricted to surviving rows.
  Vec original_column(int j) const {
    Vec col(tab_.size(), Rational(0));
    for (size_t i = 0; i < tab_.size(); ++i) {
      int orig = row_of_[i];
      const auto& c = lp_.constraints[orig];
      if (j < n_)
        col[i] = flip_[orig] * c.coeffs[j];
      else if (j < 2 * n_)
        col[i] = -flip_[orig] * c.coeffs[j - n_];
      else if (j < first_art_) {
        if (surplus_col_[orig] == j) col[i] = -flip_[orig];
      } else {
        if (art_col_[orig] == j) col[i] = 1;
      }
    }
    return col;
  }

  Vec cost_basis_vector() const {
    Vec cb(tab_.size(), Rational(0));
    for (size_t i = 0; i < tab_.size(); ++i) {
      int b = basis_[i];
      if (b < n_) {
        cb[i] = lp_.objective[b];
        if (lp_.sense == Sense::Maximize) cb[i] = -cb[i];
      } else if (b < 2 * n_) {
        cb[i] = -lp_.objective[b - n_];
        if (lp_.sense == Sense::Maximize) cb[i] = -cb[i];
      }
    }
    return cb;
  }

  // Solves A_B^T y = c_B over surviving rows and maps back to per-constraint
  // multipliers in the caller's row order (deleted redundant rows get 0).
  Vec extract_duals(const Vec& cb) const {
    size_t mm = tab_.size();
    std::vector<Vec> at(mm, Vec(mm, Rational(0)));
    for (size_t col = 0; col < mm; ++col) {
      Vec c = original_column(basis_[col]);
      for (size_t i = 0; i < mm; ++i) at[col][i] = c[i];  // row `col` of A_B^T
    }
    Vec y = solve_square(at, cb);
    if (y.empty() && mm > 0) throw std::logic_error("singular basis in dual extraction");
    Vec duals(m_, Rational(0));
    for (size_t i = 0; i < mm; ++i) duals[row_of_[i]] = flip_[row_of_[i]] * y[i];
    return duals;
  }

  LpOutcome infeasible_outcome() const {
    LpOutcome out;
    out.status = LpStatus::Infeasible;
    Vec cb(tab_.size(), Rational(0));
    for (size_t i = 0; i < tab_.size(); ++i)
      if (basis_[i] >= first_art_) cb[i] = 1;
    out.farkas = extract_duals(cb);
    return out;
  }

  LpOutcome unbounded_outcome(int q) const {
    LpOutcome out;
    out.status = LpStatus::Unbounded;
    out.point = extract_point();
    out.value = dot(lp_.objective, out.point);
    Vec z(ncols_, Rational(0));
    z[q] = 1;
    for (size_t i = 0; i < tab_.size(); ++i) z[basis_[i]] = -tab_[i][q];
    Vec r(n_);
    for (int k = 0; k < n_; ++k) r[k] = z[k] - z[n_ + k];
    out.ray = std::move(r);
    return out;
  }
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  for (const auto& c : lp.constraints)
    if (static_cast<int>(c.coeffs.size()) != lp.num_vars)
      throw std::invalid_argument("constraint width mismatch");
  if (static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw std::invalid_argument("objective width mismatch");
  return Simplex(lp).run();
}

bool lp_certificate_valid(const LinearProgram& lp, const LpOutcome& out) {
  auto feasible = [&](const Vec& x) {
    for (const auto& c : lp.constraints) {
      Rational lhs = dot(c.coeffs, x);
      if (c.rel == Relation::Equal ? lhs != c.rhs : lhs < c.rhs) return false;
    }
    return true;
  };
  switch (out.status) {
    case LpStatus::Optimal: {
      if (!feasible(out.point)) return false;
      if (dot(lp.objective, out.point) != out.value) return false;
      if (out.duals.size() != lp.constraints.size()) return false;
      Vec combo(lp.num_vars, Rational(0));
      Rational dual_value = 0;
      for (size_t i = 0; i < lp.constraints.size(); ++i) {
        const auto& c = lp.constraints[i];
        const Rational& y = out.duals[i];
        if (c.rel == Relation::GreaterEqual) {
          if (lp.sense == Sense::Minimize && y < 0) return false;
          if (lp.sense == Sense::Maximize && y > 0) return false;
        }
        for (int k = 0; k < lp.num_vars; ++k) combo[k] += y * c.coeffs[k];
        dual_value += y * c.rhs;
        if (y * (dot(c.coeffs, out.point) - c.rhs) != 0) return false;  // slackness
      }
      return combo == lp.objective && dual_value == out.value;
    }
    case LpStatus::Infeasible: {
      if (out.farkas.size() != lp.constraints.size()) return false;
      Vec combo(lp.num_vars, Rational(0));
      Rational rhs = 0;
      for (size_t i = 0; i < lp.constraints.size(); ++i) {
        const auto& c = lp.constraints[i];
        const Rational& l = out.farkas[i];
        if (c.rel == Relation::GreaterEqual && l < 0) return false;
        for (int k = 0; k < lp.num_vars; ++k) combo[k] += l * c.coeffs[k];
        rhs += l * c.rhs;
      }
      return is_zero(combo) && rhs > 0;
    }
    case LpStatus::Unbounded: {
      if (!feasible(out.point)) return false;
      for (const auto& c : lp.constraints) {
        Rational d = dot(c.coeffs, out.ray);
        if (c.rel == Relation::Equal ? d != 0 : d < 0) return false;
      }
      Rational gain = dot(lp.objective, out.ray);
      return lp.sense == Sense::Maximize ? gain > 0 : gain < 0;
    }
  }
  return false;
}

}  // namespace setcalc
