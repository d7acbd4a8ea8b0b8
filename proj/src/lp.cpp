#include "tdesc/lp.hpp"

#include <stdexcept>

namespace tdesc::lp {

namespace {

// Dense tableau: rows_[i] holds the constraint row with rhs in the last
// column; the objective row is kept separately as reduced costs.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t num_vars() const { return rows_.empty() ? 0 : rows_[0].size() - 1; }

  // Maximise cost . x over the current feasible basis.  Columns flagged in
  // `blocked` never enter.  Returns false when unbounded.
  bool optimise(const std::vector<Rational>& cost, const std::vector<bool>& blocked) {
    const std::size_t n = num_vars();
    for (;;) {
      // Reduced cost r_j = c_j - c_B . column_j; Bland: first improving j.
      std::size_t enter = n;
      for (std::size_t j = 0; j < n && enter == n; ++j) {
        if (blocked[j] || is_basic(j)) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (rows_[i][j] != 0) r -= cost[basis_[i]] * rows_[i][j];
        if (r > 0) enter = j;
      }
      if (enter == n) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][n] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t width = rows_[r].size();
    Rational p = rows_[r][c];
    for (std::size_t j = 0; j < width; ++j) rows_[r][j] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j < width; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(num_vars());
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i].back();
    return x;
  }

  std::vector<std::vector<Rational>>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Constraint make_constraint(const IntVector& coeffs, Relation rel, const Int& rhs) {
  Constraint c;
  c.coeffs.reserve(coeffs.size());
  for (const auto& x : coeffs) c.coeffs.emplace_back(x);
  c.relation = rel;
  c.rhs = Rational(rhs);
  return c;
}

Result maximize(const std::vector<Rational>& objective, const std::vector<Constraint>& constraints,
                const std::vector<bool>& nonnegative) {
  const std::size_t nv = objective.size();
  if (!nonnegative.empty() && nonnegative.size() != nv) throw std::invalid_argument("lp: nonnegativity flags size");
  for (const auto& c : constraints)
    if (c.coeffs.size() != nv) throw std::invalid_argument("lp: constraint width mismatch");

  // Column layout: for each original variable a plus part (and a minus part
  // when free), then one slack per inequality, then one artificial per row.
  std::vector<std::size_t> plus(nv), minus(nv, SIZE_MAX);
  std::size_t col = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    plus[j] = col++;
    if (nonnegative.empty() || !nonnegative[j]) minus[j] = col++;
  }
  const std::size_t structural = col;
  std::size_t slacks = 0;
  for (const auto& c : constraints)
    if (c.relation != Relation::Equal) ++slacks;
  const std::size_t m = constraints.size();
  const std::size_t total = structural + slacks + m;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(total + 1));
  std::vector<std::size_t> basis(m);
  std::size_t slack_col = structural;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    auto& row = rows[i];
    for (std::size_t j = 0; j < nv; ++j) {
      row[plus[j]] = c.coeffs[j];
      if (minus[j] != SIZE_MAX) row[minus[j]] = -c.coeffs[j];
    }
    if (c.relation == Relation::LessEqual) row[slack_col++] = 1;
    if (c.relation == Relation::GreaterEqual) row[slack_col++] = -1;
    row[total] = c.rhs;
    if (row[total] < 0)
      for (auto& x : row) x = -x;
    row[structural + slacks + i] = 1;
    basis[i] = structural + slacks + i;
  }

  Tableau tab(std::move(rows), std::move(basis));
  std::vector<bool> blocked(total, false);

  // Phase 1: maximise -(sum of artificials).
  std::vector<Rational> phase1(total);
  for (std::size_t i = 0; i < m; ++i) phase1[structural + slacks + i] = -1;
  tab.optimise(phase1, blocked);
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t b = tab.basis()[i];
    if (b >= structural + slacks) infeas += tab.rows()[i][total];
  }
  Result result;
  if (infeas != 0) {
    result.status = Status::Infeasible;
    return result;
  }
  // Drive artificials out of the basis; rows that cannot be cleared are redundant.
  for (std::size_t i = 0; i < tab.rows().size();) {
    if (tab.basis()[i] < structural + slacks) {
      ++i;
      continue;
    }
    std::size_t enter = total;
    for (std::size_t j = 0; j < structural + slacks; ++j)
      if (tab.rows()[i][j] != 0) {
        enter = j;
        break;
      }
    if (enter == total) {
      tab.rows().erase(tab.rows().begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis().erase(tab.basis().begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    tab.pivot(i, enter);
    ++i;
  }
  for (std::size_t j = structural + slacks; j < total; ++j) blocked[j] = true;

  std::vector<Rational> cost(total);
  for (std::size_t j = 0; j < nv; ++j) {
    cost[plus[j]] = objective[j];
    if (minus[j] != SIZE_MAX) cost[minus[j]] = -objective[j];
  }
  if (!tab.optimise(cost, blocked)) {
    result.status = Status::Unbounded;
    return result;
  }
  std::vector<Rational> y = tab.solution();
  result.x.assign(nv, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    result.x[j] = y[plus[j]];
    if (minus[j] != SIZE_MAX) result.x[j] -= y[minus[j]];
  }
  result.value = 0;
  for (std::size_t j = 0; j < nv; ++j) result.value += objective[j] * result.x[j];
  result.status = Status::Optimal;
  return result;
}

}  // namespace tdesc::lp
