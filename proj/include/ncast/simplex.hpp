#ifndef NCAST_SIMPLEX_HPP
#define NCAST_SIMPLEX_HPP

// Dense two-phase tableau simplex for small linear programs:
//
//   minimize c^T x  subject to  rows (<=, >=, =),  x >= 0.
//
// Entering variable: most negative reduced cost, switching to Bland's
// smallest-index rule after a run of degenerate pivots so the method cannot
// cycle. Deterministic for a given input.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncast {

enum class RowSense { le, ge, eq };

struct LinearTerm {
  std::size_t var = 0;
  double coef = 0.0;
};

struct LinearRow {
  std::string name;
  std::vector<LinearTerm> terms;
  RowSense sense = RowSense::le;
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<std::string> var_names;
  std::vector<double> objective;  // minimized
  std::vector<LinearRow> rows;

  std::size_t var_count() const noexcept { return objective.size(); }
};

enum class SimplexStatus { optimal, infeasible, unbounded, iteration_limit };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::infeasible;
  std::vector<double> x;
  double objective = 0.0;
};

struct SimplexOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 1'000'000;
  std::size_t degenerate_switch = 50;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), a_(rows * (cols + 1), 0.0), cost_(cols + 1, 0.0), basis_(rows, 0) {}

  double& at(std::size_t i, std::size_t j) { return a_[i * (n_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * (n_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, n_); }
  double& cost(std::size_t j) { return cost_[j]; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void pivot(std::size_t r, std::size_t q) {
    const std::size_t w = n_ + 1;
    double* prow = &a_[r * w];
    const double inv = 1.0 / prow[q];
    for (std::size_t j = 0; j < w; ++j) prow[j] *= inv;
    prow[q] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &a_[i * w];
      const double f = row[q];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) row[j] -= f * prow[j];
      row[q] = 0.0;
    }
    const double f = cost_[q];
    if (f != 0.0) {
      for (std::size_t j = 0; j < w; ++j) cost_[j] -= f * prow[j];
      cost_[q] = 0.0;
    }
    basis_[r] = q;
  }

  // Runs simplex iterations on the current cost row. `allowed[j]` gates entry.
  SimplexStatus optimize(const std::vector<char>& allowed, const SimplexOptions& opt,
                         std::size_t& iterations) {
    const double tol = opt.tolerance;
    std::size_t degenerate_run = 0;
    for (;;) {
      if (iterations++ >= opt.max_iterations) return SimplexStatus::iteration_limit;
      const bool bland = degenerate_run >= opt.degenerate_switch;
      std::size_t q = n_;
      double best = -tol;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!allowed[j] || cost_[j] >= -tol) continue;
        if (bland) {
          q = j;
          break;
        }
        if (cost_[j] < best) {
          best = cost_[j];
          q = j;
        }
      }
      if (q == n_) return SimplexStatus::optimal;

      std::size_t r = m_;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double aiq = at(i, q);
        if (aiq <= tol) continue;
        const double t = rhs(i) / aiq;
        if (r == m_ || t < ratio - tol || (t <= ratio + tol && basis_[i] < basis_[r])) {
          ratio = t;
          r = i;
        }
      }
      if (r == m_) return SimplexStatus::unbounded;
      degenerate_run = ratio <= tol ? degenerate_run + 1 : 0;
      pivot(r, q);
    }
  }

  void drop_row(std::size_t r) {
    const std::size_t w = n_ + 1;
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r * w),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<double> a_;
  std::vector<double> cost_;  // reduced costs; cost_[n_] holds -objective
  std::vector<std::size_t> basis_;
};

}  // namespace detail

inline SimplexResult solve_simplex(const LinearProgram& lp, const SimplexOptions& opt = {}) {
  const std::size_t n = lp.var_count();
  const std::size_t m = lp.rows.size();
  const double tol = opt.tolerance;

  // Normalize to rhs >= 0 and count auxiliary columns.
  std::vector<RowSense> sense(m);
  std::vector<double> sign(m, 1.0);
  std::size_t slack_cols = 0;
  std::size_t art_cols = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sense[i] = lp.rows[i].sense;
    if (lp.rows[i].rhs < 0.0) {
      sign[i] = -1.0;
      if (sense[i] == RowSense::le) sense[i] = RowSense::ge;
      else if (sense[i] == RowSense::ge) sense[i] = RowSense::le;
    }
    if (sense[i] != RowSense::eq) ++slack_cols;
    if (sense[i] != RowSense::le) ++art_cols;
  }
  const std::size_t art_begin = n + slack_cols;
  const std::size_t total = art_begin + art_cols;
  detail::Tableau tab(m, total);

  std::size_t next_slack = n;
  std::size_t next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& t : lp.rows[i].terms) {
      if (t.var >= n) throw std::out_of_range("simplex: variable index out of range");
      tab.at(i, t.var) += sign[i] * t.coef;
    }
    tab.rhs(i) = sign[i] * lp.rows[i].rhs;
    if (sense[i] == RowSense::le) {
      tab.at(i, next_slack) = 1.0;
      tab.basis(i) = next_slack++;
    } else {
      if (sense[i] == RowSense::ge) tab.at(i, next_slack++) = -1.0;
      tab.at(i, next_art) = 1.0;
      tab.basis(i) = next_art++;
    }
  }

  std::size_t iterations = 0;
  SimplexResult result;

  // Phase 1: minimize the sum of artificials.
  if (art_cols > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis(i) < art_begin) continue;
      for (std::size_t j = 0; j <= total; ++j) {
        if (j < art_begin || j == total) tab.cost(j) -= tab.at(i, j);
      }
    }
    std::vector<char> allowed(total, 1);
    const auto st = tab.optimize(allowed, opt, iterations);
    if (st == SimplexStatus::iteration_limit) {
      result.status = st;
      return result;
    }
    if (-tab.cost(total) > tol * std::max<double>(1.0, static_cast<double>(m))) {
      result.status = SimplexStatus::infeasible;
      return result;
    }
    // Drive remaining artificials out of the basis; redundant rows are dropped.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis(i) < art_begin) {
        ++i;
        continue;
      }
      std::size_t q = art_begin;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (std::abs(tab.at(i, j)) > tol) {
          q = j;
          break;
        }
      }
      if (q == art_begin) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, q);
        ++i;
      }
    }
  }

  // Phase 2 on the real objective; artificial columns may not re-enter.
  for (std::size_t j = 0; j <= total; ++j) tab.cost(j) = j < n ? lp.objective[j] : 0.0;
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const std::size_t b = tab.basis(i);
    const double cb = b < n ? lp.objective[b] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= total; ++j) tab.cost(j) -= cb * tab.at(i, j);
  }
  std::vector<char> allowed(total, 0);
  for (std::size_t j = 0; j < art_begin; ++j) allowed[j] = 1;
  result.status = tab.optimize(allowed, opt, iterations);
  if (result.status != SimplexStatus::optimal) return result;

  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis(i) < n) result.x[tab.basis(i)] = std::max(0.0, tab.rhs(i));
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.objective += lp.objective[j] * result.x[j];
  return result;
}

}  // namespace ncast

#endif  // NCAST_SIMPLEX_HPP
