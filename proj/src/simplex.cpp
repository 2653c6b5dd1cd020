#include "fieq/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fieq {
namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kReducedCostEps = 1e-9;
constexpr double kPhase1Eps = 1e-7;
constexpr int kDegenerateRunLimit = 40;

struct Tableau {
  std::size_t m = 0;       // rows
  std::size_t cols = 0;    // structural + slack + artificial columns
  std::vector<double> t;   // m x (cols + 1), last column is rhs
  std::vector<std::size_t> basis;

  double& at(std::size_t i, std::size_t j) { return t[i * (cols + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return t[i * (cols + 1) + j]; }
  double& rhs(std::size_t i) { return t[i * (cols + 1) + cols]; }
  double rhs(std::size_t i) const { return t[i * (cols + 1) + cols]; }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    const double inv = 1.0 / p;
    for (std::size_t j = 0; j <= cols; ++j) at(row, j) *= inv;
    at(row, col) = 1.0;
    // Row eliminations are mutually independent; the parallel path performs
    // the identical arithmetic per row, so results do not depend on the
    // thread count.
#pragma omp parallel for schedule(static) if (m * cols > (1u << 20))
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(m); ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == row) continue;
      const double factor = at(i, col);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) at(i, j) -= factor * at(row, j);
      at(i, col) = 0.0;
    }
    basis[row] = col;
  }
};

// Reduced costs for cost vector c over the current basis.  Accumulation runs
// row-major; column blocks are independent, so the parallel path gives the
// same sums in the same order.
void reduced_costs(const Tableau& tab, const std::vector<double>& cost, std::vector<double>& r,
                   double& objective) {
  r = cost;
  r.resize(tab.cols);
  objective = 0.0;
  std::vector<double> cb(tab.m);
  for (std::size_t i = 0; i < tab.m; ++i) {
    cb[i] = cost[tab.basis[i]];
    objective += cb[i] * tab.rhs(i);
  }
#pragma omp parallel if (tab.m * tab.cols > (1u << 20))
  {
    int nthreads = 1, tid = 0;
#ifdef _OPENMP
    nthreads = omp_get_num_threads();
    tid = omp_get_thread_num();
#endif
    const std::size_t chunk = (tab.cols + nthreads - 1) / nthreads;
    const std::size_t lo = std::min(tab.cols, chunk * static_cast<std::size_t>(tid));
    const std::size_t hi = std::min(tab.cols, lo + chunk);
    for (std::size_t i = 0; i < tab.m; ++i) {
      const double c = cb[i];
      if (c == 0.0) continue;
      const double* row = &tab.t[i * (tab.cols + 1)];
      for (std::size_t j = lo; j < hi; ++j) r[j] -= c * row[j];
    }
  }
}

enum class PhaseOutcome { optimal, unbounded, iteration_limit };

// Runs simplex iterations for the given cost until optimality; `allowed`
// masks columns that may enter (artificials are barred in phase 2).
PhaseOutcome run_phase(Tableau& tab, const std::vector<double>& cost,
                       const std::vector<bool>& allowed, long long& iterations,
                       long long iteration_cap) {
  std::vector<double> r;
  double objective = 0.0;
  double last_objective = std::numeric_limits<double>::infinity();
  int degenerate_run = 0;

  while (true) {
    if (iterations >= iteration_cap) return PhaseOutcome::iteration_limit;
    reduced_costs(tab, cost, r, objective);
    if (objective < last_objective - 1e-12) {
      degenerate_run = 0;
    } else {
      ++degenerate_run;
    }
    last_objective = objective;
    const bool bland = degenerate_run > kDegenerateRunLimit;

    // Entering column.
    std::size_t enter = tab.cols;
    if (bland) {
      for (std::size_t j = 0; j < tab.cols; ++j) {
        if (allowed[j] && r[j] < -kReducedCostEps) {
          enter = j;
          break;
        }
      }
    } else {
      double best = -kReducedCostEps;
      for (std::size_t j = 0; j < tab.cols; ++j) {
        if (allowed[j] && r[j] < best) {
          best = r[j];
          enter = j;
        }
      }
    }
    if (enter == tab.cols) return PhaseOutcome::optimal;

    // Ratio test.
    std::size_t leave = tab.m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tab.m; ++i) {
      const double a = tab.at(i, enter);
      if (a <= kPivotEps) continue;
      const double ratio = tab.rhs(i) / a;
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio < best_ratio + 1e-12 && leave < tab.m) {
        // Tie: Bland's rule leaves the smallest basic index; otherwise keep
        // the larger pivot element for stability.
        if (bland ? (tab.basis[i] < tab.basis[leave]) : (a > tab.at(leave, enter))) {
          best_ratio = std::min(best_ratio, ratio);
          leave = i;
        }
      }
    }
    if (leave == tab.m) return PhaseOutcome::unbounded;

    tab.pivot(leave, enter);
    ++iterations;
  }
}

}  // namespace

SimplexResult simplex_minimize(const SimplexProblem& problem) {
  const std::size_t nv = problem.num_vars;
  const std::size_t m = problem.rows.size();
  SimplexResult result;

  // Columns: u (nv), v (nv) for the free-variable split, slack s (m),
  // artificial a (m).
  const std::size_t slack0 = 2 * nv;
  const std::size_t art0 = slack0 + m;
  Tableau tab;
  tab.m = m;
  tab.cols = art0 + m;
  tab.t.assign(m * (tab.cols + 1), 0.0);
  tab.basis.resize(m);

  for (std::size_t i = 0; i < m; ++i) {
    const double sign = problem.rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nv; ++j) {
      const double a = problem.rows[i][j] * sign;
      tab.at(i, j) = a;
      tab.at(i, nv + j) = -a;
    }
    tab.at(i, slack0 + i) = -sign;
    tab.at(i, art0 + i) = 1.0;
    tab.rhs(i) = problem.rhs[i] * sign;
    tab.basis[i] = art0 + i;
  }

  const long long cap = 2000 + 200 * static_cast<long long>(m + tab.cols);

  // Phase 1: minimize the artificial sum.
  std::vector<double> phase1_cost(tab.cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[art0 + i] = 1.0;
  std::vector<bool> allowed(tab.cols, true);
  PhaseOutcome out = run_phase(tab, phase1_cost, allowed, result.iterations, cap);
  if (out == PhaseOutcome::iteration_limit) {
    result.status = SimplexStatus::iteration_limit;
    return result;
  }
  double phase1_obj = 0.0;
  {
    std::vector<double> r;
    reduced_costs(tab, phase1_cost, r, phase1_obj);
  }
  if (phase1_obj > kPhase1Eps) {
    result.status = SimplexStatus::infeasible;
    return result;
  }

  // Drive artificials out of the basis; a row that cannot pivot is redundant
  // and gets dropped.
  for (std::size_t i = 0; i < tab.m;) {
    if (tab.basis[i] < art0) {
      ++i;
      continue;
    }
    std::size_t col = tab.cols;
    for (std::size_t j = 0; j < art0; ++j) {
      if (std::abs(tab.at(i, j)) > kPivotEps) {
        col = j;
        break;
      }
    }
    if (col < tab.cols) {
      tab.pivot(i, col);
      ++i;
    } else {
      // Redundant constraint: remove row i.
      const std::size_t last = tab.m - 1;
      if (i != last) {
        for (std::size_t j = 0; j <= tab.cols; ++j) tab.at(i, j) = tab.at(last, j);
        tab.basis[i] = tab.basis[last];
      }
      tab.m = last;
      tab.basis.resize(tab.m);
      tab.t.resize(tab.m * (tab.cols + 1));
    }
  }

  // Phase 2 on the real objective; artificial columns may not re-enter.
  std::vector<double> cost(tab.cols, 0.0);
  for (std::size_t j = 0; j < nv; ++j) {
    cost[j] = problem.objective[j];
    cost[nv + j] = -problem.objective[j];
  }
  for (std::size_t j = art0; j < tab.cols; ++j) allowed[j] = false;
  out = run_phase(tab, cost, allowed, result.iterations, cap);
  if (out == PhaseOutcome::unbounded) {
    result.status = SimplexStatus::unbounded;
    return result;
  }
  if (out == PhaseOutcome::iteration_limit) {
    result.status = SimplexStatus::iteration_limit;
    return result;
  }

  std::vector<double> full(tab.cols, 0.0);
  for (std::size_t i = 0; i < tab.m; ++i) full[tab.basis[i]] = tab.rhs(i);
  result.x.assign(nv, 0.0);
  double obj = 0.0;
  for (std::size_t j = 0; j < nv; ++j) {
    result.x[j] = full[j] - full[nv + j];
    obj += problem.objective[j] * result.x[j];
  }
  result.objective = obj;
  result.status = SimplexStatus::optimal;
  return result;
}

}  // namespace fieq
