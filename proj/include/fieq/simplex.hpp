#pragma once

// Dense tableau primal simplex for
//
//     minimize c^T x   subject to   A x >= b,   x free,
//
// via the standard-form split x = u - v, slack variables, and a two-phase
// start.  Pivoting uses Dantzig's rule with a switch to Bland's rule after a
// run of degenerate pivots, which guarantees termination.  Dense and
// dependency-free on purpose: instances here are small (hundreds of rows)
// and every pivot is auditable.

#include <cstddef>
#include <vector>

namespace fieq {

struct SimplexProblem {
  std::size_t num_vars = 0;
  std::vector<double> objective;          // length num_vars
  std::vector<std::vector<double>> rows;  // each length num_vars; row . x >= rhs
  std::vector<double> rhs;
};

enum class SimplexStatus { optimal, infeasible, unbounded, iteration_limit };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::iteration_limit;
  std::vector<double> x;  // length num_vars when optimal
  double objective = 0.0;
  long long iterations = 0;
};

SimplexResult simplex_minimize(const SimplexProblem& problem);

}  // namespace fieq
