#pragma once

// Shared test utilities and independent oracles.  The oracles deliberately
// avoid the library's algorithm paths: the closure oracle enumerates walks
// by dynamic programming over path length, and the LP oracle enumerates
// active-constraint subsets of full rank.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "fieq/kernel.hpp"
#include "fieq/rng.hpp"

namespace fieq::test {

inline Kernel make_kernel(std::vector<std::string> labels, std::vector<double> values) {
  return Kernel(PointSet(std::move(labels)), std::move(values));
}

inline Kernel kernel3(std::vector<double> values) {
  return make_kernel({"a", "b", "c"}, std::move(values));
}

// Minimum walk weight over walks of exactly 1..max_len edges, plus the
// negative-cycle verdict from closed walks.  Exact for integer-valued
// kernels.
struct WalkOracle {
  std::vector<double> min_walk;  // row-major n*n, min over lengths 1..max_len
  bool negative_cycle = false;
};

inline WalkOracle closure_walk_oracle(const Kernel& h, std::size_t max_len) {
  const std::size_t n = h.size();
  const double inf = std::numeric_limits<double>::infinity();
  WalkOracle oracle;
  std::vector<double> current = h.values();  // walks of exactly 1 edge
  oracle.min_walk = current;
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<double> next(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (current[i * n + k] == inf) continue;
        for (std::size_t j = 0; j < n; ++j) {
          next[i * n + j] = std::min(next[i * n + j], current[i * n + k] + h(k, j));
        }
      }
    }
    current = next;
    for (std::size_t i = 0; i < n * n; ++i) {
      oracle.min_walk[i] = std::min(oracle.min_walk[i], current[i]);
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (oracle.min_walk[f * n + f] < -1e-12) oracle.negative_cycle = true;
  }
  return oracle;
}

// Vertex enumeration for  min sum(G)  s.t.  G(f,g)+G(g,h)-G(f,h) >= D(f,g,h).
// The constraint matrix has the coboundaries as lineality space, so optimal
// faces correspond to consistent active subsets of rank equal to the full
// matrix rank; the objective is constant along the lineality and therefore
// well defined per subset.
inline double lp_min_sum_oracle(const Kernel& s) {
  const std::size_t n = s.size();
  const std::size_t nv = n * n;

  // Deduplicated constraint rows.
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        std::vector<double> row(nv, 0.0);
        row[f * n + g] += 1.0;
        row[g * n + h] += 1.0;
        row[f * n + h] -= 1.0;
        const double d = std::abs(s(f, h) - s(f, g) - s(g, h));
        bool found = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r] == row) {
            rhs[r] = std::max(rhs[r], d);
            found = true;
            break;
          }
        }
        if (!found) {
          rows.push_back(std::move(row));
          rhs.push_back(d);
        }
      }
    }
  }
  const std::size_t m = rows.size();

  // Rank of the full matrix by Gaussian elimination.
  auto rank_of = [&](std::vector<std::vector<double>> mat) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nv && rank < mat.size(); ++col) {
      std::size_t pivot = rank;
      for (std::size_t r = rank + 1; r < mat.size(); ++r) {
        if (std::abs(mat[r][col]) > std::abs(mat[pivot][col])) pivot = r;
      }
      if (std::abs(mat[pivot][col]) < 1e-9) continue;
      std::swap(mat[rank], mat[pivot]);
      for (std::size_t r = 0; r < mat.size(); ++r) {
        if (r == rank) continue;
        const double factor = mat[r][col] / mat[rank][col];
        if (factor == 0.0) continue;
        for (std::size_t c = col; c < nv; ++c) mat[r][c] -= factor * mat[rank][c];
      }
      ++rank;
    }
    return rank;
  };
  const std::size_t full_rank = rank_of(rows);

  // Solve A_S x = b_S by Gauss-Jordan with column pivoting; reports rank and
  // consistency.
  auto solve_subset = [&](const std::vector<std::size_t>& subset, std::vector<double>& x,
                          std::size_t& subset_rank) {
    const std::size_t k = subset.size();
    std::vector<std::vector<double>> a(k, std::vector<double>(nv + 1, 0.0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < nv; ++c) a[r][c] = rows[subset[r]][c];
      a[r][nv] = rhs[subset[r]];
    }
    std::vector<std::size_t> pivot_col(k, nv);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nv && rank < k; ++col) {
      std::size_t pr = rank;
      for (std::size_t r = rank + 1; r < k; ++r) {
        if (std::abs(a[r][col]) > std::abs(a[pr][col])) pr = r;
      }
      if (std::abs(a[pr][col]) < 1e-9) continue;
      std::swap(a[rank], a[pr]);
      const double inv = 1.0 / a[rank][col];
      for (std::size_t c = 0; c <= nv; ++c) a[rank][c] *= inv;
      for (std::size_t r = 0; r < k; ++r) {
        if (r == rank) continue;
        const double f = a[r][col];
        if (f == 0.0) continue;
        for (std::size_t c = 0; c <= nv; ++c) a[r][c] -= f * a[rank][c];
      }
      pivot_col[rank] = col;
      ++rank;
    }
    subset_rank = rank;
    for (std::size_t r = rank; r < k; ++r) {
      if (std::abs(a[r][nv]) > 1e-9) return false;  // inconsistent
    }
    x.assign(nv, 0.0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][nv];
    return true;
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> subset(full_rank);
  std::vector<std::size_t> idx(full_rank);
  // Enumerate all subsets of size full_rank.
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    for (std::size_t r = 0; r < full_rank; ++r) subset[r] = idx[r];
    std::vector<double> x;
    std::size_t subset_rank = 0;
    if (solve_subset(subset, x, subset_rank) && subset_rank == full_rank) {
      bool feasible = true;
      for (std::size_t r = 0; r < m && feasible; ++r) {
        double lhs = 0.0;
        for (std::size_t c = 0; c < nv; ++c) lhs += rows[r][c] * x[c];
        if (lhs < rhs[r] - 1e-9) feasible = false;
      }
      if (feasible) {
        best = std::min(best, std::accumulate(x.begin(), x.end(), 0.0));
      }
    }
    // Next combination.
    std::size_t pos = full_rank;
    while (pos > 0) {
      --pos;
      if (idx[pos] + (full_rank - pos) < m) break;
      if (pos == 0) return best;
    }
    if (idx[pos] + (full_rank - pos) >= m) return best;
    ++idx[pos];
    for (std::size_t r = pos + 1; r < full_rank; ++r) idx[r] = idx[r - 1] + 1;
  }
}

// Random dyadic kernel with entries in [lo, hi].
inline Kernel random_dyadic_kernel(Rng& rng, const PointSet& points, double lo, double hi) {
  const std::size_t n = points.size();
  std::vector<double> values(n * n);
  for (auto& v : values) v = rng.uniform_dyadic(lo, hi);
  return Kernel(points, std::move(values));
}

}  // namespace fieq::test
