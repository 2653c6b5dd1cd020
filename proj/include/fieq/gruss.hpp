#pragma once

// Quadrature means, the classical Gruss inequality on sampled functions, and
// Richard-type defect scans for the cosine functional on random vector
// triples.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fieq/kernel.hpp"

namespace fieq {

enum class QuadratureRule { simpson, trapezoid };
const char* to_string(QuadratureRule rule);

// Uniform-grid samples f(x_i), x_i = a + i (b-a)/N for i = 0..N, with
// optionally declared bounds m <= f <= M.
struct FunctionSample {
  double a = 0.0;
  double b = 1.0;
  std::vector<double> values;
  std::optional<std::array<double, 2>> declared_bounds;

  std::size_t intervals() const { return values.empty() ? 0 : values.size() - 1; }

  // Validates a < b, N >= 2, finite samples, declared bounds containing the
  // samples when present.  Throws argument_error.
  void validate() const;
};

struct MeanResult {
  double value = 0.0;
  QuadratureRule rule = QuadratureRule::simpson;
  std::size_t intervals = 0;
};

// Integral mean (1/(b-a)) * integral of f: composite Simpson for even N,
// trapezoid fallback for odd N (recorded in the result).
MeanResult integral_mean(const FunctionSample& f);

struct GrussReport {
  double lhs = 0.0;   // |I(fg) - I(f) I(g)|
  double rhs = 0.0;   // (M_f - m_f)(M_g - m_g)/4
  double slack = 0.0; // rhs - lhs
  bool holds = false; // slack >= -tolerance
  double mean_f = 0.0, mean_g = 0.0, mean_fg = 0.0;
  QuadratureRule rule = QuadratureRule::simpson;
  // Bound source per function: declared in the sample, or sampled min/max.
  bool bounds_declared_f = false, bounds_declared_g = false;
  double m_f = 0.0, big_m_f = 0.0, m_g = 0.0, big_m_g = 0.0;
  double tolerance = 0.0;
};

// Both samples must share the grid (same a, b, and sample count).
GrussReport gruss_check(const FunctionSample& f, const FunctionSample& g,
                        double tolerance = 1e-8);

// <u,v> / (|u| |v|), clamped into [-1, 1]; throws on a zero vector.
double cosine_functional(std::span<const double> u, std::span<const double> v);

struct VectorTriple {
  std::vector<double> f, g, h;
};

// |<f,h> - <f,g><g,h>| when normalize_g is set (requires |g| = 1 within
// 1e-9), else the |g|^-2 scaled variant.
double gruss_expression(const VectorTriple& t, bool normalize_g);

struct RichardReport {
  int dim = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
  double max_defect = 0.0;                       // max |T(f,h) - T(f,g)T(g,h)|
  std::array<std::vector<double>, 3> argmax_triple;
  long long argmax_trial = 0;                    // -1 marks the planted triple
  double max_bound_residual = 0.0;               // max (defect - sin sin)
  long long clamp_count = 0;
  bool planted_included = false;                 // dim == 2 plants e1,(1,1),e2
  double planted_defect = 0.0;
};

// Samples `trials` standard-normal triples in dimension dim (norms below
// 1e-6 rejected) and scans the cosine-functional defect together with the
// sin(theta_fg) sin(theta_gh) angle bound.  Deterministic for a fixed seed
// independent of thread count: trials are partitioned into fixed-size chunks
// with splitmix-derived substreams and maxima merged in chunk order.
RichardReport richard_scan(int dim, long long trials, std::uint64_t seed);

namespace serial {
RichardReport richard_scan(int dim, long long trials, std::uint64_t seed);
}

// Exposed for tests: defect and angle-bound residual of one triple.  The
// product term is evaluated through <g,g> directly (no square root for the
// middle vector).
struct RichardTripleEval {
  double defect = 0.0;
  double bound_residual = 0.0;
  int clamps = 0;
};
RichardTripleEval richard_eval(std::span<const double> f, std::span<const double> g,
                               std::span<const double> h);

}  // namespace fieq
