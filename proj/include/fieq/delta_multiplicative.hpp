#pragma once

// The multiplicative inequality |T(f,h)-T(f,g)T(g,h)| <= F(f,g)F(g,h)-F(f,h):
// checking (real or complex T), the H = T + F composition, the auxiliary
// functional Gamma(f,g) = F(f,g)F(g,f) - 1, zero propagation of F, and a
// diagnostic probe for the derived inequalities.

#include <array>
#include <optional>
#include <string>

#include "fieq/defect.hpp"
#include "fieq/kernel.hpp"

namespace fieq {

// Residual scan of the multiplicative inequality (kind main).
DefectReport check_main(const Kernel& t, const Kernel& f, double tolerance = kDefaultTolerance);
// Complex T as a (real, imaginary) kernel pair; the modulus enters the scan.
DefectReport check_main(const Kernel& t_re, const Kernel& t_im, const Kernel& f,
                        double tolerance);

struct ComposeP1Result {
  Kernel h;  // T + F
  bool hypotheses_ok = false;  // T >= 0, F >= 0, inequality holds
  std::string warning;
  DefectReport submultiplicative;
  // min over triples of T(f,g)F(g,h) + F(f,g)T(g,h); nonnegative under the
  // hypotheses.
  double min_cross_term = 0.0;
};

ComposeP1Result compose_p1(const Kernel& t, const Kernel& f,
                           double tolerance = kDefaultTolerance);

// Gamma(f,g) = F(f,g) F(g,f) - 1; symmetric by construction.  Requires F
// strictly positive (min entry > 1e-12).
Kernel gamma_kernel(const Kernel& f);

struct ZeroPropReport {
  bool nonneg_ok = false;
  double min_entry = 0.0;
  std::array<std::string, 2> argmin;
  double max_entry = 0.0;
  std::array<std::string, 2> argmax;
  bool has_zero = false;  // min_entry <= tolerance
  // Scan of F(f,h) <= F(f,g) F(g,h); the witness names a violated triple.
  bool submult_ok = false;
  double submult_defect = 0.0;
  std::array<std::string, 3> submult_witness;
  // max F <= M^2 eps + (1+M) tol, eps = min entry, M = max entry.
  double derived_bound = 0.0;
  bool implication_holds = false;  // vacuous when no zero
  // Overall verdict: either no zero (vacuous), or the propagation bound
  // holds, or a violated triple is exhibited -- never a silent pass.
  bool confirmed = false;
  double tolerance = 0.0;
};

// Checks on this instance that a zero of F forces F to vanish everywhere,
// given nonnegativity and submultiplicativity of F.
ZeroPropReport zero_propagation_check(const Kernel& f, double tolerance = kDefaultTolerance);

struct ProbeReport {
  // ratio_sup(f,g) = max over k of |T(g,k)| / F(f,k): the finite-domain
  // surrogate of the unbounded-map hypothesis.
  Kernel ratio_sup;
  double gamma_min = 0.0;
  double gamma_max = 0.0;
  double sincov_defect = 0.0;  // of T, modulus when complex
  bool main_ok = false;
  double main_residual_max = 0.0;
  // Derived inequalities; each is a consequence of the main inequality, so a
  // false flag indicates tolerance trouble and is reported, never accepted
  // silently.
  bool bound_f_ok = false;          // F(f,h) <= F(f,g)F(g,h)
  double bound_f_residual_max = 0.0;
  bool bound_gamma_ok = false;      // F(f,g)F(g,h)-F(f,h) <= Gamma(f,g)F(f,h)
  double bound_gamma_residual_max = 0.0;
  bool bound_1_ok = false;          // quadruple bound via Gamma
  double bound_1_residual_max = 0.0;
  double min_f_diagonal = 0.0;      // >= 1 whenever the inequality holds
  double tolerance = 0.0;
};

// Requires F strictly positive.  T may be complex via t_im.
ProbeReport theorem_probe(const Kernel& t, const Kernel& f,
                          const std::optional<Kernel>& t_im = std::nullopt,
                          double tolerance = kDefaultTolerance);

// Min over paths (length >= 1, distinct intermediates) of entry products;
// the multiplicative analogue of triangle_closure for nonnegative kernels.
// With an exact zero entry the closure collapses to the zero kernel.
Kernel submultiplicative_closure(const Kernel& f);

}  // namespace fieq
