#pragma once

// The additive inequality |S(f,h)-S(f,g)-S(g,h)| <= G(f,g)+G(g,h)-G(f,h):
// checking, the split H1 = G+S / H2 = G-S and its inverse, minimal-G
// synthesis by linear programming, and the two-family constructor.

#include <string>

#include "fieq/defect.hpp"
#include "fieq/kernel.hpp"

namespace fieq {

// Residual scan of the additive inequality (kind add).
DefectReport check_add(const Kernel& s, const Kernel& g, double tolerance = kDefaultTolerance);

struct DecomposeResult {
  Kernel h1;  // G + S
  Kernel h2;  // G - S
  bool hypothesis_ok = false;  // (S, G) satisfied the inequality
  std::string warning;
  DefectReport h1_triangle;
  DefectReport h2_triangle;
  // (H1 - H2)/2 == S and (H1 + H2)/2 == G, compared bit-exactly.
  bool inverse_exact = false;
};

DecomposeResult decompose_p2(const Kernel& s, const Kernel& g,
                             double tolerance = kDefaultTolerance);

struct ComposeResult {
  Kernel s;  // H1 - H2
  Kernel g;  // H1 + H2
  bool hypotheses_ok = false;  // both inputs subadditive within tolerance
  std::string warning;
  DefectReport add_check;
  std::string note;  // records the assignment convention used
};

// Composes subadditive H1, H2 into a solution pair; the assignment is
// S = H1 - H2, G = H1 + H2, the inverse (up to a factor 2) of decompose_p2.
ComposeResult compose_p3(const Kernel& h1, const Kernel& h2,
                         double tolerance = kDefaultTolerance);

enum class LPObjective { sum, max };
const char* to_string(LPObjective o);

enum class LPStatus { optimal, infeasible_guard, numerical_failure };
const char* to_string(LPStatus s);

struct SynthesisOptions {
  LPObjective objective = LPObjective::sum;
  bool symmetric = false;      // constrain G(f,g) = G(g,f)
  bool zero_diagonal = false;  // constrain G(f,f) = 0
};

struct LPOutcome {
  LPStatus status = LPStatus::numerical_failure;
  Kernel g;  // valid when status == optimal
  LPObjective objective = LPObjective::sum;
  double value = 0.0;
  double max_constraint_violation = 0.0;
  long long iterations = 0;
  std::string note;
};

// Finds the cheapest G making the additive inequality hold for S: minimizes
// the objective over {G : G(f,g)+G(g,h)-G(f,h) >= D(f,g,h) for all triples},
// D(f,g,h) = |S(f,h)-S(f,g)-S(g,h)|.  The unconstrained problem is always
// feasible (a large constant off-diagonal G works), so infeasible_guard can
// only occur under the symmetric/zero-diagonal flags or a solver bug.
// Practical scale cap: n <= 20 (the tableau has ~n^3 rows).
LPOutcome synthesize_min_g(const Kernel& s, const SynthesisOptions& options = {});

struct BuildChResult {
  Kernel s;  // sup-diff over family 1 minus sup-diff over family 2
  Kernel g;  // sum of the two sup-diffs
  DefectReport add_check;
  bool zero_diagonal = true;
  double max_diagonal_abs = 0.0;
  // Family membership in the split halves: every member phi of family i
  // satisfies phi(f)-phi(g) <= (G +/- S)(f,g)/2.
  bool family1_contained = false;
  bool family2_contained = false;
  double max_membership_violation = 0.0;
};

// Builds the pair (S, G) from two arbitrary potential families and scans the
// four advertised conclusions.  Throws on an empty family.
BuildChResult build_ch(const PotentialFamily& f1, const PotentialFamily& f2,
                       double tolerance = kDefaultTolerance);

}  // namespace fieq
