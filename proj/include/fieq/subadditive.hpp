#pragma once

// Triangle-inequality machinery on finite discrete domains: all-pairs
// shortest-path closure (paths of length >= 1), canonical potentials, the
// sup-of-differences representation and its round-trip verification.

#include <array>
#include <string>
#include <vector>

#include "fieq/defect.hpp"
#include "fieq/kernel.hpp"

namespace fieq {

// Entrywise minimal path-sum relaxation: H*(f,g) = min over paths f -> ... -> g
// of length >= 1 of the summed weights.  The empty path is excluded, so
// H*(f,f) is the minimum cycle weight through f (the diagonal entry itself is
// the length-1 self-loop).  Throws negative_cycle_error (cycle weight below
// -1e-12) naming one witness cycle.  H* <= H entrywise and H* has triangle
// defect 0.
Kernel triangle_closure(const Kernel& h);

namespace serial {
Kernel triangle_closure(const Kernel& h);
}

// The canonical family {phi_g : g in X}, phi_g(x) = H*(x, g) -- one member
// per point, columns of the closure.  Propagates negative_cycle_error.
PotentialFamily canonical_potentials(const Kernel& h);

// K(f,g) = max over members of phi(f) - phi(g).  Always solves the triangle
// inequality and has exactly zero diagonal.  Throws on an empty family.
Kernel sup_representation(const PotentialFamily& family);

struct CorollaryCtReport {
  // (i) the hypotheses: triangle inequality and zero diagonal.
  bool ti_holds = false;
  double triangle_defect = 0.0;
  std::array<std::string, 3> triangle_witness;
  bool zero_diagonal = false;
  double max_diagonal_abs = 0.0;
  bool hypothesis_holds = false;

  bool negative_cycle = false;
  std::vector<std::string> cycle;
  double cycle_weight = 0.0;

  // (ii) sup_representation(canonical_potentials(H)) == H within tolerance;
  // false whenever the closure is infeasible.
  bool representation_matches = false;
  double representation_deviation = 0.0;

  bool biconditional_ok = false;  // (i) <=> (ii), the checked claim
  double tolerance = 0.0;
  // Which diagonal convention applied: "zero" when the diagonal is zero
  // within tolerance, otherwise "self-loop" (diagonal treated as a length-1
  // cycle edge by the closure).
  std::string diagonal_convention;
};

CorollaryCtReport verify_corollary_ct(const Kernel& h, double tolerance = kDefaultTolerance);

}  // namespace fieq
