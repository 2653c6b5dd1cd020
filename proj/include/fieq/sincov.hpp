#pragma once

// Exact Sincov-equation machinery: the quotient representation
// T(f,g) = Phi(f)/Phi(g), its constructive factorization from a base point,
// and the constant reduction lambda = (1 + sqrt(1+4c))/2.

#include <string>

#include "fieq/defect.hpp"
#include "fieq/kernel.hpp"

namespace fieq {

struct FactorizeResult {
  Potential phi;
  // Measured max |T(f,g) - phi(f)/phi(g)| over all pairs.
  double max_reconstruction_error = 0.0;
  // Bound implied by the accepted sincov defect: tolerance / min |phi|.
  double reconstruction_bound = 0.0;
  double base_diagonal = 1.0;  // T(base, base), required to be 1 within tolerance
};

// Factors a Sincov kernel as phi(f) = T(f, base); gauge phi(base) = T(base, base).
// Rejects (structure_error naming the witness triple) when the sincov defect
// exceeds tolerance, when T(base,base) differs from 1 beyond tolerance, and
// when any phi(f) vanishes.
FactorizeResult gronau_factorize(const Kernel& t, const std::string& base,
                                 double tolerance = kDefaultTolerance);
// Base defaults to the first label.
FactorizeResult gronau_factorize(const Kernel& t, double tolerance = kDefaultTolerance);

// Least c with |T(f,h) - T(f,g)T(g,h)| <= c over all triples; 0 iff T solves
// the Sincov equation.
double pams_constant(const Kernel& t);

// lambda = (1 + sqrt(1 + 4c))/2, the positive root of lambda^2 - lambda = c.
// Throws argument_error for c < 0.
double constant_f_from_c(double c);

// Quotient kernel K(f,g) = phi(f)/phi(g); phi must never vanish.
Kernel quotient_kernel(const Potential& phi);

// Coboundary kernel S(f,g) = phi(f) - phi(g); exactly the additive Sincov
// solutions.
Kernel coboundary_kernel(const Potential& phi);

}  // namespace fieq
