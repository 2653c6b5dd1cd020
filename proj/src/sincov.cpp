#include "fieq/sincov.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fieq {
namespace {

std::string triple_text(const DefectReport& r) {
  return "(" + r.argmax[0] + ", " + r.argmax[1] + ", " + r.argmax[2] + ")";
}

}  // namespace

FactorizeResult gronau_factorize(const Kernel& t, const std::string& base, double tolerance) {
  const std::size_t n = t.size();
  const std::size_t base_idx = t.points().index(base);

  const DefectReport scan = defect_scan(DefectKind::sincov, t, tolerance);
  if (scan.max_defect > tolerance) {
    std::ostringstream msg;
    msg << "kernel is not Sincov within tolerance " << tolerance << ": defect " << scan.max_defect
        << " at " << triple_text(scan);
    throw structure_error(msg.str());
  }

  const double base_diag = t(base_idx, base_idx);
  if (std::abs(base_diag - 1.0) > tolerance) {
    std::ostringstream msg;
    msg << "T(" << base << ", " << base << ") = " << base_diag
        << " but factorization requires 1 within tolerance " << tolerance;
    throw structure_error(msg.str());
  }

  std::vector<double> phi(n);
  double min_abs = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = t(i, base_idx);
    if (phi[i] == 0.0) {
      throw structure_error("vanishing factor: T(" + t.points().label(i) + ", " + base + ") = 0");
    }
    min_abs = std::min(min_abs, std::abs(phi[i]));
  }

  FactorizeResult result;
  result.phi = Potential(t.points(), std::move(phi));
  result.base_diagonal = base_diag;
  result.reconstruction_bound = tolerance / min_abs;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(t(i, j) - result.phi(i) / result.phi(j)));
    }
  }
  result.max_reconstruction_error = worst;
  return result;
}

FactorizeResult gronau_factorize(const Kernel& t, double tolerance) {
  return gronau_factorize(t, t.points().label(0), tolerance);
}

double pams_constant(const Kernel& t) {
  return defect_scan(DefectKind::sincov, t).max_defect;
}

double constant_f_from_c(double c) {
  if (!(c >= 0.0)) throw argument_error("constant_f_from_c requires c >= 0");
  return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * c));
}

Kernel quotient_kernel(const Potential& phi) {
  const std::size_t n = phi.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (phi(i) == 0.0) {
      throw structure_error("quotient_kernel: potential vanishes at " + phi.points.label(i));
    }
  }
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) values[i * n + j] = phi(i) / phi(j);
  }
  return Kernel(phi.points, std::move(values));
}

Kernel coboundary_kernel(const Potential& phi) {
  const std::size_t n = phi.size();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) values[i * n + j] = phi(i) - phi(j);
  }
  return Kernel(phi.points, std::move(values));
}

}  // namespace fieq
