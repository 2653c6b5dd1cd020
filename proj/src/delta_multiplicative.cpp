#include "fieq/delta_multiplicative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace fieq {
namespace {

constexpr double kPositivityFloor = 1e-12;  // strict positivity of F

void require_strictly_positive(const Kernel& f, const char* what) {
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(f(i, j) > kPositivityFloor)) {
        std::ostringstream msg;
        msg << what << ": nonpositive F entry " << f(i, j) << " at (" << f.points().label(i)
            << ", " << f.points().label(j) << ")";
        throw structure_error(msg.str());
      }
    }
  }
}

double modulus(const Kernel& re, const Kernel* im, std::size_t i, std::size_t j) {
  if (im == nullptr) return std::abs(re(i, j));
  return std::hypot(re(i, j), (*im)(i, j));
}

// Sincov defect of a possibly complex kernel.
double sincov_defect_complex(const Kernel& re, const Kernel* im) {
  if (im == nullptr) return defect_scan(DefectKind::sincov, re).max_defect;
  const std::size_t n = re.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double rr = re(i, k) - (re(i, j) * re(j, k) - (*im)(i, j) * (*im)(j, k));
        const double ii = (*im)(i, k) - (re(i, j) * (*im)(j, k) + (*im)(i, j) * re(j, k));
        worst = std::max(worst, std::hypot(rr, ii));
      }
    }
  }
  return worst;
}

}  // namespace

DefectReport check_main(const Kernel& t, const Kernel& f, double tolerance) {
  return defect_scan(DefectKind::main, t, f, tolerance);
}

DefectReport check_main(const Kernel& t_re, const Kernel& t_im, const Kernel& f,
                        double tolerance) {
  return defect_scan_main_complex(t_re, t_im, f, tolerance);
}

ComposeP1Result compose_p1(const Kernel& t, const Kernel& f, double tolerance) {
  require_same_points(t, f, "compose_p1");
  ComposeP1Result result;
  const std::size_t n = t.size();

  std::ostringstream warnings;
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (t(i, j) < 0.0) {
        warnings << "T has a negative entry at (" << t.points().label(i) << ", "
                 << t.points().label(j) << "); ";
        ok = false;
      } else if (f(i, j) < 0.0) {
        warnings << "F has a negative entry at (" << f.points().label(i) << ", "
                 << f.points().label(j) << "); ";
        ok = false;
      }
    }
  }
  const DefectReport main_check = check_main(t, f, tolerance);
  if (main_check.violations != 0) {
    warnings << "the pair violates the multiplicative inequality (residual "
             << main_check.max_defect << "); ";
    ok = false;
  }
  result.hypotheses_ok = ok;
  result.warning = warnings.str();

  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n * n; ++i) values[i] = t.values()[i] + f.values()[i];
  result.h = Kernel(t.points(), std::move(values));
  result.submultiplicative = defect_scan(DefectKind::submultiplicative, result.h, tolerance);

  double min_cross = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        min_cross = std::min(min_cross, t(i, j) * f(j, k) + f(i, j) * t(j, k));
      }
    }
  }
  result.min_cross_term = min_cross;
  return result;
}

Kernel gamma_kernel(const Kernel& f) {
  require_strictly_positive(f, "gamma");
  const std::size_t n = f.size();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) values[i * n + j] = f(i, j) * f(j, i) - 1.0;
  }
  return Kernel(f.points(), std::move(values));
}

ZeroPropReport zero_propagation_check(const Kernel& f, double tolerance) {
  ZeroPropReport report;
  report.tolerance = tolerance;
  const std::size_t n = f.size();

  report.nonneg_ok = true;
  report.min_entry = std::numeric_limits<double>::infinity();
  report.max_entry = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = f(i, j);
      if (v < 0.0) report.nonneg_ok = false;
      if (v < report.min_entry) {
        report.min_entry = v;
        report.argmin = {f.points().label(i), f.points().label(j)};
      }
      if (v > report.max_entry) {
        report.max_entry = v;
        report.argmax = {f.points().label(i), f.points().label(j)};
      }
    }
  }
  report.has_zero = report.min_entry <= tolerance;

  const DefectReport submult = defect_scan(DefectKind::submultiplicative, f, tolerance);
  report.submult_ok = submult.violations == 0;
  report.submult_defect = submult.max_defect;
  report.submult_witness = submult.argmax;

  // Two chained applications of F(f,h) <= F(f,g) F(g,h), routed through the
  // minimal entry: max F <= M * eps * M + (1 + M) tol.
  const double m_big = report.max_entry;
  const double eps = std::max(report.min_entry, 0.0);
  report.derived_bound = m_big * m_big * eps + (1.0 + std::max(m_big, 0.0)) * tolerance;
  report.implication_holds = !report.has_zero || report.max_entry <= report.derived_bound;
  report.confirmed =
      report.nonneg_ok && (!report.has_zero || report.implication_holds || !report.submult_ok);
  return report;
}

ProbeReport theorem_probe(const Kernel& t, const Kernel& f, const std::optional<Kernel>& t_im,
                          double tolerance) {
  require_same_points(t, f, "theorem_probe");
  if (t_im) require_same_points(t, *t_im, "theorem_probe");
  require_strictly_positive(f, "theorem_probe");
  const Kernel* im = t_im ? &*t_im : nullptr;

  ProbeReport report;
  report.tolerance = tolerance;
  const std::size_t n = t.size();

  // ratio_sup(f,g) = max_k |T(g,k)| / F(f,k).
  std::vector<double> ratio(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t g = 0; g < n; ++g) {
      double worst = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        worst = std::max(worst, modulus(t, im, g, k) / f(a, k));
      }
      ratio[a * n + g] = worst;
    }
  }
  report.ratio_sup = Kernel(t.points(), std::move(ratio));

  const Kernel gamma = gamma_kernel(f);
  report.gamma_min = *std::min_element(gamma.values().begin(), gamma.values().end());
  report.gamma_max = *std::max_element(gamma.values().begin(), gamma.values().end());

  report.sincov_defect = sincov_defect_complex(t, im);

  const DefectReport main_check = im == nullptr ? check_main(t, f, tolerance)
                                                : check_main(t, *im, f, tolerance);
  report.main_ok = main_check.violations == 0;
  report.main_residual_max = main_check.max_defect;

  double worst_f = -std::numeric_limits<double>::infinity();
  double worst_gamma = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        worst_f = std::max(worst_f, f(a, c) - f(a, b) * f(b, c));
        worst_gamma =
            std::max(worst_gamma, (f(a, b) * f(b, c) - f(a, c)) - gamma(a, b) * f(a, c));
      }
    }
  }
  report.bound_f_residual_max = worst_f;
  report.bound_f_ok = worst_f <= tolerance;
  report.bound_gamma_residual_max = worst_gamma;
  report.bound_gamma_ok = worst_gamma <= tolerance;

  // Quadruple scan of |T(f,h)T(h,k) - T(f,g)T(g,k)| <= [G(f,g)+G(f,h)] F(f,k),
  // parallel over the outer index with a deterministic merge.
  std::vector<double> per_a(n, -std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t aa = 0; aa < static_cast<std::ptrdiff_t>(n); ++aa) {
    const auto a = static_cast<std::size_t>(aa);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        const double gamma_sum = gamma(a, g) + gamma(a, h);
        for (std::size_t k = 0; k < n; ++k) {
          double lhs;
          if (im == nullptr) {
            lhs = std::abs(t(a, h) * t(h, k) - t(a, g) * t(g, k));
          } else {
            const Kernel& ti = *im;
            const double re1 = t(a, h) * t(h, k) - ti(a, h) * ti(h, k);
            const double im1 = t(a, h) * ti(h, k) + ti(a, h) * t(h, k);
            const double re2 = t(a, g) * t(g, k) - ti(a, g) * ti(g, k);
            const double im2 = t(a, g) * ti(g, k) + ti(a, g) * t(g, k);
            lhs = std::hypot(re1 - re2, im1 - im2);
          }
          worst = std::max(worst, lhs - gamma_sum * f(a, k));
        }
      }
    }
    per_a[a] = worst;
  }
  report.bound_1_residual_max = *std::max_element(per_a.begin(), per_a.end());
  report.bound_1_ok = report.bound_1_residual_max <= tolerance;

  double min_diag = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) min_diag = std::min(min_diag, f(a, a));
  report.min_f_diagonal = min_diag;
  return report;
}

Kernel submultiplicative_closure(const Kernel& f) {
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f(i, j) < 0.0) {
        throw structure_error("submultiplicative_closure requires nonnegative entries");
      }
    }
  }
  std::vector<double> dist = f.values();
  std::vector<double> row_k(n), col_k(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      row_k[i] = dist[k * n + i];
      col_k[i] = dist[i * n + k];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double cand = col_k[i] * row_k[j];
        if (cand < dist[i * n + j]) dist[i * n + j] = cand;
      }
    }
  }
  return Kernel(f.points(), std::move(dist));
}

}  // namespace fieq
