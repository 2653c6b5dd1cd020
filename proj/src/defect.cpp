#include "fieq/defect.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace fieq {
namespace {

double triple_defect(DefectKind kind, const Kernel& a, const Kernel* b, const Kernel* t_im,
                     std::size_t i, std::size_t j, std::size_t k) {
  switch (kind) {
    case DefectKind::sincov:
      return std::abs(a(i, k) - a(i, j) * a(j, k));
    case DefectKind::additive:
      return std::abs(a(i, k) - a(i, j) - a(j, k));
    case DefectKind::triangle:
      return std::max(0.0, a(i, k) - a(i, j) - a(j, k));
    case DefectKind::submultiplicative:
      return std::max(0.0, a(i, k) - a(i, j) * a(j, k));
    case DefectKind::main: {
      double lhs;
      if (t_im != nullptr) {
        const Kernel& im = *t_im;
        const double re = a(i, k) - (a(i, j) * a(j, k) - im(i, j) * im(j, k));
        const double ii = im(i, k) - (a(i, j) * im(j, k) + im(i, j) * a(j, k));
        lhs = std::hypot(re, ii);
      } else {
        lhs = std::abs(a(i, k) - a(i, j) * a(j, k));
      }
      const Kernel& f = *b;
      return lhs - (f(i, j) * f(j, k) - f(i, k));
    }
    case DefectKind::add: {
      const Kernel& g = *b;
      const double lhs = std::abs(a(i, k) - a(i, j) - a(j, k));
      return lhs - (g(i, j) + g(j, k) - g(i, k));
    }
  }
  return 0.0;
}

DefectReport finish(DefectKind kind, const Kernel& a, double tolerance,
                    const std::vector<double>& best, const std::vector<std::size_t>& best_j,
                    const std::vector<std::size_t>& best_k, const std::vector<long long>& viol) {
  DefectReport report;
  report.kind = kind;
  report.tolerance = tolerance;
  report.max_defect = -std::numeric_limits<double>::infinity();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    report.violations += viol[i];
    if (best[i] > report.max_defect) {
      report.max_defect = best[i];
      report.argmax_index = {i, best_j[i], best_k[i]};
    }
  }
  for (int p = 0; p < 3; ++p) report.argmax[p] = a.points().label(report.argmax_index[p]);
  return report;
}

DefectReport scan_parallel(DefectKind kind, const Kernel& a, const Kernel* b, const Kernel* t_im,
                           double tolerance) {
  const std::size_t n = a.size();
  std::vector<double> best(n, -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> best_j(n, 0), best_k(n, 0);
  std::vector<long long> viol(n, 0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double local_best = -std::numeric_limits<double>::infinity();
    std::size_t lj = 0, lk = 0;
    long long lv = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double d = triple_defect(kind, a, b, t_im, i, j, k);
        if (d > local_best) {
          local_best = d;
          lj = j;
          lk = k;
        }
        if (d > tolerance) ++lv;
      }
    }
    best[i] = local_best;
    best_j[i] = lj;
    best_k[i] = lk;
    viol[i] = lv;
  }
  return finish(kind, a, tolerance, best, best_j, best_k, viol);
}

void check_arity(DefectKind kind, bool has_second) {
  if (defect_kind_takes_two_kernels(kind) != has_second) {
    throw argument_error(std::string("defect kind ") + to_string(kind) +
                         (has_second ? " takes one kernel" : " takes two kernels"));
  }
}

}  // namespace

const char* to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::sincov: return "sincov";
    case DefectKind::additive: return "additive";
    case DefectKind::triangle: return "triangle";
    case DefectKind::submultiplicative: return "submultiplicative";
    case DefectKind::main: return "main";
    case DefectKind::add: return "add";
  }
  return "?";
}

DefectKind defect_kind_from_string(std::string_view name) {
  if (name == "sincov") return DefectKind::sincov;
  if (name == "additive") return DefectKind::additive;
  if (name == "triangle") return DefectKind::triangle;
  if (name == "submultiplicative") return DefectKind::submultiplicative;
  if (name == "main") return DefectKind::main;
  if (name == "add") return DefectKind::add;
  throw argument_error("unknown defect kind: \"" + std::string(name) + "\"");
}

bool defect_kind_takes_two_kernels(DefectKind kind) {
  return kind == DefectKind::main || kind == DefectKind::add;
}

DefectReport defect_scan(DefectKind kind, const Kernel& a, double tolerance) {
  check_arity(kind, false);
  return scan_parallel(kind, a, nullptr, nullptr, tolerance);
}

DefectReport defect_scan(DefectKind kind, const Kernel& a, const Kernel& b, double tolerance) {
  check_arity(kind, true);
  require_same_points(a, b, "defect_scan");
  return scan_parallel(kind, a, &b, nullptr, tolerance);
}

DefectReport defect_scan_main_complex(const Kernel& t_re, const Kernel& t_im, const Kernel& f,
                                      double tolerance) {
  require_same_points(t_re, t_im, "defect_scan_main_complex");
  require_same_points(t_re, f, "defect_scan_main_complex");
  return scan_parallel(DefectKind::main, t_re, &f, &t_im, tolerance);
}

namespace serial {

namespace {
DefectReport scan_serial(DefectKind kind, const Kernel& a, const Kernel* b, const Kernel* t_im,
                         double tolerance) {
  const std::size_t n = a.size();
  DefectReport report;
  report.kind = kind;
  report.tolerance = tolerance;
  report.max_defect = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double d = triple_defect(kind, a, b, t_im, i, j, k);
        if (d > report.max_defect) {
          report.max_defect = d;
          report.argmax_index = {i, j, k};
        }
        if (d > tolerance) ++report.violations;
      }
    }
  }
  for (int p = 0; p < 3; ++p) report.argmax[p] = a.points().label(report.argmax_index[p]);
  return report;
}
}  // namespace

DefectReport defect_scan(DefectKind kind, const Kernel& a, double tolerance) {
  check_arity(kind, false);
  return scan_serial(kind, a, nullptr, nullptr, tolerance);
}

DefectReport defect_scan(DefectKind kind, const Kernel& a, const Kernel& b, double tolerance) {
  check_arity(kind, true);
  require_same_points(a, b, "defect_scan");
  return scan_serial(kind, a, &b, nullptr, tolerance);
}

DefectReport defect_scan_main_complex(const Kernel& t_re, const Kernel& t_im, const Kernel& f,
                                      double tolerance) {
  require_same_points(t_re, t_im, "defect_scan_main_complex");
  require_same_points(t_re, f, "defect_scan_main_complex");
  return scan_serial(DefectKind::main, t_re, &f, &t_im, tolerance);
}

}  // namespace serial
}  // namespace fieq
