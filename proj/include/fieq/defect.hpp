#pragma once

// Exhaustive defect scans over all n^3 ordered triples (repeats included).
// Six kinds of residual are supported:
//
//   sincov            |T(f,h) - T(f,g) T(g,h)|
//   additive          |S(f,h) - S(f,g) - S(g,h)|
//   triangle          max(0, H(f,h) - H(f,g) - H(g,h))
//   submultiplicative max(0, H(f,h) - H(f,g) H(g,h))
//   main              |T(f,h) - T(f,g) T(g,h)| - (F(f,g) F(g,h) - F(f,h))
//   add               |S(f,h) - S(f,g) - S(g,h)| - (G(f,g) + G(g,h) - G(f,h))
//
// The first four take one kernel, the last two take a pair.  Scans are
// deterministic: the argmax is the lexicographically first index triple
// attaining the maximum, regardless of thread count.  fieq::serial holds a
// plain triple-loop reference implementation kept for testing and for the
// benchmark target.

#include <array>
#include <string>
#include <string_view>

#include "fieq/kernel.hpp"

namespace fieq {

inline constexpr double kDefaultTolerance = 1e-9;

enum class DefectKind { sincov, additive, triangle, submultiplicative, main, add };

const char* to_string(DefectKind kind);
DefectKind defect_kind_from_string(std::string_view name);
bool defect_kind_takes_two_kernels(DefectKind kind);

struct DefectReport {
  DefectKind kind = DefectKind::sincov;
  double max_defect = 0.0;
  std::array<std::size_t, 3> argmax_index{0, 0, 0};
  std::array<std::string, 3> argmax;
  long long violations = 0;  // triples with defect > tolerance
  double tolerance = kDefaultTolerance;

  bool holds() const { return violations == 0; }
};

// One-kernel kinds; throws argument_error for main/add.
DefectReport defect_scan(DefectKind kind, const Kernel& a, double tolerance = kDefaultTolerance);

// Two-kernel kinds main/add; first argument is T resp. S, second F resp. G.
DefectReport defect_scan(DefectKind kind, const Kernel& a, const Kernel& b,
                         double tolerance = kDefaultTolerance);

// Kind-main residual for complex T given as a (real, imaginary) pair; the
// scan uses the complex modulus on the left-hand side.
DefectReport defect_scan_main_complex(const Kernel& t_re, const Kernel& t_im, const Kernel& f,
                                      double tolerance = kDefaultTolerance);

namespace serial {
DefectReport defect_scan(DefectKind kind, const Kernel& a, double tolerance = kDefaultTolerance);
DefectReport defect_scan(DefectKind kind, const Kernel& a, const Kernel& b,
                         double tolerance = kDefaultTolerance);
DefectReport defect_scan_main_complex(const Kernel& t_re, const Kernel& t_im, const Kernel& f,
                                      double tolerance = kDefaultTolerance);
}  // namespace serial

}  // namespace fieq
