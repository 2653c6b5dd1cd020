#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fieq/delta_multiplicative.hpp"
#include "fieq/generate.hpp"
#include "fieq/json_report.hpp"
#include "fieq/rng.hpp"
#include "fieq/sincov.hpp"
#include "helpers.hpp"

using namespace fieq;
using test::kernel3;
using test::make_kernel;

TEST_CASE("check_main on documented instances") {
  const Kernel t = kernel3({1, 0.5, 0.25, 2, 1, 0.5, 4, 2, 1});
  const PointSet points = t.points();

  const DefectReport sincov_pair = check_main(t, Kernel::constant(points, 1.0));
  CHECK(sincov_pair.max_defect == 0.0);
  CHECK(sincov_pair.violations == 0);

  // Constant T = 1 with F = 2: residual -2 everywhere.
  const DefectReport slack = check_main(Kernel::constant(points, 1.0),
                                        Kernel::constant(points, 2.0));
  CHECK(slack.max_defect == -2.0);
  CHECK(slack.violations == 0);

  // F = 1/2 turns the right side negative: every one of the 27 triples fails.
  const DefectReport fails = check_main(Kernel::constant(points, 1.0),
                                        Kernel::constant(points, 0.5));
  CHECK(fails.max_defect == 0.25);
  CHECK(fails.violations == 27);
}

TEST_CASE("complex check_main via a rotation kernel") {
  // T(f,g) = exp(i (theta_f - theta_g)) solves the Sincov equation with
  // modulus 1; F = 1 leaves no room and the scan must accept.
  const PointSet points = PointSet::numbered(4);
  const std::vector<double> theta{0.3, 1.1, -0.7, 2.4};
  const std::size_t n = points.size();
  std::vector<double> re(n * n), im(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      re[i * n + j] = std::cos(theta[i] - theta[j]);
      im[i * n + j] = std::sin(theta[i] - theta[j]);
    }
  }
  const Kernel t_re(points, re), t_im(points, im);
  const DefectReport r = check_main(t_re, t_im, Kernel::constant(points, 1.0), 1e-9);
  CHECK(r.violations == 0);
  CHECK(r.max_defect <= 1e-12);

  // A real kernel passed with a zero imaginary part reproduces the real scan.
  const Kernel t = kernel3({1, 0.5, 0.25, 2, 1, 0.5, 4, 2, 1});
  const Kernel f = Kernel::constant(t.points(), 1.5);
  const DefectReport real_scan = check_main(t, f);
  const DefectReport complex_scan = check_main(t, Kernel::zero(t.points()), f, kDefaultTolerance);
  CHECK(real_scan.max_defect == complex_scan.max_defect);
  CHECK(real_scan.violations == complex_scan.violations);
}

TEST_CASE("compose_p1 produces submultiplicative sums") {
  const PointSet points = PointSet::numbered(3);

  const ComposeP1Result ones = compose_p1(Kernel::constant(points, 1.0),
                                          Kernel::constant(points, 1.0));
  CHECK(ones.hypotheses_ok);
  CHECK(ones.h == Kernel::constant(points, 2.0));
  CHECK(ones.submultiplicative.max_defect == 0.0);  // 2 <= 4 clamps to zero
  CHECK(ones.min_cross_term == 2.0);

  const Kernel t = kernel3({1, 0.5, 0.25, 2, 1, 0.5, 4, 2, 1});
  const ComposeP1Result sincov = compose_p1(t, Kernel::constant(t.points(), 1.0));
  CHECK(sincov.hypotheses_ok);
  CHECK(sincov.submultiplicative.max_defect <= 1e-12);

  const GeneratedInstance f_only = generate({GenKind::submultiplicative, 3, 5, 1.0});
  const ComposeP1Result absorbed =
      compose_p1(Kernel::zero(f_only.kernels[0].points()), f_only.kernels[0]);
  CHECK(absorbed.h == f_only.kernels[0]);
  CHECK(absorbed.submultiplicative.max_defect <= 1e-12);

  // Hypothesis failures arrive on the warning channel.
  const ComposeP1Result warned = compose_p1(make_kernel({"a"}, {-1.0}),
                                            make_kernel({"a"}, {1.0}));
  CHECK_FALSE(warned.hypotheses_ok);
  CHECK(warned.warning.find("negative entry") != std::string::npos);
}

TEST_CASE("gamma_kernel") {
  const PointSet points = PointSet::numbered(3);
  CHECK(gamma_kernel(Kernel::constant(points, 2.0)) == Kernel::constant(points, 3.0));
  CHECK(gamma_kernel(Kernel::constant(points, 1.0)) == Kernel::zero(points));

  Kernel f = Kernel::constant(make_kernel({"a", "b"}, {1, 1, 1, 1}).points(), 1.0);
  f.at(0, 1) = 2.0;
  f.at(1, 0) = 0.5;
  const Kernel gamma = gamma_kernel(f);
  CHECK(gamma(0, 1) == 0.0);
  CHECK(gamma(1, 0) == 0.0);

  CHECK_THROWS_WITH_AS(gamma_kernel(Kernel::zero(points)), doctest::Contains("nonpositive"),
                       structure_error);

  // Symmetry is exact for any positive F.
  Rng rng(55);
  const Kernel random = test::random_dyadic_kernel(rng, points, 0.25, 4.0);
  const Kernel g = gamma_kernel(random);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(g(i, j) == g(j, i));
  }
}

TEST_CASE("zero_propagation_check") {
  const PointSet points = PointSet::numbered(3);

  const ZeroPropReport all_zero = zero_propagation_check(Kernel::zero(points));
  CHECK(all_zero.has_zero);
  CHECK(all_zero.implication_holds);
  CHECK(all_zero.confirmed);

  const ZeroPropReport vacuous = zero_propagation_check(Kernel::constant(points, 1.0));
  CHECK_FALSE(vacuous.has_zero);
  CHECK(vacuous.confirmed);

  // One zero inside an otherwise-ones kernel cannot satisfy the chain
  // inequality; the report must exhibit a violated triple.
  Kernel f = Kernel::constant(points, 1.0);
  f.at(0, 1) = 0.0;
  const ZeroPropReport witness = zero_propagation_check(f);
  CHECK(witness.has_zero);
  CHECK_FALSE(witness.submult_ok);
  CHECK(witness.submult_witness == std::array<std::string, 3>{"p0", "p1", "p0"});
  CHECK(witness.confirmed);  // not a silent pass: the violation is named
}

TEST_CASE("submultiplicative_closure collapses through a zero entry") {
  const GeneratedInstance inst = generate({GenKind::submultiplicative, 5, 77, 1.0});
  Kernel f = inst.kernels[0];
  f.at(1, 3) = 0.0;
  const Kernel closed = submultiplicative_closure(f);
  for (double v : closed.values()) CHECK(v == 0.0);

  CHECK_THROWS_AS(submultiplicative_closure(make_kernel({"a", "b"}, {1, -1, 1, 1})),
                  structure_error);
}

TEST_CASE("theorem_probe on constant instances") {
  const PointSet points = PointSet::numbered(3);
  const Kernel t = kernel3({1, 0.5, 0.25, 2, 1, 0.5, 4, 2, 1});

  const ProbeReport unit = theorem_probe(t, Kernel::constant(t.points(), 1.0));
  CHECK(unit.sincov_defect == 0.0);
  CHECK(unit.gamma_min == 0.0);
  CHECK(unit.gamma_max == 0.0);
  CHECK(unit.main_ok);
  CHECK(unit.bound_f_ok);
  CHECK(unit.bound_gamma_ok);
  CHECK(unit.bound_1_ok);
  CHECK(unit.min_f_diagonal == 1.0);

  const ProbeReport two = theorem_probe(Kernel::constant(points, 1.0),
                                        Kernel::constant(points, 2.0));
  CHECK(two.gamma_min == 3.0);
  CHECK(two.gamma_max == 3.0);
  CHECK(two.sincov_defect == 0.0);
  CHECK(two.main_ok);
  CHECK(two.bound_f_ok);
  CHECK(two.bound_gamma_ok);
  CHECK(two.bound_1_ok);
  // ratio_sup(f,g) = max_k |T(g,k)| / F(f,k) = 1/2 everywhere.
  CHECK(two.ratio_sup == Kernel::constant(points, 0.5));

  CHECK_THROWS_AS(theorem_probe(t, Kernel::zero(t.points())), structure_error);
}

TEST_CASE("theorem_probe accepts generated pairs and is deterministic") {
  Rng rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    const GeneratedInstance inst = generate({GenKind::main_pair, 4, rng.next_u64(), 1.0});
    const Kernel& t = inst.kernels[0];
    const Kernel& f = inst.kernels[1];
    const ProbeReport probe = theorem_probe(t, f);
    CHECK(probe.main_ok);
    CHECK(probe.bound_f_ok);
    CHECK(probe.bound_gamma_ok);
    CHECK(probe.bound_1_ok);
    CHECK(probe.gamma_min >= 0.0);
    CHECK(probe.min_f_diagonal >= 1.0);

    // Diagonal consequence of the inequality at f = g = h.
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double lhs = std::abs(t(i, i) - t(i, i) * t(i, i));
      const double rhs = f(i, i) * f(i, i) - f(i, i);
      CHECK(lhs <= rhs + 1e-9);
    }

    const ProbeReport again = theorem_probe(t, f);
    CHECK(to_json(probe).dump() == to_json(again).dump());
  }
}
