#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fieq/defect.hpp"
#include "fieq/rng.hpp"
#include "fieq/subadditive.hpp"
#include "helpers.hpp"

using namespace fieq;
using test::kernel3;
using test::make_kernel;

namespace {

Kernel random_nonneg(Rng& rng, std::size_t n, double hi) {
  const PointSet points = PointSet::numbered(n);
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) values[i * n + j] = rng.uniform_dyadic(0.0, hi);
    }
  }
  return Kernel(points, std::move(values));
}

}  // namespace

TEST_CASE("closure shortcuts the 1/1/5 kernel") {
  const Kernel h = kernel3({0, 1, 5, 1, 0, 1, 5, 1, 0});
  const Kernel closed = triangle_closure(h);
  CHECK(closed(0, 2) == 2.0);
  CHECK(closed(2, 0) == 2.0);
  // All other entries unchanged.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if ((i == 0 && j == 2) || (i == 2 && j == 0)) continue;
      CHECK(closed(i, j) == h(i, j));
    }
  }
  CHECK(defect_scan(DefectKind::triangle, closed).max_defect == 0.0);
}

TEST_CASE("closure fixes a metric in place") {
  const Kernel metric = kernel3({0, 1, 1, 1, 0, 1, 1, 1, 0});
  CHECK(triangle_closure(metric) == metric);
}

TEST_CASE("closure reports a negative cycle with its witness") {
  const Kernel h = make_kernel({"a", "b"}, {0, -1, -1, 0});
  try {
    triangle_closure(h);
    FAIL("expected negative_cycle_error");
  } catch (const negative_cycle_error& e) {
    CHECK(e.weight == -2.0);
    CHECK(e.cycle.size() == 3);
    CHECK(e.cycle.front() == e.cycle.back());
  }

  // A negative diagonal entry is a length-1 negative cycle.
  const Kernel diag = make_kernel({"a", "b"}, {-1, 1, 1, 0});
  CHECK_THROWS_AS(triangle_closure(diag), negative_cycle_error);
}

TEST_CASE("closure is idempotent and monotone") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.next_below(8);
    const Kernel h = random_nonneg(rng, n, 4.0);
    const Kernel closed = triangle_closure(h);
    CHECK(triangle_closure(closed) == closed);

    // Entrywise H* <= H.
    for (std::size_t i = 0; i < n * n; ++i) {
      CHECK(closed.values()[i] <= h.values()[i]);
    }

    // Monotone: adding nonnegative dyadic noise can only raise the closure.
    Kernel larger = h;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) larger.at(i, j) += rng.uniform_dyadic(0.0, 1.0);
    }
    const Kernel closed_larger = triangle_closure(larger);
    for (std::size_t i = 0; i < n * n; ++i) {
      CHECK(closed.values()[i] <= closed_larger.values()[i]);
    }
  }
}

TEST_CASE("closure agrees with the serial reference bit-exactly") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.next_below(10);
    const Kernel h = random_nonneg(rng, n, 3.0);
    CHECK(triangle_closure(h) == serial::triangle_closure(h));
  }
}

TEST_CASE("closure matches the walk-enumeration oracle on small integer kernels") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng.next_below(3);
    const PointSet points = PointSet::numbered(n);
    std::vector<double> values(n * n);
    for (auto& v : values) v = static_cast<double>(rng.next_below(4)) - 1.0;  // {-1,0,1,2}
    const Kernel h(points, values);
    const test::WalkOracle oracle = test::closure_walk_oracle(h, n);
    try {
      const Kernel closed = triangle_closure(h);
      REQUIRE_FALSE(oracle.negative_cycle);
      CHECK(closed.values() == oracle.min_walk);
    } catch (const negative_cycle_error&) {
      CHECK(oracle.negative_cycle);
    }
  }
}

TEST_CASE("canonical potentials read closed columns") {
  const Kernel metric = kernel3({0, 1, 1, 1, 0, 1, 1, 1, 0});
  const PotentialFamily family = canonical_potentials(metric);
  REQUIRE(family.members.size() == 3);
  CHECK(family.members[0] == std::vector<double>{0, 1, 1});
  CHECK(family.members[1] == std::vector<double>{1, 0, 1});
  CHECK(family.members[2] == std::vector<double>{1, 1, 0});

  const PotentialFamily shortcut = canonical_potentials(kernel3({0, 1, 5, 1, 0, 1, 5, 1, 0}));
  CHECK(shortcut.members[2] == std::vector<double>{2, 1, 0});

  const PotentialFamily single = canonical_potentials(make_kernel({"a"}, {0}));
  CHECK(single.members == std::vector<std::vector<double>>{{0}});
}

TEST_CASE("sup_representation of explicit families") {
  const PointSet points({"a", "b", "c"});

  const Kernel k1 = sup_representation(PotentialFamily(points, {{0, 1, 3}}));
  CHECK(k1(0, 1) == -1.0);
  CHECK(k1(1, 0) == 1.0);
  CHECK(k1(0, 0) == 0.0);
  CHECK(defect_scan(DefectKind::triangle, k1).max_defect == 0.0);

  const Kernel k2 = sup_representation(PotentialFamily(points, {{0, 1, 3}, {0, -1, -3}}));
  CHECK(k2(0, 1) == 1.0);
  CHECK(k2(1, 0) == 1.0);
  CHECK(k2(0, 2) == 3.0);
  CHECK(k2(2, 0) == 3.0);
  CHECK(k2(1, 2) == 2.0);
  CHECK(k2(2, 1) == 2.0);

  CHECK_THROWS_AS(sup_representation(PotentialFamily(points, {})), argument_error);
}

TEST_CASE("sup_representation always has zero diagonal and tiny triangle defect") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.next_below(6);
    const PointSet points = PointSet::numbered(n);
    std::vector<std::vector<double>> members(1 + rng.next_below(4),
                                             std::vector<double>(n));
    for (auto& m : members) {
      for (auto& v : m) v = rng.uniform(-5.0, 5.0);
    }
    const Kernel k = sup_representation(PotentialFamily(points, members));
    for (std::size_t i = 0; i < n; ++i) CHECK(k(i, i) == 0.0);
    CHECK(defect_scan(DefectKind::triangle, k).max_defect <= 1e-12);
  }
}

TEST_CASE("representation round trip on closed zero-diagonal kernels") {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.next_below(8);
    const Kernel h = triangle_closure(random_nonneg(rng, n, 3.0));
    const PotentialFamily family = canonical_potentials(h);

    // Duality: every member obeys the membership constraint...
    for (const auto& phi : family.members) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(phi[i] - phi[j] <= h(i, j) + 1e-12);
        }
      }
    }
    // ... and the sup over the family attains the closure exactly.
    CHECK(sup_representation(family) == h);
  }
}

TEST_CASE("verify_corollary_ct on the documented instances") {
  const CorollaryCtReport good = verify_corollary_ct(kernel3({0, 1, 1, 1, 0, 1, 1, 1, 0}));
  CHECK(good.ti_holds);
  CHECK(good.zero_diagonal);
  CHECK(good.representation_matches);
  CHECK(good.biconditional_ok);
  CHECK(good.diagonal_convention == "zero");

  const CorollaryCtReport bad = verify_corollary_ct(kernel3({0, 1, 5, 1, 0, 1, 5, 1, 0}));
  CHECK_FALSE(bad.ti_holds);
  CHECK(bad.triangle_defect == 3.0);
  CHECK_FALSE(bad.representation_matches);
  CHECK(bad.biconditional_ok);

  const CorollaryCtReport zero = verify_corollary_ct(make_kernel({"a", "b"}, {0, 0, 0, 0}));
  CHECK(zero.ti_holds);
  CHECK(zero.representation_matches);
  CHECK(zero.biconditional_ok);

  // A negative cycle is a reported hypothesis failure, not an error.
  const CorollaryCtReport neg = verify_corollary_ct(make_kernel({"a", "b"}, {0, -1, -1, 0}));
  CHECK_FALSE(neg.hypothesis_holds);
  CHECK(neg.negative_cycle);
  CHECK_FALSE(neg.representation_matches);
  CHECK(neg.biconditional_ok);
}
