#include "fieq/subadditive.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace fieq {
namespace {

constexpr double kCycleThreshold = -1e-12;  // strictly below flags a negative cycle

struct ClosureState {
  std::vector<double> dist;        // row-major n*n
  std::vector<std::size_t> next;   // next[i*n+j]: vertex after i on the path i -> j
};

// Relaxation pass k uses pre-pass snapshots of row k and column k, so the
// update over (i, j) is race-free and identical for any thread count.  The
// parallel path keeps one thread team alive across all n passes; below the
// size threshold the team overhead outweighs the n^2 pass work.
constexpr std::size_t kParallelClosureThreshold = 64;

ClosureState closed_distances(const Kernel& h, bool parallel) {
  const std::size_t n = h.size();
  ClosureState st;
  st.dist = h.values();
  st.next.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) st.next[i * n + j] = j;
  }
  std::vector<double> row_k(n), col_k(n);
  std::vector<std::size_t> next_col_k(n);

  auto snapshot = [&](std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      row_k[i] = st.dist[k * n + i];
      col_k[i] = st.dist[i * n + k];
      next_col_k[i] = st.next[i * n + k];
    }
  };
  auto relax_row = [&](std::size_t i) {
    const double via_i = col_k[i];
    const std::size_t hop = next_col_k[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double cand = via_i + row_k[j];
      if (cand < st.dist[i * n + j]) {
        st.dist[i * n + j] = cand;
        st.next[i * n + j] = hop;
      }
    }
  };

  if (parallel && n >= kParallelClosureThreshold) {
#pragma omp parallel
    for (std::size_t k = 0; k < n; ++k) {
#pragma omp single
      snapshot(k);
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        relax_row(static_cast<std::size_t>(i));
      }
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      snapshot(k);
      for (std::size_t i = 0; i < n; ++i) relax_row(i);
    }
  }
  return st;
}

[[noreturn]] void throw_negative_cycle(const Kernel& h, const ClosureState& st,
                                       std::size_t start) {
  const std::size_t n = h.size();
  std::vector<std::string> cycle;
  cycle.push_back(h.points().label(start));
  double weight = 0.0;
  std::size_t v = start;
  for (std::size_t steps = 0; steps <= n; ++steps) {
    const std::size_t w = st.next[v * n + start];
    weight += h(v, w);
    cycle.push_back(h.points().label(w));
    v = w;
    if (v == start) break;
  }
  std::ostringstream msg;
  msg << "negative cycle ";
  for (std::size_t i = 0; i < cycle.size(); ++i) msg << (i ? " -> " : "") << cycle[i];
  msg << " (weight " << weight << ")";
  throw negative_cycle_error(msg.str(), std::move(cycle), weight);
}

Kernel closure_impl(const Kernel& h, bool parallel) {
  const std::size_t n = h.size();
  ClosureState st = closed_distances(h, parallel);
  for (std::size_t f = 0; f < n; ++f) {
    if (st.dist[f * n + f] < kCycleThreshold) throw_negative_cycle(h, st, f);
  }
  return Kernel(h.points(), std::move(st.dist));
}

}  // namespace

Kernel triangle_closure(const Kernel& h) { return closure_impl(h, true); }

namespace serial {
Kernel triangle_closure(const Kernel& h) { return closure_impl(h, false); }
}  // namespace serial

PotentialFamily canonical_potentials(const Kernel& h) {
  const Kernel closed = triangle_closure(h);
  const std::size_t n = h.size();
  std::vector<std::vector<double>> members(n, std::vector<double>(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < n; ++x) members[g][x] = closed(x, g);
  }
  return PotentialFamily(h.points(), std::move(members));
}

Kernel sup_representation(const PotentialFamily& family) {
  if (family.members.empty()) throw argument_error("sup_representation: empty family");
  const std::size_t n = family.points.size();
  std::vector<double> values(n * n, -std::numeric_limits<double>::infinity());
  for (const auto& phi : family.members) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        values[i * n + j] = std::max(values[i * n + j], phi[i] - phi[j]);
      }
    }
  }
  return Kernel(family.points, std::move(values));
}

CorollaryCtReport verify_corollary_ct(const Kernel& h, double tolerance) {
  CorollaryCtReport report;
  report.tolerance = tolerance;

  const DefectReport tri = defect_scan(DefectKind::triangle, h, tolerance);
  report.triangle_defect = tri.max_defect;
  report.triangle_witness = tri.argmax;
  report.ti_holds = tri.violations == 0;

  const std::size_t n = h.size();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(h(i, i)));
  report.max_diagonal_abs = max_diag;
  report.zero_diagonal = max_diag <= tolerance;
  report.diagonal_convention = report.zero_diagonal ? "zero" : "self-loop";
  report.hypothesis_holds = report.ti_holds && report.zero_diagonal;

  try {
    const Kernel rep = sup_representation(canonical_potentials(h));
    report.representation_deviation = max_abs_diff(rep, h);
    report.representation_matches = report.representation_deviation <= tolerance;
  } catch (const negative_cycle_error& e) {
    report.negative_cycle = true;
    report.cycle = e.cycle;
    report.cycle_weight = e.weight;
    report.representation_matches = false;
    report.representation_deviation = std::numeric_limits<double>::infinity();
  }

  report.biconditional_ok = report.hypothesis_holds == report.representation_matches;
  return report;
}

}  // namespace fieq
