#include "fieq/delta_additive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "fieq/simplex.hpp"

namespace fieq {
namespace {

Kernel combine(const Kernel& a, const Kernel& b, double sa, double sb) {
  require_same_points(a, b, "combine");
  std::vector<double> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = sa * a.values()[i] + sb * b.values()[i];
  }
  return Kernel(a.points(), std::move(values));
}

Kernel add_kernels(const Kernel& a, const Kernel& b) {
  std::vector<double> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values()[i] + b.values()[i];
  return Kernel(a.points(), std::move(values));
}

Kernel sub_kernels(const Kernel& a, const Kernel& b) {
  std::vector<double> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values()[i] - b.values()[i];
  return Kernel(a.points(), std::move(values));
}

std::string witness_text(const DefectReport& r) {
  return "(" + r.argmax[0] + ", " + r.argmax[1] + ", " + r.argmax[2] + ")";
}

// Sup of differences over one family.
Kernel sup_diff(const PotentialFamily& family) {
  if (family.members.empty()) throw argument_error("build_ch: empty family");
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

}  // namespace

DefectReport check_add(const Kernel& s, const Kernel& g, double tolerance) {
  return defect_scan(DefectKind::add, s, g, tolerance);
}

DecomposeResult decompose_p2(const Kernel& s, const Kernel& g, double tolerance) {
  require_same_points(s, g, "decompose_p2");
  DecomposeResult result;
  const DefectReport hyp = check_add(s, g, tolerance);
  result.hypothesis_ok = hyp.violations == 0;
  if (!result.hypothesis_ok) {
    std::ostringstream w;
    w << "(S, G) violates the additive inequality: residual " << hyp.max_defect << " at "
      << witness_text(hyp);
    result.warning = w.str();
  }
  result.h1 = add_kernels(g, s);
  result.h2 = sub_kernels(g, s);
  result.h1_triangle = defect_scan(DefectKind::triangle, result.h1, tolerance);
  result.h2_triangle = defect_scan(DefectKind::triangle, result.h2, tolerance);

  const Kernel s_back = combine(result.h1, result.h2, 0.5, -0.5);
  const Kernel g_back = combine(result.h1, result.h2, 0.5, 0.5);
  result.inverse_exact = s_back == s && g_back == g;
  return result;
}

ComposeResult compose_p3(const Kernel& h1, const Kernel& h2, double tolerance) {
  require_same_points(h1, h2, "compose_p3");
  ComposeResult result;
  const DefectReport t1 = defect_scan(DefectKind::triangle, h1, tolerance);
  const DefectReport t2 = defect_scan(DefectKind::triangle, h2, tolerance);
  result.hypotheses_ok = t1.violations == 0 && t2.violations == 0;
  if (!result.hypotheses_ok) {
    std::ostringstream w;
    w << "subadditivity violated by " << (t1.violations ? "H1" : "H2") << ": defect "
      << (t1.violations ? t1.max_defect : t2.max_defect) << " at "
      << witness_text(t1.violations ? t1 : t2);
    result.warning = w.str();
  }
  result.s = sub_kernels(h1, h2);
  result.g = add_kernels(h1, h2);
  result.add_check = check_add(result.s, result.g, tolerance);
  result.note =
      "assignment S = H1 - H2, G = H1 + H2 (inverse of H1 = G + S, H2 = G - S up to a factor 2); "
      "the swapped assignment S = H1 + H2, G = H1 - H2 does not solve the inequality";
  return result;
}

const char* to_string(LPObjective o) { return o == LPObjective::sum ? "sum" : "max"; }

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible_guard: return "infeasible-guard";
    case LPStatus::numerical_failure: return "numerical-failure";
  }
  return "?";
}

LPOutcome synthesize_min_g(const Kernel& s, const SynthesisOptions& options) {
  const std::size_t n = s.size();
  if (n > 20) {
    throw argument_error("synthesize_min_g caps the point set at n = 20 (the dense tableau "
                         "carries n^3 constraint rows)");
  }
  LPOutcome outcome;
  outcome.objective = options.objective;

  // Variable map: -1 marks entries fixed to zero.
  std::vector<long> var(n * n, -1);
  std::size_t num_entry_vars = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (options.zero_diagonal && i == j) continue;
      if (options.symmetric && j < i) {
        var[i * n + j] = var[j * n + i];
        continue;
      }
      var[i * n + j] = static_cast<long>(num_entry_vars++);
    }
  }
  const bool use_aux = options.objective == LPObjective::max;
  const std::size_t num_vars = num_entry_vars + (use_aux ? 1 : 0);
  const std::size_t aux = num_entry_vars;

  // D(f,g,h) = |S(f,h) - S(f,g) - S(g,h)|, the residual the majorant must
  // dominate on every ordered triple.
  auto defect = [&](std::size_t f, std::size_t g, std::size_t h) {
    return std::abs(s(f, h) - s(f, g) - s(g, h));
  };

  // Deduplicate identical constraint rows, keeping the largest right side.
  std::map<std::vector<std::pair<long, double>>, double> unique_rows;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        const double d = defect(f, g, h);
        std::map<long, double> coeff;
        for (auto [idx, c] : {std::pair<long, double>{var[f * n + g], 1.0},
                              {var[g * n + h], 1.0},
                              {var[f * n + h], -1.0}}) {
          if (idx >= 0) coeff[idx] += c;
        }
        std::vector<std::pair<long, double>> row;
        for (auto& [idx, c] : coeff) {
          if (c != 0.0) row.emplace_back(idx, c);
        }
        if (row.empty()) {
          if (d > 1e-12) {
            std::ostringstream note;
            note << "constraint for triple (" << s.points().label(f) << ", "
                 << s.points().label(g) << ", " << s.points().label(h)
                 << ") reduces to 0 >= " << d << " under the requested flags";
            outcome.status = LPStatus::infeasible_guard;
            outcome.note = note.str();
            return outcome;
          }
          continue;
        }
        auto [it, inserted] = unique_rows.emplace(std::move(row), d);
        if (!inserted) it->second = std::max(it->second, d);
      }
    }
  }

  SimplexProblem problem;
  problem.num_vars = num_vars;
  problem.objective.assign(num_vars, 0.0);
  if (use_aux) {
    problem.objective[aux] = 1.0;
  } else {
    // Sum over ordered entries: a shared symmetric variable counts twice.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (var[i * n + j] >= 0) problem.objective[var[i * n + j]] += 1.0;
      }
    }
  }
  for (const auto& [row, rhs] : unique_rows) {
    std::vector<double> dense(num_vars, 0.0);
    for (auto [idx, c] : row) dense[idx] = c;
    problem.rows.push_back(std::move(dense));
    problem.rhs.push_back(rhs);
  }
  if (use_aux) {
    // aux bounds every entry: aux - G(i,j) >= 0.  The shared variables under
    // the symmetric flag dedupe naturally.
    for (std::size_t v = 0; v < num_entry_vars; ++v) {
      std::vector<double> dense(num_vars, 0.0);
      dense[aux] = 1.0;
      dense[v] = -1.0;
      problem.rows.push_back(std::move(dense));
      problem.rhs.push_back(0.0);
    }
    // aux >= 0 so the max objective of an all-zero optimum is well defined:
    // G(f,f) >= D(f,f,f) >= 0 already forces this unless the diagonal is
    // fixed, in which case entries may all be zero.
    std::vector<double> dense(num_vars, 0.0);
    dense[aux] = 1.0;
    problem.rows.push_back(std::move(dense));
    problem.rhs.push_back(0.0);
  }

  const SimplexResult lp = simplex_minimize(problem);
  outcome.iterations = lp.iterations;
  switch (lp.status) {
    case SimplexStatus::optimal:
      break;
    case SimplexStatus::infeasible:
      outcome.status = LPStatus::infeasible_guard;
      outcome.note =
          "phase 1 failed although a large constant majorant is always feasible; this indicates "
          "a solver bug";
      return outcome;
    case SimplexStatus::unbounded:
      outcome.status = LPStatus::numerical_failure;
      outcome.note = "simplex reported an unbounded objective, which the constraint sum bound "
                     "rules out";
      return outcome;
    case SimplexStatus::iteration_limit:
      outcome.status = LPStatus::numerical_failure;
      outcome.note = "simplex stalled at the iteration cap after " +
                     std::to_string(lp.iterations) + " pivots";
      return outcome;
  }

  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      values[i * n + j] = var[i * n + j] >= 0 ? lp.x[var[i * n + j]] : 0.0;
    }
  }
  outcome.g = Kernel(s.points(), std::move(values));

  double violation = 0.0;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        const double slack =
            outcome.g(f, g) + outcome.g(g, h) - outcome.g(f, h) - defect(f, g, h);
        violation = std::max(violation, -slack);
      }
    }
  }
  outcome.max_constraint_violation = violation;

  if (options.objective == LPObjective::sum) {
    double total = 0.0;
    for (double v : outcome.g.values()) total += v;
    outcome.value = total;
  } else {
    double worst = 0.0;
    for (double v : outcome.g.values()) worst = std::max(worst, v);
    outcome.value = std::max(worst, 0.0);
  }
  outcome.status = violation <= 1e-7 ? LPStatus::optimal : LPStatus::numerical_failure;
  if (outcome.status == LPStatus::numerical_failure) {
    outcome.note = "solution violates a triple constraint by " + std::to_string(violation);
  }
  return outcome;
}

BuildChResult build_ch(const PotentialFamily& f1, const PotentialFamily& f2, double tolerance) {
  if (f1.points != f2.points) throw argument_error("build_ch: families on different point sets");
  BuildChResult result;
  const Kernel p = sup_diff(f1);
  const Kernel q = sup_diff(f2);
  result.s = sub_kernels(p, q);
  result.g = add_kernels(p, q);
  result.add_check = check_add(result.s, result.g, tolerance);

  const std::size_t n = f1.points.size();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    max_diag = std::max(max_diag, std::abs(result.s(i, i)));
    max_diag = std::max(max_diag, std::abs(result.g(i, i)));
  }
  result.max_diagonal_abs = max_diag;
  result.zero_diagonal = max_diag <= tolerance;

  // Membership of each family in the matching half (G +/- S)/2.
  double worst = 0.0;
  auto membership = [&](const PotentialFamily& fam, double sign) {
    double fam_worst = 0.0;
    for (const auto& phi : fam.members) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double half = 0.5 * (result.g(i, j) + sign * result.s(i, j));
          fam_worst = std::max(fam_worst, (phi[i] - phi[j]) - half);
        }
      }
    }
    worst = std::max(worst, fam_worst);
    return fam_worst <= tolerance;
  };
  result.family1_contained = membership(f1, +1.0);
  result.family2_contained = membership(f2, -1.0);
  result.max_membership_violation = std::max(worst, 0.0);
  return result;
}

}  // namespace fieq
