#include "fieq/gruss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fieq/rng.hpp"

namespace fieq {
namespace {

constexpr double kMinNorm = 1e-6;       // rejection threshold for random vectors
constexpr long long kChunk = 8192;      // trials per deterministic substream

double dot(std::span<const double> u, std::span<const double> v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

double clamped_cosine(double value, int& clamps) {
  if (value > 1.0) {
    ++clamps;
    return 1.0;
  }
  if (value < -1.0) {
    ++clamps;
    return -1.0;
  }
  return value;
}

std::vector<double> random_vector(Rng& rng, int dim) {
  std::vector<double> v(dim);
  while (true) {
    for (int i = 0; i < dim; ++i) v[i] = rng.normal();
    if (std::sqrt(dot(v, v)) >= kMinNorm) return v;
  }
}

struct ChunkResult {
  double max_defect = -std::numeric_limits<double>::infinity();
  long long argmax_trial = 0;
  std::array<std::vector<double>, 3> argmax_triple;
  double max_bound_residual = -std::numeric_limits<double>::infinity();
  long long clamp_count = 0;
};

ChunkResult scan_chunk(int dim, std::uint64_t seed, std::uint64_t chunk_index, long long first,
                       long long count) {
  Rng rng = Rng::substream(seed, chunk_index + 1);
  ChunkResult r;
  for (long long t = 0; t < count; ++t) {
    std::vector<double> f = random_vector(rng, dim);
    std::vector<double> g = random_vector(rng, dim);
    std::vector<double> h = random_vector(rng, dim);
    const RichardTripleEval e = richard_eval(f, g, h);
    r.clamp_count += e.clamps;
    if (e.defect > r.max_defect) {
      r.max_defect = e.defect;
      r.argmax_trial = first + t;
      r.argmax_triple = {std::move(f), std::move(g), std::move(h)};
    }
    r.max_bound_residual = std::max(r.max_bound_residual, e.bound_residual);
  }
  return r;
}

RichardReport richard_scan_impl(int dim, long long trials, std::uint64_t seed, bool parallel) {
  if (dim < 2) throw argument_error("richard_scan requires dim >= 2");
  if (trials < 1) throw argument_error("richard_scan requires trials >= 1");

  RichardReport report;
  report.dim = dim;
  report.trials = trials;
  report.seed = seed;
  report.max_defect = -std::numeric_limits<double>::infinity();
  report.max_bound_residual = -std::numeric_limits<double>::infinity();

  // The two-dimensional analytic equality case e1, (1,1), e2 is planted
  // ahead of the random trials.
  if (dim == 2) {
    const std::vector<double> e1{1.0, 0.0}, diag{1.0, 1.0}, e2{0.0, 1.0};
    const RichardTripleEval e = richard_eval(e1, diag, e2);
    report.planted_included = true;
    report.planted_defect = e.defect;
    report.clamp_count += e.clamps;
    report.max_defect = e.defect;
    report.argmax_trial = -1;
    report.argmax_triple = {e1, diag, e2};
    report.max_bound_residual = e.bound_residual;
  }

  const long long chunks = (trials + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
      const long long first = c * kChunk;
      const long long count = std::min(kChunk, trials - first);
      results[static_cast<std::size_t>(c)] =
          scan_chunk(dim, seed, static_cast<std::uint64_t>(c), first, count);
    }
  } else {
    for (long long c = 0; c < chunks; ++c) {
      const long long first = c * kChunk;
      const long long count = std::min(kChunk, trials - first);
      results[static_cast<std::size_t>(c)] =
          scan_chunk(dim, seed, static_cast<std::uint64_t>(c), first, count);
    }
  }

  // Merge in chunk order; earlier trials win ties.
  for (const ChunkResult& r : results) {
    report.clamp_count += r.clamp_count;
    if (r.max_defect > report.max_defect) {
      report.max_defect = r.max_defect;
      report.argmax_trial = r.argmax_trial;
      report.argmax_triple = r.argmax_triple;
    }
    report.max_bound_residual = std::max(report.max_bound_residual, r.max_bound_residual);
  }
  return report;
}

}  // namespace

const char* to_string(QuadratureRule rule) {
  return rule == QuadratureRule::simpson ? "simpson" : "trapezoid";
}

void FunctionSample::validate() const {
  if (!(a < b)) throw argument_error("function sample requires a < b");
  if (values.size() < 3) throw argument_error("function sample requires N >= 2 intervals");
  for (double v : values) {
    if (!std::isfinite(v)) throw argument_error("non-finite sample value");
  }
  if (declared_bounds) {
    const auto [lo, hi] = *declared_bounds;
    if (!(lo <= hi)) throw argument_error("declared bounds require m <= M");
    for (double v : values) {
      if (v < lo || v > hi) {
        std::ostringstream msg;
        msg << "sample value " << v << " escapes declared bounds [" << lo << ", " << hi << "]";
        throw argument_error(msg.str());
      }
    }
  }
}

MeanResult integral_mean(const FunctionSample& f) {
  f.validate();
  const std::size_t n = f.intervals();
  MeanResult result;
  result.intervals = n;
  if (n % 2 == 0) {
    // Composite Simpson; the mean is (sum of weighted samples) / (3N), which
    // keeps exactly representable sums exact.
    double acc = f.values.front() + f.values.back();
    for (std::size_t i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f.values[i];
    result.value = acc / (3.0 * static_cast<double>(n));
    result.rule = QuadratureRule::simpson;
  } else {
    double acc = 0.5 * f.values.front() + 0.5 * f.values.back();
    for (std::size_t i = 1; i < n; ++i) acc += f.values[i];
    result.value = acc / static_cast<double>(n);
    result.rule = QuadratureRule::trapezoid;
  }
  return result;
}

GrussReport gruss_check(const FunctionSample& f, const FunctionSample& g, double tolerance) {
  f.validate();
  g.validate();
  if (f.a != g.a || f.b != g.b || f.values.size() != g.values.size()) {
    throw argument_error("gruss_check requires samples on the same grid");
  }

  GrussReport report;
  report.tolerance = tolerance;

  FunctionSample fg;
  fg.a = f.a;
  fg.b = f.b;
  fg.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) fg.values[i] = f.values[i] * g.values[i];

  const MeanResult mf = integral_mean(f);
  const MeanResult mg = integral_mean(g);
  const MeanResult mfg = integral_mean(fg);
  report.mean_f = mf.value;
  report.mean_g = mg.value;
  report.mean_fg = mfg.value;
  report.rule = mf.rule;

  auto bounds_of = [](const FunctionSample& s, bool& declared) -> std::array<double, 2> {
    if (s.declared_bounds) {
      declared = true;
      return *s.declared_bounds;
    }
    declared = false;
    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    return {*lo, *hi};
  };
  const auto bf = bounds_of(f, report.bounds_declared_f);
  const auto bg = bounds_of(g, report.bounds_declared_g);
  report.m_f = bf[0];
  report.big_m_f = bf[1];
  report.m_g = bg[0];
  report.big_m_g = bg[1];

  report.lhs = std::abs(mfg.value - mf.value * mg.value);
  report.rhs = 0.25 * (bf[1] - bf[0]) * (bg[1] - bg[0]);
  report.slack = report.rhs - report.lhs;
  report.holds = report.slack >= -tolerance;
  return report;
}

double cosine_functional(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw argument_error("cosine_functional: dimension mismatch");
  if (u.empty()) throw argument_error("cosine_functional: empty vectors");
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  if (uu == 0.0 || vv == 0.0) throw argument_error("cosine_functional: zero vector");
  int clamps = 0;
  return clamped_cosine(dot(u, v) / std::sqrt(uu * vv), clamps);
}

double gruss_expression(const VectorTriple& t, bool normalize_g) {
  if (t.f.size() != t.g.size() || t.g.size() != t.h.size()) {
    throw argument_error("gruss_expression: dimension mismatch");
  }
  const double gg = dot(t.g, t.g);
  if (gg == 0.0) throw argument_error("gruss_expression: zero middle vector");
  const double fh = dot(t.f, t.h);
  const double fg = dot(t.f, t.g);
  const double gh = dot(t.g, t.h);
  if (normalize_g) {
    if (std::abs(std::sqrt(gg) - 1.0) > 1e-9) {
      throw argument_error("gruss_expression: |g| must be 1 for the normalized variant");
    }
    return std::abs(fh - fg * gh);
  }
  return std::abs(fh - fg * gh / gg);
}

RichardTripleEval richard_eval(std::span<const double> f, std::span<const double> g,
                               std::span<const double> h) {
  RichardTripleEval e;
  const double ff = dot(f, f);
  const double hh = dot(h, h);
  const double gg = dot(g, g);
  if (ff == 0.0 || gg == 0.0 || hh == 0.0) {
    throw argument_error("richard_eval: zero vector");
  }
  const double nf = std::sqrt(ff);
  const double nh = std::sqrt(hh);
  const double t_fh = dot(f, h) / (nf * nh);
  // Product term through <g,g>: no square root for the middle vector.
  const double prod = dot(f, g) * dot(g, h) / (nf * gg * nh);
  e.defect = std::abs(t_fh - prod);

  const double ng = std::sqrt(gg);
  const double c_fg = clamped_cosine(dot(f, g) / (nf * ng), e.clamps);
  const double c_gh = clamped_cosine(dot(g, h) / (ng * nh), e.clamps);
  const double sin_fg = std::sqrt(std::max(0.0, 1.0 - c_fg * c_fg));
  const double sin_gh = std::sqrt(std::max(0.0, 1.0 - c_gh * c_gh));
  e.bound_residual = e.defect - sin_fg * sin_gh;
  return e;
}

RichardReport richard_scan(int dim, long long trials, std::uint64_t seed) {
  return richard_scan_impl(dim, trials, seed, true);
}

namespace serial {
RichardReport richard_scan(int dim, long long trials, std::uint64_t seed) {
  return richard_scan_impl(dim, trials, seed, false);
}
}  // namespace serial

}  // namespace fieq
