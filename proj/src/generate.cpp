#include "fieq/generate.hpp"

#include <algorithm>
#include <cmath>

#include "fieq/defect.hpp"
#include "fieq/delta_additive.hpp"
#include "fieq/delta_multiplicative.hpp"
#include "fieq/rng.hpp"
#include "fieq/sincov.hpp"
#include "fieq/subadditive.hpp"

namespace fieq {
namespace {

// Nonnegative weights on the dyadic grid with zero diagonal, then closed:
// the result satisfies the triangle inequality by construction and all path
// sums are exact.
Kernel random_subadditive(Rng& rng, const PointSet& points, double scale) {
  const std::size_t n = points.size();
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) values[i * n + j] = rng.uniform_dyadic(0.0, scale);
    }
  }
  return triangle_closure(Kernel(points, std::move(values)));
}

Kernel random_coboundary(Rng& rng, const PointSet& points, double scale) {
  const std::size_t n = points.size();
  std::vector<double> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = rng.uniform_dyadic(-scale, scale);
  return coboundary_kernel(Potential(points, std::move(phi)));
}

// Never-vanishing dyadic potential with random signs.
Kernel random_sincov(Rng& rng, const PointSet& points) {
  const std::size_t n = points.size();
  std::vector<double> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = rng.sign() * rng.uniform_dyadic(0.5, 2.0);
  return quotient_kernel(Potential(points, std::move(phi)));
}

Kernel exp_kernel(const Kernel& k) {
  std::vector<double> values(k.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::exp(k.values()[i]);
  return Kernel(k.points(), std::move(values));
}

Kernel shift_kernel(const Kernel& k, double c) {
  std::vector<double> values(k.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = k.values()[i] + c;
  return Kernel(k.points(), std::move(values));
}

GeneratedInstance gen_main_pair(Rng& rng, const PointSet& points, double scale) {
  const std::size_t n = points.size();

  // F = exp(closure + margin): subadditive with strict slack >= margin, so
  // the right-hand side of the inequality keeps genuine positive room.
  const double margin = 0.25 * scale;
  Kernel weights = Kernel::zero(points);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) weights.at(i, j) = rng.uniform_dyadic(0.0, 0.5 * scale);
    }
  }
  const Kernel f = exp_kernel(shift_kernel(triangle_closure(weights), margin));

  // Positive Sincov base plus a bisection-scaled perturbation.
  std::vector<double> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = rng.uniform_dyadic(0.5, 2.0);
  const Kernel t0 = quotient_kernel(Potential(points, phi));
  Kernel perturbation = Kernel::zero(points);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) perturbation.at(i, j) = rng.uniform_dyadic(-1.0, 1.0);
  }

  auto candidate = [&](double delta) {
    Kernel t = t0;
    for (std::size_t i = 0; i < n * n; ++i) {
      t.at(i / n, i % n) += delta * perturbation.values()[i];
    }
    return t;
  };
  auto acceptable = [&](double delta) {
    const Kernel t = candidate(delta);
    for (double v : t.values()) {
      if (v < 0.0) return false;  // keep T nonnegative for downstream composition
    }
    return defect_scan(DefectKind::main, t, f, 0.0).max_defect <= 0.0;
  };

  double lo = 0.0, hi = scale;
  if (acceptable(hi)) {
    lo = hi;
  } else {
    for (int iter = 0; iter < 60; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (acceptable(mid) ? lo : hi) = mid;
    }
  }

  GeneratedInstance out;
  if (lo < 1e-12) {
    lo = 0.0;
    out.fallback_delta_zero = true;
    out.warning = "perturbation bisection found no usable delta; emitting the exact Sincov base";
  }
  out.kernels = {candidate(lo), f};
  out.roles = {"t", "f"};
  return out;
}

}  // namespace

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::sincov: return "sincov";
    case GenKind::subadditive: return "subadditive";
    case GenKind::submultiplicative: return "submultiplicative";
    case GenKind::add_pair: return "add-pair";
    case GenKind::main_pair: return "main-pair";
    case GenKind::coboundary: return "coboundary";
  }
  return "?";
}

GenKind gen_kind_from_string(std::string_view name) {
  if (name == "sincov") return GenKind::sincov;
  if (name == "subadditive") return GenKind::subadditive;
  if (name == "submultiplicative") return GenKind::submultiplicative;
  if (name == "add-pair") return GenKind::add_pair;
  if (name == "main-pair") return GenKind::main_pair;
  if (name == "coboundary") return GenKind::coboundary;
  throw argument_error("unknown generator kind: \"" + std::string(name) + "\"");
}

GeneratedInstance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw argument_error("generator requires n >= 1");
  if (!(spec.scale > 0.0)) throw argument_error("generator requires positive scale");
  // Seeds are mixed with the kind so different kinds under one seed do not
  // share streams.
  Rng rng = Rng::substream(spec.seed, static_cast<std::uint64_t>(spec.kind) * 0x51u + 1);
  const PointSet points = PointSet::numbered(spec.n);

  GeneratedInstance out;
  switch (spec.kind) {
    case GenKind::sincov:
      out.kernels = {random_sincov(rng, points)};
      out.roles = {"kernel"};
      break;
    case GenKind::coboundary:
      out.kernels = {random_coboundary(rng, points, spec.scale)};
      out.roles = {"kernel"};
      break;
    case GenKind::subadditive:
      out.kernels = {random_subadditive(rng, points, spec.scale)};
      out.roles = {"kernel"};
      break;
    case GenKind::submultiplicative:
      out.kernels = {exp_kernel(random_subadditive(rng, points, spec.scale))};
      out.roles = {"kernel"};
      break;
    case GenKind::add_pair: {
      const Kernel h1 = random_subadditive(rng, points, spec.scale);
      const Kernel h2 = random_subadditive(rng, points, spec.scale);
      const ComposeResult composed = compose_p3(h1, h2);
      out.kernels = {composed.s, composed.g};
      out.roles = {"s", "g"};
      break;
    }
    case GenKind::main_pair:
      out = gen_main_pair(rng, points, spec.scale);
      break;
  }
  return out;
}

}  // namespace fieq
