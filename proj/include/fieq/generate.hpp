#pragma once

// Seeded generators producing certified instances: every kind constructs a
// solution of its defining equation or inequality rather than rejection
// sampling, so the outputs pass their defining checks by construction.
// Entries are drawn from a dyadic grid (multiples of 2^-12) wherever
// exactness downstream matters, so sums, differences and closures of
// generated kernels stay exactly representable.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fieq/kernel.hpp"

namespace fieq {

enum class GenKind { sincov, subadditive, submultiplicative, add_pair, main_pair, coboundary };
const char* to_string(GenKind kind);
GenKind gen_kind_from_string(std::string_view name);

struct GeneratorSpec {
  GenKind kind = GenKind::sincov;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  double scale = 1.0;  // must be positive
};

struct GeneratedInstance {
  std::vector<Kernel> kernels;       // one, or two for add_pair / main_pair
  std::vector<std::string> roles;    // "kernel", or {"s","g"} / {"t","f"}
  bool fallback_delta_zero = false;  // main_pair bisection found no usable delta
  std::string warning;
};

GeneratedInstance generate(const GeneratorSpec& spec);

}  // namespace fieq
