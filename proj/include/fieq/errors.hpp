#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fieq {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments: mismatched point sets, empty families, invalid sizes.
struct argument_error : error {
  using error::error;
};

// File and format problems; message names the offending location.
struct io_error : error {
  using error::error;
};

// Structural infeasibility: vanishing factor, nonpositive entry where
// positivity is required, base diagonal not 1.
struct structure_error : error {
  using error::error;
};

// A reachable cycle with negative total weight; carries one witness cycle
// as a closed label sequence (first label repeated at the end).
struct negative_cycle_error : structure_error {
  negative_cycle_error(std::string msg, std::vector<std::string> cycle_labels, double cycle_weight)
      : structure_error(std::move(msg)), cycle(std::move(cycle_labels)), weight(cycle_weight) {}

  std::vector<std::string> cycle;
  double weight;
};

}  // namespace fieq
