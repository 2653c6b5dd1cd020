#pragma once

// Bit-exact file I/O.  Kernel files are JSON objects
//   {"points": ["a","b"], "values": [[...],[...]]}
// with values[i][j] = K(points[i], points[j]) row-major, or CSV (header row
// of labels, then n rows of n values) when the path ends in ".csv".
// Writers emit canonical JSON: sorted keys, shortest round-trip decimals, so
// load(write(k)) reproduces k bit-exactly and reports are diff-stable.

#include <optional>
#include <string>

#include "fieq/gruss.hpp"
#include "fieq/kernel.hpp"

namespace fieq {

Kernel load_kernel(const std::string& path);
void write_kernel(const Kernel& k, const std::string& path);

Potential load_potential(const std::string& path);
void write_potential(const Potential& p, const std::string& path);

PotentialFamily load_family(const std::string& path);
void write_family(const PotentialFamily& f, const std::string& path);

// {"a": 0.0, "b": 1.0, "values": [...], "bounds": [m, M]}; bounds optional.
FunctionSample load_function_sample(const std::string& path);
void write_function_sample(const FunctionSample& s, const std::string& path);

}  // namespace fieq
