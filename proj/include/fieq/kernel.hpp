#pragma once

// Domain and kernel representation shared by every module: a finite labeled
// point set, dense square kernels K(f,g) over it, and potentials (real
// vectors) with their families.  Kernels are immutable once handed to a scan;
// all scans are pure functions over read-only data.

#include <cstddef>
#include <string>
#include <vector>

#include "fieq/errors.hpp"

namespace fieq {

// Ordered list of distinct labels; the order is fixed and defines matrix
// indexing (values[i][j] = K(labels[i], labels[j])).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::string> labels);

  // n points labeled prefix + "0" ... prefix + "n-1".
  static PointSet numbered(std::size_t n, const std::string& prefix = "p");

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label; throws argument_error if unknown.
  std::size_t index(const std::string& label) const;

  bool operator==(const PointSet& other) const { return labels_ == other.labels_; }
  bool operator!=(const PointSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
};

// Dense n-by-n kernel of finite reals over a PointSet, row-major.
class Kernel {
 public:
  Kernel() = default;

  // Validates: n >= 1, values square of matching size, every entry finite.
  Kernel(PointSet points, std::vector<double> values);

  static Kernel constant(const PointSet& points, double value);
  static Kernel zero(const PointSet& points) { return constant(points, 0.0); }

  std::size_t size() const { return points_.size(); }
  const PointSet& points() const { return points_; }
  const std::vector<double>& values() const { return values_; }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * points_.size() + j]; }
  double& at(std::size_t i, std::size_t j) { return values_[i * points_.size() + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * points_.size() + j]; }

  bool operator==(const Kernel& other) const {
    return points_ == other.points_ && values_ == other.values_;
  }

 private:
  PointSet points_;
  std::vector<double> values_;
};

// Real vector over a PointSet.
struct Potential {
  PointSet points;
  std::vector<double> values;

  Potential() = default;
  Potential(PointSet pts, std::vector<double> vals);

  std::size_t size() const { return values.size(); }
  double operator()(std::size_t i) const { return values[i]; }
};

// A list of potentials over one shared PointSet.
struct PotentialFamily {
  PointSet points;
  std::vector<std::vector<double>> members;

  PotentialFamily() = default;
  PotentialFamily(PointSet pts, std::vector<std::vector<double>> mems);

  std::size_t size() const { return members.size(); }
};

// Largest entrywise |a - b|; kernels must share a point set.
double max_abs_diff(const Kernel& a, const Kernel& b);

// Throws argument_error unless both kernels live on the same PointSet.
void require_same_points(const Kernel& a, const Kernel& b, const char* what);

}  // namespace fieq
