#include "fieq/kernel.hpp"

#include <cmath>
#include <unordered_set>

namespace fieq {

PointSet::PointSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw argument_error("point set must contain at least one label");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw argument_error("duplicate label: \"" + l + "\"");
  }
}

PointSet PointSet::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return PointSet(std::move(labels));
}

std::size_t PointSet::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw argument_error("unknown label: \"" + label + "\"");
}

Kernel::Kernel(PointSet points, std::vector<double> values)
    : points_(std::move(points)), values_(std::move(values)) {
  const std::size_t n = points_.size();
  if (n == 0) throw argument_error("kernel requires a nonempty point set");
  if (values_.size() != n * n) {
    throw argument_error("kernel values must be square: expected " + std::to_string(n * n) +
                         " entries, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(values_[i * n + j])) {
        throw argument_error("non-finite kernel entry at (" + points_.label(i) + ", " +
                             points_.label(j) + ")");
      }
    }
  }
}

Kernel Kernel::constant(const PointSet& points, double value) {
  return Kernel(points, std::vector<double>(points.size() * points.size(), value));
}

Potential::Potential(PointSet pts, std::vector<double> vals)
    : points(std::move(pts)), values(std::move(vals)) {
  if (values.size() != points.size()) {
    throw argument_error("potential length must match point set size");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw argument_error("non-finite potential entry at " + points.label(i));
    }
  }
}

PotentialFamily::PotentialFamily(PointSet pts, std::vector<std::vector<double>> mems)
    : points(std::move(pts)), members(std::move(mems)) {
  for (const auto& m : members) {
    if (m.size() != points.size()) {
      throw argument_error("family member length must match point set size");
    }
    for (double v : m) {
      if (!std::isfinite(v)) throw argument_error("non-finite family member entry");
    }
  }
}

double max_abs_diff(const Kernel& a, const Kernel& b) {
  require_same_points(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  }
  return worst;
}

void require_same_points(const Kernel& a, const Kernel& b, const char* what) {
  if (a.points() != b.points()) {
    throw argument_error(std::string(what) + ": kernels do not share a point set");
  }
}

}  // namespace fieq
