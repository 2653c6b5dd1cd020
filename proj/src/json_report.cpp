#include "fieq/json_report.hpp"

#include <cmath>

namespace fieq {

using nlohmann::json;

namespace {

json matrix_rows(const Kernel& k) {
  json rows = json::array();
  const std::size_t n = k.size();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(k(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json defect_fields(const DefectReport& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["max_defect"] = r.max_defect;
  j["argmax"] = r.argmax;
  j["violations"] = r.violations;
  j["tolerance"] = r.tolerance;
  return j;
}

}  // namespace

json kernel_to_json(const Kernel& k) {
  json j;
  j["points"] = k.points().labels();
  j["values"] = matrix_rows(k);
  return j;
}

Kernel kernel_from_json(const json& j) {
  std::vector<std::string> labels;
  for (const auto& p : j.at("points")) labels.push_back(p.get<std::string>());
  const std::size_t n = labels.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (const auto& row : j.at("values")) {
    for (const auto& v : row) values.push_back(v.get<double>());
  }
  return Kernel(PointSet(std::move(labels)), std::move(values));
}

json potential_to_json(const Potential& p) {
  json j;
  j["points"] = p.points.labels();
  j["values"] = p.values;
  return j;
}

json family_to_json(const PotentialFamily& f) {
  json j;
  j["points"] = f.points.labels();
  j["members"] = f.members;
  return j;
}

json to_json(const DefectReport& r) { return defect_fields(r); }

json to_json(const FactorizeResult& r) {
  json j;
  j["potential"] = potential_to_json(r.phi);
  j["max_reconstruction_error"] = r.max_reconstruction_error;
  j["reconstruction_bound"] = r.reconstruction_bound;
  j["base_diagonal"] = r.base_diagonal;
  return j;
}

json to_json(const CorollaryCtReport& r) {
  json j;
  j["ti_holds"] = r.ti_holds;
  j["triangle_defect"] = r.triangle_defect;
  j["triangle_witness"] = r.triangle_witness;
  j["zero_diagonal"] = r.zero_diagonal;
  j["max_diagonal_abs"] = r.max_diagonal_abs;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["negative_cycle"] = r.negative_cycle;
  if (r.negative_cycle) {
    j["cycle"] = r.cycle;
    j["cycle_weight"] = r.cycle_weight;
    j["representation_deviation"] = nullptr;
  } else {
    j["representation_deviation"] = r.representation_deviation;
  }
  j["representation_matches"] = r.representation_matches;
  j["biconditional_ok"] = r.biconditional_ok;
  j["tolerance"] = r.tolerance;
  j["diagonal_convention"] = r.diagonal_convention;
  return j;
}

json to_json(const DecomposeResult& r) {
  json j;
  j["h1"] = kernel_to_json(r.h1);
  j["h2"] = kernel_to_json(r.h2);
  j["hypothesis_ok"] = r.hypothesis_ok;
  if (!r.warning.empty()) j["warning"] = r.warning;
  j["h1_triangle"] = defect_fields(r.h1_triangle);
  j["h2_triangle"] = defect_fields(r.h2_triangle);
  j["inverse_exact"] = r.inverse_exact;
  return j;
}

json to_json(const ComposeResult& r) {
  json j;
  j["s"] = kernel_to_json(r.s);
  j["g"] = kernel_to_json(r.g);
  j["hypotheses_ok"] = r.hypotheses_ok;
  if (!r.warning.empty()) j["warning"] = r.warning;
  j["add_check"] = defect_fields(r.add_check);
  j["note"] = r.note;
  return j;
}

json to_json(const LPOutcome& r) {
  json j;
  j["status"] = to_string(r.status);
  j["objective"] = to_string(r.objective);
  if (r.status == LPStatus::optimal) {
    j["g"] = kernel_to_json(r.g);
    j["value"] = r.value;
    j["max_constraint_violation"] = r.max_constraint_violation;
  }
  j["iterations"] = r.iterations;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const BuildChResult& r) {
  json j;
  j["s"] = kernel_to_json(r.s);
  j["g"] = kernel_to_json(r.g);
  j["add_check"] = defect_fields(r.add_check);
  j["zero_diagonal"] = r.zero_diagonal;
  j["max_diagonal_abs"] = r.max_diagonal_abs;
  j["family1_contained"] = r.family1_contained;
  j["family2_contained"] = r.family2_contained;
  j["max_membership_violation"] = r.max_membership_violation;
  return j;
}

json to_json(const ComposeP1Result& r) {
  json j;
  j["h"] = kernel_to_json(r.h);
  j["hypotheses_ok"] = r.hypotheses_ok;
  if (!r.warning.empty()) j["warning"] = r.warning;
  j["submultiplicative"] = defect_fields(r.submultiplicative);
  j["min_cross_term"] = r.min_cross_term;
  return j;
}

json to_json(const ZeroPropReport& r) {
  json j;
  j["nonneg_ok"] = r.nonneg_ok;
  j["min_entry"] = r.min_entry;
  j["argmin"] = r.argmin;
  j["max_entry"] = r.max_entry;
  j["argmax"] = r.argmax;
  j["has_zero"] = r.has_zero;
  j["submult_ok"] = r.submult_ok;
  j["submult_defect"] = r.submult_defect;
  j["submult_witness"] = r.submult_witness;
  j["derived_bound"] = r.derived_bound;
  j["implication_holds"] = r.implication_holds;
  j["confirmed"] = r.confirmed;
  j["tolerance"] = r.tolerance;
  return j;
}

json to_json(const ProbeReport& r) {
  json j;
  j["ratio_sup"] = kernel_to_json(r.ratio_sup);
  j["gamma_range"] = json::array({r.gamma_min, r.gamma_max});
  j["sincov_defect"] = r.sincov_defect;
  j["main_ok"] = r.main_ok;
  j["main_residual_max"] = r.main_residual_max;
  j["bound_F_ok"] = r.bound_f_ok;
  j["bound_F_residual_max"] = r.bound_f_residual_max;
  j["bound_gamma_ok"] = r.bound_gamma_ok;
  j["bound_gamma_residual_max"] = r.bound_gamma_residual_max;
  j["bound_1_ok"] = r.bound_1_ok;
  j["bound_1_residual_max"] = r.bound_1_residual_max;
  j["min_F_diagonal"] = r.min_f_diagonal;
  j["tolerance"] = r.tolerance;
  return j;
}

json to_json(const MeanResult& r) {
  json j;
  j["value"] = r.value;
  j["rule"] = to_string(r.rule);
  j["intervals"] = r.intervals;
  return j;
}

json to_json(const GrussReport& r) {
  json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["holds"] = r.holds;
  j["mean_f"] = r.mean_f;
  j["mean_g"] = r.mean_g;
  j["mean_fg"] = r.mean_fg;
  j["rule"] = to_string(r.rule);
  j["bounds_declared_f"] = r.bounds_declared_f;
  j["bounds_declared_g"] = r.bounds_declared_g;
  j["bounds_f"] = json::array({r.m_f, r.big_m_f});
  j["bounds_g"] = json::array({r.m_g, r.big_m_g});
  j["tolerance"] = r.tolerance;
  return j;
}

json to_json(const RichardReport& r) {
  json j;
  j["dim"] = r.dim;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["max_defect"] = r.max_defect;
  j["argmax_trial"] = r.argmax_trial;
  j["argmax_triple"] = json::array(
      {r.argmax_triple[0], r.argmax_triple[1], r.argmax_triple[2]});
  j["max_bound_residual"] = r.max_bound_residual;
  j["clamp_count"] = r.clamp_count;
  j["planted_included"] = r.planted_included;
  if (r.planted_included) j["planted_defect"] = r.planted_defect;
  return j;
}

json to_json(const GeneratedInstance& r) {
  json j;
  json kernels = json::object();
  for (std::size_t i = 0; i < r.kernels.size(); ++i) {
    kernels[r.roles[i]] = kernel_to_json(r.kernels[i]);
  }
  j["kernels"] = kernels;
  if (r.fallback_delta_zero) j["fallback_delta_zero"] = true;
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

}  // namespace fieq
