#pragma once

// JSON views of kernels and reports.  nlohmann::json keeps object keys
// sorted and prints shortest round-trip decimals, which makes every report
// canonical and diff-stable.

#include <json.hpp>

#include "fieq/defect.hpp"
#include "fieq/delta_additive.hpp"
#include "fieq/delta_multiplicative.hpp"
#include "fieq/generate.hpp"
#include "fieq/gruss.hpp"
#include "fieq/kernel.hpp"
#include "fieq/sincov.hpp"
#include "fieq/subadditive.hpp"

namespace fieq {

nlohmann::json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const nlohmann::json& j);

nlohmann::json potential_to_json(const Potential& p);
nlohmann::json family_to_json(const PotentialFamily& f);

nlohmann::json to_json(const DefectReport& r);
nlohmann::json to_json(const FactorizeResult& r);
nlohmann::json to_json(const CorollaryCtReport& r);
nlohmann::json to_json(const DecomposeResult& r);
nlohmann::json to_json(const ComposeResult& r);
nlohmann::json to_json(const LPOutcome& r);
nlohmann::json to_json(const BuildChResult& r);
nlohmann::json to_json(const ComposeP1Result& r);
nlohmann::json to_json(const ZeroPropReport& r);
nlohmann::json to_json(const ProbeReport& r);
nlohmann::json to_json(const MeanResult& r);
nlohmann::json to_json(const GrussReport& r);
nlohmann::json to_json(const RichardReport& r);
nlohmann::json to_json(const GeneratedInstance& r);

}  // namespace fieq
