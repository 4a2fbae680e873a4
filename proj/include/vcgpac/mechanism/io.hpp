// Copyright 2026 The vcgpac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vcgpac/mechanism/design_params.hpp"
#include "vcgpac/mechanism/feasibility.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"

namespace vcgpac {

inline nlohmann::json to_json(const ConstantPivotRule& rule, const DesignParams& params) {
  return {{"eta", rule.eta},
          {"provenance", to_string(rule.provenance)},
          {"params", {{"rho", params.rho()}, {"theta", params.theta()}}}};
}

inline ConstantPivotRule pivot_rule_from_json(const nlohmann::json& j) {
  ConstantPivotRule rule;
  rule.eta = j.at("eta").get<std::vector<double>>();
  const auto p = j.at("provenance").get<std::string>();
  if (p == "exact_sbb") {
    rule.provenance = Provenance::kExactSbb;
  } else if (p == "exact_ir") {
    rule.provenance = Provenance::kExactIr;
  } else if (p == "learned") {
    rule.provenance = Provenance::kLearned;
  } else {
    throw std::invalid_argument("unknown provenance '" + p + "'");
  }
  return rule;
}

inline nlohmann::json to_json(const FeasibilityReport& r) {
  return {{"kappa", r.kappa},
          {"mean_w", r.mean_w},
          {"rho", r.rho},
          {"slack", r.slack},
          {"feasible_by_condition", r.feasible_by_condition}};
}

}  // namespace vcgpac
