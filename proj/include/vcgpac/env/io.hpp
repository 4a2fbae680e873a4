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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "vcgpac/env/double_auction.hpp"
#include "vcgpac/env/environment.hpp"
#include "vcgpac/env/generate.hpp"
#include "vcgpac/env/prior.hpp"

namespace vcgpac {

/// Malformed environment file.
class EnvFormatError : public std::runtime_error {
 public:
  explicit EnvFormatError(const std::string& what) : std::runtime_error(what) {}
};

inline nlohmann::json prior_to_json(const Prior& prior,
                                    const std::vector<std::vector<TypeValue>>& type_sets) {
  nlohmann::json j;
  j["kind"] = to_string(prior.kind());
  if (prior.kind() == PriorKind::kIndependent) {
    nlohmann::json weights = nlohmann::json::array();
    for (std::size_t n = 0; n < type_sets.size(); ++n) weights.push_back(prior.weights(n));
    j["weights"] = std::move(weights);
    return j;
  }
  nlohmann::json table = nlohmann::json::array();
  prior.for_each_profile([&](const TypeProfile& t, std::uint64_t, double p) {
    nlohmann::json profile = nlohmann::json::array();
    for (std::size_t n = 0; n < t.size(); ++n) profile.push_back(type_sets[n][t[n]]);
    table.push_back({{"profile", std::move(profile)}, {"p", p}});
  });
  j["table"] = std::move(table);
  return j;
}

inline nlohmann::json to_json(const DoubleAuctionEnv& env) {
  nlohmann::json j;
  j["n_players"] = env.n_players();
  j["type_sets"] = env.type_sets();
  j["prior"] = prior_to_json(env.prior(), env.type_sets());
  j["value_model"] = "double_auction";
  j["value_bound"] = env.value_bound();
  if (env.seed()) j["seed"] = *env.seed();
  return j;
}

inline DoubleAuctionEnv double_auction_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw EnvFormatError("environment must be a JSON object");
    const std::string model = j.value("value_model", std::string("double_auction"));
    if (model != "double_auction") {
      throw EnvFormatError("unsupported value_model '" + model + "'");
    }
    auto type_sets = j.at("type_sets").get<std::vector<std::vector<TypeValue>>>();
    if (j.contains("n_players") &&
        j.at("n_players").get<std::size_t>() != type_sets.size()) {
      throw EnvFormatError("n_players does not match the number of type sets");
    }
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) {
      const auto& s = j.at("seed");
      if (!s.is_number_unsigned()) {
        throw EnvFormatError("seed must be a nonnegative 64-bit integer");
      }
      seed = s.get<std::uint64_t>();
    }
    std::vector<std::size_t> radices;
    for (const auto& ts : type_sets) radices.push_back(ts.size());

    Prior prior = Prior::uniform(radices);
    if (j.contains("prior")) {
      const auto& p = j.at("prior");
      const std::string kind = p.at("kind").get<std::string>();
      if (kind == "independent") {
        if (p.contains("weights")) {
          prior = Prior::independent(p.at("weights").get<std::vector<std::vector<double>>>());
        }
      } else if (kind == "joint") {
        ProfileSpace space(radices);
        if (!space.indexable() || *space.size() > Prior::kMaxJointProfiles) {
          throw EnvFormatError("joint prior over too many profiles");
        }
        std::vector<double> table(*space.size(), 0.0);
        for (const auto& entry : p.at("table")) {
          const auto values = entry.at("profile").get<std::vector<TypeValue>>();
          if (values.size() != type_sets.size()) {
            throw EnvFormatError("joint table profile has the wrong length");
          }
          std::vector<TypeIndex> idx;
          for (std::size_t n = 0; n < values.size(); ++n) {
            const auto& ts = type_sets[n];
            auto it = std::find(ts.begin(), ts.end(), values[n]);
            if (it == ts.end()) {
              throw EnvFormatError("joint table uses unknown type " +
                                   std::to_string(values[n]));
            }
            idx.push_back(static_cast<TypeIndex>(it - ts.begin()));
          }
          table[space.linear_index(TypeProfile(std::move(idx)))] += entry.at("p").get<double>();
        }
        prior = Prior::joint(radices, std::move(table));
      } else {
        throw EnvFormatError("unknown prior kind '" + kind + "'");
      }
    }

    double bound = 0.0;
    for (const auto& ts : type_sets) {
      for (TypeValue t : ts) bound = std::max(bound, std::fabs(static_cast<double>(t)));
    }
    if (j.contains("value_bound")) {
      const double declared = j.at("value_bound").get<double>();
      if (declared < bound) {
        throw EnvFormatError("value_bound is smaller than the largest |type|");
      }
      bound = declared;
    }
    return DoubleAuctionEnv(std::move(type_sets), std::move(prior), DoubleAuction(bound), seed);
  } catch (const nlohmann::json::exception& e) {
    throw EnvFormatError(std::string("environment JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw EnvFormatError(std::string("environment: ") + e.what());
  }
}

inline DoubleAuctionEnv load_double_auction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EnvFormatError("cannot open environment file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw EnvFormatError(path + ": " + e.what());
  }
  return double_auction_from_json(j);
}

}  // namespace vcgpac
