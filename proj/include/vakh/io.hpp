/*
   Copyright 2026 The vakh authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON views of the library types (nlohmann::json).
#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "vakh/analysis.hpp"
#include "vakh/bilinear.hpp"
#include "vakh/classify.hpp"
#include "vakh/exppoly.hpp"
#include "vakh/tau.hpp"
#include "vakh/transform.hpp"

namespace vakh {

using nlohmann::json;

inline json to_json(const PhaseBasis& b) {
  json modes = json::array();
  for (const Mode& m : b.modes()) modes.push_back({{"K", m.K}, {"omega", m.omega}, {"eta0", m.eta0}});
  return modes;
}

/// {"modes":[{"K","omega","eta0"}],"terms":[{"m","n","c"}]}, terms sorted by (m, n).
inline json to_json(const ExpPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"m", e[0]}, {"n", e[1]}, {"c", c}});
  return {{"modes", to_json(p.basis())}, {"terms", std::move(terms)}};
}

inline ExpPoly exppoly_from_json(const json& j) {
  std::vector<Mode> modes;
  for (const auto& m : j.at("modes")) {
    modes.push_back({m.at("K").get<double>(), m.at("omega").get<double>(), m.at("eta0").get<double>()});
  }
  ExpPoly p{PhaseBasis(std::move(modes))};
  for (const auto& t : j.at("terms")) {
    p = p + ExpPoly::monomial(p.basis(), {t.at("m").get<int>(), t.at("n").get<int>()},
                              t.at("c").get<double>());
  }
  return p;
}

inline json to_json(const SolitonParams& p) {
  json modes = json::array();
  for (const auto& m : p.modes) {
    modes.push_back({{"v", m.v}, {"K", m.K}, {"omega", m.omega}, {"eta0", m.eta0}});
  }
  return {{"alpha", p.alpha}, {"modes", std::move(modes)}, {"kind", to_string(p.kind)}};
}

inline json exponent_json(const std::optional<Exponent>& e) {
  if (!e) return nullptr;
  return json::array({(*e)[0], (*e)[1]});
}

inline json to_json(const ResidualReport& r) {
  json j{{"max_relative_coefficient", r.max_relative_coefficient},
         {"offending_exponent", exponent_json(r.offending_exponent)},
         {"coefficient_tolerance", r.coefficient_tolerance},
         {"passed", r.passed},
         {"notes", r.notes}};
  if (r.grid_max_abs) {
    j["grid_max_abs"] = *r.grid_max_abs;
    j["grid_tolerance"] = r.grid_tolerance;
    if (r.grid_worst_node) {
      j["grid_worst_node"] = {{"X", r.grid_worst_node->first}, {"T", r.grid_worst_node->second}};
    }
  } else {
    j["grid_max_abs"] = nullptr;
  }
  return j;
}

inline json to_json(const InteractionCoefficients& c) {
  return {{"A", c.A}, {"B", c.B}, {"C", c.C}};
}

inline json to_json(const CoefficientDerivation& d) {
  json j{{"solved", to_json(d.solved)},
         {"first_order", to_json(d.first_order)},
         {"full_residual", to_json(d.full)},
         {"consistent", d.consistent},
         {"notes", d.notes}};
  if (d.closed_form) {
    j["closed_form"] = to_json(*d.closed_form);
    j["relative_deviation"] = {{"A", d.rel_dev_A}, {"B", d.rel_dev_B}, {"C", d.rel_dev_C}};
    j["closed_form_matches"] = {
        {"A", d.formula_A_matches}, {"B", d.formula_B_matches}, {"C", d.formula_C_matches}};
  } else {
    j["closed_form"] = nullptr;
  }
  return j;
}

inline json to_json(const RegimeClass& c) {
  return {{"regime", to_string(c.regime)}, {"lambda", c.lambda}, {"alpha_star", c.alpha_star},
          {"K", c.K},                      {"U_M", c.U_M}};
}

inline json to_json(const StructureCensus& c) {
  json s = json::array();
  for (const auto& st : c.structures) {
    s.push_back({{"U_peak", st.U_peak}, {"x_peak", st.x_peak}, {"multivalued", st.multivalued}});
  }
  return {{"t", c.t}, {"count", c.count()}, {"structures", std::move(s)}};
}

/// Timeline JSON: a list of censuses.
inline json to_json(const Timeline& tl) {
  json a = json::array();
  for (const auto& c : tl.censuses) a.push_back(to_json(c));
  return a;
}

/// Sidecar for a profile CSV.
inline json profile_metadata(const SolitonParams& params, const ParametricProfile& p,
                             const json& classification) {
  json j = to_json(params);
  j["t"] = p.t;
  j["x0"] = p.x0;
  j["samples"] = p.samples.size();
  if (!p.samples.empty()) j["T_range"] = {p.samples.front().T, p.samples.back().T};
  j["classification"] = classification;
  return j;
}

}  // namespace vakh
