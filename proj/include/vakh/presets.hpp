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
#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace vakh {

/// Two-soliton snapshot scenarios: one before and one after the interaction.
struct Preset {
  std::string_view name;
  double alpha;
  double v1;
  double v2;
  double t_before;
  double t_after;
};

inline constexpr std::array<Preset, 4> kPresets{{
    {"fig4-5", 1.2, 0.24, 0.12, -15.0, 11.0},
    {"fig6-7", 0.1, 0.24, 0.12, -15.0, 11.0},
    {"fig8-9", 2.6, 0.24, 0.12, -15.0, 11.0},
    {"fig10-11", 5.0, 0.24, 0.12, -15.0, 11.0},
}};

inline std::optional<Preset> find_preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace vakh
