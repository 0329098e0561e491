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

#include <optional>
#include <string>
#include <utility>

#include "vakh/exppoly.hpp"

namespace vakh {

inline constexpr double kCoefficientTolerance = 1e-9;  // relative, coefficient residuals
inline constexpr double kGridTolerance = 1e-8;         // absolute, pointwise PDE residuals

/// Result of a residual check, either coefficient-wise (bilinear form) or on a
/// sample grid (transformed PDE). passed is true iff every check that ran is
/// within its tolerance.
struct ResidualReport {
  double max_relative_coefficient = 0.0;
  std::optional<Exponent> offending_exponent;
  double coefficient_tolerance = kCoefficientTolerance;

  std::optional<double> grid_max_abs;
  std::optional<std::pair<double, double>> grid_worst_node;  // (X, T)
  double grid_tolerance = kGridTolerance;

  bool passed = true;
  std::string notes;

  void add_note(const std::string& line) {
    if (!notes.empty()) notes += '\n';
    notes += line;
  }

  void recompute_passed(bool coefficient_check_ran) {
    passed = true;
    if (coefficient_check_ran && !(max_relative_coefficient <= coefficient_tolerance)) passed = false;
    if (grid_max_abs && !(*grid_max_abs <= grid_tolerance)) passed = false;
  }
};

}  // namespace vakh
