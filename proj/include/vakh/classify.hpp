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

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vakh/errors.hpp"
#include "vakh/soliton.hpp"

namespace vakh {

inline constexpr double kCuspTieTolerance = 1e-9;

enum class Regime { kLoop, kCusp, kHump };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::kLoop: return "loop";
    case Regime::kCusp: return "cusp";
    case Regime::kHump: return "hump";
  }
  return "?";
}

/// One-soliton shape class. lambda = 6 K omega is the depth of the dip of
/// x_T = 1 - lambda sech^2(eta): lambda > 1 folds the profile into a loop.
struct RegimeClass {
  Regime regime = Regime::kHump;
  double lambda = 0.0;
  double alpha_star = 0.0;  // 1 / sqrt(6 v), the cusp threshold
  double K = 0.0;
  double U_M = 0.0;         // 6 K^2
};

inline double cusp_alpha(double v) {
  if (!(v > 0.0)) throw DomainError("cusp_alpha: v must be > 0");
  return 1.0 / std::sqrt(6.0 * v);
}

inline RegimeClass classify_regime(double alpha, double v, double tie_tol = kCuspTieTolerance) {
  if (!(tie_tol >= 0.0)) throw DomainError("classify_regime: tie tolerance must be >= 0");
  const double K = solve_wavenumber(alpha, v);
  RegimeClass c;
  c.K = K;
  c.lambda = 6.0 * K * K * v;
  c.alpha_star = cusp_alpha(v);
  c.U_M = 6.0 * K * K;
  if (std::abs(c.lambda - 1.0) <= tie_tol) {
    c.regime = Regime::kCusp;
  } else {
    c.regime = c.lambda > 1.0 ? Regime::kLoop : Regime::kHump;
  }
  return c;
}

struct ScanAxis {
  double lo = 0.0;
  double hi = 0.0;
  int n = 2;

  double at(int i) const { return i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1); }
  double step() const { return (hi - lo) / (n - 1); }
};

struct ScanRow {
  double alpha = 0.0;
  double v = 0.0;
  double K = 0.0;
  double lambda = 0.0;
  double U_M = 0.0;
  Regime regime = Regime::kHump;
};

/// Row-major over v (outer) then alpha (inner).
inline std::vector<ScanRow> region_scan(const ScanAxis& alpha, const ScanAxis& v,
                                        double tie_tol = kCuspTieTolerance) {
  if (alpha.n < 2 || v.n < 2) throw DomainError("region_scan: grid must be at least 2x2");
  if (!(alpha.lo >= 0.0) || !(alpha.hi > alpha.lo) || !(v.lo > 0.0) || !(v.hi > v.lo)) {
    throw DomainError("region_scan: need 0 <= alpha_lo < alpha_hi and 0 < v_lo < v_hi");
  }
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(alpha.n) * v.n);
  for (int j = 0; j < v.n; ++j) {
    for (int i = 0; i < alpha.n; ++i) {
      const double a = alpha.at(i), vv = v.at(j);
      const RegimeClass c = classify_regime(a, vv, tie_tol);
      rows.push_back({a, vv, c.K, c.lambda, c.U_M, c.regime});
    }
  }
  return rows;
}

inline void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  const auto old = os.precision(std::numeric_limits<double>::max_digits10);
  os << "alpha,v,K,lambda,U_M,regime\n";
  for (const auto& r : rows) {
    os << r.alpha << ',' << r.v << ',' << r.K << ',' << r.lambda << ',' << r.U_M << ','
       << to_string(r.regime) << '\n';
  }
  os.precision(old);
}

struct AmplitudeEntry {
  double alpha = 0.0;
  double U_M = 0.0;
  Regime regime = Regime::kHump;
};

/// Amplitudes at fixed v in the order given; strictly_decreasing is checked
/// over alpha-ascending order.
struct AmplitudeComparison {
  double v = 0.0;
  std::vector<AmplitudeEntry> entries;
  bool strictly_decreasing = true;
};

inline AmplitudeComparison amplitude_comparison(double v, const std::vector<double>& alphas,
                                                double tie_tol = kCuspTieTolerance) {
  if (!(v > 0.0)) throw DomainError("amplitude_comparison: v must be > 0");
  AmplitudeComparison out{v, {}, true};
  for (double a : alphas) {
    const RegimeClass c = classify_regime(a, v, tie_tol);
    out.entries.push_back({a, c.U_M, c.regime});
  }
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    for (std::size_t j = 0; j < out.entries.size(); ++j) {
      if (out.entries[i].alpha < out.entries[j].alpha &&
          !(out.entries[i].U_M > out.entries[j].U_M)) {
        out.strictly_decreasing = false;
      }
    }
  }
  return out;
}

}  // namespace vakh
