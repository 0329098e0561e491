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

/*
 * transform.hpp
 * -------------
 * Physical coordinates from transformed ones:
 *
 *     x = T + int_{-inf}^{X} U(s, T) ds + x0 = T + W(X, T) + x0,   t = X,
 *
 * using U = W_X and W(-inf, T) = 0. A snapshot at physical time t fixes X = t
 * and sweeps T; the curve (x(T), U(T)) is the physical profile, which folds
 * back on itself wherever x_T = 1 + W_T < 0.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vakh/errors.hpp"
#include "vakh/tau.hpp"

namespace vakh {

inline constexpr int kDefaultSamples = 2001;
inline constexpr double kRangeHalfWidth = 20.0;  // in units of 1 / K_min

struct ProfileSample {
  double T = 0.0;
  double x = 0.0;
  double U = 0.0;
  double xT = 0.0;
};

struct ParametricProfile {
  double t = 0.0;   // physical time (= X)
  double x0 = 0.0;  // horizontal gauge
  std::vector<ProfileSample> samples;
};

struct TRange {
  double lo = 0.0;
  double hi = 0.0;
};

inline double physical_x(const TauFunction& tau, double X, double T, double x0 = 0.0) {
  return T + eval_W(tau, X, T) + x0;
}

/// x_T = 1 + W_T. For a one-soliton this is 1 - 6 K omega sech^2(eta).
inline double jacobian_xT(const TauFunction& tau, double X, double T) {
  return 1.0 + field_jet(tau.F, X, T).W_T;
}

/// Centres on the phase zeros eta_i = 0 at X = t and pads by 20 / K_min.
inline TRange default_T_range(const TauFunction& tau, double t) {
  const PhaseBasis& b = tau.F.basis();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double k_min = lo;
  for (const Mode& m : b.modes()) {
    const double T0 = (m.K * t + m.eta0) / m.omega;
    lo = std::min(lo, T0);
    hi = std::max(hi, T0);
    k_min = std::min(k_min, m.K);
  }
  const double pad = kRangeHalfWidth / k_min;
  return {lo - pad, hi + pad};
}

inline ParametricProfile snapshot(const TauFunction& tau, double t,
                                  std::optional<TRange> range = std::nullopt,
                                  int n_samples = kDefaultSamples, double x0 = 0.0) {
  if (n_samples < 2) throw DomainError("snapshot: need at least 2 samples");
  const TRange r = range ? *range : default_T_range(tau, t);
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo)) {
    std::ostringstream os;
    os << "snapshot: invalid T range [" << r.lo << ", " << r.hi << "]";
    throw DomainError(os.str());
  }
  ParametricProfile p{t, x0, {}};
  p.samples.reserve(static_cast<std::size_t>(n_samples));
  const double step = (r.hi - r.lo) / (n_samples - 1);
  const FieldForms forms(tau.F);
  for (int j = 0; j < n_samples; ++j) {
    const double T = j == n_samples - 1 ? r.hi : r.lo + step * j;
    FieldJet w;
    try {
      w = forms.at(t, T);
    } catch (const OverflowError& e) {
      std::ostringstream os;
      os << "snapshot: overflow at sample " << j << " (T=" << T
         << "); shrink the T range. " << e.what();
      throw OverflowError(os.str());
    }
    p.samples.push_back({T, T + w.W + x0, w.W_X, 1.0 + w.W_T});
  }
  return p;
}

/// Number of strict sign changes of x_T along the profile (zeros skipped).
inline int count_xT_sign_changes(const ParametricProfile& p) {
  int changes = 0;
  int last = 0;
  for (const auto& s : p.samples) {
    const int sign = (s.xT > 0.0) - (s.xT < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

inline double min_xT(const ParametricProfile& p) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : p.samples) m = std::min(m, s.xT);
  return m;
}

namespace detail {

inline double orient(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

}  // namespace detail

/// Proper crossings between non-adjacent segments of the (x, U) polyline,
/// counting only segments that rise above u_floor somewhere.
inline int count_self_intersections(const ParametricProfile& p, double u_floor) {
  const auto& s = p.samples;
  if (s.size() < 4) return 0;
  const std::size_t nseg = s.size() - 1;
  struct Box {
    double x_lo, x_hi, u_lo, u_hi;
    bool active;
  };
  std::vector<Box> box(nseg);
  for (std::size_t i = 0; i < nseg; ++i) {
    box[i] = {std::min(s[i].x, s[i + 1].x), std::max(s[i].x, s[i + 1].x),
              std::min(s[i].U, s[i + 1].U), std::max(s[i].U, s[i + 1].U),
              std::max(s[i].U, s[i + 1].U) > u_floor};
  }
  int crossings = 0;
  for (std::size_t i = 0; i < nseg; ++i) {
    if (!box[i].active) continue;
    for (std::size_t j = i + 2; j < nseg; ++j) {
      if (!box[j].active) continue;
      if (box[j].x_lo > box[i].x_hi || box[j].x_hi < box[i].x_lo) continue;
      if (box[j].u_lo > box[i].u_hi || box[j].u_hi < box[i].u_lo) continue;
      const auto& a = s[i];
      const auto& b = s[i + 1];
      const auto& c = s[j];
      const auto& d = s[j + 1];
      const double o1 = detail::orient(a.x, a.U, b.x, b.U, c.x, c.U);
      const double o2 = detail::orient(a.x, a.U, b.x, b.U, d.x, d.U);
      const double o3 = detail::orient(c.x, c.U, d.x, d.U, a.x, a.U);
      const double o4 = detail::orient(c.x, c.U, d.x, d.U, b.x, b.U);
      if (((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 && ((o3 > 0) != (o4 > 0)) && o3 != 0 &&
          o4 != 0) {
        ++crossings;
      }
    }
  }
  return crossings;
}

/// Profile CSV: header `T,x,U,xT`, one row per sample, round-trip precision.
inline void write_profile_csv(std::ostream& os, const ParametricProfile& p) {
  const auto old = os.precision(std::numeric_limits<double>::max_digits10);
  os << "T,x,U,xT\n";
  for (const auto& s : p.samples) os << s.T << ',' << s.x << ',' << s.U << ',' << s.xT << '\n';
  os.precision(old);
}

inline std::vector<ProfileSample> read_profile_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "T,x,U,xT") {
    throw DomainError("read_profile_csv: missing `T,x,U,xT` header");
  }
  std::vector<ProfileSample> out;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream ls(line);
    ProfileSample s;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ls >> s.T >> c1 >> s.x >> c2 >> s.U >> c3 >> s.xT) || c1 != ',' || c2 != ',' ||
        c3 != ',') {
      throw DomainError("read_profile_csv: malformed row " + std::to_string(row));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace vakh
