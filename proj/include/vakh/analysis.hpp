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
 * analysis.hpp
 * ------------
 * Structure census of snapshot profiles and its evolution over time.
 *
 * Peaks are found along the curve parameter T, not along x, since profiles can
 * be multivalued in x. A sample is a peak candidate if it is a local maximum of
 * U (plateaus collapse to their middle sample); its topographic prominence is
 * the height above the higher of the two minima reached before U climbs above
 * the peak on either side. Candidates below prominence * max(U) are discarded.
 *
 * Each kept structure owns the window between its prominence bases, cut at the
 * lowest point towards each neighbouring structure. It is multivalued if x_T
 * changes sign inside that window.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vakh/errors.hpp"
#include "vakh/transform.hpp"

namespace vakh {

inline constexpr double kDefaultProminence = 0.02;

struct Structure {
  double U_peak = 0.0;
  double x_peak = 0.0;
  double T_peak = 0.0;
  bool multivalued = false;
  double prominence = 0.0;  // absolute
  std::size_t index = 0;    // sample index of the peak
  std::size_t window_lo = 0, window_hi = 0;
};

struct StructureCensus {
  double t = 0.0;
  std::vector<Structure> structures;  // by x_peak ascending

  std::size_t count() const { return structures.size(); }
};

namespace detail {

struct Peak {
  std::size_t index;
  double prominence;
  std::size_t left_base, right_base;
};

inline std::vector<Peak> find_peaks(std::span<const double> u) {
  std::vector<Peak> peaks;
  const std::size_t n = u.size();
  std::size_t i = 1;
  while (i + 1 < n) {
    if (u[i] > u[i - 1]) {
      std::size_t ahead = i + 1;
      while (ahead + 1 < n && u[ahead] == u[i]) ++ahead;
      if (u[ahead] < u[i]) {
        const std::size_t mid = (i + ahead - 1) / 2;
        peaks.push_back({mid, 0.0, 0, 0});
        i = ahead;
        continue;
      }
    }
    ++i;
  }
  for (Peak& p : peaks) {
    const double h = u[p.index];
    std::size_t l = p.index, lmin = p.index;
    while (l > 0 && u[l - 1] <= h) {
      --l;
      if (u[l] < u[lmin]) lmin = l;
    }
    std::size_t r = p.index, rmin = p.index;
    while (r + 1 < n && u[r + 1] <= h) {
      ++r;
      if (u[r] < u[rmin]) rmin = r;
    }
    p.left_base = lmin;
    p.right_base = rmin;
    p.prominence = h - std::max(u[lmin], u[rmin]);
  }
  return peaks;
}

}  // namespace detail

inline StructureCensus count_structures(const ParametricProfile& profile,
                                        double prominence = kDefaultProminence) {
  if (!(prominence > 0.0)) throw DomainError("count_structures: prominence must be > 0");
  const auto& s = profile.samples;
  if (s.size() < 3) throw DomainError("count_structures: profile needs at least 3 samples");

  std::vector<double> u(s.size());
  double u_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i].U) || !std::isfinite(s[i].xT) || !std::isfinite(s[i].x)) {
      throw DomainError("count_structures: non-finite sample " + std::to_string(i));
    }
    u[i] = s[i].U;
    u_max = std::max(u_max, u[i]);
  }

  StructureCensus census{profile.t, {}};
  if (!(u_max > 0.0)) return census;

  std::vector<detail::Peak> kept;
  for (const auto& p : detail::find_peaks(u)) {
    if (p.prominence >= prominence * u_max) kept.push_back(p);
  }

  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto& p = kept[k];
    std::size_t lo = p.left_base, hi = p.right_base;
    if (k > 0) {
      const std::size_t a = kept[k - 1].index;
      const auto split = std::min_element(u.begin() + a, u.begin() + p.index + 1) - u.begin();
      lo = std::max(lo, static_cast<std::size_t>(split));
    }
    if (k + 1 < kept.size()) {
      const std::size_t b = kept[k + 1].index;
      const auto split = std::min_element(u.begin() + p.index, u.begin() + b + 1) - u.begin();
      hi = std::min(hi, static_cast<std::size_t>(split));
    }
    bool pos = false, neg = false;
    for (std::size_t i = lo; i <= hi; ++i) {
      pos = pos || s[i].xT > 0.0;
      neg = neg || s[i].xT < 0.0;
    }
    census.structures.push_back({s[p.index].U, s[p.index].x, s[p.index].T, pos && neg,
                                 p.prominence, p.index, lo, hi});
  }
  std::stable_sort(census.structures.begin(), census.structures.end(),
                   [](const Structure& a, const Structure& b) { return a.x_peak < b.x_peak; });
  return census;
}

struct Timeline {
  std::vector<StructureCensus> censuses;
  std::optional<std::size_t> fission_index;  // first i with count 1 -> 2
};

struct CensusOptions {
  double prominence = kDefaultProminence;
  int n_samples = kDefaultSamples;
  double x0 = 0.0;
};

inline Timeline census_timeline(const TauFunction& tau, std::span<const double> times,
                                const CensusOptions& opts = {}) {
  Timeline tl;
  tl.censuses.reserve(times.size());
  for (double t : times) {
    tl.censuses.push_back(
        count_structures(snapshot(tau, t, std::nullopt, opts.n_samples, opts.x0), opts.prominence));
  }
  for (std::size_t i = 1; i < tl.censuses.size(); ++i) {
    if (tl.censuses[i - 1].count() == 1 && tl.censuses[i].count() == 2) {
      tl.fission_index = i;
      break;
    }
  }
  return tl;
}

inline Timeline fission_timeline(const TauFunction& tau, double t_start, double t_end, int n_times,
                                 const CensusOptions& opts = {}) {
  if (!(t_start < t_end)) throw DomainError("fission_timeline: need t_start < t_end");
  if (n_times < 2) throw DomainError("fission_timeline: need at least 2 times");
  std::vector<double> times(static_cast<std::size_t>(n_times));
  for (int i = 0; i < n_times; ++i) {
    times[i] = i == n_times - 1 ? t_end : t_start + (t_end - t_start) * i / (n_times - 1);
  }
  return census_timeline(tau, times, opts);
}

}  // namespace vakh
