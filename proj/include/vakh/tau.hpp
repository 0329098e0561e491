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
 * tau.hpp
 * -------
 * Soliton parameter sets, tau functions and the fields derived from them in
 * transformed coordinates (X, T):
 *
 *     W = 6 (ln F)_X,   U = W_X.
 *
 * All derivatives are exact: each term of F is differentiated through its
 * exponent rate. Point values are taken relative to the dominant term of F.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vakh/errors.hpp"
#include "vakh/exppoly.hpp"
#include "vakh/report.hpp"

namespace vakh {

enum class TauKind { kOneSoliton, kTwoSoliton };

inline const char* to_string(TauKind k) {
  return k == TauKind::kOneSoliton ? "one-soliton" : "two-soliton";
}

struct SolitonMode {
  double v = 0.0;      // velocity, omega = K v
  double K = 0.0;
  double omega = 0.0;
  double eta0 = 0.0;
};

struct SolitonParams {
  double alpha = 0.0;
  std::vector<SolitonMode> modes;
  TauKind kind = TauKind::kOneSoliton;

  PhaseBasis basis() const {
    std::vector<Mode> m;
    m.reserve(modes.size());
    for (const auto& s : modes) m.push_back({s.K, s.omega, s.eta0});
    return PhaseBasis(std::move(m));
  }

  /// |2(alpha + 2K) omega - 1| for mode i.
  double dispersion_residual(std::size_t i) const {
    const SolitonMode& m = modes.at(i);
    return std::abs(2.0 * (alpha + 2.0 * m.K) * m.omega - 1.0);
  }
};

struct InteractionCoefficients {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

struct TauFunction {
  ExpPoly F;
  TauKind kind = TauKind::kOneSoliton;
  std::optional<InteractionCoefficients> coefficients;  // two-soliton only
  std::optional<ResidualReport> certificate;            // bilinear check at construction
};

/// W and its partials at a point.
struct FieldJet {
  double W = 0.0;
  double W_X = 0.0;    // = U
  double W_XX = 0.0;
  double W_T = 0.0;
  double W_XT = 0.0;
  double W_XXT = 0.0;
};

namespace detail {

// Terms of F at one point, each multiplied by exp(-shift) where shift is the
// largest exponent argument, so the dominant term is O(1) and nothing overflows.
struct ScaledTerms {
  std::vector<double> w, rx;
  double F = 0.0;
  double shift = 0.0;
};

inline ScaledTerms scaled_terms(const ExpPoly& F, double X, double T) {
  ScaledTerms st;
  std::vector<double> arg;
  arg.reserve(F.size());
  st.shift = -std::numeric_limits<double>::infinity();
  for (const auto& [e, c] : F.terms()) {
    arg.push_back(F.checked_exponent(e, X, T));
    st.shift = std::max(st.shift, arg.back());
    st.rx.push_back(F.basis().rate(Var::X, e));
  }
  std::size_t k = 0;
  for (const auto& [e, c] : F.terms()) {
    st.w.push_back(c * std::exp(arg[k++] - st.shift));
    st.F += st.w.back();
  }
  if (!(st.F > 0.0)) {
    std::ostringstream os;
    os << "tau function is not positive at (X=" << X << ", T=" << T << ")";
    throw ConsistencyError(os.str());
  }
  return st;
}

// W = 6 F_X / F
inline double W_of(const ScaledTerms& st) {
  double s = 0.0;
  for (std::size_t i = 0; i < st.w.size(); ++i) s += st.w[i] * st.rx[i];
  return 6.0 * s / st.F;
}

// U = 3 D_X^2 F.F / F^2, summed over pairs so the diagonal drops out exactly.
inline double U_of(const ScaledTerms& st) {
  double s = 0.0;
  for (std::size_t i = 0; i < st.w.size(); ++i) {
    for (std::size_t j = i + 1; j < st.w.size(); ++j) {
      const double d = st.rx[i] - st.rx[j];
      s += st.w[i] * st.w[j] * d * d;
    }
  }
  return 6.0 * s / (st.F * st.F);
}

}  // namespace detail

/// Exact partials of W for a fixed F. Each derivative of ln F is kept as
/// N / F^k with N built symbolically, so cancellations happen between
/// coefficients rather than between large point values in the tails.
class FieldForms {
 public:
  explicit FieldForms(const ExpPoly& F) : F_(F), xxx_(F.basis()), xt_(F.basis()),
                                          xxt_(F.basis()), xxxt_(F.basis()) {
    const ExpPoly Fx = diff(F, Var::X);
    const ExpPoly xx = 0.5 * hirota(F, F, 2, 0);  // F F_XX - F_X^2
    xt_ = 0.5 * hirota(F, F, 1, 1);                // F F_XT - F_X F_T
    // d/dX (N / F^k) = (N_X F - k N F_X) / F^{k+1}
    xxx_ = diff(xx, Var::X) * F - 2.0 * (xx * Fx);
    xxt_ = diff(xt_, Var::X) * F - 2.0 * (xt_ * Fx);
    xxxt_ = diff(xxt_, Var::X) * F - 3.0 * (xxt_ * Fx);
  }

  const ExpPoly& F() const { return F_; }

  FieldJet at(double X, double T) const {
    const detail::ScaledTerms st = detail::scaled_terms(F_, X, T);
    auto ratio = [&](const ExpPoly& n, int k) {
      double s = 0.0;
      for (const auto& [e, c] : n.terms()) {
        s += c * std::exp(n.basis().exponent(e, X, T) - k * st.shift);
      }
      return s / std::pow(st.F, k);
    };
    return {detail::W_of(st),        detail::U_of(st),        6.0 * ratio(xxx_, 3),
            6.0 * ratio(xt_, 2),     6.0 * ratio(xxt_, 3),    6.0 * ratio(xxxt_, 4)};
  }

 private:
  ExpPoly F_;
  ExpPoly xxx_, xt_, xxt_, xxxt_;
};

inline FieldJet field_jet(const ExpPoly& F, double X, double T) { return FieldForms(F).at(X, T); }

inline double eval_W(const TauFunction& tau, double X, double T) {
  return detail::W_of(detail::scaled_terms(tau.F, X, T));
}

inline double eval_U(const TauFunction& tau, double X, double T) {
  return detail::U_of(detail::scaled_terms(tau.F, X, T));
}

}  // namespace vakh
