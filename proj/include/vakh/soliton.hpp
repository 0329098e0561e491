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
 * soliton.hpp
 * -----------
 * Dispersion relation, one-soliton tau function, the closed-form interaction
 * coefficients and the two-soliton exponential ansatz.
 *
 * Dispersion:  2 (alpha + 2K) omega = 1  with  omega = K v,  i.e.
 *              4 v K^2 + 2 alpha v K - 1 = 0,  K > 0.
 *
 * (K, omega) are never free inputs: K comes from the quadratic, omega = K v.
 */
#pragma once

#include <cmath>
#include <sstream>
#include <utility>

#include "vakh/errors.hpp"
#include "vakh/exppoly.hpp"
#include "vakh/log.hpp"
#include "vakh/tau.hpp"

namespace vakh {

inline constexpr double kDispersionTolerance = 1e-12;

inline void require_alpha(double alpha, const char* where) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    std::ostringstream os;
    os << where << ": alpha must be finite and >= 0 (got " << alpha << ")";
    throw DomainError(os.str());
  }
}

/// Positive root of 4 v K^2 + 2 alpha v K - 1 = 0.
inline double solve_wavenumber(double alpha, double v) {
  require_alpha(alpha, "solve_wavenumber");
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << "solve_wavenumber: velocity must be finite and > 0 (got " << v << ")";
    throw DomainError(os.str());
  }
  // (-a v + sqrt(a^2 v^2 + 4 v)) / (4 v), rationalised to avoid cancellation
  const double av = alpha * v;
  return 1.0 / (av + std::sqrt(av * av + 4.0 * v));
}

inline SolitonMode make_mode(double alpha, double v, double eta0) {
  const double K = solve_wavenumber(alpha, v);
  SolitonMode m{v, K, K * v, eta0};
  const double res = std::abs(2.0 * (alpha + 2.0 * K) * m.omega - 1.0);
  if (res > kDispersionTolerance) {
    std::ostringstream os;
    os << "dispersion residual " << res << " above " << kDispersionTolerance
       << " for alpha=" << alpha << ", v=" << v;
    throw ConsistencyError(os.str());
  }
  return m;
}

/// F = 1 + exp(2 eta), eta = K X - omega T + eta0.
inline std::pair<SolitonParams, TauFunction> build_one_soliton(double alpha, double v,
                                                                double eta0 = 0.0) {
  SolitonParams params{alpha, {make_mode(alpha, v, eta0)}, TauKind::kOneSoliton};
  ExpPoly F(params.basis(), {{Exponent{0, 0}, 1.0}, {Exponent{2, 0}, 1.0}});
  return {std::move(params), TauFunction{std::move(F), TauKind::kOneSoliton, {}, {}}};
}

/// Closed forms of A, B, C:
///
///   A = alpha / (2 (alpha + 6 K1)),   B = alpha / (2 (alpha + 6 K2)),
///
///        2 alpha [(w1 - w2)(K1^2 - K2^2) + 2 K1 K2 (w1 + w2)]
///          + 4 (w2 - w1)(K1 - K2)^3 + (K1 - K2)^2
///   C = ----------------------------------------------------------
///        (K1 + K2)^2 [2 (w1 + w2)(alpha + 2 K1 + K2) - 1]
///
/// Throws SingularConfiguration when the C denominator vanishes.
inline InteractionCoefficients interaction_coefficients(const SolitonParams& p) {
  if (p.modes.size() != 2) throw DomainError("interaction_coefficients: need two modes");
  const double a = p.alpha;
  if (!(a > 0.0)) {
    throw DomainError("interaction_coefficients: alpha must be > 0 (alpha = 0 degenerates A, B)");
  }
  const double K1 = p.modes[0].K, K2 = p.modes[1].K;
  const double w1 = p.modes[0].omega, w2 = p.modes[1].omega;
  if (K1 == K2) throw DomainError("interaction_coefficients: K1 == K2");

  const double dK = K1 - K2;
  const double num = 2.0 * a * ((w1 - w2) * (K1 * K1 - K2 * K2) + 2.0 * K1 * K2 * (w1 + w2)) +
                     4.0 * (w2 - w1) * dK * dK * dK + dK * dK;
  const double bracket = 2.0 * (w1 + w2) * (a + 2.0 * K1 + K2) - 1.0;
  const double den = (K1 + K2) * (K1 + K2) * bracket;
  if (std::abs(bracket) <= 1e-12 || !std::isfinite(den)) {
    std::ostringstream os;
    os << "interaction_coefficients: C denominator vanishes for alpha=" << a
       << ", v1=" << p.modes[0].v << ", v2=" << p.modes[1].v << " (bracket=" << bracket << ")";
    throw SingularConfiguration(os.str());
  }
  return {a / (2.0 * (a + 6.0 * K1)), a / (2.0 * (a + 6.0 * K2)), num / den};
}

/// Which exponent set the two-soliton tau function uses.
///  kCorrected: 1 + e^{2 eta1} + e^{2 eta2} + A e^{4 eta1} + B e^{4 eta2} + C e^{2 eta1 + 2 eta2}
///  kLiteral:   1 + e^{eta2}   + e^{2 eta2} + A e^{4 eta1} + B e^{4 eta2} + C e^{2 eta1 + 2 eta2}
enum class TwoSolitonForm { kCorrected, kLiteral };

inline const char* to_string(TwoSolitonForm f) {
  return f == TwoSolitonForm::kCorrected ? "corrected" : "literal";
}

inline ExpPoly two_soliton_ansatz(const PhaseBasis& basis, const InteractionCoefficients& c,
                                  TwoSolitonForm form = TwoSolitonForm::kCorrected) {
  if (basis.size() != 2) throw DomainError("two_soliton_ansatz: need a two-mode basis");
  const Exponent first = form == TwoSolitonForm::kCorrected ? Exponent{2, 0} : Exponent{0, 1};
  return ExpPoly(basis, {{Exponent{0, 0}, 1.0},
                         {first, 1.0},
                         {Exponent{0, 2}, 1.0},
                         {Exponent{4, 0}, c.A},
                         {Exponent{0, 4}, c.B},
                         {Exponent{2, 2}, c.C}});
}

/// Two-mode parameter set. Modes are ordered fast-first (v1 > v2); a swapped
/// input is reordered together with its phase offsets and a warning is logged.
inline SolitonParams make_two_mode_params(double alpha, double v1, double v2, double eta10,
                                          double eta20) {
  require_alpha(alpha, "make_two_mode_params");
  if (!(alpha > 0.0)) {
    throw DomainError("two-soliton construction needs alpha > 0 (the alpha = 0 ansatz degenerates)");
  }
  if (v1 < v2) {
    std::ostringstream os;
    os << "two-soliton modes reordered fast-first: (v1, v2) = (" << v2 << ", " << v1 << ")";
    log::warn(os.str());
    std::swap(v1, v2);
    std::swap(eta10, eta20);
  }
  SolitonParams p{alpha, {make_mode(alpha, v1, eta10), make_mode(alpha, v2, eta20)},
                  TauKind::kTwoSoliton};
  if (p.modes[0].K == p.modes[1].K) {
    throw DomainError("two-soliton construction: K1 == K2 (equal velocities) is degenerate");
  }
  return p;
}

}  // namespace vakh
