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

#include <sstream>
#include <utility>

#include "vakh/bilinear.hpp"
#include "vakh/log.hpp"
#include "vakh/soliton.hpp"

namespace vakh {

/// What to do when the assembled F fails its bilinear certificate.
enum class Certification {
  kStrict,  // throw CertificationError
  kAttach,  // return it with the failing certificate attached, logging a warning
};

enum class CoefficientSource {
  kOracle,   // order-by-order solve (derive_coefficients)
  kClosedForm,  // closed-form interaction_coefficients
};

struct TwoSolitonOptions {
  TwoSolitonForm form = TwoSolitonForm::kCorrected;
  CoefficientSource source = CoefficientSource::kOracle;
  Certification certification = Certification::kStrict;
  double tol = kCoefficientTolerance;
};

inline std::pair<SolitonParams, TauFunction> build_two_soliton(
    double alpha, double v1, double v2, double eta10 = 0.0, double eta20 = 0.0,
    const TwoSolitonOptions& opts = {}) {
  SolitonParams params = make_two_mode_params(alpha, v1, v2, eta10, eta20);
  const InteractionCoefficients coeffs = opts.source == CoefficientSource::kOracle
                                             ? derive_coefficients(params, opts.tol).solved
                                             : interaction_coefficients(params);

  TauFunction tau{two_soliton_ansatz(params.basis(), coeffs, opts.form), TauKind::kTwoSoliton,
                  coeffs, {}};
  ResidualReport cert = combined_bilinear_residual(tau.F, alpha, opts.tol);
  cert.add_note(std::string("form ") + to_string(opts.form) + ", coefficients " +
                (opts.source == CoefficientSource::kOracle ? "solved" : "closed-form"));

  if (!cert.passed) {
    std::ostringstream os;
    os << "two-soliton tau (alpha=" << alpha << ", v1=" << params.modes[0].v
       << ", v2=" << params.modes[1].v << ") fails the bilinear residual: relative "
       << cert.max_relative_coefficient << " at exponent "
       << (cert.offending_exponent ? to_string(*cert.offending_exponent) : "?") << " (tol "
       << opts.tol << ")";
    if (opts.certification == Certification::kStrict) throw CertificationError(os.str());
    log::warn(os.str() + "; returned uncertified");
  }
  tau.certificate = std::move(cert);
  return {std::move(params), std::move(tau)};
}

/// Drops every term that involves mode 2, i.e. the eta20 -> -infinity limit.
inline TauFunction drop_second_mode(const TauFunction& tau) {
  ExpPoly F(tau.F.basis());
  for (const auto& [e, c] : tau.F.terms()) {
    if (e[1] == 0) F = F + ExpPoly::monomial(tau.F.basis(), e, c);
  }
  return TauFunction{std::move(F), tau.kind, tau.coefficients, {}};
}

}  // namespace vakh
