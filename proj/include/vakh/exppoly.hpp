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
 * exppoly.hpp
 * -----------
 * Exponential polynomials in at most two phases
 *
 *     p(X, T) = sum_{(m,n)} c_{mn} exp(m eta_1 + n eta_2),
 *     eta_i   = K_i X - omega_i T + eta0_i,
 *
 * with integer exponent vectors and double coefficients. The set is closed
 * under +, x, d/dX, d/dT and the Hirota bilinear operators, so every identity
 * a tau function has to satisfy reduces to "this ExpPoly is zero", which is
 * checked coefficient by coefficient.
 *
 * Each value carries a construction scale: an upper estimate of the largest
 * magnitude that went into any of its coefficients. Zero tests are relative
 * to that scale, so cancellations between large intermediate terms are not
 * mistaken for genuine residuals.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vakh/errors.hpp"

namespace vakh {

enum class Var { X, T };

/// Integer exponent vector (m, n) of exp(m eta_1 + n eta_2).
using Exponent = std::array<int, 2>;

/// Largest |argument| passed to exp() before eval() refuses.
inline constexpr double kMaxExponentArgument = 700.0;

struct Mode {
  double K = 0.0;      // wave number per unit X
  double omega = 0.0;  // angular frequency per unit T
  double eta0 = 0.0;   // phase offset

  friend bool operator==(const Mode&, const Mode&) = default;
};

inline std::string to_string(const Exponent& e) {
  std::ostringstream os;
  os << '(' << e[0] << ',' << e[1] << ')';
  return os.str();
}

/// One or two phase generators. Immutable once built.
class PhaseBasis {
 public:
  explicit PhaseBasis(std::vector<Mode> modes) : modes_(std::move(modes)) {
    if (modes_.empty() || modes_.size() > 2) {
      throw DomainError("PhaseBasis: expected 1 or 2 modes, got " +
                        std::to_string(modes_.size()));
    }
    for (const auto& m : modes_) {
      if (!(m.K > 0.0) || !(m.omega > 0.0) || !std::isfinite(m.K) ||
          !std::isfinite(m.omega) || !std::isfinite(m.eta0)) {
        std::ostringstream os;
        os << "PhaseBasis: modes need finite K > 0 and omega > 0 (got K=" << m.K
           << ", omega=" << m.omega << ", eta0=" << m.eta0 << ")";
        throw DomainError(os.str());
      }
    }
    if (modes_.size() == 2 && modes_[0].K == modes_[1].K) {
      throw DomainError("PhaseBasis: degenerate two-mode basis with K1 == K2");
    }
  }

  std::span<const Mode> modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  const Mode& operator[](std::size_t i) const { return modes_.at(i); }

  double phase(std::size_t i, double X, double T) const {
    const Mode& m = modes_.at(i);
    return m.K * X - m.omega * T + m.eta0;
  }

  /// d/dX or d/dT of the exponent m eta_1 + n eta_2.
  double rate(Var var, const Exponent& e) const {
    double r = 0.0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      r += e[i] * (var == Var::X ? modes_[i].K : -modes_[i].omega);
    }
    return r;
  }

  double exponent(const Exponent& e, double X, double T) const {
    double s = 0.0;
    for (std::size_t i = 0; i < modes_.size(); ++i) s += e[i] * phase(i, X, T);
    return s;
  }

  bool admits(const Exponent& e) const { return modes_.size() == 2 || e[1] == 0; }

  friend bool operator==(const PhaseBasis&, const PhaseBasis&) = default;

 private:
  std::vector<Mode> modes_;
};

/// Outcome of ExpPoly::zero_test.
struct ZeroTest {
  bool zero = true;
  double max_relative = 0.0;          // max |c| / max(scale, 1)
  std::optional<Exponent> worst;      // exponent attaining max_relative
  double scale = 1.0;                 // the denominator used
};

class ExpPoly {
 public:
  using Terms = std::map<Exponent, double>;

  explicit ExpPoly(PhaseBasis basis) : basis_(std::move(basis)) {}

  ExpPoly(PhaseBasis basis, std::initializer_list<std::pair<const Exponent, double>> terms)
      : basis_(std::move(basis)) {
    for (const auto& [e, c] : terms) accumulate(e, c);
    normalize();
  }

  static ExpPoly constant(PhaseBasis basis, double c) {
    return ExpPoly(std::move(basis), {{Exponent{0, 0}, c}});
  }

  static ExpPoly monomial(PhaseBasis basis, Exponent e, double c = 1.0) {
    return ExpPoly(std::move(basis), {{e, c}});
  }

  const PhaseBasis& basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  double coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
  }

  /// Largest magnitude encountered while building this value (no floor).
  double scale() const { return scale_; }

  /// Returns a copy with term e removed (used to drop a mode's contributions).
  ExpPoly without(const Exponent& e) const {
    ExpPoly r = *this;
    r.terms_.erase(e);
    return r;
  }

  ExpPoly operator-() const {
    ExpPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    require_same_basis(a, b, "add");
    ExpPoly r = a;
    for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
    r.scale_ = std::max({r.scale_, a.scale_, b.scale_});
    r.normalize();
    return r;
  }

  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

  friend ExpPoly operator*(double s, const ExpPoly& p) {
    ExpPoly r = p;
    for (auto& [e, c] : r.terms_) c *= s;
    r.scale_ = std::abs(s) * p.scale_;
    r.normalize();
    return r;
  }

  friend ExpPoly operator*(const ExpPoly& p, double s) { return s * p; }

  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    require_same_basis(a, b, "mul");
    ExpPoly r(a.basis_);
    for (const auto& [u, cu] : a.terms_) {
      for (const auto& [v, cv] : b.terms_) r.accumulate({u[0] + v[0], u[1] + v[1]}, cu * cv);
    }
    r.scale_ = std::max(r.scale_, a.scale_ * b.scale_);
    r.normalize();
    return r;
  }

  /// Exact partial derivative: each term is scaled by the rate of its exponent.
  friend ExpPoly diff(const ExpPoly& p, Var var) {
    ExpPoly r(p.basis_);
    double max_rate = 0.0;
    for (const auto& [e, c] : p.terms_) {
      const double k = p.basis_.rate(var, e);
      max_rate = std::max(max_rate, std::abs(k));
      r.accumulate(e, c * k);
    }
    r.scale_ = std::max(r.scale_, p.scale_ * max_rate);
    r.normalize();
    return r;
  }

  /// Hirota bilinear derivative D_X^{order_x} D_T^{order_t} a.b
  ///
  ///   D_X^m D_T^n a.b = (d_X - d_X')^m (d_T - d_T')^n a(X,T) b(X',T') |_{X'=X, T'=T}
  ///
  /// On exponentials this is exact: the pair (u, v) contributes
  /// c_u c_v (rX(u) - rX(v))^m (rT(u) - rT(v))^n at exponent u + v.
  friend ExpPoly hirota(const ExpPoly& a, const ExpPoly& b, int order_x, int order_t) {
    if (order_x < 0 || order_t < 0) throw DomainError("hirota: negative derivative order");
    require_same_basis(a, b, "hirota");
    ExpPoly r(a.basis_);
    double max_factor = 0.0;
    for (const auto& [u, cu] : a.terms_) {
      for (const auto& [v, cv] : b.terms_) {
        const double dx = a.basis_.rate(Var::X, u) - a.basis_.rate(Var::X, v);
        const double dt = a.basis_.rate(Var::T, u) - a.basis_.rate(Var::T, v);
        const double factor = ipow(dx, order_x) * ipow(dt, order_t);
        max_factor = std::max(max_factor, std::abs(factor));
        r.accumulate({u[0] + v[0], u[1] + v[1]}, cu * cv * factor);
      }
    }
    r.scale_ = std::max(r.scale_, a.scale_ * b.scale_ * max_factor);
    r.normalize();
    return r;
  }

  /// Coefficient-wise zero test relative to max(scale(), 1).
  ZeroTest zero_test(double tol) const {
    if (!(tol > 0.0)) throw DomainError("zero_test: tolerance must be positive");
    ZeroTest z;
    z.scale = std::max(scale_, 1.0);
    for (const auto& [e, c] : terms_) {
      const double rel = std::abs(c) / z.scale;
      if (rel > z.max_relative) {
        z.max_relative = rel;
        z.worst = e;
      }
    }
    z.zero = z.max_relative <= tol;
    return z;
  }

  bool is_zero(double tol) const { return zero_test(tol).zero; }

  /// Point value. Throws OverflowError rather than returning inf.
  double eval(double X, double T) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c * std::exp(checked_exponent(e, X, T));
    return sum;
  }

  /// Exponent argument of term e at (X, T), range-checked.
  double checked_exponent(const Exponent& e, double X, double T) const {
    if (!std::isfinite(X) || !std::isfinite(T)) {
      throw DomainError("ExpPoly::eval: non-finite evaluation point");
    }
    const double arg = basis_.exponent(e, X, T);
    if (std::abs(arg) > kMaxExponentArgument) {
      std::ostringstream os;
      os << "ExpPoly::eval: exponent argument " << arg << " of term " << to_string(e)
         << " exceeds " << kMaxExponentArgument << " at (X=" << X << ", T=" << T << ")";
      throw OverflowError(os.str());
    }
    return arg;
  }

 private:
  static double ipow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
  }

  static void require_same_basis(const ExpPoly& a, const ExpPoly& b, const char* op) {
    if (!(a.basis_ == b.basis_)) {
      throw BasisMismatch(std::string("ExpPoly::") + op + ": operands have different phase bases");
    }
  }

  void accumulate(const Exponent& e, double c) {
    if (!basis_.admits(e)) {
      throw DomainError("ExpPoly: exponent " + to_string(e) + " needs a second mode");
    }
    double& slot = terms_[e];
    slot += c;
    scale_ = std::max({scale_, std::abs(c), std::abs(slot)});
  }

  void normalize() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0.0; });
  }

  PhaseBasis basis_;
  Terms terms_;
  double scale_ = 0.0;
};

}  // namespace vakh
