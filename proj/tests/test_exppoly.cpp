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
#include <cmath>

#include "catch_amalgamated.hpp"
#include "vakh/exppoly.hpp"

using namespace vakh;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PhaseBasis one_mode() { return PhaseBasis({{0.75, 0.3, 0.1}}); }
PhaseBasis two_mode() { return PhaseBasis({{0.7, 0.2, 0.0}, {1.3, 0.45, -0.4}}); }

ExpPoly sample_a() { return ExpPoly(two_mode(), {{{0, 0}, 1.0}, {{2, 0}, 0.5}, {{1, 3}, -2.0}}); }
ExpPoly sample_b() { return ExpPoly(two_mode(), {{{0, 2}, 1.5}, {{2, 2}, 0.25}, {{1, 0}, 3.0}}); }
ExpPoly sample_c() { return ExpPoly(two_mode(), {{{0, 0}, -0.5}, {{0, 1}, 2.0}}); }

}  // namespace

TEST_CASE("basis validation") {
  CHECK_THROWS_AS(PhaseBasis({}), DomainError);
  CHECK_THROWS_AS(PhaseBasis({{1, 1, 0}, {2, 1, 0}, {3, 1, 0}}), DomainError);
  CHECK_THROWS_AS(PhaseBasis({{0.0, 1, 0}}), DomainError);
  CHECK_THROWS_AS(PhaseBasis({{1, -1, 0}}), DomainError);
  CHECK_THROWS_AS(PhaseBasis({{1, 1, NAN}}), DomainError);
  CHECK_THROWS_AS(PhaseBasis({{1, 1, 0}, {1, 2, 0}}), DomainError);
  CHECK_THROWS_AS(ExpPoly(one_mode(), {{{0, 1}, 1.0}}), DomainError);
}

TEST_CASE("mixing bases is refused") {
  const ExpPoly a = ExpPoly::constant(one_mode(), 1.0);
  const ExpPoly b = ExpPoly::constant(two_mode(), 1.0);
  CHECK_THROWS_AS(a + b, BasisMismatch);
  CHECK_THROWS_AS(a * b, BasisMismatch);
  CHECK_THROWS_AS(hirota(a, b, 1, 0), BasisMismatch);
}

TEST_CASE("diff of one-soliton tau") {
  // F = 1 + e^{2 eta}: F_X = 2K e^{2 eta}, F_T = -2 omega e^{2 eta}
  const ExpPoly F(one_mode(), {{{0, 0}, 1.0}, {{2, 0}, 1.0}});
  const ExpPoly Fx = diff(F, Var::X);
  const ExpPoly Ft = diff(F, Var::T);
  CHECK(Fx.size() == 1);
  CHECK_THAT(Fx.coefficient({2, 0}), WithinRel(1.5, 1e-15));
  CHECK_THAT(Ft.coefficient({2, 0}), WithinRel(-0.6, 1e-15));
  CHECK(Fx.coefficient({0, 0}) == 0.0);
}

TEST_CASE("hirota on one-soliton tau") {
  const ExpPoly F(one_mode(), {{{0, 0}, 1.0}, {{2, 0}, 1.0}});
  const double K = 0.75, w = 0.3;
  // D_X^2 F.F = 2 (2K)^2 e^{2 eta}; odd orders vanish
  CHECK_THAT(hirota(F, F, 2, 0).coefficient({2, 0}), WithinRel(8 * K * K, 1e-15));
  CHECK(hirota(F, F, 2, 0).size() == 1);
  CHECK(hirota(F, F, 1, 0).empty());
  CHECK(hirota(F, F, 2, 1).empty());
  // D_T D_X^3 F.F = 2 (2K)^3 (-2 w) e^{2 eta}
  CHECK_THAT(hirota(F, F, 3, 1).coefficient({2, 0}), WithinRel(-32 * K * K * K * w, 1e-14));
}

TEST_CASE("hirota antisymmetry and bilinearity") {
  const ExpPoly a = sample_a(), b = sample_b(), c = sample_c();
  for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {2, 1}, {3, 1}, {2, 2}}) {
    const double sign = (m + n) % 2 == 0 ? 1.0 : -1.0;
    CHECK((hirota(a, b, m, n) - sign * hirota(b, a, m, n)).is_zero(1e-13));
    CHECK((hirota(a + c, b, m, n) - hirota(a, b, m, n) - hirota(c, b, m, n)).is_zero(1e-13));
    CHECK((hirota(2.5 * a, b, m, n) - 2.5 * hirota(a, b, m, n)).is_zero(1e-13));
  }
}

TEST_CASE("diff obeys Leibniz") {
  const ExpPoly a = sample_a(), b = sample_b();
  for (Var v : {Var::X, Var::T}) {
    CHECK((diff(a * b, v) - diff(a, v) * b - a * diff(b, v)).is_zero(1e-13));
  }
}

TEST_CASE("D_X a.b = a_X b - a b_X") {
  const ExpPoly a = sample_a(), b = sample_b();
  CHECK((hirota(a, b, 1, 0) - (diff(a, Var::X) * b - a * diff(b, Var::X))).is_zero(1e-13));
  CHECK((hirota(a, b, 0, 1) - (diff(a, Var::T) * b - a * diff(b, Var::T))).is_zero(1e-13));
  // D_X^2 a.a = 2 (a a_XX - a_X^2)
  const ExpPoly axx = diff(diff(a, Var::X), Var::X);
  const ExpPoly ax = diff(a, Var::X);
  CHECK((hirota(a, a, 2, 0) - 2.0 * (a * axx - ax * ax)).is_zero(1e-13));
}

TEST_CASE("diff matches finite differences") {
  const ExpPoly a = sample_a();
  const double h = 1e-5;
  for (auto [X, T] : {std::pair{0.3, -0.2}, {-1.0, 1.5}, {0.0, 0.0}}) {
    const double fd_x = (a.eval(X + h, T) - a.eval(X - h, T)) / (2 * h);
    const double fd_t = (a.eval(X, T + h) - a.eval(X, T - h)) / (2 * h);
    CHECK_THAT(diff(a, Var::X).eval(X, T), WithinRel(fd_x, 1e-8));
    CHECK_THAT(diff(a, Var::T).eval(X, T), WithinRel(fd_t, 1e-8));
  }
}

TEST_CASE("eval and overflow") {
  const ExpPoly F(one_mode(), {{{0, 0}, 1.0}, {{2, 0}, 1.0}});
  const double eta = 0.75 * 0.4 - 0.3 * 1.0 + 0.1;
  CHECK_THAT(F.eval(0.4, 1.0), WithinRel(1.0 + std::exp(2 * eta), 1e-15));
  CHECK_THROWS_AS(F.eval(1000.0, 0.0), OverflowError);
  CHECK_THROWS_AS(F.eval(NAN, 0.0), DomainError);
  try {
    F.eval(1000.0, 0.0);
  } catch (const OverflowError& e) {
    CHECK(std::string(e.what()).find("(2,0)") != std::string::npos);
  }
}

TEST_CASE("zero test is relative to construction scale") {
  const ExpPoly big(one_mode(), {{{2, 0}, 1e6}});
  const ExpPoly almost = big - ExpPoly(one_mode(), {{{2, 0}, 1e6 - 1e-4}});
  CHECK(almost.coefficient({2, 0}) != 0.0);
  CHECK(almost.scale() >= 1e6);
  CHECK(almost.is_zero(1e-9));
  CHECK_FALSE(ExpPoly(one_mode(), {{{2, 0}, 1e-4}}).is_zero(1e-9));
  CHECK_THROWS_AS(big.zero_test(0.0), DomainError);
  const auto z = (big + ExpPoly(one_mode(), {{{0, 0}, 3e6}})).zero_test(1e-9);
  REQUIRE(z.worst);
  CHECK(*z.worst == Exponent{0, 0});
}

TEST_CASE("exact cancellation drops terms") {
  const ExpPoly a = sample_a();
  CHECK((a - a).empty());
  CHECK(a.without({2, 0}).coefficient({2, 0}) == 0.0);
  CHECK(a.without({2, 0}).size() == a.size() - 1);
}
