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
#include <vector>

#include "catch_amalgamated.hpp"
#include "vakh/analysis.hpp"
#include "vakh/soliton.hpp"
#include "vakh/two_soliton.hpp"

using namespace vakh;
using Catch::Matchers::WithinRel;

namespace {

// Graph profile x = T with the given heights.
ParametricProfile graph(const std::vector<double>& u) {
  ParametricProfile p;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double T = static_cast<double>(i);
    p.samples.push_back({T, T, u[i], 1.0});
  }
  return p;
}

ParametricProfile bumps(double h1, double c1, double h2, double c2, int n = 801) {
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) {
    const double T = -40.0 + 80.0 * i / (n - 1);
    u[i] = h1 / std::pow(std::cosh(T - c1), 2) + h2 / std::pow(std::cosh(T - c2), 2);
  }
  return graph(u);
}

TwoSolitonOptions attach(TwoSolitonForm form = TwoSolitonForm::kCorrected) {
  TwoSolitonOptions o;
  o.certification = Certification::kAttach;
  o.form = form;
  return o;
}

}  // namespace

TEST_CASE("hump one-soliton gives one single-valued structure") {
  const auto [p, tau] = build_one_soliton(2.0, 0.24);
  const auto c = count_structures(snapshot(tau, 0.0));
  REQUIRE(c.count() == 1);
  CHECK_FALSE(c.structures[0].multivalued);
  CHECK_THAT(c.structures[0].U_peak, WithinRel(6 * p.modes[0].K * p.modes[0].K, 1e-6));
}

TEST_CASE("loop one-soliton gives one multivalued structure") {
  const auto [p, tau] = build_one_soliton(0.1, 0.24);
  const auto c = count_structures(snapshot(tau, 0.0));
  REQUIRE(c.count() == 1);
  CHECK(c.structures[0].multivalued);
}

TEST_CASE("separated bumps are counted and ordered by x") {
  const auto c = count_structures(bumps(1.0, 10.0, 3.0, -10.0));
  REQUIRE(c.count() == 2);
  CHECK(c.structures[0].x_peak < c.structures[1].x_peak);
  CHECK_THAT(c.structures[0].U_peak, WithinRel(3.0, 1e-3));
  CHECK_THAT(c.structures[1].U_peak, WithinRel(1.0, 1e-3));
  CHECK(c.structures[0].window_hi <= c.structures[1].window_lo);
}

TEST_CASE("prominence threshold drops small ripples") {
  const auto p = bumps(1.0, 0.0, 0.01, 15.0);
  CHECK(count_structures(p, 0.02).count() == 1);
  CHECK(count_structures(p, 0.005).count() == 2);
  // a shoulder that never dips is not a second peak
  CHECK(count_structures(bumps(1.0, 0.0, 0.8, 0.6)).count() == 1);
}

TEST_CASE("plateau maxima collapse to one peak") {
  const auto c = count_structures(graph({0, 1, 2, 2, 2, 2, 1, 0}));
  REQUIRE(c.count() == 1);
  CHECK(c.structures[0].index == 3);
}

TEST_CASE("multivalued flag is local to each structure") {
  auto p = bumps(2.0, -10.0, 1.0, 10.0);
  for (auto& s : p.samples) {
    if (s.T > 150 && s.T < 250) s.xT = s.T < 200 ? -0.5 : 0.5;  // fold inside the first bump
  }
  const auto c = count_structures(p);
  REQUIRE(c.count() == 2);
  CHECK(c.structures[0].multivalued);
  CHECK_FALSE(c.structures[1].multivalued);
}

TEST_CASE("degenerate profiles") {
  CHECK_THROWS_AS(count_structures(graph({1.0, 2.0})), DomainError);
  CHECK_THROWS_AS(count_structures(graph({0.0, 1.0, 0.0}), 0.0), DomainError);
  CHECK_THROWS_AS(count_structures(graph({0.0, NAN, 0.0})), DomainError);
  CHECK(count_structures(graph({0.0, 0.0, 0.0})).count() == 0);
  CHECK(count_structures(graph({-1.0, -0.5, -1.0})).count() == 0);
}

TEST_CASE("one-soliton census is 1 at every time") {
  const auto [p, tau] = build_one_soliton(0.5, 0.24);
  const auto tl = fission_timeline(tau, -20.0, 20.0, 9);
  REQUIRE(tl.censuses.size() == 9);
  for (const auto& c : tl.censuses) CHECK(c.count() == 1);
  CHECK_FALSE(tl.fission_index);
  CHECK(tl.censuses.back().t == 20.0);
}

TEST_CASE("census is stable under x0 shifts and refinement") {
  const auto tau = build_two_soliton(5.0, 0.24, 0.12, 0, 0, attach()).second;
  for (double t : {-15.0, 11.0}) {
    const auto base = count_structures(snapshot(tau, t));
    const auto shifted = count_structures(snapshot(tau, t, std::nullopt, kDefaultSamples, 37.5));
    const auto fine = count_structures(snapshot(tau, t, std::nullopt, 2 * kDefaultSamples - 1));
    REQUIRE(base.count() == shifted.count());
    REQUIRE(base.count() == fine.count());
    for (std::size_t i = 0; i < base.count(); ++i) {
      CHECK_THAT(shifted.structures[i].x_peak, WithinRel(base.structures[i].x_peak + 37.5, 1e-12));
      CHECK(shifted.structures[i].multivalued == base.structures[i].multivalued);
      CHECK_THAT(fine.structures[i].U_peak, WithinRel(base.structures[i].U_peak, 1e-3));
    }
  }
}

TEST_CASE("timeline marks the first 1 -> 2 step") {
  // The literal first-order form at alpha = 0.1 splits between t = 0 and t = 5.
  const auto tau = build_two_soliton(0.1, 0.24, 0.12, 0, 0, attach(TwoSolitonForm::kLiteral)).second;
  const std::vector<double> times{-15.0, 0.0, 5.0, 11.0};
  const auto tl = census_timeline(tau, times);
  CHECK(tl.censuses[0].count() == 1);
  CHECK(tl.censuses[1].count() == 1);
  CHECK(tl.censuses[2].count() == 2);
  REQUIRE(tl.fission_index);
  CHECK(*tl.fission_index == 2);
}

TEST_CASE("timeline input checks") {
  const auto [p, tau] = build_one_soliton(0.5, 0.24);
  CHECK_THROWS_AS(fission_timeline(tau, 1.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(fission_timeline(tau, 0.0, 1.0, 1), DomainError);
}
