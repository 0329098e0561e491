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
#include <sstream>

#include "catch_amalgamated.hpp"
#include "vakh/classify.hpp"

using namespace vakh;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("regime examples") {
  const auto loop = classify_regime(0.5, 0.24);
  CHECK(loop.regime == Regime::kLoop);
  CHECK_THAT(loop.lambda, WithinRel(1.17483111962240802638, 1e-13));
  CHECK_THAT(loop.U_M, WithinRel(4.89512966509336695774, 1e-13));
  CHECK_THAT(loop.alpha_star, WithinRel(5.0 / 6.0, 1e-15));

  CHECK(classify_regime(1.2, 0.24).regime == Regime::kHump);
  CHECK_THAT(classify_regime(1.2, 0.24).lambda, WithinRel(0.840078332319382238985, 1e-13));
  CHECK(classify_regime(0.0, 1.0).regime == Regime::kLoop);
}

TEST_CASE("cusp at alpha = 1/sqrt(6 v)") {
  for (double v : {0.05, 0.12, 0.24, 1.0, 3.0}) {
    const auto c = classify_regime(cusp_alpha(v), v);
    CHECK(c.regime == Regime::kCusp);
    CHECK_THAT(c.U_M, WithinRel(1.0 / v, 1e-12));
    CHECK(classify_regime(cusp_alpha(v) * (1 - 1e-6), v).regime == Regime::kLoop);
    CHECK(classify_regime(cusp_alpha(v) * (1 + 1e-6), v).regime == Regime::kHump);
  }
  // zero tie tolerance leaves only exact hits as cusps
  CHECK(classify_regime(cusp_alpha(0.24) * (1 + 1e-12), 0.24, 0.0).regime != Regime::kCusp);
  CHECK_THROWS_AS(classify_regime(1.0, 0.24, -1.0), DomainError);
  CHECK_THROWS_AS(cusp_alpha(0.0), DomainError);
}

TEST_CASE("lambda decreases in alpha") {
  for (double v : {0.05, 0.5, 2.0}) {
    double prev = INFINITY;
    for (double a = 0.0; a <= 4.0; a += 0.25) {
      const double l = classify_regime(a, v).lambda;
      CHECK(l < prev);
      prev = l;
    }
  }
}

TEST_CASE("region scan layout") {
  const auto rows = region_scan({0.0, 3.0, 4}, {0.05, 1.0, 3});
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].alpha == 0.0);
  CHECK(rows[3].alpha == 3.0);
  CHECK(rows[4].v == 0.05 + 0.475);
  CHECK(rows[11].v == 1.0);
  std::ostringstream os;
  write_scan_csv(os, rows);
  CHECK(os.str().rfind("alpha,v,K,lambda,U_M,regime\n", 0) == 0);
  CHECK_THROWS_AS(region_scan({0.0, 3.0, 1}, {0.05, 1.0, 3}), DomainError);
  CHECK_THROWS_AS(region_scan({0.0, 3.0, 4}, {0.0, 1.0, 3}), DomainError);
  CHECK_THROWS_AS(region_scan({-1.0, 3.0, 4}, {0.05, 1.0, 3}), DomainError);
}

TEST_CASE("amplitude comparison") {
  const double v = 0.24;
  const auto cmp = amplitude_comparison(v, {2.0, 0.3, cusp_alpha(v)});
  CHECK(cmp.strictly_decreasing);
  CHECK(cmp.entries[1].regime == Regime::kLoop);
  CHECK(cmp.entries[2].regime == Regime::kCusp);
  CHECK(cmp.entries[0].regime == Regime::kHump);
  CHECK_THAT(cmp.entries[2].U_M, WithinRel(1.0 / v, 1e-12));
}
