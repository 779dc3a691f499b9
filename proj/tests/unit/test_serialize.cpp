// Copyright 2026 The bubblecalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bubblecalc/serialize.hpp"

using namespace bubblecalc;

namespace {

const LaurentPoly N = LaurentPoly::power(1);

}  // namespace

TEST_CASE("Laurent polynomials serialize by descending exponent") {
  const LaurentPoly p = N.shifted(2) * Rational(3) - LaurentPoly::monomial(Rational(1, 2), -1);
  const Json j = to_json(p);
  CHECK(j.dump() == R"([{"exp":3,"coeff":"3"},{"exp":-1,"coeff":"-1/2"}])");
  CHECK(laurent_from_json(j) == p);
  CHECK(to_json(LaurentPoly()).dump() == "[]");
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"([{"exp":1,"coeff":0.5}])")), FormatError);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"exp":1})")), FormatError);
}

TEST_CASE("rational functions round-trip") {
  const RationalFunc f(N, N.shifted(1) + 1);
  const Json j = to_json(f);
  CHECK(j.dump() == R"({"num":[{"exp":1,"coeff":"1"}],"den":[{"exp":2,"coeff":"1"},{"exp":0,"coeff":"1"}]})");
  CHECK(rational_func_from_json(j) == f);
}

TEST_CASE("bubble files") {
  const auto j = Json::parse(R"({"d": 4, "n": 2, "colors": {"1": [2, 1], "2": [1, 2], "3": [1, 2], "4": [1, 2]}})");
  const Bubble b = bubble_from_json(j);
  CHECK(b.color(1) == Permutation({1, 0}));
  CHECK(to_json(b) == j);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Bubble r = testing_oracle::random_bubble(2 + trial % 4, 1 + trial % 6, rng);
    CHECK(bubble_from_json(Json::parse(to_json(r).dump())) == r);
  }

  CHECK_THROWS_AS(bubble_from_json(Json::parse(R"({"d": 4, "n": 1})")), FormatError);
  CHECK_THROWS_AS(bubble_from_json(Json::parse(R"({"d": 2, "n": 1, "colors": {"1": [1]}})")), FormatError);
  CHECK_THROWS_AS(bubble_from_json(Json::parse(R"({"d": 1, "n": 1, "colors": {"1": ["a"]}})")), FormatError);
  try {
    bubble_from_json(Json::parse(R"({"d": 2, "n": 2, "colors": {"1": [1, 1], "2": [1, 2]}})"));
    FAIL("expected a validation error");
  } catch (const BubbleValidationError& e) {
    CHECK(e.report().diagnostics.front().kind == Diagnostic::Kind::not_bijective);
    CHECK(e.report().diagnostics.front().color == 1);
  }
  try {
    bubble_from_json(Json::parse(R"({"d": 2, "n": 2, "colors": {"1": [1, 2], "2": [1, 2]}})"));
    FAIL("expected a validation error");
  } catch (const BubbleValidationError& e) {
    CHECK(e.report().diagnostics.front().kind == Diagnostic::Kind::disconnected);
  }
}

TEST_CASE("tree files") {
  const auto j = Json::parse(R"({"color": 1, "labels": [2, 0], "children": [{"color": 1, "labels": [1], "children": []}]})");
  const auto t = tree_from_json(j);
  CHECK(t.to_string() == "1[2,0](1[1])");
  CHECK(to_json(t.root) == j);
  CHECK(tree_from_json(Json::parse(R"({"color": 1, "labels": [3]})")).root.total() == 3);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"color": 3, "labels": [1]})")), FormatError);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"color": 1})")), FormatError);
}

TEST_CASE("report payloads") {
  PowerSumExpansion e;
  e.terms[{2}] = RationalFunc(1);
  e.terms[{1, 1}] = RationalFunc(Rational(1, 2));
  CHECK(to_json(e).dump() ==
        R"([{"powers":[1,1],"coeff":{"num":[{"exp":0,"coeff":"1/2"}],"den":[{"exp":0,"coeff":"1"}]}},)"
        R"({"powers":[2],"coeff":{"num":[{"exp":0,"coeff":"1"}],"den":[{"exp":0,"coeff":"1"}]}}])");

  const auto r = rescale(N.shifted(6) + N.shifted(4), 2, 2);
  const Json jr = to_json(r);
  CHECK(jr["alpha"] == 2);
  CHECK(jr["leading"].dump() == R"({"exp":3,"coeff":"1"})");
  CHECK(laurent_from_json(jr["scaled"]) == r.scaled);

  Estimate est;
  est.mean = 1.5;
  est.std_error = 0.25;
  est.samples = 10;
  est.seed = 7;
  CHECK(to_json(est).dump() == R"({"mean":1.5,"stderr":0.25,"samples":10,"seed":7})");

  const Json wg = to_json(weingarten_table(2, Dimension::symbol(2)));
  REQUIRE(wg.size() == 2);
  CHECK(wg[1]["partition"].dump() == "[1,1]");
}

TEST_CASE("diagnostics CSV") {
  ScalingDiagnostics d;
  d.sigma = Permutation::identity(2);
  d.tau = Permutation({1, 0});
  d.row_faces = {1, 2};
  d.f_box = 1;
  d.f0 = 1;
  d.exponent = -1;
  const std::string csv = diagnostics_csv({d}, ColorSplit(4, {2, 4}));
  CHECK(csv == "sigma,tau,F1,F3,Fbox,F0,exponent\n1 2,2 1,1,2,1,1,-1\n");
}

TEST_CASE("missing files are format errors") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/bubble.json"), FormatError);
}
