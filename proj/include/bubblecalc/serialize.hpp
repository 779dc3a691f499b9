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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bubblecalc/bubble.hpp"
#include "bubblecalc/effective.hpp"
#include "bubblecalc/gaussian.hpp"
#include "bubblecalc/montecarlo.hpp"
#include "bubblecalc/tree.hpp"
#include "bubblecalc/weingarten.hpp"

namespace bubblecalc {

using Json = nlohmann::ordered_json;

/// Malformed input file; what() names the offending field.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed bubble file describing an invalid bubble.
class BubbleValidationError : public FormatError {
 public:
  explicit BubbleValidationError(ValidationReport report)
      : FormatError("invalid bubble: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// [{"exp": e, "coeff": "p/q"}, ...] by descending exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
/// {"num": poly, "den": poly}
Json to_json(const RationalFunc& f);
RationalFunc rational_func_from_json(const Json& j);
Json to_json(const LeadingTerm& t);

/// {"d": d, "n": n, "colors": {"1": [...], ...}}, images 1-based.
Json to_json(const Bubble& b);
Bubble bubble_from_json(const Json& j);

/// {"color": 1|3, "labels": [...], "children": [...]}
Json to_json(const TreeVertex& v);
CornerLabeledTree tree_from_json(const Json& j);

Json to_json(const PowerSumExpansion& e);
Json to_json(const ExpectationResult& r);
Json to_json(const Estimate& e);
/// [{"partition": [..], "value": RationalFunc}, ...]
Json to_json(const WeingartenTable& t);

/// CSV with columns sigma, tau, F<c> per row color, Fbox, F0, exponent.
std::string diagnostics_csv(const std::vector<ScalingDiagnostics>& rows, const ColorSplit& split);

/// Reads and parses a JSON file; FormatError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace bubblecalc
