/*
   Copyright 2026 The mathieu-workbench Authors

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

#ifndef MWB_CLI_SCENARIO_HPP
#define MWB_CLI_SCENARIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mwb/mathieu/moment_problem.hpp"
#include "mwb/mathieu/report.hpp"

namespace mwb::cli {

/// One Mathieu experiment. Text form is "key: value" lines with keys
/// ambient, predicate, f, g, horizon and optional side; '#' starts a comment.
struct Scenario {
  Ambient ambient;
  std::string predicate;
  Element f;
  Element g;
  int horizon = 10;
  Side side = Side::right;
};

Scenario parse_scenario(std::string_view text);
std::string serialize(const Scenario& s);
bool same_scenario(const Scenario& a, const Scenario& b);

MathieuReport run_scenario(const Scenario& s);

/// The scenario followed by the computed bitmasks and verdict, same format.
std::string dump(const Scenario& s, const MathieuReport& r);

/// Moment-problem input. Keys q, f, a, b, horizon, optional first-m and any
/// number of "component: Q=EXPR; f=EXPR; W=EXPR" lines.
struct PmProblem {
  Poly q;
  Poly f;
  Rational a;
  Rational b;
  std::vector<PmComponent> components;
  int horizon = 20;
  int first_m = 0;
};

PmProblem parse_pm_problem(std::string_view text);
std::string serialize(const PmProblem& p);

}  // namespace mwb::cli

#endif  // MWB_CLI_SCENARIO_HPP
