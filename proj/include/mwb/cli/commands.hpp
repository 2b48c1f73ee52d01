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

#ifndef MWB_CLI_COMMANDS_HPP
#define MWB_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace mwb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 2;

/// Each runner writes to out and returns the process exit code. Library
/// errors propagate as exceptions.
int run_gen_basis(const std::string& family, const std::string& params, int degree, const std::string& method,
                  std::ostream& out);
int run_image(const std::string& lambda, bool restricted, const std::string& input, bool witness,
              std::ostream& out);
/// "osc:M" selects the oscillatory integral over (0, 1) at frequency M.
int run_moment(const std::string& measure, const std::string& input, std::ostream& out);
int run_mathieu_test(const std::string& scenario_text, bool dump, std::ostream& out);
int run_reproduce(const std::string& example, std::optional<int> horizon, std::ostream& out);
int run_pm_verify(const std::string& problem_text, std::ostream& out);

}  // namespace mwb::cli

#endif  // MWB_CLI_COMMANDS_HPP
