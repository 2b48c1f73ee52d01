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

#ifndef MWB_CLI_REPRODUCE_HPP
#define MWB_CLI_REPRODUCE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mwb::cli {

struct ReproCheck {
  std::string label;
  std::string value;
  bool pass = false;
};

struct Reproduction {
  std::string name;
  std::vector<ReproCheck> checks;

  bool passed() const;
  std::string str() const;
};

/// Target names accepted by reproduce().
const std::vector<std::string>& reproduction_names();

/// Runs a named construction. The horizon overrides the per-target default.
Reproduction reproduce(std::string_view name, std::optional<int> horizon = std::nullopt);

}  // namespace mwb::cli

#endif  // MWB_CLI_REPRODUCE_HPP
