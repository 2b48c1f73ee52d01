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

#include "mwb/core/format.hpp"

#include <ostream>
#include <sstream>

namespace mwb {

std::vector<std::string> default_variable_names(std::size_t n) {
  if (n == 1) return {"z"};
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

std::string to_string(const LaurentPoly& f) { return to_string(f, default_variable_names(f.nvars())); }

std::string to_string(const LaurentPoly& f, const std::vector<std::string>& names) {
  if (names.size() != f.nvars()) throw DimensionError("wrong number of variable names");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (m[i] != 1) mono += '^' + std::to_string(m[i]);
    }

    if (mono.empty()) {
      out << mag.str();
    } else if (mag == Rational(1)) {
      out << mono;
    } else if (mag.is_integer()) {
      out << mag.str() << '*' << mono;
    } else {
      out << '(' << mag.str() << ")*" << mono;
    }
  }
  return out.str();
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(m[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

}  // namespace mwb
