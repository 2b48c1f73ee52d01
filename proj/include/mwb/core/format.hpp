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

#ifndef MWB_CORE_FORMAT_HPP
#define MWB_CORE_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mwb/core/laurent.hpp"

namespace mwb {

/// Default variable names: "z" for one variable, otherwise "z1".."zn".
std::vector<std::string> default_variable_names(std::size_t n);

/// Canonical text: terms in descending graded-lex order, written
/// `±(p/q)*z1^e1*...*zn^en`; coefficient 1 and zero exponents are omitted,
/// integer coefficients are written bare, and the zero polynomial is "0".
std::string to_string(const LaurentPoly& f);
std::string to_string(const LaurentPoly& f, const std::vector<std::string>& names);

/// Exponent vector as a comma-separated list, e.g. "2" or "1,0".
std::string to_string(const Monomial& m);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace mwb

#endif  // MWB_CORE_FORMAT_HPP
