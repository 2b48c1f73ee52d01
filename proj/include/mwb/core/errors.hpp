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

#ifndef MWB_CORE_ERRORS_HPP
#define MWB_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwb {

/// Operands live in rings with different numbers of variables.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation or substitution would divide by zero.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value that must be a polynomial carries a negative exponent.
class NotPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside a family's admissible domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A constructed certificate failed its own forward re-verification.
/// Seeing this means a bug, never bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}

  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace mwb

#endif  // MWB_CORE_ERRORS_HPP
