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

#ifndef MWB_DIFF_OPS_RATIONAL_FUNCTION_HPP
#define MWB_DIFF_OPS_RATIONAL_FUNCTION_HPP

#include <optional>

#include "mwb/core/laurent.hpp"

namespace mwb {

/// Quotient a / b when b divides a in the Laurent ring, nothing otherwise.
/// Precondition: b != 0.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// num / den with den a nonzero polynomial. No cancellation is attempted;
/// equality is cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t n = 1) : num_(n), den_(LaurentPoly::constant(n, Rational(1))) {}
  RationalFunction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// The value as a Laurent polynomial, when it is one.
  std::optional<LaurentPoly> to_laurent() const;

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

RationalFunction partial(const RationalFunction& f, std::size_t i);

}  // namespace mwb

#endif  // MWB_DIFF_OPS_RATIONAL_FUNCTION_HPP
