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

#ifndef MWB_DIFF_OPS_OPERATOR_HPP
#define MWB_DIFF_OPS_OPERATOR_HPP

#include <cstddef>

#include "mwb/core/laurent.hpp"
#include "mwb/diff_ops/rational_function.hpp"

namespace mwb {

/// p * d/dz_i + h on a localization of the Laurent ring.
///
/// The operators of interest have a constant leading coefficient p and a
/// zeroth-order part h with at most a polynomial denominator. A non-constant
/// p is accepted so that commutators with vector fields such as z*d/dz can be
/// checked too.
class OrderOneOp {
 public:
  OrderOneOp(std::size_t variable, LaurentPoly leading, RationalFunction zeroth);
  OrderOneOp(std::size_t n, std::size_t variable, const Rational& leading, LaurentPoly zeroth);

  std::size_t variable() const noexcept { return variable_; }
  std::size_t nvars() const noexcept { return leading_.nvars(); }
  const LaurentPoly& leading() const noexcept { return leading_; }
  const RationalFunction& zeroth() const noexcept { return zeroth_; }
  bool has_constant_leading() const { return leading_.is_constant(); }

 private:
  std::size_t variable_;
  LaurentPoly leading_;
  RationalFunction zeroth_;
};

RationalFunction apply(const OrderOneOp& op, const RationalFunction& f);

/// Applies op to a Laurent polynomial; throws NotPolynomialError when the
/// result leaves the Laurent ring.
LaurentPoly apply(const OrderOneOp& op, const LaurentPoly& f);

/// op^k f, every intermediate staying in the Laurent ring.
LaurentPoly apply(const OrderOneOp& op, const LaurentPoly& f, unsigned k);

/// The commutator [a, b] = sum_k v_k d/dz_k + m.
struct Commutator {
  std::vector<RationalFunction> vector_field;
  RationalFunction multiplier;
  bool is_zero() const;
};

Commutator commutator(const OrderOneOp& a, const OrderOneOp& b);

/// Exact decision of [a, b] = 0 from the closed form of the commutator.
bool commute_check(const OrderOneOp& a, const OrderOneOp& b);

/// d/dz_i + lambda / z_i.
OrderOneOp phi_operator(std::size_t n, std::size_t i, const Rational& lambda);

/// d/dz_i + alpha z_i.
OrderOneOp psi_operator(std::size_t n, std::size_t i, const Rational& alpha);

}  // namespace mwb

#endif  // MWB_DIFF_OPS_OPERATOR_HPP
