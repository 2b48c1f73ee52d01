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

#include "mwb/diff_ops/operator.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace mwb {

OrderOneOp::OrderOneOp(std::size_t variable, LaurentPoly leading, RationalFunction zeroth)
    : variable_(variable), leading_(std::move(leading)), zeroth_(std::move(zeroth)) {
  if (leading_.nvars() != zeroth_.nvars()) throw DimensionError("operator parts in different rings");
  if (variable_ >= leading_.nvars()) throw DimensionError("operator variable out of range");
  if (leading_.is_zero() && zeroth_.is_zero()) throw PreconditionError("the zero operator");
}

OrderOneOp::OrderOneOp(std::size_t n, std::size_t variable, const Rational& leading, LaurentPoly zeroth)
    : OrderOneOp(variable, LaurentPoly::constant(n, leading), RationalFunction(std::move(zeroth))) {}

RationalFunction apply(const OrderOneOp& op, const RationalFunction& f) {
  if (f.nvars() != op.nvars()) throw DimensionError("operator and operand in different rings");
  return RationalFunction(op.leading()) * partial(f, op.variable()) + op.zeroth() * f;
}

LaurentPoly apply(const OrderOneOp& op, const LaurentPoly& f) {
  if (f.nvars() != op.nvars()) throw DimensionError("operator and operand in different rings");
  const auto& h = op.zeroth();
  LaurentPoly num = op.leading() * partial(f, op.variable()) * h.den() + h.num() * f;
  if (h.den().is_constant()) return num * (Rational(1) / h.den().constant_term());
  auto q = exact_quotient(num, h.den());
  if (!q) throw NotPolynomialError("operator image is not a Laurent polynomial");
  return *std::move(q);
}

LaurentPoly apply(const OrderOneOp& op, const LaurentPoly& f, unsigned k) {
  LaurentPoly r = f;
  for (unsigned j = 0; j < k; ++j) r = apply(op, r);
  return r;
}

bool Commutator::is_zero() const {
  return multiplier.is_zero() &&
         std::all_of(vector_field.begin(), vector_field.end(), [](const RationalFunction& v) { return v.is_zero(); });
}

Commutator commutator(const OrderOneOp& a, const OrderOneOp& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("operators in different rings");
  const std::size_t n = a.nvars();
  const std::size_t i = a.variable();
  const std::size_t j = b.variable();
  const RationalFunction p(a.leading());
  const RationalFunction q(b.leading());
  Commutator c{std::vector<RationalFunction>(n, RationalFunction(n)), RationalFunction(n)};
  c.vector_field[j] = c.vector_field[j] + p * partial(q, i);
  c.vector_field[i] = c.vector_field[i] - q * partial(p, j);
  c.multiplier = p * partial(b.zeroth(), i) - q * partial(a.zeroth(), j);
  return c;
}

bool commute_check(const OrderOneOp& a, const OrderOneOp& b) { return commutator(a, b).is_zero(); }

OrderOneOp phi_operator(std::size_t n, std::size_t i, const Rational& lambda) {
  return OrderOneOp(n, i, Rational(1), lambda * LaurentPoly::variable(n, i, -1));
}

OrderOneOp psi_operator(std::size_t n, std::size_t i, const Rational& alpha) {
  return OrderOneOp(n, i, Rational(1), alpha * LaurentPoly::variable(n, i, 1));
}

}  // namespace mwb
