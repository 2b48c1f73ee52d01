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

#include "mwb/diff_ops/rational_function.hpp"

#include <utility>

namespace mwb {

namespace {

Monomial min_exponents(const LaurentPoly& f) {
  Monomial m(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) m[i] = f.min_exponent(i);
  return m;
}

bool same_denominator(const LaurentPoly& a, const LaurentPoly& b) { return a == b; }

}  // namespace

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw PoleError("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DimensionError("exact division across rings");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  const Monomial ma = min_exponents(a);
  const Monomial mb = min_exponents(b);
  LaurentPoly r = mul_monomial(a, -ma);
  const LaurentPoly d = mul_monomial(b, -mb);
  const auto& [lead_m, lead_c] = d.leading();
  LaurentPoly q(a.nvars());
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading();
    if (!divides(lead_m, rm)) return std::nullopt;
    const LaurentPoly t = LaurentPoly::term(rm - lead_m, rc / lead_c);
    q += t;
    r -= t * d;
  }
  return mul_monomial(q, ma - mb);
}

RationalFunction::RationalFunction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.nvars(), Rational(1))) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("rational function with zero denominator");
  if (num_.nvars() != den_.nvars()) throw DimensionError("numerator and denominator in different rings");
  require_polynomial(den_, "denominator");
}

std::optional<LaurentPoly> RationalFunction::to_laurent() const { return exact_quotient(num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (same_denominator(a.den_, b.den_)) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction partial(const RationalFunction& f, std::size_t i) {
  if (f.den().is_constant()) return {partial(f.num(), i), f.den()};
  return {partial(f.num(), i) * f.den() - f.num() * partial(f.den(), i), f.den() * f.den()};
}

}  // namespace mwb
