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

#ifndef MWB_MOMENTS_MEASURE_HPP
#define MWB_MOMENTS_MEASURE_HPP

#include <string>
#include <variant>
#include <vector>

#include "mwb/core/laurent.hpp"
#include "mwb/diff_ops/family.hpp"

namespace mwb {

/// A classical weight on its canonical domain.
struct WeightMeasure {
  FamilySpec family;
};

/// sum_i a_i delta(u_i); the weights may be signed.
struct AtomicMeasure {
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> weights;
};

/// Lebesgue measure on prod (lower_i, upper_i).
struct LebesgueBox {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
};

/// q(z) dz on (a, b), one variable. Not a positive measure in general.
struct SignedDensity {
  Poly q;
  Rational a;
  Rational b;
};

using MeasureSpec = std::variant<WeightMeasure, AtomicMeasure, LebesgueBox, SignedDensity>;

/// Number of variables the measure lives in.
std::size_t nvars(const MeasureSpec& spec);

/// Throws PreconditionError for malformed data (zero atomic weights, unordered
/// bounds, mismatched lengths) and DomainError for inadmissible weights.
void validate(const MeasureSpec& spec);

/// int z^gamma w / int w. Rejects unconstrained parameter overrides, for which
/// the integrals need not converge.
Rational normalized_moment(const FamilySpec& family, const Monomial& gamma);

/// Normalized integral for weights, plain integral for the other variants.
Rational integrate_poly(const MeasureSpec& spec, const Poly& f);

/// integrate_poly(spec, f * g); conjugation is trivial on rational data.
Rational inner_product(const MeasureSpec& spec, const Poly& f, const Poly& g);

/// int q over (a, b).
Rational signed_mass(const SignedDensity& d);

bool total_mass_is_positive(const MeasureSpec& spec);

/// int_0^1 p(z) exp(2 pi i m z) dz = sum_{k >= 1} coeffs[k-1] (2 pi)^(-k).
/// Zero exactly when every coefficient vanishes.
struct OscillatoryExpansion {
  std::vector<GaussianRational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::string str() const;
  friend bool operator==(const OscillatoryExpansion&, const OscillatoryExpansion&) = default;
};

OscillatoryExpansion oscillatory_integral(const Poly& p, long m);

}  // namespace mwb

#endif  // MWB_MOMENTS_MEASURE_HPP
