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

#ifndef MWB_ORTHOPOLY_BASIS_HPP
#define MWB_ORTHOPOLY_BASIS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwb/core/linalg.hpp"
#include "mwb/core/predicate.hpp"
#include "mwb/diff_ops/family.hpp"
#include "mwb/moments/measure.hpp"

namespace mwb {

enum class BasisMethod { rodrigues, gram_schmidt };

/// Order in which monomials of equal degree are orthogonalized. Lower degrees
/// always come first; within a degree, monomials are processed from the
/// smallest to the largest in the chosen order so that each output is monic in
/// its leading monomial.
enum class MonomialOrder {
  graded_lex,          // z1 > z2 > ... > zn
  graded_reverse_vars  // zn > ... > z1
};

struct OrthoBasis {
  FamilySpec family;
  BasisMethod method = BasisMethod::rodrigues;
  int degree = 0;
  /// Entries in ascending total degree.
  std::vector<std::pair<Monomial, Poly>> entries;

  std::size_t nvars() const { return family.nvars(); }
  const Poly& at(const Monomial& alpha) const;
};

OrthoBasis gram_schmidt_basis(const FamilySpec& family, int degree,
                              MonomialOrder order = MonomialOrder::graded_lex);

/// u_alpha = c_alpha Lambda^alpha(g^alpha) for |alpha| <= degree; raw sets c = 1.
OrthoBasis rodrigues_basis(const FamilySpec& family, int degree, bool raw = false);

/// Coefficients c_alpha with f = sum c_alpha u_alpha, by back-substitution
/// over degree blocks. Zero coefficients are omitted.
std::map<Monomial, Rational, GradedLexGreater> expand(const Poly& f, const OrthoBasis& basis);

/// f is in the span of u_alpha, alpha != 0.
MembershipPredicate constant_term_predicate(const OrthoBasis& basis);

/// s with a = s b, if a and b are proportional and b != 0.
std::optional<Rational> proportionality(const Poly& a, const Poly& b);

/// <u_alpha, u_beta> under the family weight, in entry order.
RationalMatrix gram_matrix(const OrthoBasis& basis);

/// One line per entry, "alpha: polynomial", e.g. "1,0: z1".
std::string to_golden(const OrthoBasis& basis);

}  // namespace mwb

#endif  // MWB_ORTHOPOLY_BASIS_HPP
