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

#ifndef MWB_MATHIEU_PREDICATES_HPP
#define MWB_MATHIEU_PREDICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwb/core/predicate.hpp"
#include "mwb/image_solver/image.hpp"
#include "mwb/moments/measure.hpp"

namespace mwb {

/// ord_nu(f) >= c, where ord_nu(f) = min nu(alpha) over the support of f.
/// The zero element has infinite order.
MembershipPredicate valuation_predicate(const std::vector<Rational>& nu, const Rational& c,
                                        AmbientKind kind = AmbientKind::polynomial);

MembershipPredicate no_constant_term(std::size_t n);

/// [z^gamma] f = 0 for every gamma in N^n.
MembershipPredicate no_holomorphic_part(std::size_t n);

/// int f dsigma = 0.
MembershipPredicate integral_predicate(const MeasureSpec& sigma, std::string label = "sigma");

MembershipPredicate atomic_predicate(const AtomicMeasure& sigma);

/// f in the linear span of the given elements.
MembershipPredicate span_predicate(std::vector<LaurentPoly> basis, AmbientKind kind = AmbientKind::polynomial,
                                   std::string name = "");

/// Im Phi_lambda in the Laurent ring, or Im' Phi_lambda in the polynomial ring.
MembershipPredicate image_predicate(const PhiSystem& sys, bool restricted);

MembershipPredicate whole_algebra(const Ambient& a);

MembershipPredicate trace_zero(std::size_t n);

/// A^n = 0 for an n x n matrix.
bool is_nilpotent(const RationalMatrix& a);

RationalMatrix jordan_block(std::size_t n, const Rational& eigenvalue = Rational(0));

/// Pointwise conjunction; all predicates must share one ambient.
MembershipPredicate intersect(const std::vector<MembershipPredicate>& preds);

/// M[t] inside A[t]: every coefficient of the extra last variable lies in M.
MembershipPredicate lift_predicate(const MembershipPredicate& m);

struct OneShortcut {
  bool applies = false;
  std::optional<Element> probe;  // b with 1 in M and b not in M
  std::string str() const;
};

/// If 1 is in M and some probe is not, M is not a Mathieu subspace (a = 1).
OneShortcut one_membership_shortcut(const MembershipPredicate& m, const std::vector<Element>& probes);

}  // namespace mwb

#endif  // MWB_MATHIEU_PREDICATES_HPP
