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

#ifndef MWB_CLI_PARSE_HPP
#define MWB_CLI_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mwb/core/predicate.hpp"
#include "mwb/diff_ops/family.hpp"
#include "mwb/moments/measure.hpp"

namespace mwb::cli {

/// Canonical polynomial text in z1..zn ("z" stands for z1 when n = 1).
/// Accepts negative exponents and implicit multiplication. Errors report
/// 1-based columns.
LaurentPoly parse_poly(std::string_view text, std::size_t n);

/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

/// "name[:key=value;...]" with keys n, alpha, beta, lambda, mu, kappa and the
/// flag "unconstrained"; products join factors with '*'.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

/// "atomic:P@w;...", "box:lo..hi,...", "density:q=EXPR;a=A;b=B", or a family.
MeasureSpec parse_measure(std::string_view text);
std::string format_measure(const MeasureSpec& spec);

/// "laurent N", "poly N" or "matrix N".
Ambient parse_ambient(std::string_view text);

/// Polynomial text, or "[a b; c d]" for a matrix ambient.
Element parse_element(std::string_view text, const Ambient& ambient);

/// Predicate specs: no-constant-term, no-holomorphic-part, trace-zero,
/// whole-algebra, valuation:nu=..;c=.., integral:MEASURE, image:lambda=..,
/// image':lambda=.., span:EXPR|EXPR, constant-term:D:FAMILY; "A & B"
/// intersects and a trailing "[t]" lifts to one extra variable.
MembershipPredicate parse_predicate(std::string_view text, const Ambient& ambient);

}  // namespace mwb::cli

#endif  // MWB_CLI_PARSE_HPP
