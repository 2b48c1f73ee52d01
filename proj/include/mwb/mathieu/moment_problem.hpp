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

#ifndef MWB_MATHIEU_MOMENT_PROBLEM_HPP
#define MWB_MATHIEU_MOMENT_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwb/core/laurent.hpp"

namespace mwb {

/// F(W(z)) for one-variable polynomials.
Poly compose(const Poly& outer, const Poly& inner);

/// int_a^b p(z) dz, exact.
Rational definite_integral(const Poly& p, const Rational& a, const Rational& b);

/// First m in 1..horizon with int_a^b f^m != 0.
std::optional<int> folk_streak(const Poly& f, const Rational& a, const Rational& b, int horizon);

/// One summand (Q_j, f_j, W_j) of a candidate decomposition.
struct PmComponent {
  Poly q;
  Poly f;
  Poly w;
};

struct PmReport {
  std::vector<bool> endpoints;    // W_j(a) = W_j(b)
  bool derivative_sum = false;    // q = sum_j Q_j'(W_j) W_j'
  std::vector<bool> composition;  // f = f_j(W_j)
  int first_m = 0;
  std::vector<Rational> moments;  // int_a^b f^m q for m = first_m..horizon

  bool conditions_hold() const;
  bool moments_vanish() const;
  /// Conditions (1)-(3) imply vanishing moments; false only on a contradiction.
  bool consistent() const { return !conditions_hold() || moments_vanish(); }
  std::string str() const;
};

PmReport pm_verify(const Poly& q, const Poly& f, const Rational& a, const Rational& b,
                   const std::vector<PmComponent>& decomposition, int horizon, int first_m = 0);

/// f = outer(inner) with inner monic and without constant term.
struct Decomposition {
  Poly outer;
  Poly inner;
};

/// Searches for f = F(W) with deg W = d, 1 <= d <= deg f, d | deg f.
std::optional<Decomposition> decompose_search(const Poly& f, int d);

}  // namespace mwb

#endif  // MWB_MATHIEU_MOMENT_PROBLEM_HPP
