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

#ifndef MWB_TESTS_ORACLES_WEIGHTS_HPP
#define MWB_TESTS_ORACLES_WEIGHTS_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "mwb/diff_ops/family.hpp"
#include "mwb/diff_ops/rational_function.hpp"

namespace mwb::oracle {

/// w = prod p_k^e_k * exp(q), written straight from the weight formulas.
struct WeightForm {
  std::size_t n = 1;
  std::vector<std::pair<LaurentPoly, Rational>> factors;
  LaurentPoly exponent;
};

inline void append_weight(const FamilySpec& s, std::size_t n, std::size_t offset, WeightForm& w) {
  const LaurentPoly one = LaurentPoly::constant(n, Rational(1));
  const auto x = [&](std::size_t k, int p = 1) { return LaurentPoly::variable(n, offset + k, p); };
  const auto at = [](const std::vector<Rational>& v, std::size_t i) { return v.empty() ? Rational(0) : v.size() == 1 ? v[0] : v[i]; };
  switch (s.family) {
    case Family::hermite:
      for (std::size_t k = 0; k < s.n; ++k) w.exponent -= x(k, 2);
      return;
    case Family::laguerre:
      for (std::size_t k = 0; k < s.n; ++k) {
        w.factors.emplace_back(x(k), at(s.alpha, k));
        w.exponent -= x(k);
      }
      return;
    case Family::jacobi:
    case Family::gegenbauer:
    case Family::chebyshev1:
    case Family::chebyshev2:
    case Family::legendre:
      for (std::size_t k = 0; k < s.n; ++k) {
        Rational a = at(s.alpha, k);
        Rational b = at(s.beta, k);
        if (s.family != Family::jacobi) {
          const Rational lambda = s.family == Family::chebyshev1   ? Rational(0)
                                  : s.family == Family::chebyshev2 ? Rational(1)
                                  : s.family == Family::legendre   ? Rational(1, 2)
                                                                   : s.lambda;
          a = b = lambda - Rational(1, 2);
        }
        w.factors.emplace_back(one - x(k), a);
        w.factors.emplace_back(one + x(k), b);
      }
      return;
    case Family::ball: {
      LaurentPoly r = one;
      for (std::size_t k = 0; k < s.n; ++k) r -= x(k, 2);
      w.factors.emplace_back(r, s.mu - Rational(1, 2));
      return;
    }
    case Family::simplex: {
      LaurentPoly r = one;
      for (std::size_t k = 0; k < s.n; ++k) {
        w.factors.emplace_back(x(k), s.kappa[k]);
        r -= x(k);
      }
      w.factors.emplace_back(r, s.kappa[s.n]);
      return;
    }
    case Family::product:
      for (const auto& f : s.factors) {
        append_weight(f, n, offset, w);
        offset += f.nvars();
      }
      return;
  }
}

inline WeightForm weight_form(const FamilySpec& s) {
  WeightForm w;
  w.n = s.nvars();
  w.exponent = LaurentPoly(w.n);
  append_weight(s, w.n, 0, w);
  return w;
}

/// d_i log w as a rational function.
inline RationalFunction log_derivative(const WeightForm& w, std::size_t i) {
  RationalFunction r(partial(w.exponent, i));
  for (const auto& [p, e] : w.factors) {
    const LaurentPoly dp = partial(p, i);
    if (dp.is_zero() || e.is_zero()) continue;
    r = r + RationalFunction(e * dp, p);
  }
  return r;
}

inline double weight_value(const WeightForm& w, const std::vector<double>& x) {
  const auto value = [&](const LaurentPoly& p) {
    double s = 0;
    for (const auto& [m, c] : p.terms()) {
      double t = c.to_double();
      for (std::size_t k = 0; k < m.size(); ++k) t *= std::pow(x[k], m[k]);
      s += t;
    }
    return s;
  };
  double r = std::exp(value(w.exponent));
  for (const auto& [p, e] : w.factors) r *= std::pow(value(p), e.to_double());
  return r;
}

}  // namespace mwb::oracle

#endif  // MWB_TESTS_ORACLES_WEIGHTS_HPP
