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

#include "mwb/moments/measure.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace mwb {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational hermite_moment(long g) {
  if (g % 2 != 0) return Rational(0);
  Rational r(1);
  for (long k = g - 1; k > 0; k -= 2) r *= Rational(k);
  return r / pow(Rational(2), g / 2);
}

Rational jacobi_moment(const Rational& a, const Rational& b, long g) {
  // z^g = sum_j C(g, j) (-1)^(g-j) (1+z)^j.
  Rational r(0);
  for (long j = 0; j <= g; ++j) {
    const Rational shifted = pow(Rational(2), j) * rising(b + Rational(1), j) / rising(a + b + Rational(2), j);
    r += binomial(g, j) * pow(Rational(-1), g - j) * shifted;
  }
  return r;
}

Rational simplex_moment(const FamilySpec& s, std::span<const int> g) {
  Rational total_kappa(0);
  for (const auto& k : s.kappa) total_kappa += k;
  Rational r(1);
  long deg = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    r *= rising(s.kappa[i] + Rational(1), g[i]);
    deg += g[i];
  }
  return r / rising(total_kappa + Rational(static_cast<long>(s.n)) + Rational(1), deg);
}

Rational ball_moment(const FamilySpec& s, std::span<const int> g) {
  Rational r(1);
  long half = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    if (g[i] % 2 != 0) return Rational(0);
    r *= rising(Rational(1, 2), g[i] / 2);
    half += g[i] / 2;
  }
  return r / rising(s.mu + Rational(static_cast<long>(s.n) + 1, 2), half);
}

Rational integral_of_power(const Rational& a, const Rational& b, int k) {
  return (pow(b, k + 1) - pow(a, k + 1)) / Rational(k + 1);
}

Rational integrate_interval(const Poly& f, const Rational& a, const Rational& b) {
  require_polynomial(f, "integrand");
  Rational r(0);
  for (const auto& [m, c] : f.terms()) r += c * integral_of_power(a, b, m[0]);
  return r;
}

}  // namespace

std::size_t nvars(const MeasureSpec& spec) {
  return std::visit(overloaded{
                        [](const WeightMeasure& w) { return w.family.nvars(); },
                        [](const AtomicMeasure& a) { return a.points.empty() ? std::size_t{1} : a.points[0].size(); },
                        [](const LebesgueBox& b) { return b.lower.size(); },
                        [](const SignedDensity&) { return std::size_t{1}; },
                    },
                    spec);
}

void validate(const MeasureSpec& spec) {
  std::visit(overloaded{
                 [](const WeightMeasure& w) { validate(w.family); },
                 [](const AtomicMeasure& a) {
                   if (a.points.size() != a.weights.size()) throw PreconditionError("one weight per atom is required");
                   for (const auto& p : a.points) {
                     if (p.size() != a.points[0].size()) throw PreconditionError("atoms of different dimensions");
                   }
                   for (const auto& w : a.weights) {
                     if (w.is_zero()) throw PreconditionError("atomic weights must be nonzero");
                   }
                 },
                 [](const LebesgueBox& b) {
                   if (b.lower.size() != b.upper.size() || b.lower.empty()) throw PreconditionError("malformed box");
                   for (std::size_t i = 0; i < b.lower.size(); ++i) {
                     if (!(b.lower[i] < b.upper[i])) throw PreconditionError("box bounds must be strictly ordered");
                   }
                 },
                 [](const SignedDensity& d) {
                   require_polynomial(d.q, "density");
                   if (d.q.nvars() != 1) throw DimensionError("densities are univariate");
                   if (!(d.a < d.b)) throw PreconditionError("interval bounds must be strictly ordered");
                 },
             },
             spec);
}

Rational normalized_moment(const FamilySpec& family, const Monomial& gamma) {
  validate(family);
  if (gamma.size() != family.nvars()) throw DimensionError("moment index length does not match the family");
  if (!gamma.is_nonnegative()) throw PreconditionError("moment index with a negative entry");
  const auto parts = blocks(family);
  Rational r(1);
  std::size_t offset = 0;
  for (const auto& b : parts) {
    if (b.unconstrained) throw DomainError("moments of an unconstrained weight are not defined");
    const auto g = gamma.exponents().subspan(offset, b.n);
    switch (b.family) {
      case Family::hermite: r *= hermite_moment(g[0]); break;
      case Family::laguerre: r *= rising(b.alpha[0] + Rational(1), g[0]); break;
      case Family::jacobi: r *= jacobi_moment(b.alpha[0], b.beta[0], g[0]); break;
      case Family::simplex: r *= simplex_moment(b, g); break;
      case Family::ball: r *= ball_moment(b, g); break;
      default: throw PreconditionError("unexpected block family");
    }
    if (r.is_zero()) return r;
    offset += b.n;
  }
  return r;
}

Rational integrate_poly(const MeasureSpec& spec, const Poly& f) {
  validate(spec);
  require_polynomial(f, "integrand");
  if (f.nvars() != nvars(spec)) throw DimensionError("integrand and measure in different dimensions");
  return std::visit(
      overloaded{
          [&](const WeightMeasure& w) {
            Rational r(0);
            for (const auto& [m, c] : f.terms()) r += c * normalized_moment(w.family, m);
            return r;
          },
          [&](const AtomicMeasure& a) {
            Rational r(0);
            for (std::size_t i = 0; i < a.points.size(); ++i) r += a.weights[i] * eval(f, a.points[i]);
            return r;
          },
          [&](const LebesgueBox& b) {
            Rational r(0);
            for (const auto& [m, c] : f.terms()) {
              Rational t = c;
              for (std::size_t i = 0; i < m.size(); ++i) t *= integral_of_power(b.lower[i], b.upper[i], m[i]);
              r += t;
            }
            return r;
          },
          [&](const SignedDensity& d) { return integrate_interval(f * d.q, d.a, d.b); },
      },
      spec);
}

Rational inner_product(const MeasureSpec& spec, const Poly& f, const Poly& g) { return integrate_poly(spec, f * g); }

Rational signed_mass(const SignedDensity& d) { return integrate_interval(d.q, d.a, d.b); }

bool total_mass_is_positive(const MeasureSpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const WeightMeasure& w) {
                          const auto parts = blocks(w.family);
                          return std::none_of(parts.begin(), parts.end(),
                                              [](const FamilySpec& b) { return b.unconstrained; });
                        },
                        [](const AtomicMeasure& a) {
                          return std::all_of(a.weights.begin(), a.weights.end(),
                                             [](const Rational& w) { return w.sign() > 0; });
                        },
                        [](const LebesgueBox&) { return true; },
                        [](const SignedDensity& d) { return signed_mass(d).sign() > 0; },
                    },
                    spec);
}

std::string OscillatoryExpansion::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs[k].str() << ")*(2pi)^-" << (k + 1);
    first = false;
  }
  return os.str();
}

OscillatoryExpansion oscillatory_integral(const Poly& p, long m) {
  require_polynomial(p, "oscillatory integrand");
  if (p.nvars() != 1) throw DimensionError("oscillatory integrals are univariate");
  if (m < 1) throw PreconditionError("frequency must be positive");
  // Integration by parts with exp(2 pi i m) = 1:
  // sum_k (-1)^(k-1) (p^(k-1)(1) - p^(k-1)(0)) / (2 pi i m)^k.
  const GaussianRational inv = GaussianRational(1) / (GaussianRational::unit() * GaussianRational(Rational(m)));
  OscillatoryExpansion e;
  GaussianRational scale = inv;
  Poly d = p;
  const std::vector<Rational> at0{Rational(0)};
  const std::vector<Rational> at1{Rational(1)};
  for (long k = 1; !d.is_zero(); ++k) {
    const Rational gap = eval(d, at1) - eval(d, at0);
    const GaussianRational sign = (k % 2 == 1) ? GaussianRational(1) : GaussianRational(-1);
    e.coeffs.push_back(sign * GaussianRational(gap) * scale);
    scale *= inv;
    d = partial(d, 0);
  }
  while (!e.coeffs.empty() && e.coeffs.back().is_zero()) e.coeffs.pop_back();
  return e;
}

}  // namespace mwb
