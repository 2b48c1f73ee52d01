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

#include "mwb/diff_ops/family.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "mwb/core/format.hpp"

namespace mwb {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::hermite, "hermite"},
    {Family::laguerre, "laguerre"},
    {Family::jacobi, "jacobi"},
    {Family::gegenbauer, "gegenbauer"},
    {Family::chebyshev1, "chebyshev1"},
    {Family::chebyshev2, "chebyshev2"},
    {Family::legendre, "legendre"},
    {Family::ball, "ball"},
    {Family::simplex, "simplex"},
    {Family::product, "product"},
}};

const Rational& broadcast(const std::vector<Rational>& v, std::size_t i, std::size_t n, const char* name) {
  static const Rational zero(0);
  if (v.empty()) return zero;
  if (v.size() == 1) return v[0];
  if (v.size() == n) return v[i];
  throw PreconditionError(std::string(name) + " has " + std::to_string(v.size()) + " entries for " +
                          std::to_string(n) + " variables");
}

Rational gegenbauer_lambda(const FamilySpec& s) {
  switch (s.family) {
    case Family::chebyshev1: return Rational(0);
    case Family::chebyshev2: return Rational(1);
    case Family::legendre: return Rational(1, 2);
    default: return s.lambda;
  }
}

void require_above(const Rational& x, const Rational& bound, const char* what, bool unconstrained) {
  if (unconstrained || x > bound) return;
  throw DomainError(std::string(what) + " = " + x.str() + " must exceed " + bound.str());
}

FamilySpec jacobi_block(const Rational& a, const Rational& b, bool unconstrained) {
  FamilySpec s = jacobi_spec({a}, {b});
  s.unconstrained = unconstrained;
  return s;
}

void append_blocks(const FamilySpec& s, bool unconstrained, std::vector<FamilySpec>& out) {
  unconstrained = unconstrained || s.unconstrained;
  switch (s.family) {
    case Family::hermite:
      for (std::size_t i = 0; i < s.n; ++i) {
        FamilySpec b = hermite_spec(1);
        b.unconstrained = unconstrained;
        out.push_back(std::move(b));
      }
      return;
    case Family::laguerre:
      for (std::size_t i = 0; i < s.n; ++i) {
        FamilySpec b = laguerre_spec({broadcast(s.alpha, i, s.n, "alpha")});
        b.unconstrained = unconstrained;
        out.push_back(std::move(b));
      }
      return;
    case Family::jacobi:
      for (std::size_t i = 0; i < s.n; ++i) {
        out.push_back(jacobi_block(broadcast(s.alpha, i, s.n, "alpha"), broadcast(s.beta, i, s.n, "beta"),
                                   unconstrained));
      }
      return;
    case Family::gegenbauer:
    case Family::chebyshev1:
    case Family::chebyshev2:
    case Family::legendre: {
      const Rational a = gegenbauer_lambda(s) - Rational(1, 2);
      for (std::size_t i = 0; i < s.n; ++i) out.push_back(jacobi_block(a, a, unconstrained));
      return;
    }
    case Family::ball:
    case Family::simplex: {
      FamilySpec b = s;
      b.unconstrained = unconstrained;
      out.push_back(std::move(b));
      return;
    }
    case Family::product:
      for (const auto& f : s.factors) append_blocks(f, unconstrained, out);
      return;
  }
}

Rational jacobi_constant(long m) {
  return pow(Rational(-1), m) / (pow(Rational(2), m) * factorial(m));
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [fam, n] : kNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

std::size_t FamilySpec::nvars() const {
  if (family != Family::product) return n;
  std::size_t total = 0;
  for (const auto& f : factors) total += f.nvars();
  return total;
}

FamilySpec hermite_spec(std::size_t n) {
  FamilySpec s;
  s.family = Family::hermite;
  s.n = n;
  return s;
}

FamilySpec laguerre_spec(std::vector<Rational> alpha) {
  FamilySpec s;
  s.family = Family::laguerre;
  s.n = std::max<std::size_t>(1, alpha.size());
  s.alpha = std::move(alpha);
  return s;
}

FamilySpec jacobi_spec(std::vector<Rational> alpha, std::vector<Rational> beta) {
  FamilySpec s;
  s.family = Family::jacobi;
  s.n = std::max<std::size_t>({1, alpha.size(), beta.size()});
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  return s;
}

FamilySpec gegenbauer_spec(const Rational& lambda, std::size_t n) {
  FamilySpec s;
  s.family = Family::gegenbauer;
  s.n = n;
  s.lambda = lambda;
  return s;
}

FamilySpec legendre_spec(std::size_t n) {
  FamilySpec s;
  s.family = Family::legendre;
  s.n = n;
  return s;
}

FamilySpec ball_spec(std::size_t n, const Rational& mu) {
  FamilySpec s;
  s.family = Family::ball;
  s.n = n;
  s.mu = mu;
  return s;
}

FamilySpec simplex_spec(std::vector<Rational> kappa) {
  FamilySpec s;
  s.family = Family::simplex;
  s.n = kappa.empty() ? 0 : kappa.size() - 1;
  s.kappa = std::move(kappa);
  return s;
}

FamilySpec product_spec(std::vector<FamilySpec> factors) {
  FamilySpec s;
  s.family = Family::product;
  s.factors = std::move(factors);
  s.n = s.nvars();
  return s;
}

void validate(const FamilySpec& spec) {
  if (spec.family == Family::product) {
    if (spec.factors.empty()) throw PreconditionError("product of no families");
    for (const auto& f : spec.factors) {
      FamilySpec g = f;
      g.unconstrained = g.unconstrained || spec.unconstrained;
      validate(g);
    }
    return;
  }
  if (spec.n == 0) throw PreconditionError(std::string(family_name(spec.family)) + " needs at least one variable");
  const bool free = spec.unconstrained;
  switch (spec.family) {
    case Family::gegenbauer:
      require_above(spec.lambda, Rational(-1, 2), "lambda", free);
      break;
    case Family::ball:
      require_above(spec.mu, Rational(1, 2), "mu", free);
      break;
    case Family::simplex:
      if (spec.kappa.size() != spec.n + 1) throw PreconditionError("simplex needs n + 1 kappa entries");
      for (const auto& k : spec.kappa) require_above(k, Rational(-1), "kappa", free);
      break;
    default:
      break;
  }
  for (const auto& b : blocks(spec)) {
    if (b.family == Family::laguerre) require_above(b.alpha[0], Rational(-1), "alpha", free);
    if (b.family == Family::jacobi && spec.family == Family::jacobi) {
      require_above(b.alpha[0], Rational(-1), "alpha", free);
      require_above(b.beta[0], Rational(-1), "beta", free);
    }
  }
}

std::vector<FamilySpec> blocks(const FamilySpec& spec) {
  std::vector<FamilySpec> out;
  append_blocks(spec, false, out);
  return out;
}

OpSystem::OpSystem(std::vector<OrderOneOp> ops, std::vector<LaurentPoly> gens, std::optional<FamilySpec> spec)
    : ops_(std::move(ops)), gens_(std::move(gens)), spec_(std::move(spec)) {
  if (ops_.size() != gens_.size()) throw PreconditionError("one generator per operator is required");
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].nvars() != ops_.size() || gens_[i].nvars() != ops_.size()) {
      throw DimensionError("operator system is not square");
    }
    for (std::size_t j = i + 1; j < ops_.size(); ++j) {
      if (!commute_check(ops_[i], ops_[j])) {
        throw PreconditionError("operators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " do not commute");
      }
    }
  }
}

OpSystem build_family(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.nvars();
  const LaurentPoly one = LaurentPoly::constant(n, Rational(1));
  std::vector<OrderOneOp> ops;
  std::vector<LaurentPoly> gens;
  std::size_t offset = 0;
  for (const auto& b : blocks(spec)) {
    const auto x = [&](std::size_t k, int p = 1) { return LaurentPoly::variable(n, offset + k, p); };
    switch (b.family) {
      case Family::hermite:
        ops.emplace_back(n, offset, Rational(1), Rational(-2) * x(0));
        gens.push_back(one);
        break;
      case Family::laguerre:
        ops.emplace_back(n, offset, Rational(1), b.alpha[0] * x(0, -1) - one);
        gens.push_back(x(0));
        break;
      case Family::jacobi: {
        const LaurentPoly num = -b.alpha[0] * (one + x(0)) + b.beta[0] * (one - x(0));
        const LaurentPoly g = one - x(0, 2);
        ops.emplace_back(offset, one, num.is_zero() ? RationalFunction(num) : RationalFunction(num, g));
        gens.push_back(g);
        break;
      }
      case Family::ball: {
        LaurentPoly g = one;
        for (std::size_t k = 0; k < b.n; ++k) g -= x(k, 2);
        const Rational c = Rational(1) - Rational(2) * b.mu;
        for (std::size_t k = 0; k < b.n; ++k) {
          const LaurentPoly num = c * x(k);
          ops.emplace_back(offset + k, one, num.is_zero() ? RationalFunction(num) : RationalFunction(num, g));
          gens.push_back(g);
        }
        break;
      }
      case Family::simplex: {
        LaurentPoly s = one;
        for (std::size_t k = 0; k < b.n; ++k) s -= x(k);
        for (std::size_t k = 0; k < b.n; ++k) {
          const LaurentPoly num = b.kappa[k] * x(k, -1) * s - b.kappa[b.n] * one;
          ops.emplace_back(offset + k, one, num.is_zero() ? RationalFunction(num) : RationalFunction(num, s));
          gens.push_back(x(k) * s);
        }
        break;
      }
      default:
        throw PreconditionError("unexpected block family");
    }
    offset += b.n;
  }
  return OpSystem(std::move(ops), std::move(gens), spec);
}

Rational family_constant(const FamilySpec& spec, const Monomial& alpha) {
  if (alpha.size() != spec.nvars()) throw DimensionError("multi-index length does not match the family");
  Rational c(1);
  std::size_t offset = 0;
  for (const auto& b : blocks(spec)) {
    long m = 0;
    for (std::size_t k = 0; k < b.n; ++k) m += alpha[offset + k];
    switch (b.family) {
      case Family::hermite: c *= pow(Rational(-1), m); break;
      case Family::laguerre: c /= factorial(m); break;
      case Family::jacobi: c *= jacobi_constant(m); break;
      case Family::ball:
        c *= pow(Rational(-1), m) * rising(Rational(2) * b.mu, m) /
             (pow(Rational(2), m) * factorial(m) * rising(b.mu + Rational(1, 2), m));
        break;
      default: break;
    }
    offset += b.n;
  }
  return c;
}

LaurentPoly generator_power(const OpSystem& sys, const Monomial& alpha) {
  if (alpha.size() != sys.nvars()) throw DimensionError("multi-index length does not match the system");
  LaurentPoly r = LaurentPoly::constant(sys.nvars(), Rational(1));
  for (std::size_t i = 0; i < sys.nvars(); ++i) {
    if (alpha[i] < 0) throw PreconditionError("multi-index with a negative entry");
    r *= pow(sys.gens()[i], static_cast<unsigned>(alpha[i]));
  }
  return r;
}

LaurentPoly apply_power(const OpSystem& sys, const Monomial& alpha, const LaurentPoly& f) {
  if (alpha.size() != sys.nvars()) throw DimensionError("multi-index length does not match the system");
  LaurentPoly r = f;
  for (std::size_t i = sys.nvars(); i-- > 0;) {
    if (alpha[i] < 0) throw PreconditionError("multi-index with a negative entry");
    r = apply(sys.ops()[i], r, static_cast<unsigned>(alpha[i]));
  }
  return r;
}

Poly rodrigues(const OpSystem& sys, const Monomial& alpha, const Rational& c) {
  if (c.is_zero()) throw PreconditionError("zero Rodrigues constant");
  const LaurentPoly u = c * apply_power(sys, alpha, generator_power(sys, alpha));
  if (!u.is_polynomial()) throw NotPolynomialError("Rodrigues output has negative exponents");
  if (u.total_degree() != alpha.total_degree()) {
    throw DomainError("Rodrigues output for alpha = (" + to_string(alpha) + ") has degree " +
                      (u.is_zero() ? std::string("-inf") : std::to_string(*u.total_degree())));
  }
  return u;
}

Poly rodrigues(const OpSystem& sys, const Monomial& alpha) {
  if (!sys.spec()) throw PreconditionError("system carries no family constants");
  return rodrigues(sys, alpha, family_constant(*sys.spec(), alpha));
}

Poly laguerre_inverse_series(const Poly& p, std::size_t i) {
  require_polynomial(p, "laguerre_inverse_series input");
  LaurentPoly q(p.nvars());
  for (LaurentPoly t = p; !t.is_zero(); t = partial(t, i)) q -= t;
  return q;
}

}  // namespace mwb
