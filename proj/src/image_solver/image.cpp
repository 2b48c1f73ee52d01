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

#include "mwb/image_solver/image.hpp"

#include <map>
#include <string>

#include "mwb/core/linalg.hpp"

namespace mwb {

namespace {

bool is_negative_integer(const Rational& x) { return x.is_integer() && x.sign() < 0; }

LaurentPoly reflect(const LaurentPoly& f, std::size_t i) {
  LaurentPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, (m[i] % 2 == 0) ? c : -c);
  return r;
}

ImageWitness zero_witness(std::size_t n) { return ImageWitness{std::vector<LaurentPoly>(n, LaurentPoly(n))}; }

ImageWitness verified(ImageWitness w, const std::vector<OrderOneOp>& ops, const LaurentPoly& target,
                      const char* what) {
  if (operator_image(ops, w) != target) throw InconsistencyError(std::string(what) + " witness failed re-verification");
  return w;
}

std::vector<OrderOneOp> psi_ops(const std::vector<Rational>& alpha) {
  std::vector<OrderOneOp> ops;
  for (std::size_t i = 0; i < alpha.size(); ++i) ops.push_back(psi_operator(alpha.size(), i, alpha[i]));
  return ops;
}

void decompose_slabs(const Poly& g, const PhiSystem& sys, std::size_t s, ImageWitness& w) {
  const std::size_t n = sys.nvars();
  if (g.is_zero()) return;
  if (s == n) throw PreconditionError("polynomial outside the image");
  const Rational k = -sys.lambda[s] - Rational(1);
  if (!k.is_integer() || k.sign() < 0) {
    w.f[s] += solve_single(g, s, sys.lambda[s]);
    return;
  }
  const int slab = static_cast<int>(*k.to_long());
  const Poly u = filter_terms(g, [&](const Monomial& m) { return m[s] == slab; });
  w.f[s] += solve_single(g - u, s, sys.lambda[s]);
  ImageWitness inner = zero_witness(n);
  Monomial down(n);
  down[s] = -slab;
  decompose_slabs(mul_monomial(u, down), sys, s + 1, inner);
  for (std::size_t j = s + 1; j < n; ++j) w.f[j] += mul_monomial(inner.f[j], -down);
}

}  // namespace

std::vector<OrderOneOp> PhiSystem::ops() const {
  std::vector<OrderOneOp> r;
  for (std::size_t i = 0; i < nvars(); ++i) r.push_back(phi_operator(nvars(), i, lambda[i]));
  return r;
}

std::optional<Monomial> PhiSystem::excluded_monomial() const {
  Monomial m(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (!lambda[i].is_integer()) return std::nullopt;
    m[i] = static_cast<int>(*(-lambda[i] - Rational(1)).to_long());
  }
  return m;
}

LaurentPoly operator_image(const std::vector<OrderOneOp>& ops, const ImageWitness& w) {
  if (ops.size() != w.f.size()) throw DimensionError("witness length does not match the operators");
  if (ops.empty()) throw PreconditionError("empty operator system");
  const std::size_t n = ops.front().nvars();
  LaurentPoly sum(n);
  RationalFunction rest(n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (w.f[i].is_zero()) continue;
    if (ops[i].zeroth().den().is_constant()) {
      sum += apply(ops[i], w.f[i]);
    } else {
      rest = rest + apply(ops[i], RationalFunction(w.f[i]));
    }
  }
  if (rest.is_zero()) return sum;
  auto q = rest.to_laurent();
  if (!q) throw NotPolynomialError("operator image is not a Laurent polynomial");
  return sum + *q;
}

bool in_image(const LaurentPoly& g, const PhiSystem& sys) {
  if (g.nvars() != sys.nvars()) throw DimensionError("polynomial and system in different rings");
  const auto excluded = sys.excluded_monomial();
  return !excluded || g.coeff(*excluded).is_zero();
}

LaurentPoly solve_single(const LaurentPoly& g, std::size_t i, const Rational& lambda) {
  if (i >= g.nvars()) throw DimensionError("variable index out of range");
  LaurentPoly f(g.nvars());
  for (const auto& [m, c] : g.terms()) {
    const Rational d = Rational(m[i]) + lambda + Rational(1);
    if (d.is_zero()) throw PreconditionError("term z^(-lambda-1) is not in the image");
    Monomial up = m;
    up[i] += 1;
    f.add_term(up, c / d);
  }
  return f;
}

ImageWitness decompose(const LaurentPoly& g, const PhiSystem& sys) {
  if (!in_image(g, sys)) throw PreconditionError("target is not in the image");
  const std::size_t n = sys.nvars();
  std::vector<LaurentPoly> parts(n, LaurentPoly(n));
  for (const auto& [m, c] : g.terms()) {
    std::size_t i = 0;
    while (i < n && (Rational(m[i]) + sys.lambda[i] + Rational(1)).is_zero()) ++i;
    if (i == n) throw InconsistencyError("monomial with no solvable variable passed the image test");
    parts[i].add_term(m, c);
  }
  ImageWitness w = zero_witness(n);
  for (std::size_t i = 0; i < n; ++i) w.f[i] = solve_single(parts[i], i, sys.lambda[i]);
  return verified(std::move(w), sys.ops(), g, "decompose");
}

bool in_image_poly(const Poly& g, const PhiSystem& sys) {
  require_polynomial(g, "in_image_poly input");
  if (g.nvars() != sys.nvars()) throw DimensionError("polynomial and system in different rings");
  for (const auto& l : sys.lambda) {
    if (!is_negative_integer(l)) return true;
  }
  return g.coeff(*sys.excluded_monomial()).is_zero();
}

ImageWitness decompose_poly(const Poly& g, const PhiSystem& sys) {
  if (!in_image_poly(g, sys)) throw PreconditionError("target is not in the polynomial image");
  ImageWitness w = zero_witness(sys.nvars());
  decompose_slabs(g, sys, 0, w);
  for (const auto& f : w.f) {
    if (!f.is_polynomial()) throw InconsistencyError("slab decomposition produced a Laurent entry");
  }
  return verified(std::move(w), sys.ops(), g, "decompose_poly");
}

std::pair<LaurentPoly, LaurentPoly> counterexample_pair(long lambda) {
  if (lambda == -1) throw PreconditionError("lambda = -1 has no counterexample pair");
  const auto z = [](long p) { return LaurentPoly::variable(1, 0, static_cast<int>(p)); };
  const LaurentPoly one = LaurentPoly::constant(1, Rational(1));
  const LaurentPoly u = lambda < -1 ? one + z(-lambda) : one + z(-lambda - 2);
  return {u, z(-lambda - 1)};
}

std::optional<Poly> solve_psi(const Poly& g, std::size_t i, const Rational& alpha) {
  require_polynomial(g, "solve_psi input");
  if (alpha.is_zero()) return solve_single(g, i, Rational(0));
  const std::size_t n = g.nvars();
  // Group by the exponents outside z_i, then solve each univariate column.
  std::map<Monomial, std::map<int, Rational>, GradedLexGreater> groups;
  for (const auto& [m, c] : g.terms()) {
    Monomial rest = m;
    rest[i] = 0;
    groups[rest][m[i]] = c;
  }
  Poly f(n);
  for (const auto& [rest, col] : groups) {
    const int d = col.rbegin()->first;
    const auto gcoef = [&](int j) {
      const auto it = col.find(j);
      return it == col.end() ? Rational(0) : it->second;
    };
    std::vector<Rational> fc(static_cast<std::size_t>(d) + 2, Rational(0));
    for (int j = d - 1; j >= 0; --j) {
      fc[j] = (gcoef(j + 1) - Rational(j + 2) * fc[j + 2]) / alpha;
    }
    if (fc.size() > 1 ? fc[1] != gcoef(0) : !gcoef(0).is_zero()) return std::nullopt;
    for (int j = 0; j < d; ++j) {
      Monomial m = rest;
      m[i] = j;
      f.add_term(m, fc[j]);
    }
  }
  return f;
}

std::optional<ImageWitness> decompose_psi(const Poly& g, const std::vector<Rational>& alpha) {
  require_polynomial(g, "decompose_psi input");
  const std::size_t n = alpha.size();
  if (g.nvars() != n) throw DimensionError("polynomial and system in different rings");
  for (std::size_t i = 0; i < n; ++i) {
    if (!alpha[i].is_zero()) continue;
    ImageWitness w = zero_witness(n);
    w.f[i] = solve_single(g, i, Rational(0));
    return verified(std::move(w), psi_ops(alpha), g, "decompose_psi");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (auto f = solve_psi(g, i, alpha[i])) {
      ImageWitness w = zero_witness(n);
      w.f[i] = *std::move(f);
      return verified(std::move(w), psi_ops(alpha), g, "decompose_psi");
    }
  }
  return std::nullopt;
}

std::optional<ImageWitness> bounded_witness_search(const std::vector<OrderOneOp>& ops, const LaurentPoly& target,
                                                   int max_degree) {
  if (ops.empty()) throw PreconditionError("empty operator system");
  const std::size_t n = ops.front().nvars();
  if (target.nvars() != n) throw DimensionError("target and operators in different rings");
  // Clear denominators with the product of the distinct ones.
  std::vector<LaurentPoly> dens;
  LaurentPoly common = LaurentPoly::constant(n, Rational(1));
  for (const auto& op : ops) {
    const auto& d = op.zeroth().den();
    if (d.is_constant()) continue;
    bool seen = false;
    for (const auto& e : dens) seen = seen || e == d;
    if (!seen) {
      dens.push_back(d);
      common *= d;
    }
  }
  const auto basis = graded_multi_indices(n, max_degree);
  std::vector<LaurentPoly> columns;
  for (const auto& op : ops) {
    for (const auto& b : basis) {
      const RationalFunction r = apply(op, RationalFunction(LaurentPoly::term(b)));
      auto q = exact_quotient(r.num() * common, r.den());
      if (!q) throw InconsistencyError("denominator did not clear");
      columns.push_back(*std::move(q));
    }
  }
  const LaurentPoly rhs = target * common;
  std::vector<LaurentPoly> all = columns;
  all.push_back(rhs);
  const auto rows = joint_support<Rational>(all);
  const RationalMatrix a = coefficient_matrix<Rational>(columns, rows);
  const RationalMatrix b = coefficient_matrix<Rational>(std::span<const LaurentPoly>(&rhs, 1), rows);
  const auto x = solve_exact<Rational>(a, b.col(0));
  if (!x) return std::nullopt;
  ImageWitness w = zero_witness(n);
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (const auto& m : basis) w.f[i].add_term(m, (*x)(k++));
  }
  return verified(std::move(w), ops, target, "bounded search");
}

std::optional<ImageWitness> decompose_laguerre(const Poly& g, const std::vector<Rational>& alpha) {
  require_polynomial(g, "decompose_laguerre input");
  const std::size_t n = alpha.size();
  if (g.nvars() != n) throw DimensionError("polynomial and system in different rings");
  for (std::size_t i = 0; i < n; ++i) {
    if (!alpha[i].is_zero()) continue;
    ImageWitness w = zero_witness(n);
    w.f[i] = laguerre_inverse_series(g, i);
    FamilySpec spec = laguerre_spec(alpha);
    spec.unconstrained = true;
    return verified(std::move(w), build_family(spec).ops(), g, "decompose_laguerre");
  }
  return std::nullopt;
}

std::optional<ImageWitness> decompose_jacobi(const Poly& g, const std::vector<Rational>& alpha,
                                             const std::vector<Rational>& beta) {
  require_polynomial(g, "decompose_jacobi input");
  const std::size_t n = alpha.size();
  if (beta.size() != n || g.nvars() != n) throw DimensionError("Jacobi parameters and polynomial disagree");
  FamilySpec spec = jacobi_spec(alpha, beta);
  spec.unconstrained = true;
  for (std::size_t i = 0; i < n; ++i) {
    ImageWitness w = zero_witness(n);
    try {
      if (alpha[i].is_zero()) {
        // x = z - 1 turns Lambda_i into Phi_beta.
        const LaurentPoly f = solve_single(shift(g, i, Rational(-1)), i, beta[i]);
        w.f[i] = shift(f, i, Rational(1));
      } else if (beta[i].is_zero()) {
        // x = 1 - z turns Lambda_i into -Phi_alpha.
        const LaurentPoly f = solve_single(-shift(reflect(g, i), i, Rational(-1)), i, alpha[i]);
        w.f[i] = shift(reflect(f, i), i, Rational(-1));
      } else {
        continue;
      }
    } catch (const PreconditionError&) {
      continue;
    }
    return verified(std::move(w), build_family(spec).ops(), g, "decompose_jacobi");
  }
  return std::nullopt;
}

ImageWitness rodrigues_witness(const OpSystem& sys, const Monomial& alpha, const Rational& c) {
  const std::size_t n = sys.nvars();
  std::size_t i = 0;
  while (i < n && alpha[i] == 0) ++i;
  if (i == n) throw PreconditionError("alpha = 0 has no image witness");
  Monomial lower = alpha;
  lower[i] -= 1;
  ImageWitness w = zero_witness(n);
  w.f[i] = c * apply_power(sys, lower, generator_power(sys, alpha));
  if (!w.f[i].is_polynomial()) throw InconsistencyError("Rodrigues witness is not a polynomial");
  return verified(std::move(w), sys.ops(), rodrigues(sys, alpha, c), "Rodrigues");
}

}  // namespace mwb
