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

#include "mwb/orthopoly/basis.hpp"

#include <algorithm>
#include <sstream>

#include "mwb/core/format.hpp"

namespace mwb {

namespace {

bool reverse_less(const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  for (std::size_t k = n; k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

/// Monomials of total degree <= D, ascending degree, within a degree from
/// smallest to largest in the chosen order.
std::vector<Monomial> processing_order(std::size_t n, int degree, MonomialOrder order) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    auto block = multi_indices_of_degree(n, d);
    if (order == MonomialOrder::graded_lex) {
      std::sort(block.begin(), block.end(), [](const Monomial& a, const Monomial& b) { return GradedLexGreater{}(b, a); });
    } else {
      std::sort(block.begin(), block.end(), reverse_less);
    }
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

LaurentPoly homogeneous_part(const LaurentPoly& f, long d) {
  return filter_terms(f, [d](const Monomial& m) { return m.total_degree() == d; });
}

}  // namespace

const Poly& OrthoBasis::at(const Monomial& alpha) const {
  for (const auto& [a, u] : entries) {
    if (a == alpha) return u;
  }
  throw PreconditionError("multi-index (" + to_string(alpha) + ") not in the basis");
}

OrthoBasis gram_schmidt_basis(const FamilySpec& family, int degree, MonomialOrder order) {
  if (degree < 0) throw PreconditionError("negative degree bound");
  const MeasureSpec w = WeightMeasure{family};
  if (!total_mass_is_positive(w)) throw DomainError("Gram-Schmidt needs a positive weight");
  const std::size_t n = family.nvars();
  OrthoBasis basis{family, BasisMethod::gram_schmidt, degree, {}};
  std::vector<Rational> norms;
  for (const auto& alpha : processing_order(n, degree, order)) {
    const Poly monomial = LaurentPoly::term(alpha);
    Poly u = monomial;
    for (std::size_t j = 0; j < basis.entries.size(); ++j) {
      const Rational c = inner_product(w, monomial, basis.entries[j].second) / norms[j];
      if (!c.is_zero()) u -= c * basis.entries[j].second;
    }
    norms.push_back(inner_product(w, u, u));
    basis.entries.emplace_back(alpha, std::move(u));
  }
  return basis;
}

OrthoBasis rodrigues_basis(const FamilySpec& family, int degree, bool raw) {
  if (degree < 0) throw PreconditionError("negative degree bound");
  const auto sys = build_family(family);
  OrthoBasis basis{family, BasisMethod::rodrigues, degree, {}};
  for (const auto& alpha : graded_multi_indices(family.nvars(), degree)) {
    basis.entries.emplace_back(alpha, raw ? rodrigues(sys, alpha, Rational(1)) : rodrigues(sys, alpha));
  }
  return basis;
}

std::map<Monomial, Rational, GradedLexGreater> expand(const Poly& f, const OrthoBasis& basis) {
  require_polynomial(f, "expansion input");
  if (f.nvars() != basis.nvars()) throw DimensionError("polynomial and basis in different rings");
  std::map<Monomial, Rational, GradedLexGreater> coeffs;
  if (f.is_zero()) return coeffs;
  if (*f.total_degree() > basis.degree) {
    throw PreconditionError("degree " + std::to_string(*f.total_degree()) + " exceeds the basis bound " +
                            std::to_string(basis.degree));
  }
  Poly rest = f;
  for (long d = *f.total_degree(); d >= 0 && !rest.is_zero(); --d) {
    std::vector<std::size_t> idx;
    std::vector<LaurentPoly> tops;
    for (std::size_t k = 0; k < basis.entries.size(); ++k) {
      if (basis.entries[k].first.total_degree() != d) continue;
      idx.push_back(k);
      tops.push_back(homogeneous_part(basis.entries[k].second, d));
    }
    const LaurentPoly target = homogeneous_part(rest, d);
    if (target.is_zero()) continue;
    const auto x = solve_in_span<Rational>(tops, target);
    if (!x) throw InconsistencyError("basis top-degree parts do not span degree " + std::to_string(d));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const Rational& c = (*x)(static_cast<Eigen::Index>(j));
      if (c.is_zero()) continue;
      coeffs[basis.entries[idx[j]].first] = c;
      rest -= c * basis.entries[idx[j]].second;
    }
  }
  if (!rest.is_zero()) throw InconsistencyError("expansion left a remainder");
  return coeffs;
}

MembershipPredicate constant_term_predicate(const OrthoBasis& basis) {
  const Monomial zero(basis.nvars());
  return MembershipPredicate(
      "constant-term(" + std::string(family_name(basis.family.family)) + ")",
      Ambient{AmbientKind::polynomial, basis.nvars()}, [basis, zero](const Element& e) {
        const auto c = expand(std::get<LaurentPoly>(e), basis);
        return c.find(zero) == c.end();
      });
}

std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
  if (b.is_zero() || a.nvars() != b.nvars()) return std::nullopt;
  const auto& [m, c] = b.leading();
  const Rational s = a.coeff(m) / c;
  if (a == s * b) return s;
  return std::nullopt;
}

RationalMatrix gram_matrix(const OrthoBasis& basis) {
  const MeasureSpec w = WeightMeasure{basis.family};
  const auto k = static_cast<Eigen::Index>(basis.entries.size());
  RationalMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      g(i, j) = inner_product(w, basis.entries[static_cast<std::size_t>(i)].second,
                              basis.entries[static_cast<std::size_t>(j)].second);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

std::string to_golden(const OrthoBasis& basis) {
  std::ostringstream os;
  for (const auto& [alpha, u] : basis.entries) os << to_string(alpha) << ": " << to_string(u) << "\n";
  return os.str();
}

}  // namespace mwb
