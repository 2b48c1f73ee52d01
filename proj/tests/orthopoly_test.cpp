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

#include <gtest/gtest.h>

#include <iostream>

#include "mwb/core/format.hpp"
#include "mwb/image_solver/image.hpp"
#include "mwb/orthopoly/basis.hpp"
#include "test_support.hpp"

namespace mwb {
namespace {

using testing::Rng;

LaurentPoly z(int power = 1) { return LaurentPoly::variable(1, 0, power); }
LaurentPoly one(std::size_t n = 1) { return LaurentPoly::constant(n, Rational(1)); }
LaurentPoly x(std::size_t n, std::size_t i, int p = 1) { return LaurentPoly::variable(n, i, p); }

std::vector<Poly> polys(const OrthoBasis& b) {
  std::vector<Poly> out;
  for (const auto& [a, u] : b.entries) out.push_back(u);
  return out;
}

std::vector<FamilySpec> oracle_families() {
  const Rational h(1, 2);
  std::vector<FamilySpec> one_var{hermite_spec(),         laguerre_spec({0}),     laguerre_spec({1}),
                                  laguerre_spec({h}),     jacobi_spec({0}, {0}), jacobi_spec({1}, {2}),
                                  jacobi_spec({h}, {h})};
  std::vector<FamilySpec> all = one_var;
  for (const auto& f : one_var) all.push_back(product_spec({f, f}));
  all.push_back(product_spec({hermite_spec(), laguerre_spec({1})}));
  all.push_back(product_spec({jacobi_spec({1}, {2}), laguerre_spec({h})}));
  return all;
}

TEST(GramSchmidt, Examples) {
  EXPECT_EQ(polys(gram_schmidt_basis(hermite_spec(), 2)),
            (std::vector<Poly>{one(), z(), z(2) - Rational(1, 2) * one()}));
  EXPECT_EQ(polys(gram_schmidt_basis(legendre_spec(), 2)),
            (std::vector<Poly>{one(), z(), z(2) - Rational(1, 3) * one()}));
  for (const auto& f : oracle_families()) EXPECT_EQ(gram_schmidt_basis(f, 0).entries.size(), 1U);
  EXPECT_EQ(polys(gram_schmidt_basis(laguerre_spec({0}), 0)), std::vector<Poly>{one()});
}

TEST(GramSchmidt, MonicInLeadingMonomial) {
  for (const auto order : {MonomialOrder::graded_lex, MonomialOrder::graded_reverse_vars}) {
    const auto b = gram_schmidt_basis(simplex_spec({1, 0, 2}), 3, order);
    for (const auto& [alpha, u] : b.entries) {
      if (order == MonomialOrder::graded_lex) EXPECT_EQ(u.leading().first, alpha);
      EXPECT_EQ(u.coeff(alpha), Rational(1));
    }
  }
}

TEST(RodriguesBasis, Examples) {
  const auto h = rodrigues_basis(hermite_spec(), 3);
  EXPECT_EQ(h.at(Monomial{3}), Rational(8) * z(3) - Rational(12) * z());
  const auto leg = rodrigues_basis(legendre_spec(), 2);
  const auto gs = gram_schmidt_basis(legendre_spec(), 2);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(proportionality(leg.entries[k].second, gs.entries[k].second));

  const auto s = rodrigues_basis(simplex_spec({0, 0, 0}), 1);
  const std::size_t n = 2;
  EXPECT_EQ(s.at(Monomial{1, 0}), one(n) - Rational(2) * x(n, 0) - x(n, 1));
  EXPECT_EQ(s.at(Monomial{0, 1}), one(n) - x(n, 0) - Rational(2) * x(n, 1));
  const MeasureSpec w = WeightMeasure{simplex_spec({0, 0, 0})};
  EXPECT_TRUE(integrate_poly(w, s.at(Monomial{1, 0})).is_zero());
  EXPECT_TRUE(integrate_poly(w, s.at(Monomial{0, 1})).is_zero());
}

TEST(Expand, Examples) {
  const auto h = rodrigues_basis(hermite_spec(), 4);
  const auto c = expand(z(2), h);
  EXPECT_EQ(c.size(), 2U);
  EXPECT_EQ(c.at(Monomial{0}), Rational(1, 2));
  EXPECT_EQ(c.at(Monomial{2}), Rational(1, 4));
  for (const auto& [alpha, u] : h.entries) {
    const auto e = expand(u, h);
    ASSERT_EQ(e.size(), 1U);
    EXPECT_EQ(e.at(alpha), Rational(1));
  }
  const auto l = rodrigues_basis(laguerre_spec({1}), 2);
  EXPECT_EQ(expand(one(), l).at(Monomial{0}), Rational(1) / l.at(Monomial{0}).constant_term());
  EXPECT_THROW(expand(z(5), h), PreconditionError);
}

TEST(Expand, RoundTripOnRandomPolynomials) {
  Rng rng(61);
  for (const auto& spec : {ball_spec(2, Rational(3, 2)), simplex_spec({1, 0, Rational(1, 2)}),
                           product_spec({hermite_spec(), laguerre_spec({1})})}) {
    const auto b = rodrigues_basis(spec, 5);
    for (int t = 0; t < 10; ++t) {
      const auto f = testing::random_poly_total_degree(rng, 2, 5, 8);
      LaurentPoly back(2);
      for (const auto& [alpha, c] : expand(f, b)) back += c * b.at(alpha);
      ASSERT_EQ(back, f);
    }
  }
}

TEST(ConstantTermPredicate, Examples) {
  const auto b = rodrigues_basis(hermite_spec(), 4);
  const auto p = constant_term_predicate(b);
  for (const auto& [alpha, u] : b.entries) EXPECT_EQ(p(u), !alpha.is_unit());
  EXPECT_FALSE(p(b.at(Monomial{1}) + Rational(5) * one()));
  EXPECT_THROW(p(z(-1)), PreconditionError);
}

// Rodrigues output equals Gram-Schmidt output up to a nonzero scalar.
TEST(Invariants, OracleEquivalence) {
  for (const auto& spec : oracle_families()) {
    const auto r = rodrigues_basis(spec, 6);
    const auto g = gram_schmidt_basis(spec, 6);
    ASSERT_EQ(r.entries.size(), g.entries.size());
    for (const auto& [alpha, u] : r.entries) {
      const auto s = proportionality(u, g.at(alpha));
      ASSERT_TRUE(s.has_value()) << family_name(spec.family) << " " << to_string(alpha);
      ASSERT_FALSE(s->is_zero());
    }
  }
  // Hermite: H_m = 2^m times the monic polynomial.
  const auto r = rodrigues_basis(hermite_spec(), 6);
  const auto g = gram_schmidt_basis(hermite_spec(), 6);
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(*proportionality(r.at(Monomial{m}), g.at(Monomial{m})), pow(Rational(2), m));
}

// constant-term predicate == vanishing integral.
TEST(Invariants, ConstantTermMatchesVanishingIntegral) {
  Rng rng(67);
  const std::vector<FamilySpec> families{hermite_spec(), laguerre_spec({1}), laguerre_spec({Rational(1, 2), 2}),
                                         jacobi_spec({1}, {2}), ball_spec(2, Rational(1)), simplex_spec({1, 1, 1})};
  for (const auto& spec : families) {
    const auto b = rodrigues_basis(spec, 6);
    const auto p = constant_term_predicate(b);
    const MeasureSpec w = WeightMeasure{spec};
    const std::size_t n = spec.nvars();
    int inside = 0;
    for (int t = 0; t < 30; ++t) {
      Poly f = testing::random_poly_total_degree(rng, n, 6, 6);
      if (t % 2 == 0) f -= integrate_poly(w, f) * one(n);
      const bool in = p(f);
      ASSERT_EQ(in, integrate_poly(w, f).is_zero());
      inside += in ? 1 : 0;
    }
    EXPECT_GE(inside, 15);
  }
}

TEST(Invariants, JacobiWithZeroParameterHasEverything) {
  Rng rng(71);
  const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> cases{
      {{0}, {1}}, {{2}, {0}}, {{0, 1}, {Rational(1, 2), 3}}, {{1, 2}, {3, 0}}};
  for (const auto& [a, b] : cases) {
    const std::size_t n = a.size();
    ASSERT_TRUE(decompose_jacobi(one(n), a, b).has_value());
    for (int t = 0; t < 5; ++t) ASSERT_TRUE(decompose_jacobi(testing::random_poly(rng, n, 5, 4), a, b));
  }
}

TEST(Invariants, LaguerreAndHermiteImagesAtDeskScale) {
  const LaurentPoly unit2 = one(2);
  for (const auto& alpha : std::vector<std::vector<Rational>>{{0}, {0, 1}, {Rational(3, 2), 0}}) {
    const auto w = decompose_laguerre(one(alpha.size()), alpha);
    ASSERT_TRUE(w.has_value());
  }
  for (const auto& alpha : std::vector<std::vector<Rational>>{{1}, {Rational(1, 2)}, {1, 2}, {Rational(-1, 2), 3}}) {
    const auto ops = build_family(laguerre_spec(alpha)).ops();
    EXPECT_FALSE(bounded_witness_search(ops, one(alpha.size()), 6).has_value());
  }
  EXPECT_TRUE(decompose_psi(unit2, {Rational(2), Rational(0)}).has_value());
  std::vector<OrderOneOp> psi{psi_operator(2, 0, Rational(2)), psi_operator(2, 1, Rational(-1))};
  EXPECT_FALSE(bounded_witness_search(psi, unit2, 6).has_value());
}

// Ball and simplex: u_alpha is orthogonal to every lower-degree monomial.
// Same-degree inner products are printed, not asserted.
TEST(Invariants, BallAndSimplexLowerDegreeOrthogonality) {
  for (const auto& spec : {ball_spec(2, Rational(1)), ball_spec(2, Rational(5, 2)), simplex_spec({0, 0, 0}),
                           simplex_spec({1, Rational(1, 2), 2})}) {
    const auto b = rodrigues_basis(spec, 6);
    const MeasureSpec w = WeightMeasure{spec};
    for (const auto& [alpha, u] : b.entries) {
      for (const auto& beta : graded_multi_indices(2, static_cast<int>(alpha.total_degree()) - 1)) {
        ASSERT_TRUE(inner_product(w, u, LaurentPoly::term(beta)).is_zero())
            << family_name(spec.family) << " " << to_string(alpha) << " vs z^" << to_string(beta);
      }
    }
    const auto g = gram_matrix(rodrigues_basis(spec, 2));
    std::cout << family_name(spec.family) << " same-degree inner products (degree 2):";
    for (Eigen::Index i = 3; i < 6; ++i) {
      for (Eigen::Index j = i + 1; j < 6; ++j) std::cout << " " << g(i, j);
    }
    std::cout << "\n";
  }
}

TEST(Golden, Format) {
  EXPECT_EQ(to_golden(gram_schmidt_basis(legendre_spec(), 2)), "0: 1\n1: z\n2: z^2 - 1/3\n");
  const auto b = rodrigues_basis(simplex_spec({0, 0, 0}), 1);
  EXPECT_EQ(to_golden(b), "0,0: 1\n1,0: -2*z1 - z2 + 1\n0,1: -z1 - 2*z2 + 1\n");
}

}  // namespace
}  // namespace mwb
