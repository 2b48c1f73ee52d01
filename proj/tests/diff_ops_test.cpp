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

#include "mwb/core/format.hpp"
#include "mwb/diff_ops/family.hpp"
#include "mwb/diff_ops/operator.hpp"
#include "oracles/weights.hpp"
#include "test_support.hpp"

namespace mwb {
namespace {

using testing::Rng;

LaurentPoly z(int power = 1) { return LaurentPoly::variable(1, 0, power); }
LaurentPoly one(std::size_t n = 1) { return LaurentPoly::constant(n, Rational(1)); }
LaurentPoly x(std::size_t n, std::size_t i, int p = 1) { return LaurentPoly::variable(n, i, p); }

std::vector<FamilySpec> sample_families() {
  const Rational h(1, 2);
  return {
      hermite_spec(1),
      hermite_spec(2),
      laguerre_spec({0}),
      laguerre_spec({1}),
      laguerre_spec({h}),
      laguerre_spec({0, Rational(3, 2)}),
      jacobi_spec({0}, {0}),
      jacobi_spec({1}, {2}),
      jacobi_spec({h}, {h}),
      jacobi_spec({1, -h}, {0, 2}),
      gegenbauer_spec(Rational(3, 2)),
      [] { FamilySpec s; s.family = Family::chebyshev1; return s; }(),
      [] { FamilySpec s; s.family = Family::chebyshev2; return s; }(),
      legendre_spec(2),
      ball_spec(2, Rational(1)),
      ball_spec(2, Rational(3, 2)),
      ball_spec(3, Rational(1)),
      simplex_spec({0, 0, 0}),
      simplex_spec({1, 1, 1}),
      simplex_spec({h, 0, 2}),
      product_spec({hermite_spec(1), laguerre_spec({1})}),
      product_spec({jacobi_spec({1}, {2}), hermite_spec(1)}),
  };
}

TEST(Apply, Examples) {
  const OrderOneOp hermite(1, 0, Rational(1), Rational(-2) * z());
  EXPECT_EQ(apply(hermite, one()), Rational(-2) * z());
  for (const Rational lambda : {Rational(0), Rational(3), Rational(-5, 2)}) {
    const OrderOneOp phi = phi_operator(1, 0, lambda);
    for (int k = -4; k <= 4; ++k) EXPECT_EQ(apply(phi, z(k)), (Rational(k) + lambda) * z(k - 1));
  }
  const OrderOneOp laguerre0(1, 0, Rational(1), -one());
  EXPECT_EQ(apply(laguerre0, -one()), one());
}

TEST(Apply, LeavingTheRingThrows) {
  const auto sys = build_family(jacobi_spec({1}, {0}));
  EXPECT_THROW(apply(sys.ops()[0], one()), NotPolynomialError);
  const RationalFunction r = apply(sys.ops()[0], RationalFunction(one()));
  EXPECT_EQ(r, RationalFunction(-(one() + z()), one() - z(2)));
}

TEST(CommuteCheck, Examples) {
  EXPECT_TRUE(commute_check(phi_operator(2, 0, Rational(3)), phi_operator(2, 1, Rational(-1, 2))));
  const OrderOneOp a(1, 0, Rational(1), Rational(-2) * z());
  const OrderOneOp b(0, z(), RationalFunction(1));
  EXPECT_FALSE(commute_check(a, b));
  EXPECT_NE(apply(a, apply(b, z())), apply(b, apply(a, z())));
  EXPECT_TRUE(commute_check(a, a));
  EXPECT_TRUE(commute_check(b, b));
}

LaurentPoly commutator_on(const OrderOneOp& a, const OrderOneOp& b, const LaurentPoly& f) {
  return apply(a, apply(b, f)) - apply(b, apply(a, f));
}

// The closed form agrees with applying both orders on monomials |gamma_i| <= 2.
TEST(CommuteCheck, MatchesDirectApplication) {
  Rng rng(3);
  const std::size_t n = 2;
  std::vector<Monomial> probes;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) probes.push_back(Monomial{a, b});
  }
  int commuting = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> var(0, 1);
    std::uniform_int_distribution<int> kind(0, 3);
    const auto make = [&] {
      const std::size_t i = static_cast<std::size_t>(var(rng));
      LaurentPoly h = testing::random_laurent(rng, n, 2, -2, 2);
      if (kind(rng) == 0) h = testing::random_nonzero_rational(rng) * x(n, i, -1);
      if (kind(rng) == 1) h = LaurentPoly(n);
      LaurentPoly lead = LaurentPoly::constant(n, testing::random_nonzero_rational(rng));
      if (kind(rng) == 2) lead = x(n, i);
      return OrderOneOp(i, lead, RationalFunction(h));
    };
    const OrderOneOp a = make();
    const OrderOneOp b = make();
    bool direct = true;
    for (const auto& m : probes) direct = direct && commutator_on(a, b, LaurentPoly::term(m)).is_zero();
    ASSERT_EQ(commute_check(a, b), direct);
    commuting += direct ? 1 : 0;
  }
  EXPECT_GT(commuting, 10);
  EXPECT_LT(commuting, 190);
}

TEST(BuildFamily, Examples) {
  const auto h = build_family(hermite_spec());
  EXPECT_EQ(h.ops()[0].zeroth(), RationalFunction(Rational(-2) * z()));
  EXPECT_EQ(h.ops()[0].leading(), one());
  EXPECT_EQ(h.gens()[0], one());

  const auto l = build_family(legendre_spec());
  EXPECT_TRUE(l.ops()[0].zeroth().is_zero());
  EXPECT_EQ(l.gens()[0], one() - z(2));

  const auto s = build_family(simplex_spec({1, 1, 1}));
  const LaurentPoly t = one(2) - x(2, 0) - x(2, 1);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(s.ops()[i].zeroth(), RationalFunction(x(2, i, -1)) - RationalFunction(one(2), t));
    EXPECT_EQ(s.gens()[i], x(2, i) * t);
  }
}

TEST(BuildFamily, ParameterDomains) {
  EXPECT_THROW(build_family(laguerre_spec({-1})), DomainError);
  EXPECT_THROW(build_family(jacobi_spec({0}, {Rational(-3, 2)})), DomainError);
  EXPECT_THROW(build_family(gegenbauer_spec(Rational(-1, 2))), DomainError);
  EXPECT_THROW(build_family(ball_spec(2, Rational(1, 2))), DomainError);
  EXPECT_THROW(build_family(simplex_spec({0, -1, 0})), DomainError);
  FamilySpec short_kappa = simplex_spec({0, 0});
  short_kappa.n = 2;
  EXPECT_THROW(build_family(short_kappa), PreconditionError);
  EXPECT_THROW(build_family(jacobi_spec({0, 0, 0}, {0, 0})), PreconditionError);
  FamilySpec free = laguerre_spec({-3});
  free.unconstrained = true;
  EXPECT_NO_THROW(build_family(free));
  FamilySpec wrapped = product_spec({laguerre_spec({-2}), hermite_spec()});
  wrapped.unconstrained = true;
  EXPECT_NO_THROW(build_family(wrapped));
}

TEST(BuildFamily, NonCommutingSystemRejected) {
  const std::size_t n = 2;
  std::vector<OrderOneOp> ops{OrderOneOp(n, 0, Rational(1), x(n, 1)), OrderOneOp(n, 1, Rational(1), x(n, 1))};
  EXPECT_THROW(OpSystem(ops, {one(n), one(n)}), PreconditionError);
}

TEST(Rodrigues, Examples) {
  const auto h = build_family(hermite_spec());
  EXPECT_EQ(rodrigues(h, Monomial{2}), Rational(4) * z(2) - Rational(2) * one());
  EXPECT_EQ(rodrigues(h, Monomial{3}), Rational(8) * z(3) - Rational(12) * z());

  for (const Rational a : {Rational(0), Rational(1), Rational(1, 2)}) {
    const auto l = build_family(laguerre_spec({a}));
    EXPECT_EQ(rodrigues(l, Monomial{1}), (Rational(1) + a) * one() - z());
  }

  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{
           {0, 0}, {1, 2}, {Rational(1, 2), Rational(1, 2)}, {Rational(-1, 3), 4}}) {
    const auto j = build_family(jacobi_spec({a}, {b}));
    const LaurentPoly expected = Rational(1, 2) * ((a + b + Rational(2)) * z() + (a - b) * one());
    EXPECT_EQ(rodrigues(j, Monomial{1}), expected);
  }
}

TEST(Rodrigues, RawModeAndErrors) {
  const auto h = build_family(hermite_spec());
  EXPECT_EQ(rodrigues(h, Monomial{2}, Rational(1)), Rational(4) * z(2) - Rational(2) * one());
  EXPECT_THROW(rodrigues(h, Monomial{-1}, Rational(1)), PreconditionError);
  EXPECT_THROW(rodrigues(h, Monomial{1, 1}, Rational(1)), DimensionError);
  // alpha + beta + 2 = 0 collapses the degree.
  FamilySpec degenerate = jacobi_spec({-1}, {-1});
  degenerate.unconstrained = true;
  EXPECT_THROW(rodrigues(build_family(degenerate), Monomial{1}), DomainError);
}

TEST(FamilyConstant, MatchesFormulas) {
  EXPECT_EQ(family_constant(hermite_spec(), Monomial{3}), Rational(-1));
  EXPECT_EQ(family_constant(laguerre_spec({1}), Monomial{3}), Rational(1, 6));
  EXPECT_EQ(family_constant(jacobi_spec({1}, {1}), Monomial{2}), Rational(1, 8));
  EXPECT_EQ(family_constant(jacobi_spec({1, 1}, {1, 1}), Monomial{1, 2}), Rational(-1, 16));
  EXPECT_EQ(family_constant(simplex_spec({0, 0, 0}), Monomial{2, 1}), Rational(1));
  // (-1)^2 (2)_2 / (2^2 2! (3/2)_2) with mu = 1.
  EXPECT_EQ(family_constant(ball_spec(2, Rational(1)), Monomial{1, 1}), Rational(6) / (Rational(8) * Rational(15, 4)));
  EXPECT_EQ(family_constant(product_spec({hermite_spec(), laguerre_spec({0})}), Monomial{1, 2}), Rational(-1, 2));
}

TEST(LaguerreInverseSeries, Examples) {
  const OrderOneOp d_minus_1(1, 0, Rational(1), -one());
  EXPECT_EQ(laguerre_inverse_series(one(), 0), -one());
  EXPECT_EQ(laguerre_inverse_series(z(), 0), -z() - one());
  EXPECT_EQ(apply(d_minus_1, -z() - one()), z());
  EXPECT_TRUE(laguerre_inverse_series(LaurentPoly(1), 0).is_zero());
  EXPECT_THROW(laguerre_inverse_series(z(-1), 0), NotPolynomialError);
}

TEST(LaguerreInverseSeries, InvertsOnRandomPolynomials) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::random_poly(rng, 2, 8, 6);
    for (std::size_t i = 0; i < 2; ++i) {
      const OrderOneOp op(2, i, Rational(1), -one(2));
      ASSERT_EQ(apply(op, laguerre_inverse_series(p, i)), p);
    }
  }
}

// Lambda_i f * w = d_i (f w), i.e. the zeroth part of Lambda_i is d_i log w.
TEST(Invariants, ConjugationIdentity) {
  Rng rng(19);
  for (const auto& spec : sample_families()) {
    const auto sys = build_family(spec);
    const auto w = oracle::weight_form(spec);
    for (std::size_t i = 0; i < sys.nvars(); ++i) {
      const RationalFunction logd = oracle::log_derivative(w, i);
      for (int trial = 0; trial < 5; ++trial) {
        const auto f = testing::random_poly(rng, sys.nvars(), 6, 4);
        const RationalFunction lhs = apply(sys.ops()[i], RationalFunction(f));
        const RationalFunction rhs = RationalFunction(partial(f, i)) + RationalFunction(f) * logd;
        ASSERT_EQ(lhs, rhs) << family_name(spec.family) << " variable " << i;
      }
    }
  }
}

TEST(Invariants, SystemsCommutePairwise) {
  for (const auto& spec : sample_families()) {
    const auto sys = build_family(spec);
    for (const auto& a : sys.ops()) {
      for (const auto& b : sys.ops()) ASSERT_TRUE(commute_check(a, b));
    }
  }
}

TEST(Invariants, RodriguesDegreeIsTotalOrder) {
  for (const auto& spec : sample_families()) {
    const auto sys = build_family(spec);
    const int bound = 8;
    for (const auto& alpha : graded_multi_indices(sys.nvars(), bound)) {
      const Poly u = rodrigues(sys, alpha);
      ASSERT_EQ(u.total_degree(), alpha.total_degree()) << family_name(spec.family) << " " << to_string(alpha);
    }
  }
}

}  // namespace
}  // namespace mwb
