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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mwb/cli/reproduce.hpp"
#include "mwb/core/format.hpp"
#include "mwb/image_solver/image.hpp"
#include "mwb/mathieu/atomic.hpp"
#include "mwb/mathieu/moment_problem.hpp"
#include "mwb/mathieu/predicates.hpp"
#include "mwb/mathieu/report.hpp"
#include "mwb/orthopoly/basis.hpp"
#include "oracles/image_slice.hpp"
#include "test_support.hpp"

namespace mwb {
namespace {

using testing::Rng;

struct Outcome {
  bool pass = false;
  std::string detail;
};

LaurentPoly z(int p = 1) { return LaurentPoly::variable(1, 0, p); }
LaurentPoly one(std::size_t n = 1) { return LaurentPoly::constant(n, Rational(1)); }
LaurentPoly zz(int a, int b, const Rational& c = Rational(1)) { return testing::poly(2, {{{a, b}, c}}); }

Outcome from_reproduction(std::string_view name, int horizon) {
  const auto r = cli::reproduce(name, horizon);
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
  return {r.passed(), std::to_string(r.checks.size()) + " checks, " + std::to_string(failed) + " failed"};
}

Outcome odd_even_table() { return from_reproduction("E4.2.6", 50); }
Outcome oscillatory_table() { return from_reproduction("E4.2.5", 20); }
Outcome phi_streaks() { return from_reproduction("P4.2.1", 50); }

Outcome solver_soundness() {
  Rng rng(401);
  const std::vector<Rational> lambdas{-3, -2, -1, 0, 1, 2, 3, Rational(1, 2), Rational(-1, 2)};
  long compared = 0;
  for (const auto& l : lambdas) {
    const oracle::ImageSlice slice(l, 8);
    const PhiSystem sys{{l}};
    std::vector<LaurentPoly> samples;
    for (int k = -8; k <= 8; ++k) samples.push_back(z(k));
    for (int t = 0; t < 200; ++t) samples.push_back(testing::random_laurent(rng, 1, 8, -8, 8));
    for (int k = -8; k <= 8; ++k) {
      for (int i = -8; i <= 8; ++i) samples.push_back(z(k) + Rational(1 + (k + 8) * (i + 8) % 5) * z(i));
    }
    for (const auto& g : samples) {
      if (slice.contains(g) != in_image(g, sys)) return {false, "disagreement at lambda=" + l.str() + ", g=" + to_string(g)};
      ++compared;
    }
  }
  const std::vector<Rational> pool{-3, -2, -1, 0, 1, 2, 3, Rational(1, 2), Rational(-1, 2), Rational(-3, 2)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int verified = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    PhiSystem sys;
    for (std::size_t i = 0; i < n; ++i) sys.lambda.push_back(pool[pick(rng)]);
    LaurentPoly g = testing::random_laurent(rng, n, 10, -5, 5);
    if (const auto ex = sys.excluded_monomial()) g.add_term(*ex, -g.coeff(*ex));
    if (operator_image(sys.ops(), decompose(g, sys)) != g) return {false, "witness failed at trial " + std::to_string(t)};
    ++verified;
  }
  return {true, std::to_string(compared) + " oracle comparisons, " + std::to_string(verified) + " witnesses re-verified"};
}

std::vector<FamilySpec> criterion5_families() {
  const Rational h(1, 2);
  std::vector<FamilySpec> base{hermite_spec(),        laguerre_spec({0}),    laguerre_spec({1}),
                               laguerre_spec({h}),    jacobi_spec({0}, {0}), jacobi_spec({1}, {2}),
                               jacobi_spec({h}, {h})};
  std::vector<FamilySpec> all = base;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a; b < base.size(); ++b) all.push_back(product_spec({base[a], base[b]}));
  }
  return all;
}

Outcome rodrigues_vs_gram_schmidt() {
  long pairs = 0;
  for (const auto& spec : criterion5_families()) {
    const auto r = rodrigues_basis(spec, 6);
    const auto g = gram_schmidt_basis(spec, 6);
    for (const auto& [alpha, u] : r.entries) {
      const auto s = proportionality(u, g.at(alpha));
      if (!s || s->is_zero()) return {false, std::string(family_name(spec.family)) + " at " + to_string(alpha)};
      ++pairs;
    }
  }
  const auto h = rodrigues_basis(hermite_spec(), 6);
  const auto hg = gram_schmidt_basis(hermite_spec(), 6);
  std::string scalars;
  for (int m = 0; m <= 6; ++m) {
    const auto s = *proportionality(h.at(Monomial{m}), hg.at(Monomial{m}));
    if (s != pow(Rational(2), m)) return {false, "Hermite scalar at m=" + std::to_string(m) + " is " + s.str()};
    scalars += (m ? "," : "") + s.str();
  }
  const bool h3 = h.at(Monomial{3}) == Rational(8) * z(3) - Rational(12) * z();
  return {h3, std::to_string(pairs) + " pairs over " + std::to_string(criterion5_families().size()) +
                  " families; Hermite scalars " + scalars + "; H3 = " + to_string(h.at(Monomial{3}))};
}

Outcome orthogonality() {
  long products = 0;
  for (const auto& spec : criterion5_families()) {
    const auto b = rodrigues_basis(spec, 6);
    const MeasureSpec w = WeightMeasure{spec};
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
      for (std::size_t j = i + 1; j < b.entries.size(); ++j) {
        if (!inner_product(w, b.entries[i].second, b.entries[j].second).is_zero()) {
          return {false, std::string(family_name(spec.family)) + " " + to_string(b.entries[i].first) + " vs " +
                             to_string(b.entries[j].first)};
        }
        ++products;
      }
    }
  }
  long lower = 0;
  for (const auto& spec : {ball_spec(2, Rational(1)), ball_spec(2, Rational(5, 2)), simplex_spec({0, 0, 0}),
                           simplex_spec({1, Rational(1, 2), 2})}) {
    const auto b = rodrigues_basis(spec, 6);
    const MeasureSpec w = WeightMeasure{spec};
    for (const auto& [alpha, u] : b.entries) {
      for (const auto& beta : graded_multi_indices(2, static_cast<int>(alpha.total_degree()) - 1)) {
        if (!inner_product(w, u, LaurentPoly::term(beta)).is_zero()) {
          return {false, std::string(family_name(spec.family)) + " " + to_string(alpha) + " vs " + to_string(beta)};
        }
        ++lower;
      }
    }
  }
  return {true, std::to_string(products) + " exact zero inner products; " + std::to_string(lower) +
                    " ball/simplex lower-degree checks"};
}

Outcome image_characterizations() {
  const PhiSystem s3{{Rational(-3)}};
  const auto m = image_predicate(s3, true);
  const bool one_in = m(one());
  const bool z2_out = !m(z(2));
  const auto shortcut = one_membership_shortcut(m, {z(), z(2), z(3)});
  const PhiSystem s11{{Rational(-1), Rational(-1)}};
  bool ideal = true;
  for (const auto& gamma : graded_multi_indices(2, 6)) {
    ideal = ideal && in_image_poly(LaurentPoly::term(gamma), s11) == !gamma.is_unit();
  }
  const auto lag = cli::reproduce("laguerre", 6);
  const auto her = cli::reproduce("hermite", 6);
  const bool pass = one_in && z2_out && shortcut.applies && ideal && lag.passed() && her.passed();
  return {pass, std::string("lambda=(-3): 1 in Im' ") + (one_in ? "yes" : "no") + ", z^2 not in Im' " +
                    (z2_out ? "yes" : "no") + ", shortcut: " + shortcut.str() + "; lambda=(-1,-1) constant-term ideal " +
                    (ideal ? "exact" : "MISMATCH") + "; laguerre " + (lag.passed() ? "pass" : "FAIL") + "; hermite " +
                    (her.passed() ? "pass" : "FAIL")};
}

Outcome finite_case() {
  Rng rng(801);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<int> weight(1, 9);
  int refutations = 0;
  int corroborated = 0;
  for (int t = 0; t < 200; ++t) {
    AtomicMeasure sigma;
    LaurentPoly vanish = one();
    while (sigma.points.size() < size(rng)) {
      const Rational x = testing::random_rational(rng, 4, 2);
      if (std::find(sigma.points.begin(), sigma.points.end(), std::vector<Rational>{x}) != sigma.points.end()) continue;
      sigma.points.push_back({x});
      sigma.weights.push_back(Rational(weight(rng), weight(rng)));
      vanish *= z() - LaurentPoly::constant(1, x);
    }
    LaurentPoly f = testing::random_poly(rng, 1, 2, 2);
    if (t % 2 == 0) f = vanish * (f + one());
    const auto g = testing::random_poly(rng, 1, 3, 3);
    const auto v = mathieu_test(atomic_predicate(sigma), f, g, 50).verdict;
    refutations += v.is_refutation() ? 1 : 0;
    corroborated += v.kind == Verdict::Kind::corroborated ? 1 : 0;
  }
  const auto fc2 = cli::reproduce("FiniteCase2", 50);
  return {refutations == 0 && fc2.passed(),
          "positive weights: 200 runs, " + std::to_string(refutations) + " refutations, " +
              std::to_string(corroborated) + " corroborated; weights {1,-1}: product outside M for m=1..50 " +
              (fc2.passed() ? "yes" : "no")};
}

Outcome dk_ewz() {
  Rng rng(901);
  const std::vector<LaurentPoly> dk{z(),      z() + z(2), z(-1) + z(3), Rational(2) * z(-2) + Rational(3) * z(5),
                                    zz(1, 0), zz(1, -1) + zz(2, 1, Rational(-3)) + zz(1, 0),
                                    zz(1, 1) + zz(-1, 2, Rational(1, 2)), zz(1, 0) + zz(-1, 0)};
  const std::vector<LaurentPoly> ewz{z(-1),     z(-1) + Rational(3) * z(-2), Rational(1, 2) * z(-3), z(),
                                     zz(-1, 0) + zz(0, -1), zz(1, -2) + zz(-2, 1), zz(-1, 1), zz(1, 0) + zz(0, -2)};
  int runs = 0;
  int refuted = 0;
  int corroborated = 0;
  int power_fails = 0;
  const auto tally = [&](const Verdict& v) {
    ++runs;
    refuted += v.is_refutation() ? 1 : 0;
    corroborated += v.kind == Verdict::Kind::corroborated ? 1 : 0;
    power_fails += v.kind == Verdict::Kind::power_condition_fails ? 1 : 0;
  };
  for (const auto& f : dk) {
    for (int t = 0; t < 10; ++t) {
      tally(mathieu_test(no_constant_term(f.nvars()), f, testing::random_laurent(rng, f.nvars(), 4, -6, 6), 60).verdict);
    }
  }
  for (const auto& f : ewz) {
    for (int t = 0; t < 10; ++t) {
      tally(mathieu_test(no_holomorphic_part(f.nvars()), f, testing::random_laurent(rng, f.nvars(), 4, -4, 6), 40)
                .verdict);
    }
  }
  return {refuted == 0, std::to_string(runs) + " runs: " + std::to_string(refuted) + " refuted, " +
                            std::to_string(corroborated) + " corroborated, " + std::to_string(power_fails) +
                            " with the power condition failing"};
}

Outcome pm_verifier() {
  int decompositions = 0;
  bool ok = true;
  bool perturbed_detected = true;
  for (const auto& outer_q : {z(2), z(3) - z(), Rational(1, 2) * z() + z(4)}) {
    for (const auto& outer_f : {z(), z(2) + z(), Rational(-3) * z(3) + one()}) {
      const PmComponent c{outer_q, outer_f, z(2)};
      const Poly q = compose(partial(c.q, 0), c.w) * partial(c.w, 0);
      const Poly f = compose(c.f, c.w);
      const auto r = pm_verify(q, f, Rational(-1), Rational(1), {c}, 20);
      ok = ok && r.conditions_hold() && r.moments_vanish() && r.moments.size() == 21;
      const auto p = pm_verify(q + Rational(1, 1000) * z(2), f, Rational(-1), Rational(1), {c}, 20);
      perturbed_detected = perturbed_detected && !p.derivative_sum && !p.moments_vanish();
      ++decompositions;
    }
  }
  return {ok && perturbed_detected, std::to_string(decompositions) + " decompositions with W = z^2: conditions and " +
                                        "m=0..20 moments " + (ok ? "exact zero" : "FAIL") + "; perturbation " +
                                        (perturbed_detected ? "detected" : "MISSED")};
}

Outcome sum_counterexample() {
  const auto r = cli::reproduce("sum-counterexample", 50);
  std::string shortcut;
  for (const auto& c : r.checks) {
    if (c.label.ends_with("shortcut")) shortcut = c.value;
  }
  return {r.passed(), shortcut};
}

Outcome folk() {
  int polys = 0;
  int worst = 0;
  for (int d = 0; d <= 3; ++d) {
    int combos = 1;
    for (int k = 0; k < d; ++k) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      LaurentPoly f = z(d);
      int c = code;
      for (int k = 0; k < d; ++k) {
        f += Rational(c % 3 - 1) * z(k);
        c /= 3;
      }
      const auto first = folk_streak(f, Rational(-1), Rational(1), 6);
      if (!first) return {false, "no nonzero moment up to 6 for f = " + to_string(f)};
      worst = std::max(worst, *first);
      ++polys;
    }
  }
  return {true, std::to_string(polys) + " polynomials, largest first nonzero index " + std::to_string(worst)};
}

}  // namespace
}  // namespace mwb

int main() {
  using mwb::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"int_-1^1 z^(2m+1) = 0 and z^(2m+2) = 2/(2m+3), m = 1..50", mwb::odd_even_table},
      {"oscillatory integrals of 1 and z, m = 1..20", mwb::oscillatory_table},
      {"Phi_lambda counterexample streaks, m = 1..50", mwb::phi_streaks},
      {"solver soundness vs slice oracle and witness re-verification", mwb::solver_soundness},
      {"Rodrigues / Gram-Schmidt equivalence, |alpha| <= 6", mwb::rodrigues_vs_gram_schmidt},
      {"orthogonality exactness", mwb::orthogonality},
      {"image characterizations", mwb::image_characterizations},
      {"finite atomic measures", mwb::finite_case},
      {"no-constant-term and no-holomorphic-part suites", mwb::dk_ewz},
      {"polynomial moment verifier", mwb::pm_verifier},
      {"sum of Mathieu subspaces", mwb::sum_counterexample},
      {"moment streaks of small monic polynomials", mwb::folk}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
