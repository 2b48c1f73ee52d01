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

#include "mwb/cli/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "mwb/cli/parse.hpp"
#include "mwb/core/errors.hpp"
#include "mwb/core/format.hpp"
#include "mwb/diff_ops/family.hpp"
#include "mwb/image_solver/image.hpp"
#include "mwb/mathieu/atomic.hpp"
#include "mwb/mathieu/predicates.hpp"
#include "mwb/mathieu/report.hpp"
#include "mwb/moments/measure.hpp"

namespace mwb::cli {
namespace {

LaurentPoly z(int p = 1) { return LaurentPoly::variable(1, 0, p); }
LaurentPoly one(std::size_t n = 1) { return LaurentPoly::constant(n, Rational(1)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string list(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

void add(Reproduction& r, std::string label, std::string value, bool pass) {
  r.checks.push_back({std::move(label), std::move(value), pass});
}

std::string witness_text(const ImageWitness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.f.size(); ++i) s += (i ? "; " : "") + ("f" + std::to_string(i + 1) + " = ") + to_string(w.f[i]);
  return s;
}

Reproduction p421(int horizon) {
  Reproduction r{"P4.2.1", {}};
  for (const long lambda : {-4L, -3L, -2L, 0L, 1L, 2L, 3L}) {
    const PhiSystem sys{{Rational(lambda)}};
    const Monomial excluded{static_cast<int>(-lambda - 1)};
    const auto [u, v] = counterexample_pair(lambda);
    bool powers = true;
    bool products = true;
    LaurentPoly p = one();
    for (int m = 1; m <= horizon; ++m) {
      p *= u;
      powers = powers && p.coeff(excluded).is_zero() && in_image(p, sys);
      const LaurentPoly pv = p * v;
      products = products && pv.coeff(excluded) == Rational(1) && !in_image(pv, sys);
    }
    const std::string tag = "lambda=" + std::to_string(lambda);
    add(r, tag + " u", to_string(u), true);
    add(r, tag + " v", to_string(v), true);
    add(r, tag + " [z^" + std::to_string(-lambda - 1) + "]u^m = 0, m=1.." + std::to_string(horizon), yes_no(powers),
        powers);
    add(r, tag + " [z^" + std::to_string(-lambda - 1) + "]u^m v = 1, m=1.." + std::to_string(horizon),
        yes_no(products), products);
    const LaurentPoly g = z(2) + z(-2) + Rational(3) * z(-lambda) - one();
    const bool member = in_image(g, sys);
    const bool criterion = member == g.coeff(excluded).is_zero();
    add(r, tag + " g = " + to_string(g) + " in image", yes_no(member), criterion);
    if (member) {
      const auto w = decompose(g, sys);
      add(r, tag + " witness", witness_text(w), operator_image(sys.ops(), w) == g);
    }
  }
  return r;
}

Reproduction e425(int horizon) {
  Reproduction r{"E4.2.5", {}};
  for (int m = 1; m <= horizon; ++m) {
    const auto c = oscillatory_integral(one(), m);
    const auto l = oscillatory_integral(z(), m);
    const OscillatoryExpansion expected{{GaussianRational(1) / (GaussianRational::unit() * GaussianRational(m))}};
    add(r, "m=" + std::to_string(m) + " int_0^1 e^(2 pi i m z) dz", c.str(), c.is_zero());
    add(r, "m=" + std::to_string(m) + " int_0^1 z e^(2 pi i m z) dz", l.str(), l == expected);
  }
  return r;
}

Reproduction e426(int horizon) {
  Reproduction r{"E4.2.6", {}};
  const MeasureSpec box = LebesgueBox{{Rational(-1)}, {Rational(1)}};
  for (int m = 1; m <= horizon; ++m) {
    const Rational odd = integrate_poly(box, z(2 * m + 1));
    const Rational even = integrate_poly(box, z(2 * m + 2));
    add(r, "m=" + std::to_string(m) + " int_-1^1 z^" + std::to_string(2 * m + 1), odd.str(), odd.is_zero());
    add(r, "m=" + std::to_string(m) + " int_-1^1 z^" + std::to_string(2 * m + 2), even.str(),
        even == Rational(2, 2 * m + 3));
  }
  const auto pred = integral_predicate(SignedDensity{z(), Rational(-1), Rational(1)}, "z dz on (-1,1)");
  const auto rep = mathieu_test(pred, z(2), z(), horizon);
  add(r, "mathieu-test f = z^2, g = z", rep.verdict.str(),
      to_string(rep.power) == std::string(static_cast<std::size_t>(horizon), '1') &&
          to_string(rep.right) == std::string(static_cast<std::size_t>(horizon), '0'));
  return r;
}

Reproduction finite_case2(int horizon) {
  Reproduction r{"FiniteCase2", {}};
  const AtomicMeasure sigma{{{Rational(0)}, {Rational(1)}}, {Rational(1), Rational(-1)}};
  const bool weights = atomic_mathieu_condition(sigma, SubsetSumReading::weights);
  add(r, "sigma", format_measure(sigma), true);
  add(r, "no zero-sum subset of weights", yes_no(weights), !weights);
  add(r, "no zero-sum subset of points (literal reading)",
      yes_no(atomic_mathieu_condition(sigma, SubsetSumReading::points)), true);
  const auto [f, g] = finite_case2_pair(sigma);
  add(r, "f (indicator of S')", to_string(f), true);
  add(r, "g (indicator of one point)", to_string(g), true);
  const auto rep = mathieu_test(atomic_predicate(sigma), f, g, horizon);
  const auto n = static_cast<std::size_t>(horizon);
  add(r, "f^m in M, m=1.." + std::to_string(horizon), to_string(rep.power), to_string(rep.power) == std::string(n, '1'));
  add(r, "f^m g in M, m=1.." + std::to_string(horizon), to_string(rep.right),
      to_string(rep.right) == std::string(n, '0'));
  add(r, "verdict", rep.verdict.str(), rep.verdict.is_refutation());
  const AtomicMeasure positive{{{Rational(0)}, {Rational(1)}}, {Rational(1), Rational(2)}};
  add(r, "contrast weights (1, 2): no zero-sum subset", yes_no(atomic_mathieu_condition(positive.weights)),
      atomic_mathieu_condition(positive.weights));
  return r;
}

Reproduction sum_counterexample(int horizon) {
  Reproduction r{"sum-counterexample", {}};
  const auto m1 = span_predicate({one() + z()});
  const auto m2 = span_predicate({one() - z()});
  const auto sum = span_predicate({one() + z(), one() - z()});
  const std::vector<LaurentPoly> fs{LaurentPoly(1), one() + z(), Rational(2) * (one() - z()), z(), one()};
  const std::vector<LaurentPoly> gs{one(), z(), z(2), one() + z(3)};
  for (const auto* m : {&m1, &m2}) {
    int refuted = 0;
    int runs = 0;
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        refuted += mathieu_test(*m, f, g, horizon).verdict.is_refutation() ? 1 : 0;
        ++runs;
      }
    }
    add(r, m->name() + ": refutations over " + std::to_string(runs) + " probes", std::to_string(refuted),
        refuted == 0);
  }
  const auto s = one_membership_shortcut(sum, {z(2), z(3)});
  add(r, sum.name() + " contains 1", yes_no(sum(one())), sum(one()));
  add(r, sum.name() + " shortcut", s.str(), s.applies && same_element(*s.probe, Element{z(2)}));
  const auto rep = mathieu_test(sum, one(), z(2), horizon);
  add(r, sum.name() + " f = 1, g = z^2", rep.verdict.str(), rep.verdict.is_refutation());
  return r;
}

Reproduction laguerre(int degree) {
  Reproduction r{"laguerre", {}};
  for (const auto& alpha : std::vector<std::vector<Rational>>{{0}, {0, 1}, {Rational(3, 2), 0}}) {
    const auto sys = build_family(laguerre_spec(alpha));
    const auto w = decompose_laguerre(one(alpha.size()), alpha);
    const bool ok = w && operator_image(sys.ops(), *w) == one(alpha.size());
    add(r, "alpha=" + list(alpha) + " witness for 1", w ? witness_text(*w) : "none", ok);
  }
  for (const auto& alpha : std::vector<std::vector<Rational>>{{1}, {Rational(1, 2)}, {1, 2}, {Rational(-1, 2), 3}}) {
    const auto sys = build_family(laguerre_spec(alpha));
    const auto w = bounded_witness_search(sys.ops(), one(alpha.size()), degree);
    add(r, "alpha=" + list(alpha) + " witness for 1 with deg f_i <= " + std::to_string(degree),
        w ? witness_text(*w) : "none", !w);
  }
  return r;
}

Reproduction hermite(int degree) {
  Reproduction r{"hermite", {}};
  for (const auto& alpha : std::vector<std::vector<Rational>>{{0}, {2, 0}, {0, Rational(-1, 3)}}) {
    const auto w = decompose_psi(one(alpha.size()), alpha);
    std::vector<OrderOneOp> ops;
    for (std::size_t i = 0; i < alpha.size(); ++i) ops.push_back(psi_operator(alpha.size(), i, alpha[i]));
    const bool ok = w && operator_image(ops, *w) == one(alpha.size());
    add(r, "Psi alpha=" + list(alpha) + " witness for 1", w ? witness_text(*w) : "none", ok);
  }
  for (const auto& alpha : std::vector<std::vector<Rational>>{{1}, {-2}, {2, -1}, {Rational(1, 2), 3}}) {
    std::vector<OrderOneOp> ops;
    for (std::size_t i = 0; i < alpha.size(); ++i) ops.push_back(psi_operator(alpha.size(), i, alpha[i]));
    const auto w = bounded_witness_search(ops, one(alpha.size()), degree);
    add(r, "Psi alpha=" + list(alpha) + " witness for 1 with deg f_i <= " + std::to_string(degree),
        w ? witness_text(*w) : "none", !w);
  }
  for (const std::size_t n : {1U, 2U}) {
    const auto sys = build_family(hermite_spec(n));
    const auto w = bounded_witness_search(sys.ops(), one(n), degree);
    add(r, "Hermite n=" + std::to_string(n) + " witness for 1 with deg f_i <= " + std::to_string(degree),
        w ? witness_text(*w) : "none", !w);
    const LaurentPoly target = LaurentPoly::variable(n, 0, 2) - Rational(1, 2) * one(n);
    const auto v = bounded_witness_search(sys.ops(), target, degree);
    add(r, "Hermite n=" + std::to_string(n) + " witness for " + to_string(target), v ? witness_text(*v) : "none",
        v && operator_image(sys.ops(), *v) == target);
  }
  return r;
}

}  // namespace

bool Reproduction::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

std::string Reproduction::str() const {
  std::ostringstream os;
  os << "reproduce " << name << "\n";
  for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << c.label << ": " << c.value << "\n";
  os << (passed() ? "PASS" : "FAIL") << " " << name << "\n";
  return os.str();
}

const std::vector<std::string>& reproduction_names() {
  static const std::vector<std::string> names{"P4.2.1",      "E4.2.5",   "E4.2.6", "FiniteCase2",
                                              "sum-counterexample", "laguerre", "hermite"};
  return names;
}

Reproduction reproduce(std::string_view name, std::optional<int> horizon) {
  if (horizon && *horizon < 1) throw PreconditionError("horizon must be positive");
  if (name == "P4.2.1") return p421(horizon.value_or(50));
  if (name == "E4.2.5") return e425(horizon.value_or(20));
  if (name == "E4.2.6") return e426(horizon.value_or(10));
  if (name == "FiniteCase2") return finite_case2(horizon.value_or(50));
  if (name == "sum-counterexample") return sum_counterexample(horizon.value_or(50));
  if (name == "laguerre") return laguerre(horizon.value_or(6));
  if (name == "hermite") return hermite(horizon.value_or(6));
  throw PreconditionError("unknown example '" + std::string(name) + "'");
}

}  // namespace mwb::cli
