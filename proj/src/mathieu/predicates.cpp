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

#include "mwb/mathieu/predicates.hpp"

#include <algorithm>
#include <map>

#include "mwb/core/errors.hpp"
#include "mwb/core/format.hpp"

namespace mwb {
namespace {

const LaurentPoly& poly_of(const Element& e) { return std::get<LaurentPoly>(e); }
const RationalMatrix& matrix_of(const Element& e) { return std::get<RationalMatrix>(e); }

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

}  // namespace

MembershipPredicate valuation_predicate(const std::vector<Rational>& nu, const Rational& c, AmbientKind kind) {
  if (kind == AmbientKind::matrix) throw PreconditionError("valuations live on polynomial rings");
  const std::string name = "valuation(nu=" + join(nu) + ";c=" + c.str() + ")";
  return MembershipPredicate(name, Ambient{kind, nu.size()}, [nu, c](const Element& e) {
    for (const auto& [mono, coeff] : poly_of(e).terms()) {
      Rational v;
      for (std::size_t i = 0; i < nu.size(); ++i) v += nu[i] * Rational(mono[i]);
      if (v < c) return false;
    }
    return true;
  });
}

MembershipPredicate no_constant_term(std::size_t n) {
  return MembershipPredicate("no-constant-term", Ambient{AmbientKind::laurent, n},
                             [](const Element& e) { return poly_of(e).constant_term().is_zero(); });
}

MembershipPredicate no_holomorphic_part(std::size_t n) {
  return MembershipPredicate("no-holomorphic-part", Ambient{AmbientKind::laurent, n}, [](const Element& e) {
    const auto& f = poly_of(e);
    return std::none_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first.is_nonnegative(); });
  });
}

MembershipPredicate integral_predicate(const MeasureSpec& sigma, std::string label) {
  validate(sigma);
  return MembershipPredicate("integral(" + label + ")", Ambient{AmbientKind::polynomial, nvars(sigma)},
                             [sigma](const Element& e) { return integrate_poly(sigma, poly_of(e)).is_zero(); });
}

MembershipPredicate atomic_predicate(const AtomicMeasure& sigma) {
  const MeasureSpec spec = sigma;
  validate(spec);
  std::string name = "atomic:";
  for (std::size_t i = 0; i < sigma.points.size(); ++i) {
    name += (i ? ";" : "") + join(sigma.points[i]) + "@" + sigma.weights[i].str();
  }
  return MembershipPredicate(name, Ambient{AmbientKind::polynomial, nvars(spec)},
                             [spec](const Element& e) { return integrate_poly(spec, poly_of(e)).is_zero(); });
}

MembershipPredicate span_predicate(std::vector<LaurentPoly> basis, AmbientKind kind, std::string name) {
  if (basis.empty()) throw PreconditionError("span_predicate needs at least one generator");
  const std::size_t n = basis.front().nvars();
  for (const auto& b : basis) {
    if (b.nvars() != n) throw DimensionError("span generators differ in variable count");
  }
  if (name.empty()) {
    name = "span{";
    for (std::size_t i = 0; i < basis.size(); ++i) name += (i ? ", " : "") + to_string(basis[i]);
    name += "}";
  }
  return MembershipPredicate(name, Ambient{kind, n}, [basis = std::move(basis)](const Element& e) {
    return solve_in_span<Rational>(basis, poly_of(e)).has_value();
  });
}

MembershipPredicate image_predicate(const PhiSystem& sys, bool restricted) {
  const std::string name = std::string(restricted ? "image'" : "image") + "(lambda=" + join(sys.lambda) + ")";
  if (restricted) {
    return MembershipPredicate(name, Ambient{AmbientKind::polynomial, sys.nvars()},
                               [sys](const Element& e) { return in_image_poly(poly_of(e), sys); });
  }
  return MembershipPredicate(name, Ambient{AmbientKind::laurent, sys.nvars()},
                             [sys](const Element& e) { return in_image(poly_of(e), sys); });
}

MembershipPredicate whole_algebra(const Ambient& a) {
  return MembershipPredicate("whole-algebra", a, [](const Element&) { return true; });
}

MembershipPredicate trace_zero(std::size_t n) {
  return MembershipPredicate("trace-zero", Ambient{AmbientKind::matrix, n},
                             [](const Element& e) { return matrix_of(e).trace().is_zero(); });
}

bool is_nilpotent(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("nilpotency needs a square matrix");
  RationalMatrix p = RationalMatrix::Identity(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k) p = p * a;
  return std::all_of(p.data(), p.data() + p.size(), [](const Rational& x) { return x.is_zero(); });
}

RationalMatrix jordan_block(std::size_t n, const Rational& eigenvalue) {
  const auto k = static_cast<Eigen::Index>(n);
  RationalMatrix j = RationalMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    j(i, i) = eigenvalue;
    if (i + 1 < k) j(i, i + 1) = Rational(1);
  }
  return j;
}

MembershipPredicate intersect(const std::vector<MembershipPredicate>& preds) {
  if (preds.empty()) throw PreconditionError("intersect needs at least one predicate");
  std::string name;
  for (const auto& p : preds) {
    if (!(p.ambient() == preds.front().ambient())) throw PreconditionError("intersect: ambient mismatch");
    name += (name.empty() ? "" : " & ") + p.name();
  }
  return MembershipPredicate(name, preds.front().ambient(), [preds](const Element& e) {
    return std::all_of(preds.begin(), preds.end(), [&](const auto& p) { return p(e); });
  });
}

MembershipPredicate lift_predicate(const MembershipPredicate& m) {
  const Ambient base = m.ambient();
  if (base.kind == AmbientKind::matrix) throw PreconditionError("only polynomial rings can be lifted");
  return MembershipPredicate(m.name() + "[t]", Ambient{base.kind, base.dim + 1}, [m, base](const Element& e) {
    std::map<int, LaurentPoly> slices;
    for (const auto& [mono, c] : poly_of(e).terms()) {
      Monomial head(base.dim);
      for (std::size_t i = 0; i < base.dim; ++i) head[i] = mono[i];
      auto [it, fresh] = slices.try_emplace(mono[base.dim], base.dim);
      it->second.add_term(head, c);
    }
    return std::all_of(slices.begin(), slices.end(), [&](const auto& s) { return m(s.second); });
  });
}

std::string OneShortcut::str() const {
  if (!applies) return "inapplicable";
  return "not Mathieu (a = 1, b = " + to_string(*probe) + ")";
}

OneShortcut one_membership_shortcut(const MembershipPredicate& m, const std::vector<Element>& probes) {
  if (!m(identity_element(m.ambient()))) return {};
  for (const auto& b : probes) {
    if (!m(b)) return {true, b};
  }
  return {};
}

}  // namespace mwb
