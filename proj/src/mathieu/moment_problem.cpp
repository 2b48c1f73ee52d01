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

#include "mwb/mathieu/moment_problem.hpp"

#include <algorithm>
#include <sstream>

#include "mwb/core/errors.hpp"
#include "mwb/core/format.hpp"

namespace mwb {
namespace {

void require_univariate(const Poly& p, const char* what) {
  if (p.nvars() != 1) throw DimensionError(std::string(what) + " must be a one-variable polynomial");
  require_polynomial(p, what);
}

int degree(const Poly& p) { return p.is_zero() ? -1 : static_cast<int>(*p.total_degree()); }

// Dense coefficients, index = exponent.
std::vector<Rational> dense(const Poly& p) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(p) + 1, 0)));
  for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(m[0])] = v;
  return c;
}

Poly sparse(const std::vector<Rational>& c) {
  Poly p(1);
  for (std::size_t k = 0; k < c.size(); ++k) p.add_term(Monomial{static_cast<int>(k)}, c[k]);
  return p;
}

// Quotient and remainder of a by a monic b.
std::pair<std::vector<Rational>, std::vector<Rational>> divmod_monic(std::vector<Rational> a,
                                                                     const std::vector<Rational>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {{}, a};
  std::vector<Rational> q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const Rational c = a[k];
    q[k - db] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  a.resize(db);
  return {q, a};
}

std::string bools(const std::vector<bool>& v) {
  std::string s;
  for (const bool b : v) s += b ? '1' : '0';
  return s;
}

}  // namespace

Poly compose(const Poly& outer, const Poly& inner) {
  require_univariate(outer, "outer");
  require_univariate(inner, "inner");
  const auto c = dense(outer);
  Poly r(1);
  for (std::size_t k = c.size(); k-- > 0;) r = r * inner + Poly::constant(1, c[k]);
  return r;
}

Rational definite_integral(const Poly& p, const Rational& a, const Rational& b) {
  require_univariate(p, "integrand");
  Rational s;
  for (const auto& [m, c] : p.terms()) {
    const long k = m[0] + 1;
    s += c * (scalar_pow(b, k) - scalar_pow(a, k)) / Rational(k);
  }
  return s;
}

std::optional<int> folk_streak(const Poly& f, const Rational& a, const Rational& b, int horizon) {
  require_univariate(f, "f");
  if (!(a < b)) throw PreconditionError("folk_streak needs a < b");
  Poly p = Poly::constant(1, Rational(1));
  for (int m = 1; m <= horizon; ++m) {
    p *= f;
    if (!definite_integral(p, a, b).is_zero()) return m;
  }
  return std::nullopt;
}

bool PmReport::conditions_hold() const {
  return derivative_sum && std::all_of(endpoints.begin(), endpoints.end(), [](bool b) { return b; }) &&
         std::all_of(composition.begin(), composition.end(), [](bool b) { return b; });
}

bool PmReport::moments_vanish() const {
  return std::all_of(moments.begin(), moments.end(), [](const Rational& r) { return r.is_zero(); });
}

std::string PmReport::str() const {
  std::ostringstream os;
  os << "condition 1 (W_j(a) = W_j(b)): " << bools(endpoints) << "\n"
     << "condition 2 (q = sum Q_j'(W_j) W_j'): " << (derivative_sum ? "holds" : "fails") << "\n"
     << "condition 3 (f = f_j(W_j)): " << bools(composition) << "\n";
  for (std::size_t k = 0; k < moments.size(); ++k) {
    os << "m = " << first_m + static_cast<int>(k) << ": " << moments[k].str() << "\n";
  }
  os << "moments: " << (moments_vanish() ? "all zero" : "nonzero present") << "\n"
     << "implication: " << (consistent() ? "consistent" : "VIOLATED") << "\n";
  return os.str();
}

PmReport pm_verify(const Poly& q, const Poly& f, const Rational& a, const Rational& b,
                   const std::vector<PmComponent>& decomposition, int horizon, int first_m) {
  require_univariate(q, "q");
  require_univariate(f, "f");
  if (first_m < 0 || horizon < first_m) throw PreconditionError("invalid moment range");
  PmReport r;
  r.first_m = first_m;
  Poly sum(1);
  for (const auto& c : decomposition) {
    r.endpoints.push_back(eval(c.w, std::vector<Rational>{a}) == eval(c.w, std::vector<Rational>{b}));
    sum += compose(partial(c.q, 0), c.w) * partial(c.w, 0);
    r.composition.push_back(compose(c.f, c.w) == f);
  }
  r.derivative_sum = sum == q;
  Poly p = pow(f, static_cast<unsigned>(first_m));
  for (int m = first_m; m <= horizon; ++m) {
    r.moments.push_back(definite_integral(p * q, a, b));
    p *= f;
  }
  return r;
}

std::optional<Decomposition> decompose_search(const Poly& f, int d) {
  require_univariate(f, "f");
  const int n = degree(f);
  if (d < 1 || d > n || n % d != 0) throw PreconditionError("d must divide deg f with 1 <= d <= deg f");
  const int r = n / d;
  const auto fc = dense(f);
  const Rational lead = fc.back();

  std::vector<Rational> w(static_cast<std::size_t>(d) + 1);
  w.back() = Rational(1);
  for (int k = 1; k < d; ++k) {
    const auto wr = dense(pow(sparse(w), static_cast<unsigned>(r)));
    const auto idx = static_cast<std::size_t>(n - k);
    w[static_cast<std::size_t>(d - k)] = (fc[idx] / lead - wr[idx]) / Rational(r);
  }

  std::vector<Rational> outer;
  std::vector<Rational> rest = fc;
  for (int j = 0; j <= r; ++j) {
    auto [quot, rem] = divmod_monic(rest, w);
    for (std::size_t k = 1; k < rem.size(); ++k) {
      if (!rem[k].is_zero()) return std::nullopt;
    }
    outer.push_back(rem.empty() ? Rational(0) : rem[0]);
    rest = std::move(quot);
  }
  if (std::any_of(rest.begin(), rest.end(), [](const Rational& x) { return !x.is_zero(); })) return std::nullopt;

  Decomposition dec{sparse(outer), sparse(w)};
  if (compose(dec.outer, dec.inner) != f) throw InconsistencyError("decomposition failed re-verification");
  return dec;
}

}  // namespace mwb
