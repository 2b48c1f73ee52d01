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

#ifndef MWB_CORE_LAURENT_HPP
#define MWB_CORE_LAURENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mwb/core/errors.hpp"
#include "mwb/core/monomial.hpp"
#include "mwb/core/rational.hpp"

namespace mwb {

/// Sparse multivariate Laurent polynomial over an exact field.
///
/// Terms are kept in a map keyed by exponent vector in descending graded-lex
/// order; zero coefficients are never stored, so equality of values is equality
/// of term maps. Variables are indexed from 0 in the API and printed as z1..zn.
template <class Scalar>
class Laurent {
 public:
  using scalar_type = Scalar;
  using term_map = std::map<Monomial, Scalar, GradedLexGreater>;

  explicit Laurent(std::size_t nvars = 1) : n_(nvars) {}

  static Laurent constant(std::size_t n, const Scalar& c) {
    Laurent f(n);
    f.add_term(Monomial(n), c);
    return f;
  }

  static Laurent term(const Monomial& m, const Scalar& c = Scalar(1)) {
    Laurent f(m.size());
    f.add_term(m, c);
    return f;
  }

  /// z_i^power in n variables.
  static Laurent variable(std::size_t n, std::size_t i, int power = 1) {
    Monomial m(n);
    m[i] = power;
    return term(m);
  }

  std::size_t nvars() const noexcept { return n_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const Monomial& m) const {
    check_monomial(m);
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Scalar constant_term() const { return coeff(Monomial(n_)); }

  bool is_polynomial() const {
    for (const auto& [m, c] : terms_) {
      if (!m.is_nonnegative()) return false;
    }
    return true;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  /// Largest total degree in the support; empty for the zero polynomial.
  std::optional<long> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total_degree();
  }

  /// Largest / smallest exponent of z_i in the support (0 for the zero polynomial).
  int max_exponent(std::size_t i) const {
    std::optional<int> r;
    for (const auto& [m, c] : terms_) r = r ? std::max(*r, m[i]) : m[i];
    return r.value_or(0);
  }
  int min_exponent(std::size_t i) const {
    std::optional<int> r;
    for (const auto& [m, c] : terms_) r = r ? std::min(*r, m[i]) : m[i];
    return r.value_or(0);
  }

  /// Leading term in the canonical order. Precondition: nonzero.
  const std::pair<const Monomial, Scalar>& leading() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return *terms_.begin();
  }

  /// Accumulates c z^m, cancelling to nothing when the sum vanishes.
  void add_term(const Monomial& m, const Scalar& c) {
    check_monomial(m);
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Laurent& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  Laurent operator-() const {
    Laurent r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Scalar& s) { return a *= s; }
  friend Laurent operator*(const Scalar& s, Laurent a) { return a *= s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_same(b);
    Laurent r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    }
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const Laurent& o) const {
    if (o.n_ != n_) {
      throw DimensionError("Laurent polynomials in " + std::to_string(n_) + " and " +
                           std::to_string(o.n_) + " variables");
    }
  }
  void check_monomial(const Monomial& m) const {
    if (m.size() != n_) {
      throw DimensionError("monomial of length " + std::to_string(m.size()) + " in a ring of " +
                           std::to_string(n_) + " variables");
    }
  }

  std::size_t n_;
  term_map terms_;
};

using LaurentPoly = Laurent<Rational>;

/// A LaurentPoly whose support lies in N^n. The invariant is checked at the
/// boundaries of operations that require it (see require_polynomial).
using Poly = LaurentPoly;

template <class Scalar>
void require_polynomial(const Laurent<Scalar>& f, const char* what) {
  if (!f.is_polynomial()) throw NotPolynomialError(std::string(what) + " must be a polynomial");
}

/// Scalar power with integer exponent (negative needs x != 0).
template <class Scalar>
Scalar scalar_pow(const Scalar& x, long e) {
  if (e < 0) {
    if (x == Scalar(0)) throw PoleError("zero to a negative power");
    return Scalar(1) / scalar_pow(x, -e);
  }
  Scalar result(1);
  Scalar base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// f^m by repeated squaring; f^0 = 1.
template <class Scalar>
Laurent<Scalar> pow(const Laurent<Scalar>& f, unsigned m) {
  Laurent<Scalar> result = Laurent<Scalar>::constant(f.nvars(), Scalar(1));
  Laurent<Scalar> base = f;
  while (m > 0) {
    if (m & 1U) result = result * base;
    m >>= 1U;
    if (m > 0) base = base * base;
  }
  return result;
}

/// d/dz_i, termwise z^g -> g_i z^(g - e_i).
template <class Scalar>
Laurent<Scalar> partial(const Laurent<Scalar>& f, std::size_t i) {
  if (i >= f.nvars()) throw DimensionError("variable index out of range");
  Laurent<Scalar> r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * Scalar(m[i]));
  }
  return r;
}

template <class Scalar>
Laurent<Scalar> partial(const Laurent<Scalar>& f, std::size_t i, unsigned k) {
  Laurent<Scalar> r = f;
  for (unsigned j = 0; j < k && !r.is_zero(); ++j) r = partial(r, i);
  return r;
}

/// Substitutes z_i -> z_i + c. Exponents of z_i must be >= 0 unless c = 0.
template <class Scalar>
Laurent<Scalar> shift(const Laurent<Scalar>& f, std::size_t i, const Scalar& c) {
  if (i >= f.nvars()) throw DimensionError("variable index out of range");
  if (c == Scalar(0)) return f;
  Laurent<Scalar> r(f.nvars());
  for (const auto& [m, coef] : f.terms()) {
    const int k = m[i];
    if (k < 0) throw PreconditionError("shift of a negative power of z" + std::to_string(i + 1));
    for (int j = 0; j <= k; ++j) {
      Monomial t = m;
      t[i] = j;
      r.add_term(t, coef * Scalar(binomial(k, j)) * scalar_pow(c, k - j));
    }
  }
  return r;
}

template <class Scalar>
Scalar eval(const Laurent<Scalar>& f, std::span<const Scalar> point) {
  if (point.size() != f.nvars()) throw DimensionError("evaluation point has wrong length");
  Scalar sum(0);
  for (const auto& [m, c] : f.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (m[i] < 0 && point[i] == Scalar(0)) {
        throw PoleError("pole at z" + std::to_string(i + 1) + " = 0");
      }
      t *= scalar_pow(point[i], m[i]);
    }
    sum += t;
  }
  return sum;
}

template <class Scalar>
Scalar eval(const Laurent<Scalar>& f, const std::vector<Scalar>& point) {
  return eval(f, std::span<const Scalar>(point));
}

/// Places f (in k variables) into n_total variables starting at position offset.
template <class Scalar>
Laurent<Scalar> embed(const Laurent<Scalar>& f, std::size_t n_total, std::size_t offset) {
  if (offset + f.nvars() > n_total) throw DimensionError("embedding does not fit");
  Laurent<Scalar> r(n_total);
  for (const auto& [m, c] : f.terms()) {
    Monomial big(n_total);
    for (std::size_t i = 0; i < m.size(); ++i) big[offset + i] = m[i];
    r.add_term(big, c);
  }
  return r;
}

/// Sum of the terms of f whose monomial satisfies pred.
template <class Scalar, class Pred>
Laurent<Scalar> filter_terms(const Laurent<Scalar>& f, Pred pred) {
  Laurent<Scalar> r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (pred(m)) r.add_term(m, c);
  }
  return r;
}

/// Multiplies every exponent vector by z^shift.
template <class Scalar>
Laurent<Scalar> mul_monomial(const Laurent<Scalar>& f, const Monomial& shift_by) {
  Laurent<Scalar> r(f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m + shift_by, c);
  return r;
}

}  // namespace mwb

#endif  // MWB_CORE_LAURENT_HPP
