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

#ifndef MWB_CORE_MONOMIAL_HPP
#define MWB_CORE_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "mwb/core/errors.hpp"

namespace mwb {

/// Exponent vector in Z^n; the all-zero vector is the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  Monomial(std::initializer_list<int> e) : e_(e) {}
  explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}

  /// z_i as an exponent vector in n variables.
  static Monomial unit_vector(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.e_.at(i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  std::span<const int> exponents() const noexcept { return e_; }

  long total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }
  bool is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
  }

  Monomial& operator+=(const Monomial& o) {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Monomial& operator-=(const Monomial& o) {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  Monomial operator-() const {
    Monomial r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
  friend Monomial operator-(Monomial a, const Monomial& b) { return a -= b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Componentwise a >= b, i.e. z^b divides z^a in the polynomial ring.
  friend bool divides(const Monomial& b, const Monomial& a) {
    a.check(b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.e_[i] < b.e_[i]) return false;
    }
    return true;
  }

 private:
  void check(const Monomial& o) const {
    if (o.e_.size() != e_.size()) throw DimensionError("monomials in different variable counts");
  }

  std::vector<int> e_;
};

/// Descending graded-lexicographic order: higher total degree first, ties broken
/// by the first differing exponent (larger first). This is the canonical term order.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const long da = a.total_degree();
    const long db = b.total_degree();
    if (da != db) return da > db;
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
  }
};

/// All exponent vectors in N^n of total degree <= max_degree, ascending by total
/// degree; within one degree z1 is preferred (x1 > x2 > ...).
std::vector<Monomial> graded_multi_indices(std::size_t n, int max_degree);

/// All exponent vectors in N^n of total degree exactly d, z1-heaviest first.
std::vector<Monomial> multi_indices_of_degree(std::size_t n, int d);

}  // namespace mwb

#endif  // MWB_CORE_MONOMIAL_HPP
