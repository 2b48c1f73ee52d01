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

#ifndef MWB_CORE_RATIONAL_HPP
#define MWB_CORE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace mwb {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  explicit Rational(const mpz_class& num);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  /// Accepts "p", "-p", "p/q" with optional surrounding blanks.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }

  /// The value as a machine integer, if it is an integer that fits.
  std::optional<long> to_long() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& x);
/// x^e for any integer e; negative e requires x != 0.
Rational pow(const Rational& x, long e);
Rational floor(const Rational& x);
/// Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.
Rational rising(const Rational& x, long k);
Rational factorial(long k);
Rational binomial(long n, long k);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  template <std::integral I>
  GaussianRational(I v) : re(v) {}  // NOLINT

  static GaussianRational unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace mwb

namespace Eigen {

template <>
struct NumTraits<mwb::Rational> : GenericNumTraits<mwb::Rational> {
  using Real = mwb::Rational;
  using NonInteger = mwb::Rational;
  using Nested = mwb::Rational;
  using Literal = mwb::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };

  // Exact arithmetic: no rounding threshold anywhere.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mwb::GaussianRational> : GenericNumTraits<mwb::GaussianRational> {
  using Real = mwb::Rational;
  using NonInteger = mwb::GaussianRational;
  using Nested = mwb::GaussianRational;
  using Literal = mwb::GaussianRational;

  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // MWB_CORE_RATIONAL_HPP
