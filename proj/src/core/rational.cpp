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

#include "mwb/core/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>
#include <stdexcept>

#include "mwb/core/errors.hpp"

namespace mwb {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num) : v_(num) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) i = 1;
  if (i == s.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const mpz_class num = parse_integer(s.substr(0, slash), text);
  const mpz_class den = parse_integer(s.substr(slash + 1), text);
  return Rational(num, den);
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw PoleError("zero to a negative power");
    return Rational(1) / pow(x, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.value().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.value().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

Rational floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
  return Rational(q);
}

Rational rising(const Rational& x, long k) {
  if (k < 0) throw PreconditionError("rising factorial with negative length");
  Rational r(1);
  for (long j = 0; j < k; ++j) r *= x + Rational(j);
  return r;
}

Rational factorial(long k) {
  if (k < 0) throw PreconditionError("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw PoleError("division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  if (im == Rational(1)) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.str() + "i";
  }
  if (re.is_zero()) return imag;
  if (imag.front() == '-') return re.str() + imag;
  return re.str() + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

}  // namespace mwb
