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

#include "mwb/cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>

#include "mwb/core/errors.hpp"
#include "mwb/core/format.hpp"
#include "mwb/mathieu/predicates.hpp"
#include "mwb/orthopoly/basis.hpp"

namespace mwb::cli {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  LaurentPoly run() {
    LaurentPoly f = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'z' || std::isdigit(static_cast<unsigned char>(c));
  }

  LaurentPoly expr() {
    LaurentPoly f(n_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = s_[pos_++] == '-';
    LaurentPoly t = term();
    f = negate ? -t : t;
    while (peek('+') || peek('-')) {
      negate = s_[pos_++] == '-';
      t = term();
      f = negate ? f - t : f + t;
    }
    return f;
  }

  LaurentPoly term() {
    LaurentPoly t = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        t *= factor();
      } else if (starts_factor()) {
        t *= factor();
      } else {
        return t;
      }
    }
  }

  long integer(bool allow_sign) {
    skip();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    long v = 0;
    const auto r = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (r.ec != std::errc()) fail("integer out of range");
    return v;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view num = s_.substr(start, pos_ - start);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == d) fail("expected a denominator");
      num = s_.substr(start, pos_ - start);
      if (Rational::parse(s_.substr(d, pos_ - d)).is_zero()) fail("zero denominator");
    }
    return Rational::parse(num);
  }

  LaurentPoly power_of(const LaurentPoly& base) {
    if (!peek('^')) return base;
    ++pos_;
    return pow(base, static_cast<unsigned>(integer(false)));
  }

  LaurentPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::constant(n_, number());
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return power_of(inner);
    }
    if (c == 'z') return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  LaurentPoly variable() {
    const std::size_t start = pos_;
    ++pos_;
    std::size_t index = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      index = static_cast<std::size_t>(integer(false));
    } else if (n_ != 1) {
      pos_ = start;
      fail("'z' needs an index when there are " + std::to_string(n_) + " variables");
    }
    if (index < 1 || index > n_) {
      pos_ = start;
      fail("unknown variable z" + std::to_string(index));
    }
    int e = 1;
    if (peek('^')) {
      ++pos_;
      e = static_cast<int>(integer(true));
    }
    return LaurentPoly::variable(n_, index - 1, e);
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && (s[i] == '(' || s[i] == '[')) ++depth;
    if (i < s.size() && (s[i] == ')' || s[i] == ']')) --depth;
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string join(const std::vector<Rational>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
  return s;
}

Rational rational(std::string_view text) {
  try {
    return Rational::parse(trim(text));
  } catch (const std::exception&) {
    throw PreconditionError("not a rational number: '" + std::string(text) + "'");
  }
}

std::size_t count(std::string_view text) {
  const auto v = rational(text);
  const auto k = v.to_long();
  if (!k || *k < 0) throw PreconditionError("expected a non-negative integer: '" + std::string(text) + "'");
  return static_cast<std::size_t>(*k);
}

// "key=value;flag;..." -> map (flags map to "").
std::map<std::string, std::string> key_values(std::string_view text) {
  std::map<std::string, std::string> kv;
  if (trim(text).empty()) return kv;
  for (const auto& item : split(text, ';')) {
    const auto eq = item.find('=');
    const std::string key = trim(item.substr(0, eq));
    if (key.empty()) throw PreconditionError("empty key in '" + std::string(text) + "'");
    kv[key] = eq == std::string::npos ? "" : trim(item.substr(eq + 1));
  }
  return kv;
}

std::size_t default_n(const FamilySpec& s) {
  switch (s.family) {
    case Family::laguerre: return std::max<std::size_t>(1, s.alpha.size());
    case Family::jacobi: return std::max<std::size_t>({1, s.alpha.size(), s.beta.size()});
    case Family::simplex: return s.kappa.empty() ? 0 : s.kappa.size() - 1;
    default: return 1;
  }
}

FamilySpec parse_single_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string name = trim(text.substr(0, colon));
  const auto fam = family_from_name(name);
  if (!fam || *fam == Family::product) throw PreconditionError("unknown family '" + name + "'");
  FamilySpec s;
  s.family = *fam;
  std::optional<std::size_t> n;
  if (colon != std::string_view::npos) {
    for (const auto& [key, value] : key_values(text.substr(colon + 1))) {
      if (key == "n") {
        n = count(value);
      } else if (key == "alpha") {
        s.alpha = parse_rational_list(value);
      } else if (key == "beta") {
        s.beta = parse_rational_list(value);
      } else if (key == "lambda") {
        s.lambda = rational(value);
      } else if (key == "mu") {
        s.mu = rational(value);
      } else if (key == "kappa") {
        s.kappa = parse_rational_list(value);
      } else if (key == "unconstrained") {
        s.unconstrained = true;
      } else {
        throw PreconditionError("unknown family parameter '" + key + "'");
      }
    }
  }
  s.n = n.value_or(default_n(s));
  return s;
}

Poly parse_univariate(std::string_view text) { return parse_poly(text, 1); }

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::size_t n) {
  if (n == 0) throw PreconditionError("at least one variable is required");
  return PolyParser(text, n).run();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) out.push_back(rational(item));
  return out;
}

FamilySpec parse_family(std::string_view text) {
  const auto parts = split(text, '*');
  if (parts.size() == 1) return parse_single_family(parts[0]);
  std::vector<FamilySpec> factors;
  for (const auto& p : parts) factors.push_back(parse_single_family(p));
  return product_spec(std::move(factors));
}

std::string format_family(const FamilySpec& spec) {
  if (spec.family == Family::product) {
    std::string s;
    for (const auto& f : spec.factors) s += (s.empty() ? "" : "*") + format_family(f);
    return s;
  }
  std::vector<std::string> items;
  if (spec.n != default_n(spec)) items.push_back("n=" + std::to_string(spec.n));
  if (!spec.alpha.empty()) items.push_back("alpha=" + join(spec.alpha));
  if (!spec.beta.empty()) items.push_back("beta=" + join(spec.beta));
  if (!spec.lambda.is_zero()) items.push_back("lambda=" + spec.lambda.str());
  if (!spec.mu.is_zero()) items.push_back("mu=" + spec.mu.str());
  if (!spec.kappa.empty()) items.push_back("kappa=" + join(spec.kappa));
  if (spec.unconstrained) items.push_back("unconstrained");
  std::string s(family_name(spec.family));
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ";" : ":") + items[i];
  return s;
}

MeasureSpec parse_measure(std::string_view text) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  const std::string head = t.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : t.substr(colon + 1);
  MeasureSpec spec;
  if (head == "atomic") {
    AtomicMeasure a;
    for (const auto& atom : split(body, ';')) {
      const auto at = atom.find('@');
      if (at == std::string::npos) throw PreconditionError("atom '" + atom + "' lacks '@weight'");
      a.points.push_back(parse_rational_list(atom.substr(0, at)));
      a.weights.push_back(rational(atom.substr(at + 1)));
    }
    spec = a;
  } else if (head == "box") {
    LebesgueBox b;
    for (const auto& side : split(body, ',')) {
      const auto dots = side.find("..");
      if (dots == std::string::npos) throw PreconditionError("box side '" + side + "' lacks '..'");
      b.lower.push_back(rational(side.substr(0, dots)));
      b.upper.push_back(rational(side.substr(dots + 2)));
    }
    spec = b;
  } else if (head == "density") {
    const auto kv = key_values(body);
    if (!kv.contains("q") || !kv.contains("a") || !kv.contains("b")) {
      throw PreconditionError("density needs q, a and b");
    }
    spec = SignedDensity{parse_univariate(kv.at("q")), rational(kv.at("a")), rational(kv.at("b"))};
  } else {
    spec = WeightMeasure{parse_family(t)};
  }
  validate(spec);
  return spec;
}

std::string format_measure(const MeasureSpec& spec) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WeightMeasure>) {
          return format_family(m.family);
        } else if constexpr (std::is_same_v<T, AtomicMeasure>) {
          std::string s = "atomic:";
          for (std::size_t i = 0; i < m.points.size(); ++i) {
            s += (i ? ";" : "") + join(m.points[i]) + "@" + m.weights[i].str();
          }
          return s;
        } else if constexpr (std::is_same_v<T, LebesgueBox>) {
          std::string s = "box:";
          for (std::size_t i = 0; i < m.lower.size(); ++i) {
            s += (i ? "," : "") + m.lower[i].str() + ".." + m.upper[i].str();
          }
          return s;
        } else {
          return "density:q=" + to_string(m.q) + ";a=" + m.a.str() + ";b=" + m.b.str();
        }
      },
      spec);
}

Ambient parse_ambient(std::string_view text) {
  const auto parts = split(trim(text), ' ');
  if (parts.size() != 2) throw PreconditionError("ambient must read 'laurent N', 'poly N' or 'matrix N'");
  Ambient a;
  if (parts[0] == "laurent") {
    a.kind = AmbientKind::laurent;
  } else if (parts[0] == "poly") {
    a.kind = AmbientKind::polynomial;
  } else if (parts[0] == "matrix") {
    a.kind = AmbientKind::matrix;
  } else {
    throw PreconditionError("unknown ambient '" + parts[0] + "'");
  }
  a.dim = count(parts[1]);
  if (a.dim == 0) throw PreconditionError("ambient dimension must be positive");
  return a;
}

Element parse_element(std::string_view text, const Ambient& ambient) {
  if (ambient.kind != AmbientKind::matrix) {
    Element e = parse_poly(text, ambient.dim);
    require_in_ambient(e, ambient);
    return e;
  }
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw PreconditionError("matrix must be '[..; ..]'");
  const auto rows = split(std::string_view(t).substr(1, t.size() - 2), ';');
  const auto k = static_cast<Eigen::Index>(ambient.dim);
  if (rows.size() != ambient.dim) throw DimensionError("matrix has the wrong number of rows");
  RationalMatrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    std::vector<std::string> entries;
    for (auto& e : split(rows[static_cast<std::size_t>(i)], ' ')) {
      if (!e.empty()) entries.push_back(e);
    }
    if (entries.size() != ambient.dim) throw DimensionError("matrix row has the wrong length");
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = rational(entries[static_cast<std::size_t>(j)]);
  }
  return m;
}

MembershipPredicate parse_predicate(std::string_view text, const Ambient& ambient) {
  const std::string t = trim(text);
  const auto conj = split(t, '&');
  if (conj.size() > 1) {
    std::vector<MembershipPredicate> parts;
    for (const auto& c : conj) parts.push_back(parse_predicate(c, ambient));
    return intersect(parts);
  }
  if (t.size() > 3 && t.ends_with("[t]")) {
    if (ambient.dim < 2) throw PreconditionError("a lifted predicate needs at least two variables");
    const auto base = parse_predicate(t.substr(0, t.size() - 3), Ambient{ambient.kind, ambient.dim - 1});
    return lift_predicate(base);
  }
  const auto colon = t.find(':');
  const std::string head = t.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : t.substr(colon + 1);
  MembershipPredicate p = [&]() -> MembershipPredicate {
    if (head == "no-constant-term") return no_constant_term(ambient.dim);
    if (head == "no-holomorphic-part") return no_holomorphic_part(ambient.dim);
    if (head == "trace-zero") return trace_zero(ambient.dim);
    if (head == "whole-algebra") return whole_algebra(ambient);
    if (head == "valuation") {
      const auto kv = key_values(body);
      if (!kv.contains("nu") || !kv.contains("c")) throw PreconditionError("valuation needs nu and c");
      return valuation_predicate(parse_rational_list(kv.at("nu")), rational(kv.at("c")), ambient.kind);
    }
    if (head == "integral") return integral_predicate(parse_measure(body), trim(body));
    if (head == "atomic") {
      const auto m = parse_measure(t);
      return atomic_predicate(std::get<AtomicMeasure>(m));
    }
    if (head == "image" || head == "image'") {
      const auto kv = key_values(body);
      if (!kv.contains("lambda")) throw PreconditionError("image needs lambda");
      return image_predicate(PhiSystem{parse_rational_list(kv.at("lambda"))}, head == "image'");
    }
    if (head == "span") {
      std::vector<LaurentPoly> basis;
      for (const auto& e : split(body, '|')) basis.push_back(parse_poly(e, ambient.dim));
      return span_predicate(std::move(basis), ambient.kind);
    }
    if (head == "constant-term") {
      const auto c2 = body.find(':');
      if (c2 == std::string::npos) throw PreconditionError("constant-term needs DEGREE:FAMILY");
      const auto degree = count(body.substr(0, c2));
      return constant_term_predicate(rodrigues_basis(parse_family(body.substr(c2 + 1)), static_cast<int>(degree)));
    }
    throw PreconditionError("unknown predicate '" + head + "'");
  }();
  if (!(p.ambient() == ambient)) {
    throw PreconditionError("predicate '" + t + "' lives in " + p.ambient().str() + ", not " + ambient.str());
  }
  return p;
}

}  // namespace mwb::cli
