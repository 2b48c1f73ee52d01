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

#include "mwb/core/predicate.hpp"

#include <sstream>

#include "mwb/core/format.hpp"

namespace mwb {

std::string Ambient::str() const {
  switch (kind) {
    case AmbientKind::laurent: return "laurent " + std::to_string(dim);
    case AmbientKind::polynomial: return "poly " + std::to_string(dim);
    case AmbientKind::matrix: return "matrix " + std::to_string(dim);
  }
  return "?";
}

void require_in_ambient(const Element& e, const Ambient& a) {
  if (const auto* f = std::get_if<LaurentPoly>(&e)) {
    if (a.kind == AmbientKind::matrix) throw PreconditionError("polynomial given for a matrix predicate");
    if (f->nvars() != a.dim) throw PreconditionError("element has the wrong number of variables");
    if (a.kind == AmbientKind::polynomial && !f->is_polynomial()) {
      throw PreconditionError("Laurent element given for a polynomial predicate");
    }
    return;
  }
  const auto& m = std::get<RationalMatrix>(e);
  if (a.kind != AmbientKind::matrix) throw PreconditionError("matrix given for a polynomial predicate");
  if (m.rows() != static_cast<Eigen::Index>(a.dim) || m.cols() != static_cast<Eigen::Index>(a.dim)) {
    throw PreconditionError("matrix has the wrong shape");
  }
}

Element identity_element(const Ambient& a) {
  if (a.kind == AmbientKind::matrix) {
    const auto k = static_cast<Eigen::Index>(a.dim);
    RationalMatrix id = RationalMatrix::Constant(k, k, Rational(0));
    for (Eigen::Index i = 0; i < k; ++i) id(i, i) = Rational(1);
    return id;
  }
  return LaurentPoly::constant(a.dim, Rational(1));
}

Element multiply(const Element& a, const Element& b) {
  if (a.index() != b.index()) throw PreconditionError("product of elements of different algebras");
  if (const auto* f = std::get_if<LaurentPoly>(&a)) return *f * std::get<LaurentPoly>(b);
  const auto& x = std::get<RationalMatrix>(a);
  const auto& y = std::get<RationalMatrix>(b);
  if (x.cols() != y.rows()) throw DimensionError("matrix shapes do not compose");
  return RationalMatrix(x * y);
}

std::string to_string(const Element& e) {
  if (const auto* f = std::get_if<LaurentPoly>(&e)) return to_string(*f);
  const auto& m = std::get<RationalMatrix>(e);
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j > 0 ? " " : "") << m(i, j).str();
  }
  os << "]";
  return os.str();
}

bool same_element(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  if (const auto* f = std::get_if<LaurentPoly>(&a)) return *f == std::get<LaurentPoly>(b);
  const auto& x = std::get<RationalMatrix>(a);
  const auto& y = std::get<RationalMatrix>(b);
  return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
}

}  // namespace mwb
