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

#ifndef MWB_CORE_LINALG_HPP
#define MWB_CORE_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "mwb/core/laurent.hpp"

namespace mwb {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan elimination with exact zero tests.
template <class Scalar>
Echelon<Scalar> reduced_row_echelon(Matrix<Scalar> a) {
  using Eigen::Index;
  const Scalar zero(0);
  Echelon<Scalar> e;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = row;
    while (p < a.rows() && a(p, col) == zero) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));

    const Scalar inv = Scalar(1) / a(row, col);
    for (Index c = col; c < a.cols(); ++c) {
      if (a(row, c) != zero) a(row, c) *= inv;
    }
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == zero) continue;
      const Scalar factor = a(r, col);
      for (Index c = col; c < a.cols(); ++c) {
        if (a(row, c) != zero) a(r, c) -= factor * a(row, c);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

template <class Scalar>
Eigen::Index rank_exact(const Matrix<Scalar>& a) {
  return reduced_row_echelon<Scalar>(a).rank();
}

/// Some x with A x = b, or nothing when the system is inconsistent.
/// Free variables are set to zero.
template <class Scalar>
std::optional<Vector<Scalar>> solve_exact(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  using Eigen::Index;
  if (b.size() != a.rows()) throw DimensionError("right-hand side length does not match rows");
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto e = reduced_row_echelon<Scalar>(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Constant(a.cols(), Scalar(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    x(e.pivots[r]) = e.reduced(static_cast<Index>(r), a.cols());
  }
  return x;
}

/// V(r, j) = nodes[j]^(first_power + r) for r in [0, rows).
template <class Scalar>
Matrix<Scalar> vandermonde(std::span<const Scalar> nodes, int first_power, Eigen::Index rows) {
  Matrix<Scalar> v(rows, static_cast<Eigen::Index>(nodes.size()));
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Scalar p = scalar_pow(nodes[static_cast<std::size_t>(j)], first_power);
    for (Eigen::Index r = 0; r < rows; ++r) {
      v(r, j) = p;
      p *= nodes[static_cast<std::size_t>(j)];
    }
  }
  return v;
}

/// Union of supports, in canonical term order.
template <class Scalar>
std::vector<Monomial> joint_support(std::span<const Laurent<Scalar>> polys) {
  std::set<Monomial, GradedLexGreater> seen;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) seen.insert(m);
  }
  return {seen.begin(), seen.end()};
}

/// Column j holds the coefficients of polys[j] against the listed monomials.
template <class Scalar>
Matrix<Scalar> coefficient_matrix(std::span<const Laurent<Scalar>> polys,
                                  const std::vector<Monomial>& rows) {
  std::map<Monomial, Eigen::Index, GradedLexGreater> index;
  for (std::size_t r = 0; r < rows.size(); ++r) index.emplace(rows[r], static_cast<Eigen::Index>(r));
  Matrix<Scalar> a = Matrix<Scalar>::Constant(static_cast<Eigen::Index>(rows.size()),
                                              static_cast<Eigen::Index>(polys.size()), Scalar(0));
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (const auto& [m, c] : polys[j].terms()) {
      const auto it = index.find(m);
      if (it == index.end()) throw PreconditionError("polynomial term outside the listed monomials");
      a(it->second, static_cast<Eigen::Index>(j)) = c;
    }
  }
  return a;
}

/// Coefficients x with sum_j x_j basis[j] = target, if target lies in the span.
template <class Scalar>
std::optional<Vector<Scalar>> solve_in_span(std::span<const Laurent<Scalar>> basis,
                                            const Laurent<Scalar>& target) {
  std::vector<Laurent<Scalar>> all(basis.begin(), basis.end());
  all.push_back(target);
  const auto rows = joint_support<Scalar>(all);
  if (rows.empty()) return Vector<Scalar>::Constant(static_cast<Eigen::Index>(basis.size()), Scalar(0));
  const Matrix<Scalar> a = coefficient_matrix<Scalar>(basis, rows);
  const Matrix<Scalar> b = coefficient_matrix<Scalar>(std::span<const Laurent<Scalar>>(&target, 1), rows);
  return solve_exact<Scalar>(a, b.col(0));
}

}  // namespace mwb

#endif  // MWB_CORE_LINALG_HPP
