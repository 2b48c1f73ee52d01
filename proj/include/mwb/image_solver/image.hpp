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

#ifndef MWB_IMAGE_SOLVER_IMAGE_HPP
#define MWB_IMAGE_SOLVER_IMAGE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mwb/core/laurent.hpp"
#include "mwb/diff_ops/family.hpp"
#include "mwb/diff_ops/operator.hpp"

namespace mwb {

/// Phi_lambda_i = d/dz_i + lambda_i / z_i, i = 1..n.
struct PhiSystem {
  std::vector<Rational> lambda;

  std::size_t nvars() const noexcept { return lambda.size(); }
  std::vector<OrderOneOp> ops() const;
  /// -lambda - 1 when every component is an integer.
  std::optional<Monomial> excluded_monomial() const;
};

/// f_1..f_n with sum_i Op_i f_i equal to the target.
struct ImageWitness {
  std::vector<LaurentPoly> f;
};

/// sum_i ops[i] f_i; throws NotPolynomialError if the sum is not Laurent.
LaurentPoly operator_image(const std::vector<OrderOneOp>& ops, const ImageWitness& w);

bool in_image(const LaurentPoly& g, const PhiSystem& sys);

/// Termwise antiderivative in z_i: c z^b -> c / (b_i + lambda + 1) z^(b + e_i),
/// so Phi_lambda f = g. Throws PreconditionError on a term with b_i = -lambda - 1.
LaurentPoly solve_single(const LaurentPoly& g, std::size_t i, const Rational& lambda);

/// Routes each monomial to the lowest variable where it can be solved.
ImageWitness decompose(const LaurentPoly& g, const PhiSystem& sys);

bool in_image_poly(const Poly& g, const PhiSystem& sys);

/// Polynomial witness by peeling the z1^(-lambda1 - 1) slab and recursing.
ImageWitness decompose_poly(const Poly& g, const PhiSystem& sys);

/// (u, v) with [z^(-lambda-1)] u^m = 0 and [z^(-lambda-1)] u^m v = 1 for m >= 1.
std::pair<LaurentPoly, LaurentPoly> counterexample_pair(long lambda);

/// Psi_alpha f = g for polynomial f, where Psi_alpha = d/dz_i + alpha z_i,
/// by back-substitution from the top degree in z_i.
std::optional<Poly> solve_psi(const Poly& g, std::size_t i, const Rational& alpha);

/// Witness for g under (Psi_alpha_1, ..., Psi_alpha_n): plain antiderivative
/// when some alpha_i = 0, otherwise a single-variable banded solve if one exists.
std::optional<ImageWitness> decompose_psi(const Poly& g, const std::vector<Rational>& alpha);

/// Witness with polynomial f_i of total degree <= max_degree, or nothing if
/// no such witness exists (decided by an exact linear solve).
std::optional<ImageWitness> bounded_witness_search(const std::vector<OrderOneOp>& ops, const LaurentPoly& target,
                                                   int max_degree);

/// Laguerre system with some alpha_i = 0: f_i = -(1 + d_i + d_i^2 + ...) g.
std::optional<ImageWitness> decompose_laguerre(const Poly& g, const std::vector<Rational>& alpha);

/// Jacobi system with some alpha_i = 0 or beta_i = 0, reduced to Phi by
/// x_i = z_i - 1 (resp. x_i = 1 - z_i).
std::optional<ImageWitness> decompose_jacobi(const Poly& g, const std::vector<Rational>& alpha,
                                             const std::vector<Rational>& beta);

/// w_i = c Lambda^(alpha - e_i)(g^alpha) for the lowest i with alpha_i > 0.
ImageWitness rodrigues_witness(const OpSystem& sys, const Monomial& alpha, const Rational& c);

}  // namespace mwb

#endif  // MWB_IMAGE_SOLVER_IMAGE_HPP
