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

#ifndef MWB_DIFF_OPS_FAMILY_HPP
#define MWB_DIFF_OPS_FAMILY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwb/core/laurent.hpp"
#include "mwb/diff_ops/operator.hpp"

namespace mwb {

enum class Family {
  hermite,
  laguerre,
  jacobi,
  gegenbauer,
  chebyshev1,
  chebyshev2,
  legendre,
  ball,
  simplex,
  product,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Family tag plus parameters.
///
/// Per-variable parameters (alpha, beta) may be given once and are then
/// broadcast to all n variables. kappa has n + 1 entries. A product spec
/// concatenates its factors' variables in order.
struct FamilySpec {
  Family family = Family::hermite;
  std::size_t n = 1;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  Rational lambda;
  Rational mu;
  std::vector<Rational> kappa;
  std::vector<FamilySpec> factors;
  bool unconstrained = false;

  std::size_t nvars() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec hermite_spec(std::size_t n = 1);
FamilySpec laguerre_spec(std::vector<Rational> alpha);
FamilySpec jacobi_spec(std::vector<Rational> alpha, std::vector<Rational> beta);
FamilySpec gegenbauer_spec(const Rational& lambda, std::size_t n = 1);
FamilySpec legendre_spec(std::size_t n = 1);
FamilySpec ball_spec(std::size_t n, const Rational& mu);
FamilySpec simplex_spec(std::vector<Rational> kappa);
FamilySpec product_spec(std::vector<FamilySpec> factors);

/// Throws DomainError for parameters outside the family's admissible domain
/// (unless unconstrained) and PreconditionError for malformed parameter lists.
void validate(const FamilySpec& spec);

/// Non-product pieces of a spec in variable order: separable families split
/// into one-variable Hermite, Laguerre or Jacobi blocks; ball and simplex
/// stay whole. Gegenbauer-type tags become Jacobi.
std::vector<FamilySpec> blocks(const FamilySpec& spec);

/// Commuting operators Lambda_i with polynomials g_i.
class OpSystem {
 public:
  /// Throws PreconditionError unless the operators commute pairwise.
  OpSystem(std::vector<OrderOneOp> ops, std::vector<LaurentPoly> gens, std::optional<FamilySpec> spec = {});

  std::size_t nvars() const noexcept { return ops_.size(); }
  const std::vector<OrderOneOp>& ops() const noexcept { return ops_; }
  const std::vector<LaurentPoly>& gens() const noexcept { return gens_; }
  const std::optional<FamilySpec>& spec() const noexcept { return spec_; }

 private:
  std::vector<OrderOneOp> ops_;
  std::vector<LaurentPoly> gens_;
  std::optional<FamilySpec> spec_;
};

OpSystem build_family(const FamilySpec& spec);

/// c_alpha of the family's Rodrigues formula.
Rational family_constant(const FamilySpec& spec, const Monomial& alpha);

/// g^alpha = prod g_i^alpha_i.
LaurentPoly generator_power(const OpSystem& sys, const Monomial& alpha);

/// Lambda^alpha f, applying Lambda_n first and Lambda_1 last.
LaurentPoly apply_power(const OpSystem& sys, const Monomial& alpha, const LaurentPoly& f);

/// c * Lambda^alpha(g^alpha), certified polynomial of total degree |alpha|.
Poly rodrigues(const OpSystem& sys, const Monomial& alpha, const Rational& c);

/// Same with the family's own constant (requires a family-tagged system).
Poly rodrigues(const OpSystem& sys, const Monomial& alpha);

/// q = -(1 + d_i + d_i^2 + ...) p, so that (d_i - 1) q = p.
Poly laguerre_inverse_series(const Poly& p, std::size_t i);

}  // namespace mwb

#endif  // MWB_DIFF_OPS_FAMILY_HPP
