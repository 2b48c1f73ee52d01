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

#include "mwb/mathieu/atomic.hpp"

#include <algorithm>

#include "mwb/core/errors.hpp"
#include "mwb/core/linalg.hpp"

namespace mwb {
namespace {

void check_atoms(std::size_t k) {
  if (k > kMaxAtoms) throw PreconditionError("subset-sum check is limited to 20 atoms");
}

// Lagrange basis polynomial in variable i of n for node nodes[j].
Poly lagrange(std::size_t n, std::size_t i, const std::vector<Rational>& nodes, std::size_t j) {
  Poly l = Poly::constant(n, Rational(1));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k == j) continue;
    const Rational d = nodes[j] - nodes[k];
    l *= (Poly::variable(n, i) - Poly::constant(n, nodes[k])) * (Rational(1) / d);
  }
  return l;
}

}  // namespace

std::optional<std::vector<std::size_t>> zero_sum_subset(const std::vector<Rational>& weights) {
  const std::size_t k = weights.size();
  check_atoms(k);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    Rational s;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint32_t{1} << i)) s += weights[i];
    }
    if (s.is_zero()) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::uint32_t{1} << i)) idx.push_back(i);
      }
      return idx;
    }
  }
  return std::nullopt;
}

bool atomic_mathieu_condition(const std::vector<Rational>& weights) {
  if (std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return w.is_zero(); })) {
    throw PreconditionError("atomic weights must be nonzero");
  }
  return !zero_sum_subset(weights).has_value();
}

bool atomic_mathieu_condition(const AtomicMeasure& sigma, SubsetSumReading reading) {
  validate(MeasureSpec{sigma});
  if (reading == SubsetSumReading::weights) return atomic_mathieu_condition(sigma.weights);
  const std::size_t k = sigma.points.size();
  check_atoms(k);
  const std::size_t n = k == 0 ? 0 : sigma.points[0].size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::vector<Rational> s(n);
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::uint32_t{1} << i))) continue;
      for (std::size_t c = 0; c < n; ++c) s[c] += sigma.points[i][c];
    }
    if (std::all_of(s.begin(), s.end(), [](const Rational& x) { return x.is_zero(); })) return false;
  }
  return true;
}

Poly interpolating_indicator(const std::vector<std::vector<Rational>>& points,
                             const std::vector<std::size_t>& chosen) {
  if (points.empty()) throw PreconditionError("interpolating_indicator needs at least one point");
  const std::size_t n = points[0].size();
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a].size() != n) throw DimensionError("points differ in dimension");
    for (std::size_t b = 0; b < a; ++b) {
      if (points[a] == points[b]) throw PreconditionError("coincident interpolation points");
    }
  }
  std::vector<std::vector<Rational>> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : points) {
      if (std::find(grid[i].begin(), grid[i].end(), p[i]) == grid[i].end()) grid[i].push_back(p[i]);
    }
  }
  Poly f(n);
  for (const std::size_t j : chosen) {
    if (j >= points.size()) throw PreconditionError("chosen index out of range");
    Poly l = Poly::constant(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
      const auto pos = std::find(grid[i].begin(), grid[i].end(), points[j][i]) - grid[i].begin();
      l *= lagrange(n, i, grid[i], static_cast<std::size_t>(pos));
    }
    f += l;
  }
  for (std::size_t j = 0; j < points.size(); ++j) {
    const bool in = std::find(chosen.begin(), chosen.end(), j) != chosen.end();
    if (eval(f, points[j]) != Rational(in ? 1 : 0)) throw InconsistencyError("indicator failed re-evaluation");
  }
  return f;
}

std::vector<Rational> group_sums_from_power_sums(const std::vector<Rational>& c, const std::vector<Rational>& t) {
  if (c.size() != t.size()) throw DimensionError("one power sum per node is required");
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a].is_zero()) throw PreconditionError("nodes must be nonzero");
    for (std::size_t b = 0; b < a; ++b) {
      if (c[a] == c[b]) throw PreconditionError("nodes must be distinct");
    }
  }
  const auto k = static_cast<Eigen::Index>(c.size());
  const RationalMatrix v = vandermonde<Rational>(c, 1, k);
  RationalVector rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) rhs(i) = t[static_cast<std::size_t>(i)];
  const auto s = solve_exact(v, rhs);
  if (!s) throw InconsistencyError("Vandermonde system is singular");
  return {s->data(), s->data() + s->size()};
}

std::pair<Poly, Poly> finite_case2_pair(const AtomicMeasure& sigma) {
  validate(MeasureSpec{sigma});
  const auto subset = zero_sum_subset(sigma.weights);
  if (!subset) throw PreconditionError("no zero-sum subset of the weights");
  return {interpolating_indicator(sigma.points, *subset), interpolating_indicator(sigma.points, {subset->front()})};
}

}  // namespace mwb
