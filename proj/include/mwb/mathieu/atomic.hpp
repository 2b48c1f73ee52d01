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

#ifndef MWB_MATHIEU_ATOMIC_HPP
#define MWB_MATHIEU_ATOMIC_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mwb/core/laurent.hpp"
#include "mwb/moments/measure.hpp"

namespace mwb {

/// Which sums must avoid zero over non-empty subsets.
enum class SubsetSumReading { weights, points };

inline constexpr std::size_t kMaxAtoms = 20;

/// Indices of a non-empty subset of the weights summing to zero, if any.
std::optional<std::vector<std::size_t>> zero_sum_subset(const std::vector<Rational>& weights);

/// No non-empty subset of the weights sums to zero.
bool atomic_mathieu_condition(const std::vector<Rational>& weights);

bool atomic_mathieu_condition(const AtomicMeasure& sigma, SubsetSumReading reading = SubsetSumReading::weights);

/// Polynomial equal to 1 on the chosen points and 0 on the others.
/// For n >= 2 it is the sum of per-coordinate Lagrange products on the grid
/// spanned by the coordinates of the points.
Poly interpolating_indicator(const std::vector<std::vector<Rational>>& points,
                             const std::vector<std::size_t>& chosen);

/// Recovers s_j from t_m = sum_j c_j^m s_j, m = 1..k, with distinct nonzero c_j.
std::vector<Rational> group_sums_from_power_sums(const std::vector<Rational>& c, const std::vector<Rational>& t);

/// f = indicator of a zero-sum subset S', g = indicator of one point of S'.
/// Requires such a subset to exist.
std::pair<Poly, Poly> finite_case2_pair(const AtomicMeasure& sigma);

}  // namespace mwb

#endif  // MWB_MATHIEU_ATOMIC_HPP
