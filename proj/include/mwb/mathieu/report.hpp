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

#ifndef MWB_MATHIEU_REPORT_HPP
#define MWB_MATHIEU_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mwb/core/predicate.hpp"

namespace mwb {

/// right: f^m g, left: g f^m, two_sided: both.
enum class Side { left, right, two_sided };

std::string side_name(Side s);
Side side_from_name(std::string_view name);

using Bitmask = std::vector<bool>;

std::string to_string(const Bitmask& bits);

struct Verdict {
  enum class Kind { corroborated, refuted_at_horizon, power_condition_fails };
  Kind kind = Kind::corroborated;
  /// N0 for corroborated, latest exit for refuted, first failing m otherwise.
  int index = 0;

  bool is_refutation() const noexcept { return kind == Kind::refuted_at_horizon; }
  std::string str() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Bit m-1 of each mask refers to the power m.
Verdict classify(const Bitmask& power, const std::vector<Bitmask>& products);

struct MathieuReport {
  std::string predicate;
  Ambient ambient;
  Element f;
  Element g;
  int horizon = 0;
  Side side = Side::right;
  Bitmask power;
  Bitmask right;  // f^m g
  Bitmask left;   // g f^m
  Verdict verdict;

  std::string str() const;
};

MathieuReport mathieu_test(const MembershipPredicate& m, const Element& f, const Element& g, int horizon,
                           Side side = Side::right);

}  // namespace mwb

#endif  // MWB_MATHIEU_REPORT_HPP
