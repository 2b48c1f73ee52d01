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

#include "mwb/mathieu/report.hpp"

#include <sstream>

#include "mwb/core/errors.hpp"

namespace mwb {

std::string side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

Side side_from_name(std::string_view name) {
  if (name == "left") return Side::left;
  if (name == "right") return Side::right;
  if (name == "two-sided") return Side::two_sided;
  throw PreconditionError("unknown side '" + std::string(name) + "'");
}

std::string to_string(const Bitmask& bits) {
  std::string s;
  s.reserve(bits.size());
  for (const bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::corroborated: return "corroborated(N0=" + std::to_string(index) + ")";
    case Kind::refuted_at_horizon: return "refuted-at-horizon(last-exit=" + std::to_string(index) + ")";
    case Kind::power_condition_fails: return "power-condition-fails(m=" + std::to_string(index) + ")";
  }
  return "?";
}

Verdict classify(const Bitmask& power, const std::vector<Bitmask>& products) {
  const int n = static_cast<int>(power.size());
  for (int m = 1; m <= n; ++m) {
    if (!power[m - 1]) return {Verdict::Kind::power_condition_fails, m};
  }
  int last_exit = 0;
  for (const auto& p : products) {
    for (int m = n; m >= 1; --m) {
      if (!p[m - 1]) {
        last_exit = std::max(last_exit, m);
        break;
      }
    }
  }
  if (last_exit == n) return {Verdict::Kind::refuted_at_horizon, last_exit};
  return {Verdict::Kind::corroborated, last_exit + 1};
}

std::string MathieuReport::str() const {
  std::ostringstream os;
  os << "predicate: " << predicate << "\n"
     << "ambient: " << ambient.str() << "\n"
     << "f: " << to_string(f) << "\n"
     << "g: " << to_string(g) << "\n"
     << "horizon: " << horizon << "\n"
     << "side: " << side_name(side) << "\n"
     << "power: " << to_string(power) << "\n";
  if (side != Side::left) os << "right: " << to_string(right) << "\n";
  if (side != Side::right) os << "left: " << to_string(left) << "\n";
  os << "verdict: " << verdict.str() << "\n";
  return os.str();
}

MathieuReport mathieu_test(const MembershipPredicate& m, const Element& f, const Element& g, int horizon,
                           Side side) {
  if (horizon < 1) throw PreconditionError("horizon must be at least 1");
  require_in_ambient(f, m.ambient());
  require_in_ambient(g, m.ambient());
  MathieuReport r{m.name(), m.ambient(), f, g, horizon, side, {}, {}, {}, {}};
  Element p = f;
  for (int k = 1; k <= horizon; ++k) {
    r.power.push_back(m(p));
    if (side != Side::left) r.right.push_back(m(multiply(p, g)));
    if (side != Side::right) r.left.push_back(m(multiply(g, p)));
    if (k < horizon) p = multiply(p, f);
  }
  std::vector<Bitmask> products;
  if (side != Side::left) products.push_back(r.right);
  if (side != Side::right) products.push_back(r.left);
  r.verdict = classify(r.power, products);
  return r;
}

}  // namespace mwb
