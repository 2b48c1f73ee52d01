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

#include "mwb/cli/scenario.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mwb/cli/parse.hpp"
#include "mwb/core/errors.hpp"
#include "mwb/core/format.hpp"

namespace mwb::cli {
namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

// Ordered "key: value" pairs; keys may repeat.
std::vector<std::pair<std::string, std::string>> lines_of(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw PreconditionError("line " + std::to_string(number) + ": expected 'key: value'");
    }
    out.emplace_back(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
  return out;
}

std::map<std::string, std::string> unique_keys(const std::vector<std::pair<std::string, std::string>>& lines,
                                               const std::vector<std::string>& allowed,
                                               const std::string& repeatable = "") {
  std::map<std::string, std::string> kv;
  for (const auto& [k, v] : lines) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw PreconditionError("unknown key '" + k + "'");
    }
    if (k == repeatable) continue;
    if (!kv.emplace(k, v).second) throw PreconditionError("duplicate key '" + k + "'");
  }
  return kv;
}

const std::string& required(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw PreconditionError("missing key '" + key + "'");
  return it->second;
}

int positive_int(const std::string& text, const std::string& key, int min) {
  const auto v = Rational::parse(text).to_long();
  if (!v || *v < min || *v > 1000000) throw PreconditionError("invalid " + key + " '" + text + "'");
  return static_cast<int>(*v);
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const auto kv = unique_keys(lines_of(text), {"ambient", "predicate", "f", "g", "horizon", "side"});
  Scenario s;
  s.ambient = parse_ambient(required(kv, "ambient"));
  s.predicate = required(kv, "predicate");
  s.f = parse_element(required(kv, "f"), s.ambient);
  s.g = parse_element(required(kv, "g"), s.ambient);
  s.horizon = positive_int(required(kv, "horizon"), "horizon", 1);
  if (kv.contains("side")) s.side = side_from_name(kv.at("side"));
  return s;
}

std::string serialize(const Scenario& s) {
  std::ostringstream os;
  os << "ambient: " << s.ambient.str() << "\n"
     << "predicate: " << s.predicate << "\n"
     << "f: " << to_string(s.f) << "\n"
     << "g: " << to_string(s.g) << "\n"
     << "horizon: " << s.horizon << "\n"
     << "side: " << side_name(s.side) << "\n";
  return os.str();
}

bool same_scenario(const Scenario& a, const Scenario& b) {
  return a.ambient == b.ambient && a.predicate == b.predicate && same_element(a.f, b.f) &&
         same_element(a.g, b.g) && a.horizon == b.horizon && a.side == b.side;
}

MathieuReport run_scenario(const Scenario& s) {
  return mathieu_test(parse_predicate(s.predicate, s.ambient), s.f, s.g, s.horizon, s.side);
}

std::string dump(const Scenario& s, const MathieuReport& r) {
  std::string out = serialize(s);
  out += "power: " + to_string(r.power) + "\n";
  if (s.side != Side::left) out += "right: " + to_string(r.right) + "\n";
  if (s.side != Side::right) out += "left: " + to_string(r.left) + "\n";
  out += "verdict: " + r.verdict.str() + "\n";
  return out;
}

PmProblem parse_pm_problem(std::string_view text) {
  const auto lines = lines_of(text);
  const auto kv = unique_keys(lines, {"q", "f", "a", "b", "horizon", "first-m", "component"}, "component");
  PmProblem p;
  p.q = parse_poly(required(kv, "q"), 1);
  p.f = parse_poly(required(kv, "f"), 1);
  p.a = Rational::parse(required(kv, "a"));
  p.b = Rational::parse(required(kv, "b"));
  p.horizon = positive_int(required(kv, "horizon"), "horizon", 0);
  if (kv.contains("first-m")) p.first_m = positive_int(kv.at("first-m"), "first-m", 0);
  for (const auto& [k, v] : lines) {
    if (k != "component") continue;
    std::map<std::string, Poly> parts;
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ';')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw PreconditionError("component item '" + trim(item) + "' lacks '='");
      parts[trim(item.substr(0, eq))] = parse_poly(item.substr(eq + 1), 1);
    }
    if (parts.size() != 3 || !parts.contains("Q") || !parts.contains("f") || !parts.contains("W")) {
      throw PreconditionError("component needs exactly Q, f and W");
    }
    p.components.push_back({parts.at("Q"), parts.at("f"), parts.at("W")});
  }
  return p;
}

std::string serialize(const PmProblem& p) {
  std::ostringstream os;
  os << "q: " << to_string(p.q) << "\n"
     << "f: " << to_string(p.f) << "\n"
     << "a: " << p.a.str() << "\n"
     << "b: " << p.b.str() << "\n"
     << "horizon: " << p.horizon << "\n"
     << "first-m: " << p.first_m << "\n";
  for (const auto& c : p.components) {
    os << "component: Q=" << to_string(c.q) << "; f=" << to_string(c.f) << "; W=" << to_string(c.w) << "\n";
  }
  return os.str();
}

}  // namespace mwb::cli
