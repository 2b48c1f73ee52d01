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

#include "mwb/cli/commands.hpp"

#include <ostream>

#include "mwb/cli/parse.hpp"
#include "mwb/cli/reproduce.hpp"
#include "mwb/cli/scenario.hpp"
#include "mwb/core/errors.hpp"
#include "mwb/core/format.hpp"
#include "mwb/image_solver/image.hpp"
#include "mwb/orthopoly/basis.hpp"

namespace mwb::cli {

int run_gen_basis(const std::string& family, const std::string& params, int degree, const std::string& method,
                  std::ostream& out) {
  if (degree < 0) throw PreconditionError("degree must be non-negative");
  const FamilySpec spec = parse_family(params.empty() ? family : family + ":" + params);
  validate(spec);
  if (method == "gs") {
    out << to_golden(gram_schmidt_basis(spec, degree));
  } else if (method == "rodrigues") {
    out << to_golden(rodrigues_basis(spec, degree));
  } else {
    throw PreconditionError("unknown method '" + method + "' (expected rodrigues or gs)");
  }
  return kExitOk;
}

int run_image(const std::string& lambda, bool restricted, const std::string& input, bool witness,
              std::ostream& out) {
  const PhiSystem sys{parse_rational_list(lambda)};
  if (sys.lambda.empty()) throw PreconditionError("lambda needs at least one component");
  const LaurentPoly g = parse_poly(input, sys.nvars());
  if (restricted) require_polynomial(g, "input");
  const bool member = restricted ? in_image_poly(g, sys) : in_image(g, sys);
  out << (member ? "in-image" : "not-in-image") << "\n";
  if (member && witness) {
    const ImageWitness w = restricted ? decompose_poly(g, sys) : decompose(g, sys);
    for (std::size_t i = 0; i < w.f.size(); ++i) out << "f" << i + 1 << ": " << to_string(w.f[i]) << "\n";
    out << "verified: " << (operator_image(sys.ops(), w) == g ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_moment(const std::string& measure, const std::string& input, std::ostream& out) {
  if (measure.starts_with("osc:")) {
    const auto m = Rational::parse(measure.substr(4)).to_long();
    if (!m) throw PreconditionError("oscillatory frequency must be an integer");
    out << oscillatory_integral(parse_poly(input, 1), *m).str() << "\n";
    return kExitOk;
  }
  const MeasureSpec spec = parse_measure(measure);
  out << integrate_poly(spec, parse_poly(input, nvars(spec))).str() << "\n";
  return kExitOk;
}

int run_mathieu_test(const std::string& scenario_text, bool dump_format, std::ostream& out) {
  const Scenario s = parse_scenario(scenario_text);
  const MathieuReport r = run_scenario(s);
  out << (dump_format ? dump(s, r) : r.str());
  return r.verdict.is_refutation() ? kExitRefuted : kExitOk;
}

int run_reproduce(const std::string& example, std::optional<int> horizon, std::ostream& out) {
  const Reproduction r = reproduce(example, horizon);
  out << r.str();
  return r.passed() ? kExitOk : kExitError;
}

int run_pm_verify(const std::string& problem_text, std::ostream& out) {
  const PmProblem p = parse_pm_problem(problem_text);
  const PmReport r = pm_verify(p.q, p.f, p.a, p.b, p.components, p.horizon, p.first_m);
  out << r.str();
  return r.consistent() ? kExitOk : kExitRefuted;
}

}  // namespace mwb::cli
