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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mwb/cli/commands.hpp"
#include "mwb/cli/reproduce.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mwb::cli;
  CLI::App app{"mathieu-workbench: exact operator images, moments and Mathieu-subspace tests"};
  app.require_subcommand(1);

  std::string family;
  std::string params;
  int degree = 0;
  std::string method = "gs";
  auto* gen = app.add_subcommand("gen-basis", "Orthogonal basis up to a total degree, golden format");
  gen->add_option("--family", family, "hermite, laguerre, jacobi, gegenbauer, chebyshev1, chebyshev2, "
                                      "legendre, ball, simplex, or factors joined by '*'")
      ->required();
  gen->add_option("--params", params, "key=value;... (n, alpha, beta, lambda, mu, kappa, unconstrained)");
  gen->add_option("--degree", degree, "Maximal total degree")->required();
  gen->add_option("--method", method, "rodrigues or gs")->check(CLI::IsMember({"rodrigues", "gs"}));

  std::string lambda;
  bool restricted = false;
  std::string input;
  bool witness = false;
  auto* image = app.add_subcommand("image", "Membership in Im Phi_lambda (or Im' with --poly)");
  image->add_option("--lambda", lambda, "Comma-separated rationals")->required()->allow_extra_args(false);
  image->add_flag("--poly", restricted, "Decide Im' (polynomial witnesses)");
  image->add_option("--input", input, "Polynomial text")->required();
  image->add_flag("--witness", witness, "Print and re-verify a witness");

  std::string measure;
  auto* moment = app.add_subcommand("moment", "Exact integral of a polynomial");
  moment->add_option("--measure", measure, "family spec, atomic:..., box:..., density:..., or osc:M")->required();
  moment->add_option("--input", input, "Polynomial text")->required();

  std::string scenario;
  bool dump = false;
  auto* mt = app.add_subcommand("mathieu-test", "Run a Mathieu scenario file");
  mt->add_option("--scenario", scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  mt->add_flag("--dump", dump, "Print the scenario with results in scenario format");

  std::string example;
  std::optional<int> horizon;
  auto* rep = app.add_subcommand("reproduce", "Re-run a named construction");
  rep->add_option("--example", example, "Example name")->required()->check(CLI::IsMember(reproduction_names()));
  rep->add_option("--horizon", horizon, "Horizon or degree bound (target-specific default)");

  std::string pm_file;
  auto* pm = app.add_subcommand("pm-verify", "Check a polynomial moment decomposition");
  pm->add_option("--file", pm_file, "Problem file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*gen) return run_gen_basis(family, params, degree, method, std::cout);
    if (*image) return run_image(lambda, restricted, input, witness, std::cout);
    if (*moment) return run_moment(measure, input, std::cout);
    if (*mt) return run_mathieu_test(read_file(scenario), dump, std::cout);
    if (*rep) return run_reproduce(example, horizon, std::cout);
    if (*pm) return run_pm_verify(read_file(pm_file), std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
