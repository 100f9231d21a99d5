// Copyright 2026 The Fagnano Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fagnano/cli.hpp"

int main(int argc, char** argv) {
  using fagnano::RunConfig;

  CLI::App app{"Developing map, dedal polygons and dual billiards"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json";
  std::string convention = "ccw";
  double s_re = 0.0, s_im = 0.0;
  double z_re = 0.0, z_im = 0.0;

  app.add_option("--tol", config.tol, "absolute tolerance")->capture_default_str();
  app.add_option("--steps", config.steps, "iterations (iterate, orbit, render)")
      ->capture_default_str();
  app.add_option("--max-m", config.max_m, "iteration cap for bgs")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "ensemble seed")->capture_default_str();
  app.add_option("--samples", config.samples, "ensemble size")
      ->capture_default_str();
  app.add_option("--n", config.n, "polygon size (bgs, render)")
      ->capture_default_str();
  auto* s_re_opt = app.add_option("--s-re", s_re, "dedal family parameter, real part");
  auto* s_im_opt = app.add_option("--s-im", s_im, "dedal family parameter, imaginary part");
  auto* z_re_opt = app.add_option("--z-re", z_re, "orbit start, real part");
  auto* z_im_opt = app.add_option("--z-im", z_im, "orbit start, imaginary part");
  app.add_option("--format", format, "json, csv or svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->capture_default_str();
  app.add_option("--out", config.output_path, "output file (default stdout)");
  app.add_option("--convention", convention, "support line convention")
      ->check(CLI::IsMember({"ccw", "cw"}))
      ->capture_default_str();
  app.add_flag("--self-check", config.self_check,
               "dedal: verify develop(result) reproduces the input");
  app.add_flag("--regular-family", config.regular_family,
               "render: the regular n-gons side by side");

  const char* kCommands[][2] = {
      {"dedal", "dedal polygon (Q_0 + s X_{n/2} for even n)"},
      {"develop", "midpoint polygon"},
      {"iterate", "orbit under the developing map (csv trace or json decay report)"},
      {"classify", "regularity and similarity-to-dedal classification"},
      {"spectrum", "coefficients in the eigenpolygon basis"},
      {"orbit", "dual billiard orbit"},
      {"fagnano", "Fagnano dual billiard orbit search"},
      {"bgs", "convexification ensemble for random polygons"},
      {"render", "SVG figure"}};
  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", config.input_path, "polygon JSON file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << nlohmann::json{{"error", "usage"}, {"message", e.what()}}.dump()
              << '\n';
    return fagnano::kExitIoError;
  }

  config.command = *fagnano::ParseCommand(app.get_subcommands().front()->get_name());
  config.format = *fagnano::ParseFormat(format);
  config.convention = convention == "cw" ? fagnano::Convention::kClockwise
                                         : fagnano::Convention::kCounterClockwise;
  if (s_re_opt->count() > 0 || s_im_opt->count() > 0) config.s = {s_re, s_im};
  if (z_re_opt->count() > 0 || z_im_opt->count() > 0) config.z = {{z_re, z_im}};

  return fagnano::Run(config, std::cout, std::cerr);
}
