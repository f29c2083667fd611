// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <iostream>
#include <ostream>

#include "CLI11.hpp"
#include "anyonkit/errors.hpp"
#include "anyonkit_cli/app.hpp"
#include "usage_error.hpp"

namespace anyonkit::cli {

namespace {

struct CommandInfo {
  const char* name;
  const char* help;
  bool needs_group;
};

constexpr CommandInfo kCommands[] = {
    {"particles", "list particles with flux, charge, spin and dimension", true},
    {"chartable", "character table of the group", true},
    {"smatrix", "modular S and T matrices", true},
    {"fusion", "fusion rules from the Verlinde formula", true},
    {"prob", "fusion probabilities as exact fractions", true},
    {"subsystems", "subsets of particles closed under fusion", true},
    {"symmetries", "label permutations fixing the fusion table", true},
    {"abelian", "closed-form Z/N anyons and cross sections", false},
    {"verify", "run every consistency check", true},
};

bool failed_checks(const OutputDocument& doc) {
  const Section* s = doc.find("checks");
  if (!s) return false;
  for (const auto& row : s->rows)
    if (std::get<std::string>(row[1]) != "pass") return true;
  return false;
}

}  // namespace

std::string render(const OutputDocument& doc, Format format, bool decimal) {
  switch (format) {
    case Format::kCsv: return render_csv(doc, decimal);
    case Format::kJson: return to_json(doc) + "\n";
    case Format::kText: break;
  }
  return render_text(doc, decimal);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anyons of the quantum double D(H) of a finite permutation group", "anyonkit"};
  app.require_subcommand(1);

  Options o;
  std::string format = "text";
  std::uint64_t seed = 0;

  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    if (info.needs_group) {
      sub->add_option("--group", o.group.name, "named group: S<n>, A<n>, D<n>, Z<n>");
      sub->add_option("--gens", o.group.generators, "generators in cycle notation, separated by ';'");
      sub->add_option("--degree", o.group.degree, "number of points for --gens");
      sub->add_option("--order-cap", o.group.order_cap, "refuse groups larger than this")
          ->capture_default_str();
      sub->add_option("--seed", seed, "seed for the character-table random draws");
    }
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    sub->add_flag("--decimal", o.decimal, "print fractions as decimals");
    sub->add_flag("--verify", o.verify, "also run the consistency checks; fail if any fails");
    sub->callback([&o, sub] { o.command = sub->get_name(); });
  }
  app.get_subcommand("prob")->add_option("--pair", o.pair, "two particle labels, e.g. --pair D D")
      ->expected(2);
  app.get_subcommand("symmetries")
      ->add_option("--profile", o.profile, "dimspin preserves dimension and spin, dim only dimension")
      ->check(CLI::IsMember({"dim", "dimspin"}))
      ->capture_default_str();
  CLI::App* abelian = app.get_subcommand("abelian");
  abelian->add_option("--n", o.modulus, "modulus N")->required();
  abelian->add_option("--particles", o.particles, "pair for cross sections, e.g. \"1,0;0,1\"");
  abelian->add_option("--momentum", o.momentum, "incoming momentum")->capture_default_str();
  abelian->add_option("--theta-steps", o.theta_steps, "angles 2 pi k / steps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  for (const auto& info : kCommands)
    if (o.command == info.name && info.needs_group && app.get_subcommand(info.name)->count("--seed"))
      o.seed = seed;
  o.format = format == "csv" ? Format::kCsv : format == "json" ? Format::kJson : Format::kText;

  try {
    OutputDocument doc = build_document(o);
    out << render(doc, o.format, o.decimal);
    if (failed_checks(doc)) {
      err << "anyonkit: consistency checks failed\n";
      return kComputationFailure;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "anyonkit: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "anyonkit: " << e.what() << "\n";
    return kComputationFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"anyonkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace anyonkit::cli
