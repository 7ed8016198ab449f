// Copyright 2026 The pfkit Authors
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

// pfkit command-line front end: analyze, verify, sweep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "pfkit/analyze.hpp"
#include "pfkit/catalog.hpp"
#include "pfkit/error.hpp"
#include "pfkit/literal.hpp"
#include "pfkit/sweep.hpp"
#include "pfkit/verify.hpp"

namespace {

using pfkit::Error;
using pfkit::ErrorCode;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pfkit::Branch parse_branch(const std::string& s) {
  return s == "plus" ? pfkit::Branch::kPlus : pfkit::Branch::kMinus;
}

// "param:from:to:steps"
pfkit::Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) {
    throw Error(ErrorCode::kInvalidGrid, "axis must look like param:from:to:steps, got " + text);
  }
  try {
    std::size_t used = 0;
    pfkit::Axis a{parts[0], std::stod(parts[1]), std::stod(parts[2]), std::stol(parts[3], &used)};
    if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    return a;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidGrid, "malformed axis " + text);
  }
}

struct AnalyzeArgs {
  std::string matrix;
  std::string model;
  std::string branch = "minus";
  double tol = pfkit::kPhaseTol;
};

int analyze_command(const AnalyzeArgs& args) {
  pfkit::Analysis result;
  try {
    const pfkit::Branch branch = parse_branch(args.branch);
    if (!args.matrix.empty()) {
      result = pfkit::analyze_matrix(pfkit::parse_matrix_literal(args.matrix), branch, args.tol);
    } else {
      result = pfkit::analyze_model(pfkit::spec_from_json_text(read_file(args.model)), branch, args.tol);
    }
  } catch (const Error& e) {
    std::cerr << "pfkit analyze: " << e.what() << '\n';
    const bool input = e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kInvalidSpec ||
                       e.code() == ErrorCode::kNonFinite;
    return input ? pfkit::kExitInput : pfkit::kExitNoPF;
  }
  std::cout << result.report.dump(2) << '\n';
  return result.exit_code;
}

int verify_command(const pfkit::VerifyOptions& options) {
  const pfkit::VerifyReport report = pfkit::run_verify(options);
  pfkit::print(std::cout, report);
  return report.pass() ? 0 : 1;
}

struct SweepArgs {
  std::string config;
  std::string model;
  std::vector<std::string> axes;
  std::string out;
  std::string branch;
  std::string format;
  double tol = 0.0;
  unsigned workers = 0;
};

int sweep_command(const SweepArgs& args) {
  pfkit::SweepConfig config;
  try {
    if (!args.config.empty()) {
      config = pfkit::sweep_config_from_json(pfkit::parse_json_text(read_file(args.config)));
    } else if (args.model.empty() || args.axes.empty()) {
      throw Error(ErrorCode::kInvalidSpec, "sweep needs --config, or --model with at least one --axis");
    }
    // Flags win over the config file.
    if (!args.model.empty()) config.base = pfkit::spec_from_json_text(read_file(args.model));
    if (!args.axes.empty()) {
      config.axes.clear();
      for (const std::string& a : args.axes) config.axes.push_back(parse_axis(a));
    }
    if (!args.branch.empty()) {
      config.branch = args.branch == "plus"    ? pfkit::BranchChoice::kPlus
                      : args.branch == "minus" ? pfkit::BranchChoice::kMinus
                                               : pfkit::BranchChoice::kBoth;
    }
    if (!args.format.empty()) {
      config.output = args.format == "json" ? pfkit::OutputFormat::kJson : pfkit::OutputFormat::kCsv;
    }
    if (args.tol > 0.0) config.tol = args.tol;
    if (args.workers > 0) config.workers = args.workers;
    pfkit::validate(config);
  } catch (const Error& e) {
    std::cerr << "pfkit sweep: " << e.what() << '\n';
    return pfkit::kExitInput;
  }

  const std::vector<pfkit::SweepRow> rows = pfkit::run_sweep(config);
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary);
    if (!file) {
      std::cerr << "pfkit sweep: cannot write " << args.out << '\n';
      return pfkit::kExitInput;
    }
  }
  std::ostream& os = args.out.empty() ? std::cout : file;
  if (config.output == pfkit::OutputFormat::kJson) {
    pfkit::write_json(os, config, rows);
  } else {
    pfkit::write_csv(os, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-fermionic analysis of 2x2 non-Hermitian Hamiltonians"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  CLI::App* a = app.add_subcommand("analyze", "Decompose one Hamiltonian and report its pseudo-fermions");
  auto* matrix = a->add_option("--matrix", analyze.matrix, "Matrix literal \"a,b;c,d\", entries like 0.5+0.866i");
  auto* model = a->add_option("--model", analyze.model, "Model JSON file");
  matrix->excludes(model);
  a->add_option("--branch", analyze.branch, "Eigenvalue assigned to rho")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  a->add_option("--tol", analyze.tol, "Exceptional-point tolerance")->capture_default_str();
  a->callback([&] {
    if (analyze.matrix.empty() && analyze.model.empty()) {
      throw CLI::RequiredError("--matrix or --model");
    }
  });

  pfkit::VerifyOptions verify;
  CLI::App* v = app.add_subcommand("verify", "Run the randomized invariant suite");
  v->add_option("--count", verify.count, "Random cases")->check(CLI::PositiveNumber)->capture_default_str();
  v->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  v->add_flag("--inject-fault", verify.inject_fault)->group("");

  SweepArgs sweep;
  CLI::App* s = app.add_subcommand("sweep", "Evaluate a model over a parameter grid");
  s->add_option("--config", sweep.config, "Sweep config JSON file");
  s->add_option("--model", sweep.model, "Model JSON file (overrides the config)");
  s->add_option("--axis", sweep.axes, "param:from:to:steps, outer axis first (overrides the config)");
  s->add_option("--out", sweep.out, "Output file (default stdout)");
  s->add_option("--branch", sweep.branch)->check(CLI::IsMember({"plus", "minus", "both"}));
  s->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
  s->add_option("--tol", sweep.tol)->check(CLI::PositiveNumber);
  s->add_option("--workers", sweep.workers, "Worker threads")->check(CLI::Range(1u, 1024u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pfkit::kExitInput;
  }

  try {
    if (a->parsed()) return analyze_command(analyze);
    if (v->parsed()) return verify_command(verify);
    return sweep_command(sweep);
  } catch (const std::exception& e) {
    std::cerr << "pfkit: " << e.what() << '\n';
    return pfkit::kExitInput;
  }
}
