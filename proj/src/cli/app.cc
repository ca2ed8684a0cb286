// Copyright 2026 The bellconf Authors
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

#include "bellconf/cli/app.h"

#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "bellconf/cli/reports.h"
#include "bellconf/errors.h"

namespace bellconf::cli {
namespace {

constexpr uint64_t kDefaultSeed = 42;
constexpr uint64_t kDefaultSweepSeed = 7;

class Writer {
 public:
  Writer(const RunConfig& config) : dir_(config.out_dir), format_(config.format) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir_.string());
  }

  void emit(const std::string& name, const Json& json, const std::string& csv) const {
    if (format_ != Format::kCsv) write_atomic(dir_ / (name + ".json"), json.dump(2) + "\n");
    if (format_ != Format::kJson) write_atomic(dir_ / (name + ".csv"), csv);
  }

 private:
  std::filesystem::path dir_;
  Format format_;
};

uint64_t seed_or(const RunConfig& c, uint64_t fallback) { return c.seed.value_or(fallback); }

void run_validate(const RunConfig& c, const Writer& w, std::ostream& out) {
  intervention::ArmConfig arm{c.shots, c.trials.value_or(30), seed_or(c, kDefaultSeed)};
  auto r = intervention::validate_confounder(arm);
  w.emit("validate", validate_json(arm, r), validate_csv(r));
  out << "validate: purity A=" << format6(r.purity_a) << " B=" << format6(r.purity_b)
      << ", entropy A=" << format6(r.entropy_a) << " B=" << format6(r.entropy_b)
      << " bits, E_ZZ=" << format6(r.e_zz) << " E_XX=" << format6(r.e_xx)
      << ", no-signaling p=" << format6(r.no_signaling_p) << "\n";
}

void run_hierarchy_cmd(const RunConfig& c, const Writer& w, std::ostream& out) {
  bell::HierarchyConfig hc;
  hc.shots = c.shots;
  hc.trials = c.trials.value_or(100);
  hc.seed = seed_or(c, kDefaultSeed);
  hc.lhv_flip = c.lhv_flip;
  hc.jobs = c.jobs;
  auto r = bell::run_hierarchy(hc);
  w.emit("hierarchy", hierarchy_json(hc, r), hierarchy_csv(r));
  out << "hierarchy: CS none=" << format6(r.no_confounding.cs)
      << " classical=" << format6(r.classical.cs) << " quantum=" << format6(r.quantum.cs)
      << " (" << hc.trials << " trials x " << hc.shots << " shots)\n";
}

void run_sweep_cmd(const RunConfig& c, const Writer& w, std::ostream& out) {
  bell::SweepConfig sc;
  sc.theta_steps = c.theta_steps;
  sc.shots = c.shots;
  sc.seed = seed_or(c, kDefaultSweepSeed);
  sc.jobs = c.jobs;
  auto r = bell::run_sweep(sc);
  w.emit("sweep", sweep_json(sc, r), sweep_csv(r));
  out << "sweep: " << r.points.size() << " points, R^2=" << format6(r.r_squared)
      << ", r(CS,C)=" << format6(r.pearson_r) << "\n";
}

void run_intervene_cmd(const RunConfig& c, const Writer& w, std::ostream& out) {
  intervention::ArmConfig arm{c.shots, c.trials.value_or(10), seed_or(c, kDefaultSeed)};
  auto r = intervention::run_intervention(arm);
  w.emit("intervene", intervene_json(arm, r), intervene_csv(r));
  const auto& obs = r.observational.at("A=0");
  out << "intervene: P(B=0|A=0)=" << (obs.defined ? format6(obs.estimate) : "undefined")
      << " P(B=0|DO(A=0))=" << format6(r.interventional.at("DO(A=0)").estimate)
      << " P(B=0|DO(A=1))=" << format6(r.interventional.at("DO(A=1)").estimate)
      << ", no-signaling p=" << format6(r.no_signaling.p_value) << "\n";
}

void run_qml_cmd(const RunConfig& c, const Writer& w, std::ostream& out) {
  qml::RobustnessConfig qc;
  qc.seed = seed_or(c, kDefaultSeed);
  qc.check_shots = c.shots;
  qc.jobs = c.jobs;
  auto r = qml::run_robustness(qc);
  w.emit("qml", qml_json(qc, r), qml_csv(qc, r));
  out << "qml: mean causal-naive gap " << format6(100 * r.mean_gap) << " points over "
      << qc.seeds << " seeds, paired t=" << format6(r.paired_t.statistic)
      << " p=" << format6(r.paired_t.p_value) << "\n";
}

void run_universality_cmd(const RunConfig& c, const Writer& w, std::ostream& out) {
  uint64_t seed = seed_or(c, kDefaultSeed);
  auto r = bell::run_universality(c.shots, seed);
  w.emit("universality", universality_json(c.shots, seed, r), universality_csv(r));
  out << "universality: CS";
  for (const bell::UniversalityEntry* e : {&r.chsh, &r.ch, &r.hardy, &r.mermin}) {
    out << " " << e->test << "=" << format6(e->sampled_value);
  }
  out << "\n";
}

using Runner = void (*)(const RunConfig&, const Writer&, std::ostream&);

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"validate", run_validate},         {"hierarchy", run_hierarchy_cmd},
      {"sweep", run_sweep_cmd},           {"intervene", run_intervene_cmd},
      {"qml", run_qml_cmd},               {"universality", run_universality_cmd},
  };
  return table;
}

void add_run_flags(CLI::App* sub, RunConfig& c) {
  static const std::map<std::string, Format> formats = {
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"all", Format::kAll}};
  sub->add_option("--shots", c.shots, "Shots per circuit execution")
      ->check(CLI::Range(uint64_t{1}, uint64_t{100000000}))
      ->capture_default_str();
  sub->add_option("--trials", c.trials, "Independent trials (default 100 hierarchy, 30 validate, 10 intervene)")
      ->check(CLI::Range(2, 1000000));
  sub->add_option("--seed", c.seed, "Master seed (default 7 for sweep, 42 otherwise)");
  sub->add_option("--theta-steps", c.theta_steps, "Sweep grid size")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  sub->add_option("--lhv-flip", c.lhv_flip, "Classical response flip probability")
      ->check(CLI::Range(0.0, 0.5))
      ->capture_default_str();
  sub->add_option("--out", c.out_dir, "Output directory")->capture_default_str();
  sub->add_option("--format", c.format, "Output format: json, csv or all")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("all");
  sub->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::Range(0, 4096))
      ->capture_default_str();
}

}  // namespace

void execute(const RunConfig& config, std::ostream& out) {
  Writer writer(config);
  bool found = false;
  for (const auto& [name, runner] : runners()) {
    if (config.experiment == "all" || config.experiment == name) {
      runner(config, writer, out);
      found = true;
    }
  }
  if (!found) throw ConfigError("unknown experiment '" + config.experiment + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum confounding experiments: Bell tests, interventions, causal learning"};
  app.name("bellconf");
  app.require_subcommand(1);
  RunConfig config;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Confounder validation: purity, entropy, correlators, no-signaling"},
      {"hierarchy", "CS for no-confounding, classical LHV and quantum sources"},
      {"sweep", "CS against entanglement for cos(t)|00> + sin(t)|11>"},
      {"intervene", "Observational vs interventional P(B=0|A)"},
      {"qml", "Naive vs causal classifier robustness across domains"},
      {"universality", "CHSH, CH, Hardy and Mermin on a common CS scale"},
      {"all", "Every experiment in sequence"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_run_flags(sub, config);
    sub->callback([&config, name = name] { config.experiment = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    execute(config, out);
  } catch (const std::invalid_argument& e) {
    err << "bellconf: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "bellconf: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace bellconf::cli
