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

#include "bellconf/cli/reports.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "bellconf/stats/stats.h"

namespace bellconf::cli {
namespace {

Json interval_json(const stats::Interval& ci) { return Json::array({json6(ci.lo), json6(ci.hi)}); }

Json test_json(const stats::TestResult& t) {
  Json j;
  j["statistic"] = json6(t.statistic);
  j["df"] = json6(t.degrees_of_freedom);
  j["p_value"] = json6(t.p_value);
  return j;
}

Json scenario_json(const char* name, const bell::CsEstimate& e) {
  stats::Summary s = stats::summarize(e.trial_values);
  Json j;
  j["scenario"] = name;
  j["cs_mean"] = json6(e.cs);
  j["cs_std"] = json6(s.sd);
  j["ci95"] = interval_json(s.ci95);
  Json trials = Json::array();
  for (double v : e.trial_values) trials.push_back(json6(v));
  j["trials"] = std::move(trials);
  j["n_trials"] = e.n_trials;
  return j;
}

Json estimate_json(const intervention::ConditionalEstimate& e) {
  Json j;
  j["p_b0"] = e.defined ? json6(e.estimate) : Json(nullptr);
  j["wilson_lo"] = e.defined ? json6(e.wilson_lo) : Json(nullptr);
  j["wilson_hi"] = e.defined ? json6(e.wilson_hi) : Json(nullptr);
  j["b0"] = e.successes;
  j["n"] = e.n;
  return j;
}

Json distribution_json(const intervention::ConditionalDistribution& d) {
  Json j = Json::object();
  for (const auto& [label, e] : d.p_b0_given) j[label] = estimate_json(e);
  return j;
}

Json no_signaling_json(const intervention::NoSignalingResult& r) {
  Json j;
  j["delta"] = json6(r.delta);
  j["p"] = json6(r.p_value);
  j["statistic"] = json6(r.test.statistic);
  j["df"] = json6(r.test.degrees_of_freedom);
  return j;
}

Json summary_json(const stats::Summary& s) {
  Json j;
  j["mean"] = json6(s.mean);
  j["std"] = json6(s.sd);
  j["ci95"] = interval_json(s.ci95);
  return j;
}

Json check_json(const qml::FeatureCheck& c) {
  Json j;
  j["feature"] = qml::feature_name(c.feature);
  j["p_do_1"] = json6(c.p_do_1);
  j["p_do_0"] = json6(c.p_do_0);
  j["effect"] = json6(c.effect);
  j["causal"] = c.causal;
  j["p_obs_1"] = json6(c.p_obs_1);
  j["p_obs_0"] = json6(c.p_obs_0);
  return j;
}

Json entry_json(const bell::UniversalityEntry& e) {
  Json j;
  j["test"] = e.test;
  j["classical_bound"] = json6(e.classical_bound);
  j["exact_cs"] = json6(e.exact_value);
  j["sampled_cs"] = json6(e.sampled_value);
  return j;
}

void csv_row(std::ostringstream& os, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const std::string& c : cells) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

}  // namespace

double round6(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;  // drop negative zero
}

std::string format6(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", round6(x));
  return buf;
}

Json json6(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round6(x);
}

Json hierarchy_json(const bell::HierarchyConfig& config, const bell::HierarchyResult& r) {
  Json j;
  j["experiment"] = "hierarchy";
  j["config"] = {{"shots", config.shots},
                 {"trials", config.trials},
                 {"seed", config.seed},
                 {"lhv_flip", json6(config.lhv_flip)}};
  j["scenarios"] = Json::array({scenario_json("no_confounding", r.no_confounding),
                                scenario_json("classical", r.classical),
                                scenario_json("quantum", r.quantum)});
  j["separation"] = {{"quantum_classical", json6(r.quantum_classical_separation())},
                     {"classical_none", json6(r.classical_none_separation())}};
  return j;
}

std::string hierarchy_csv(const bell::HierarchyResult& r) {
  std::ostringstream os;
  os << "scenario,trial,cs\n";
  auto emit = [&](const char* name, const bell::CsEstimate& e) {
    for (size_t i = 0; i < e.trial_values.size(); ++i) {
      csv_row(os, {name, std::to_string(i), format6(e.trial_values[i])});
    }
  };
  emit("no_confounding", r.no_confounding);
  emit("classical", r.classical);
  emit("quantum", r.quantum);
  return os.str();
}

Json sweep_json(const bell::SweepConfig& config, const bell::SweepResult& r) {
  Json j;
  j["experiment"] = "sweep";
  j["config"] = {{"theta_steps", config.theta_steps}, {"shots", config.shots}, {"seed", config.seed}};
  j["r_squared"] = json6(r.r_squared);
  j["pearson_r"] = json6(r.pearson_r);
  j["fit"] = {{"slope", json6(r.fit.slope)}, {"intercept", json6(r.fit.intercept)}};
  Json points = Json::array();
  for (const bell::SweepPoint& p : r.points) {
    points.push_back({{"theta", json6(p.theta)},
                      {"concurrence", json6(p.concurrence)},
                      {"cs_measured", json6(p.cs_measured)},
                      {"cs_theory", json6(p.cs_theory)}});
  }
  j["points"] = std::move(points);
  return j;
}

std::string sweep_csv(const bell::SweepResult& r) {
  std::ostringstream os;
  os << "theta,concurrence,cs_measured,cs_theory\n";
  for (const bell::SweepPoint& p : r.points) {
    csv_row(os, {format6(p.theta), format6(p.concurrence), format6(p.cs_measured),
                 format6(p.cs_theory)});
  }
  return os.str();
}

Json intervene_json(const intervention::ArmConfig& config,
                    const intervention::InterventionReport& r) {
  Json j;
  j["experiment"] = "intervene";
  j["config"] = {{"shots", config.shots}, {"trials", config.trials}, {"seed", config.seed}};
  j["observational"] = distribution_json(r.observational);
  j["interventional"] = distribution_json(r.interventional);
  Json effect = Json::array();
  for (const auto& e : r.causal_effect) effect.push_back(e ? json6(*e) : Json(nullptr));
  j["causal_effect"] = std::move(effect);
  j["no_signaling"] = no_signaling_json(r.no_signaling);
  j["no_signaling_pooled"] = no_signaling_json(r.no_signaling_pooled);
  return j;
}

std::string intervene_csv(const intervention::InterventionReport& r) {
  std::ostringstream os;
  os << "regime,condition,p_b0,wilson_lo,wilson_hi,n\n";
  auto emit = [&](const char* regime, const intervention::ConditionalDistribution& d) {
    for (const auto& [label, e] : d.p_b0_given) {
      csv_row(os, {regime, label, e.defined ? format6(e.estimate) : "",
                   e.defined ? format6(e.wilson_lo) : "", e.defined ? format6(e.wilson_hi) : "",
                   std::to_string(e.n)});
    }
  };
  emit("observational", r.observational);
  emit("interventional", r.interventional);
  return os.str();
}

Json validate_json(const intervention::ArmConfig& config,
                   const intervention::ConfounderValidationReport& r) {
  Json j;
  j["experiment"] = "validate";
  j["config"] = {{"shots", config.shots}, {"trials", config.trials}, {"seed", config.seed}};
  j["purity"] = {{"A", json6(r.purity_a)}, {"B", json6(r.purity_b)}};
  j["entropy_bits"] = {{"A", json6(r.entropy_a)}, {"B", json6(r.entropy_b)}};
  j["correlators"] = {{"entangled", {{"ZZ", json6(r.e_zz)}, {"XX", json6(r.e_xx)}}},
                      {"separable", {{"ZZ", json6(r.e_zz_product)}, {"XX", json6(r.e_xx_product)}}}};
  j["no_signaling"] = test_json(r.no_signaling_test);
  return j;
}

std::string validate_csv(const intervention::ConfounderValidationReport& r) {
  std::ostringstream os;
  os << "quantity,value\n";
  csv_row(os, {"purity_A", format6(r.purity_a)});
  csv_row(os, {"purity_B", format6(r.purity_b)});
  csv_row(os, {"entropy_A", format6(r.entropy_a)});
  csv_row(os, {"entropy_B", format6(r.entropy_b)});
  csv_row(os, {"E_ZZ_entangled", format6(r.e_zz)});
  csv_row(os, {"E_XX_entangled", format6(r.e_xx)});
  csv_row(os, {"E_ZZ_separable", format6(r.e_zz_product)});
  csv_row(os, {"E_XX_separable", format6(r.e_xx_product)});
  csv_row(os, {"no_signaling_p", format6(r.no_signaling_p)});
  return os.str();
}

Json qml_json(const qml::RobustnessConfig& config, const qml::RobustnessReport& r) {
  Json j;
  j["experiment"] = "qml";
  Json lambdas = Json::array();
  for (double l : config.lambdas) lambdas.push_back(json6(l));
  j["config"] = {{"seeds", config.seeds},         {"train_n", config.train_n},
                 {"split", json6(config.split)},  {"test_n", config.test_n},
                 {"lambdas", std::move(lambdas)}, {"flip_probability", json6(config.flip_probability)},
                 {"seed", config.seed},           {"check_shots", config.check_shots},
                 {"tau", json6(config.tau)}};
  j["mean_gap"] = json6(r.mean_gap);
  j["t"] = json6(r.paired_t.statistic);
  j["df"] = json6(r.paired_t.degrees_of_freedom);
  j["p"] = json6(r.paired_t.p_value);
  j["causal_cross_domain_sd"] = json6(r.causal_cross_domain_sd);
  Json domains = Json::array();
  for (const qml::DomainSummary& d : r.domains) {
    domains.push_back({{"lambda", json6(d.lambda)},
                       {"naive", summary_json(d.naive)},
                       {"causal", summary_json(d.causal)},
                       {"control", summary_json(d.control)}});
  }
  j["per_domain"] = std::move(domains);
  Json seeds = Json::array();
  for (const qml::SeedOutcome& s : r.seeds) {
    Json features = Json::array();
    for (qml::Feature f : s.causal_features) features.push_back(qml::feature_name(f));
    seeds.push_back({{"seed", s.seed_index},
                     {"checks", Json::array({check_json(s.check_a), check_json(s.check_c)})},
                     {"causal_features", std::move(features)},
                     {"holdout", {{"naive", json6(s.naive_holdout)},
                                  {"causal", json6(s.causal_holdout)},
                                  {"control", json6(s.control_holdout)}}}});
  }
  j["per_seed"] = std::move(seeds);
  j["calibration"] = {{"mean_gap_points", 11.3}, {"p_upper", 1e-9}};
  return j;
}

std::string qml_csv(const qml::RobustnessConfig& config, const qml::RobustnessReport& r) {
  std::ostringstream os;
  os << "seed,lambda,model,accuracy\n";
  for (const qml::SeedOutcome& s : r.seeds) {
    for (size_t k = 0; k < config.lambdas.size(); ++k) {
      std::string seed = std::to_string(s.seed_index);
      std::string lambda = format6(config.lambdas[k]);
      csv_row(os, {seed, lambda, "naive", format6(s.naive_acc[k])});
      csv_row(os, {seed, lambda, "causal", format6(s.causal_acc[k])});
      csv_row(os, {seed, lambda, "control", format6(s.control_acc[k])});
    }
  }
  return os.str();
}

Json universality_json(uint64_t shots, uint64_t seed, const bell::UniversalityResult& r) {
  Json j;
  j["experiment"] = "universality";
  j["config"] = {{"shots", shots}, {"seed", seed}};
  j["tests"] = Json::array({entry_json(r.chsh), entry_json(r.ch), entry_json(r.hardy),
                            entry_json(r.mermin)});
  return j;
}

std::string universality_csv(const bell::UniversalityResult& r) {
  std::ostringstream os;
  os << "test,classical_bound,exact_cs,sampled_cs\n";
  for (const bell::UniversalityEntry* e : {&r.chsh, &r.ch, &r.hardy, &r.mermin}) {
    csv_row(os, {e->test, format6(e->classical_bound), format6(e->exact_value),
                 format6(e->sampled_value)});
  }
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot rename onto " + path.string());
  }
}

}  // namespace bellconf::cli
