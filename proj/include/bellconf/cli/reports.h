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

#pragma once

#include <filesystem>
#include <string>

#include "bellconf/bell/hierarchy.h"
#include "bellconf/bell/sweep.h"
#include "bellconf/bell/universality.h"
#include "bellconf/intervention/intervention.h"
#include "bellconf/qml/qml.h"
#include "json.hpp"

namespace bellconf::cli {

using Json = nlohmann::ordered_json;

/// Round to 6 significant digits. Non-finite values pass through.
double round6(double x);

/// "%.6g" rendering used for every CSV cell.
std::string format6(double x);

/// A float as a JSON value: rounded, or null when non-finite.
Json json6(double x);

Json hierarchy_json(const bell::HierarchyConfig& config, const bell::HierarchyResult& r);
std::string hierarchy_csv(const bell::HierarchyResult& r);

Json sweep_json(const bell::SweepConfig& config, const bell::SweepResult& r);
std::string sweep_csv(const bell::SweepResult& r);

Json intervene_json(const intervention::ArmConfig& config,
                    const intervention::InterventionReport& r);
std::string intervene_csv(const intervention::InterventionReport& r);

Json validate_json(const intervention::ArmConfig& config,
                   const intervention::ConfounderValidationReport& r);
std::string validate_csv(const intervention::ConfounderValidationReport& r);

Json qml_json(const qml::RobustnessConfig& config, const qml::RobustnessReport& r);
std::string qml_csv(const qml::RobustnessConfig& config, const qml::RobustnessReport& r);

Json universality_json(uint64_t shots, uint64_t seed, const bell::UniversalityResult& r);
std::string universality_csv(const bell::UniversalityResult& r);

/// Writes to a sibling temp file, then renames over `path`.
/// Throws std::runtime_error when the directory is not writable.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace bellconf::cli
