// Copyright 2026 The eprverify Authors
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

#pragma once

#include <string>
#include <vector>

#include "eprverify/config.hpp"
#include "eprverify/results.hpp"

namespace eprverify {

/// The experiment kinds the runner understands, one per CLI subcommand.
const std::vector<std::string>& experiment_kinds();

/// Validate the config for its experiment kind and execute it: n_trials
/// independent runs with per-trial derived seeds, written in trial order.
/// Identical config (including seed) produces a byte-identical record.
/// Throws ConfigError for schema problems; scientific outcomes (a rejected
/// run, an infeasible chain) are data in the record, not errors.
ResultsRecord run_experiment(const IniConfig& config);

}  // namespace eprverify
