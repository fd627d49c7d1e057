// Copyright 2026 The qgkp Authors
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

#ifndef QGKP_SWEEP_IO_H
#define QGKP_SWEEP_IO_H

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgkp/sim.h"

namespace qgkp {

inline constexpr const char *kSweepCsvHeader = "sigma,trials,logical_errors,ler,failure_frac,miscorr_frac,mean_iters";

/// One row per sigma under kSweepCsvHeader. Output depends only on the row
/// counts, so equal results give byte-identical files.
void write_sweep_csv(std::ostream &out, const SweepResult &result);
std::string sweep_csv(const SweepResult &result);

/// Parses rows written by write_sweep_csv. Failure and miscorrection counts
/// are recovered from the fractions; total_iterations is rounded.
std::vector<SweepRow> read_sweep_csv(std::istream &in);

nlohmann::json sweep_config_to_json(const SweepConfig &cfg);

/// Reads {code, sigmas, schedule, beta, max_iters, analog, seed, min_errors,
/// max_trials, series_truncation, workers}. `sigmas` may be an array or a
/// "start:stop:step" string. Missing keys keep their defaults.
SweepConfig sweep_config_from_json(const nlohmann::json &doc);

/// Full config echo plus code parameters and per-sigma counts.
nlohmann::json sweep_sidecar(const SweepResult &result);

/// Reconstructs a result from a CSV file and its "<csv>.json" sidecar.
SweepResult load_sweep(const std::string &csv_path);

/// Writes the CSV to `csv_path` and the sidecar to "<csv_path>.json".
void save_sweep(const std::string &csv_path, const SweepResult &result);

}  // namespace qgkp

#endif
