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

#include "qgkp/sweep_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgkp {

namespace {

std::string format_row(const SweepRow &r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.6g,%llu,%llu,%.9e,%.9e,%.9e,%.6f", r.sigma,
                  static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(r.logical_errors),
                  r.logical_error_rate(), r.failure_fraction(), r.miscorrection_fraction(), r.mean_iterations());
    return buf;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

}  // namespace

void write_sweep_csv(std::ostream &out, const SweepResult &result) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow &r : result.rows) {
        out << format_row(r) << '\n';
    }
}

std::string sweep_csv(const SweepResult &result) {
    std::ostringstream ss;
    write_sweep_csv(ss, result);
    return ss.str();
}

std::vector<SweepRow> read_sweep_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader) {
        throw std::invalid_argument("sweep csv: missing or unexpected header");
    }
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 7) {
            throw std::invalid_argument("sweep csv: expected 7 fields in '" + line + "'");
        }
        try {
            SweepRow r;
            r.sigma = std::stod(f[0]);
            r.trials = std::stoull(f[1]);
            r.logical_errors = std::stoull(f[2]);
            double t = static_cast<double>(r.trials);
            r.failures = static_cast<uint64_t>(std::llround(std::stod(f[4]) * t));
            r.miscorrections = static_cast<uint64_t>(std::llround(std::stod(f[5]) * t));
            r.total_iterations = static_cast<uint64_t>(std::llround(std::stod(f[6]) * 2 * t));
            rows.push_back(r);
        } catch (const std::logic_error &) {
            throw std::invalid_argument("sweep csv: malformed row '" + line + "'");
        }
    }
    return rows;
}

nlohmann::json sweep_config_to_json(const SweepConfig &cfg) {
    return {
        {"code", cfg.code_name},
        {"sigmas", cfg.sigmas},
        {"schedule", std::string(schedule_name(cfg.decoder.schedule))},
        {"beta", cfg.decoder.beta},
        {"max_iters", cfg.decoder.max_iters},
        {"analog", cfg.use_analog},
        {"seed", cfg.seed},
        {"min_errors", cfg.stop.min_logical_errors},
        {"max_trials", cfg.stop.max_trials},
        {"series_truncation", cfg.series_truncation},
        {"workers", cfg.workers},
    };
}

SweepConfig sweep_config_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("sweep config: expected a JSON object");
    }
    static const char *known[] = {"code",       "sigmas",     "schedule",          "beta",    "max_iters", "analog",
                                  "seed",       "min_errors", "max_trials",        "workers", "series_truncation"};
    for (const auto &item : doc.items()) {
        bool ok = false;
        for (const char *k : known) {
            ok |= item.key() == k;
        }
        if (!ok) {
            throw std::invalid_argument("sweep config: unknown key '" + item.key() + "'");
        }
    }
    SweepConfig cfg;
    try {
        if (doc.contains("code")) {
            cfg.code_name = doc.at("code").get<std::string>();
        }
        if (doc.contains("sigmas")) {
            const auto &s = doc.at("sigmas");
            cfg.sigmas = s.is_string() ? parse_sigma_grid(s.get<std::string>()) : s.get<std::vector<double>>();
        }
        if (doc.contains("schedule")) {
            cfg.decoder.schedule = parse_schedule(doc.at("schedule").get<std::string>());
        }
        cfg.decoder.beta = doc.value("beta", cfg.decoder.beta);
        cfg.decoder.max_iters = doc.value("max_iters", cfg.decoder.max_iters);
        cfg.use_analog = doc.value("analog", cfg.use_analog);
        cfg.seed = doc.value("seed", cfg.seed);
        cfg.stop.min_logical_errors = doc.value("min_errors", cfg.stop.min_logical_errors);
        cfg.stop.max_trials = doc.value("max_trials", cfg.stop.max_trials);
        cfg.series_truncation = doc.value("series_truncation", cfg.series_truncation);
        cfg.workers = doc.value("workers", cfg.workers);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("sweep config: ") + e.what());
    }
    return cfg;
}

nlohmann::json sweep_sidecar(const SweepResult &result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow &r : result.rows) {
        rows.push_back({
            {"sigma", r.sigma},
            {"trials", r.trials},
            {"logical_errors", r.logical_errors},
            {"failures", r.failures},
            {"miscorrections", r.miscorrections},
            {"total_iterations", r.total_iterations},
        });
    }
    return {
        {"config", sweep_config_to_json(result.config)},
        {"code_n", result.code_n},
        {"code_k", result.code_k},
        {"rows", rows},
    };
}

SweepResult load_sweep(const std::string &csv_path) {
    std::ifstream csv(csv_path);
    if (!csv) {
        throw std::runtime_error("cannot open " + csv_path);
    }
    SweepResult result;
    result.rows = read_sweep_csv(csv);
    std::ifstream side(csv_path + ".json");
    if (side) {
        nlohmann::json doc = nlohmann::json::parse(side);
        result.config = sweep_config_from_json(doc.at("config"));
        result.code_n = doc.at("code_n").get<size_t>();
        result.code_k = doc.at("code_k").get<size_t>();
        const auto &rows = doc.at("rows");
        if (rows.size() == result.rows.size()) {
            for (size_t i = 0; i < rows.size(); i++) {
                result.rows[i].failures = rows[i].at("failures").get<uint64_t>();
                result.rows[i].miscorrections = rows[i].at("miscorrections").get<uint64_t>();
                result.rows[i].total_iterations = rows[i].at("total_iterations").get<uint64_t>();
            }
        }
    }
    return result;
}

void save_sweep(const std::string &csv_path, const SweepResult &result) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
        throw std::runtime_error("cannot write " + csv_path);
    }
    write_sweep_csv(csv, result);
    std::ofstream side(csv_path + ".json", std::ios::binary);
    if (!side) {
        throw std::runtime_error("cannot write " + csv_path + ".json");
    }
    side << sweep_sidecar(result).dump(2) << '\n';
}

}  // namespace qgkp
