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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgkp/alist.h"
#include "qgkp/codes.h"
#include "qgkp/rng.h"
#include "qgkp/sim.h"
#include "qgkp/sweep_io.h"
#include "qgkp/threshold.h"

namespace qgkp {

namespace {

/// Errors caused by bad input rather than by the run itself.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DecoderFlags {
    bool analog = true;
    std::string schedule = "sequential";
    double beta = 0.75;
    int max_iters = 100;
    uint64_t seed = 0;

    void add_to(CLI::App *cmd) {
        cmd->add_flag("--analog,!--no-analog", analog, "Use GKP analog information (default on)");
        cmd->add_option("--schedule", schedule, "sequential | flooding")->capture_default_str();
        cmd->add_option("--beta", beta, "Min-sum normalization factor")->capture_default_str();
        cmd->add_option("--max-iters", max_iters, "Maximum decoder iterations")->capture_default_str();
        cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
    }

    DecoderConfig decoder() const {
        DecoderConfig cfg;
        try {
            cfg.schedule = parse_schedule(schedule);
            cfg.beta = beta;
            cfg.max_iters = max_iters;
            cfg.validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        return cfg;
    }
};

CssCode load_code(const std::string &name) {
    try {
        return builtin_code(name);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

std::vector<double> load_grid(const std::string &text) {
    try {
        return parse_sigma_grid(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

void print_config(std::ostream &err, const std::string &command, const nlohmann::json &cfg) {
    err << "# " << command << " config: " << cfg.dump() << '\n';
}

std::string fmt(const char *pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

std::string girth_str(size_t g) {
    return g == kAcyclic ? "inf" : std::to_string(g);
}

int cmd_codes(std::ostream &out) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-11s %6s %5s %7s %4s %6s %6s %7s\n", "name", "n", "k", "rate", "L", "girth",
                  "d<=", "family");
    out << line;
    for (const std::string &name : builtin_code_names()) {
        CssCode code = builtin_code(name);
        std::snprintf(line, sizeof(line), "%-11s %6zu %5zu %7.3f %4zu %6s %6zu %7s\n", name.c_str(), code.n, code.k,
                      code.rate(), code.lift_size(), girth_str(code.girth()).c_str(), code.distance_bound,
                      std::string(family_name(code.family)).c_str());
        out << line;
    }
    return kExitOk;
}

int cmd_export(const std::string &code_name, const std::string &out_dir, std::ostream &out, std::ostream &err) {
    CssCode code = load_code(code_name);
    print_config(err, "export", {{"code", code_name}, {"out_dir", out_dir}});
    std::filesystem::create_directories(out_dir);
    auto write = [&](const std::string &file, auto &&body) {
        std::filesystem::path path = std::filesystem::path(out_dir) / file;
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + path.string());
        }
        body(f);
        out << "wrote " << path.string() << '\n';
    };
    write(code_name + ".hx.alist", [&](std::ostream &f) { write_alist(f, code.hx); });
    write(code_name + ".hz.alist", [&](std::ostream &f) { write_alist(f, code.hz); });
    if (code.base) {
        write(code_name + ".base.txt", [&](std::ostream &f) { write_base_matrix(f, *code.base); });
    }
    return kExitOk;
}

std::string support_str(std::span<const uint8_t> bits) {
    std::string s;
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i]) {
            s += (s.empty() ? "" : ",") + std::to_string(i);
        }
    }
    return s.empty() ? "-" : s;
}

int cmd_decode(const std::string &code_name,
               double sigma,
               uint64_t trial,
               const DecoderFlags &flags,
               std::ostream &out,
               std::ostream &err) {
    CssCode code = load_code(code_name);
    DecoderConfig dcfg = flags.decoder();
    ChannelConfig channel{sigma, flags.seed, kDefaultSeriesTruncation};
    try {
        channel.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    print_config(err, "decode",
                 {{"code", code_name},
                  {"sigma", sigma},
                  {"analog", flags.analog},
                  {"schedule", std::string(schedule_name(dcfg.schedule))},
                  {"beta", dcfg.beta},
                  {"max_iters", dcfg.max_iters},
                  {"seed", flags.seed},
                  {"trial", trial}});

    TrialRunner runner(code, channel, dcfg, flags.analog);
    auto rng = stream_rng(flags.seed, 0, trial);
    TrialOutcome t = runner.run(rng);

    auto report = [&](const char *label, std::span<const uint8_t> truth, const DecodeResult &r, OutcomeClass c) {
        out << label << " true error support:      " << support_str(truth) << '\n';
        out << label << " estimated error support: " << support_str(r.estimate) << '\n';
        out << label << " converged=" << (r.converged ? "yes" : "no") << " iterations=" << r.iterations_used
            << " outcome=" << outcome_name(c) << '\n';
    };
    report("X", runner.last_error_x(), runner.last_decode_x(), t.x_class);
    report("Z", runner.last_error_z(), runner.last_decode_z(), t.z_class);
    out << "logical_error=" << (t.logical_error() ? "yes" : "no") << '\n';
    return kExitOk;
}

SweepConfig build_sweep_config(const std::string &config_path,
                               const std::string &code_name,
                               const std::string &grid,
                               const DecoderFlags &flags,
                               CLI::App *cmd,
                               uint64_t min_errors,
                               uint64_t max_trials,
                               unsigned workers) {
    SweepConfig cfg;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            throw UsageError("cannot open config " + config_path);
        }
        try {
            cfg = sweep_config_from_json(nlohmann::json::parse(f));
        } catch (const std::exception &e) {
            throw UsageError(e.what());
        }
    }
    // Explicit flags override the file.
    auto given = [&](const char *name) { return cmd->count(name) > 0; };
    if (!code_name.empty()) {
        cfg.code_name = code_name;
    }
    if (!grid.empty()) {
        cfg.sigmas = load_grid(grid);
    }
    if (config_path.empty() || given("--analog") || given("--no-analog")) {
        cfg.use_analog = flags.analog;
    }
    if (config_path.empty() || given("--schedule") || given("--beta") || given("--max-iters")) {
        DecoderConfig d = flags.decoder();
        if (config_path.empty() || given("--schedule")) {
            cfg.decoder.schedule = d.schedule;
        }
        if (config_path.empty() || given("--beta")) {
            cfg.decoder.beta = d.beta;
        }
        if (config_path.empty() || given("--max-iters")) {
            cfg.decoder.max_iters = d.max_iters;
        }
    }
    if (config_path.empty() || given("--seed")) {
        cfg.seed = flags.seed;
    }
    if (config_path.empty() || given("--min-errors")) {
        cfg.stop.min_logical_errors = min_errors;
    }
    if (config_path.empty() || given("--max-trials")) {
        cfg.stop.max_trials = max_trials;
    }
    if (config_path.empty() || given("--workers")) {
        cfg.workers = workers;
    }
    if (cfg.code_name.empty()) {
        throw UsageError("sweep: --code is required");
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

void print_threshold(std::ostream &out, const ThresholdEstimate &est) {
    out << "codes: " << est.smaller_code << " vs " << est.larger_code << '\n';
    if (!est.found) {
        out << "no crossing: " << est.message << '\n';
        return;
    }
    out << "threshold_sigma=" << fmt("%.4f", est.sigma) << '\n';
    out << "bracket=[" << fmt("%.4f", est.bracket_lo) << ", " << fmt("%.4f", est.bracket_hi) << "]\n";
    out << "resolved=" << (est.resolved ? "yes" : "no") << " (" << est.message << ")\n";
}

int cmd_bound(double rate, std::ostream &out, std::ostream &err) {
    print_config(err, "bound", {{"rate", rate}});
    double sigma;
    try {
        sigma = css_hamming_sigma(rate);
    } catch (const std::domain_error &e) {
        throw UsageError(e.what());
    }
    out << "rate=" << fmt("%.6g", rate) << '\n';
    out << "sigma=" << fmt("%.6f", sigma) << '\n';
    out << "p=" << fmt("%.6f", p_of_sigma(sigma)) << '\n';
    return kExitOk;
}

std::vector<std::string> split_names(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Monte Carlo simulation of GKP-concatenated lifted-product QLDPC codes"};
    app.require_subcommand(1);

    auto *codes = app.add_subcommand("codes", "List builtin codes and their parameters");

    std::string export_code, export_dir = ".";
    auto *exp = app.add_subcommand("export", "Write Hx/Hz as alist and the base matrix as a grid");
    exp->add_option("--code", export_code, "Builtin code name")->required();
    exp->add_option("--out-dir", export_dir, "Output directory")->capture_default_str();

    std::string decode_code;
    double decode_sigma = 0.5;
    uint64_t decode_trial = 0;
    DecoderFlags decode_flags;
    auto *dec = app.add_subcommand("decode", "Sample and decode a single trial");
    dec->add_option("--code", decode_code, "Builtin code name")->required();
    dec->add_option("--sigma", decode_sigma, "Displacement standard deviation")->capture_default_str();
    dec->add_option("--trial", decode_trial, "Trial index within the seed stream")->capture_default_str();
    decode_flags.add_to(dec);

    std::string sweep_code, sweep_grid, sweep_out, sweep_config;
    uint64_t sweep_min_errors = 100, sweep_max_trials = 1'000'000;
    unsigned sweep_workers = 0;
    DecoderFlags sweep_flags;
    auto *sweep = app.add_subcommand("sweep", "Estimate logical error rates over a sigma grid");
    sweep->add_option("--code", sweep_code, "Builtin code name");
    sweep->add_option("--sigmas", sweep_grid, "start:stop:step or comma list");
    sweep->add_option("--config", sweep_config, "JSON sweep configuration");
    sweep->add_option("--min-errors", sweep_min_errors, "Stop after this many logical errors")->capture_default_str();
    sweep->add_option("--max-trials", sweep_max_trials, "Trial cap per sigma")->capture_default_str();
    sweep->add_option("--workers", sweep_workers, "Worker threads (0 = all cores)")->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV path; a <path>.json sidecar is written alongside");
    sweep_flags.add_to(sweep);

    std::vector<std::string> th_results;
    std::string th_codes, th_grid;
    uint64_t th_min_errors = 100, th_max_trials = 1'000'000;
    unsigned th_workers = 0;
    DecoderFlags th_flags;
    auto *th = app.add_subcommand("threshold", "Estimate the crossing of two code curves");
    th->add_option("--results", th_results, "Sweep CSV files (with sidecars)");
    th->add_option("--codes", th_codes, "Comma-separated builtin codes to sweep");
    th->add_option("--sigmas", th_grid, "start:stop:step or comma list");
    th->add_option("--min-errors", th_min_errors, "Stop after this many logical errors")->capture_default_str();
    th->add_option("--max-trials", th_max_trials, "Trial cap per sigma")->capture_default_str();
    th->add_option("--workers", th_workers, "Worker threads (0 = all cores)")->capture_default_str();
    th_flags.add_to(th);

    double bound_rate = 0.04;
    auto *bound = app.add_subcommand("bound", "Sigma and p where the CSS Hamming bound equals a rate");
    bound->add_option("--rate", bound_rate, "Target code rate in (0, 1)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*codes) {
            return cmd_codes(out);
        }
        if (*exp) {
            return cmd_export(export_code, export_dir, out, err);
        }
        if (*dec) {
            return cmd_decode(decode_code, decode_sigma, decode_trial, decode_flags, out, err);
        }
        if (*sweep) {
            SweepConfig cfg = build_sweep_config(sweep_config, sweep_code, sweep_grid, sweep_flags, sweep,
                                                 sweep_min_errors, sweep_max_trials, sweep_workers);
            CssCode code = load_code(cfg.code_name);
            print_config(err, "sweep", sweep_config_to_json(cfg));
            SweepResult result = run_sweep(code, cfg);
            if (sweep_out.empty()) {
                write_sweep_csv(out, result);
            } else {
                save_sweep(sweep_out, result);
                out << "wrote " << sweep_out << " and " << sweep_out << ".json\n";
            }
            return kExitOk;
        }
        if (*th) {
            std::vector<SweepResult> family;
            if (!th_results.empty()) {
                print_config(err, "threshold", {{"results", th_results}});
                for (const auto &path : th_results) {
                    family.push_back(load_sweep(path));
                }
            } else {
                auto names = split_names(th_codes);
                if (names.size() < 2 || th_grid.empty()) {
                    throw UsageError("threshold: give --results files or --codes A,B with --sigmas");
                }
                SweepConfig base = build_sweep_config("", names[0], th_grid, th_flags, th, th_min_errors,
                                                      th_max_trials, th_workers);
                nlohmann::json echo = sweep_config_to_json(base);
                echo["code"] = names;
                print_config(err, "threshold", echo);
                for (const auto &name : names) {
                    CssCode code = load_code(name);
                    SweepConfig cfg = base;
                    cfg.code_name = name;
                    family.push_back(run_sweep(code, cfg));
                    write_sweep_csv(out << "# " << name << '\n', family.back());
                }
            }
            try {
                print_threshold(out, estimate_threshold(family));
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            return kExitOk;
        }
        if (*bound) {
            return cmd_bound(bound_rate, out, err);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace qgkp
