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

#ifndef QGKP_SIM_H
#define QGKP_SIM_H

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgkp/codes.h"
#include "qgkp/gkp.h"
#include "qgkp/min_sum.h"

namespace qgkp {

enum class OutcomeClass { DegenerateSuccess, Miscorrection, Failure };
std::string_view outcome_name(OutcomeClass c);

struct TrialOutcome {
    OutcomeClass x_class = OutcomeClass::DegenerateSuccess;
    OutcomeClass z_class = OutcomeClass::DegenerateSuccess;
    int iterations_x = 0;
    int iterations_z = 0;

    bool logical_error() const {
        return x_class != OutcomeClass::DegenerateSuccess || z_class != OutcomeClass::DegenerateSuccess;
    }
    /// Failure dominates miscorrection, which dominates success.
    OutcomeClass word_class() const;
};

/// Classifies one decoding: non-convergence is a failure; otherwise the
/// residual estimate ⊕ truth is a stabilizer (success) or not (miscorrection).
OutcomeClass classify(bool converged,
                      std::span<const uint8_t> estimate,
                      std::span<const uint8_t> truth,
                      const RowReduced &stabilizers);

/// Runs trials on one code. X errors are decoded on the Hz graph and checked
/// against the X stabilizers (Hx); Z errors the other way round.
///
/// Holds decoder state, so each worker thread needs its own instance.
class TrialRunner {
   public:
    TrialRunner(const CssCode &code, ChannelConfig channel, DecoderConfig decoder, bool use_analog);
    TrialRunner(const TrialRunner &) = delete;
    TrialRunner &operator=(const TrialRunner &) = delete;

    /// Samples n qubits, builds syndromes and LLRs, decodes both error types.
    TrialOutcome run(std::mt19937_64 &rng);

    /// Decodes given true errors with given channel LLRs, bypassing the sampler.
    TrialOutcome run_forced(std::span<const uint8_t> error_x,
                            std::span<const uint8_t> error_z,
                            std::span<const double> llr_x,
                            std::span<const double> llr_z);

    const std::vector<GkpQubitOutcome> &last_qubits() const {
        return qubits_;
    }
    const std::vector<double> &last_llr_x() const {
        return llr_x_;
    }
    const std::vector<double> &last_llr_z() const {
        return llr_z_;
    }
    const std::vector<uint8_t> &last_error_x() const {
        return error_x_;
    }
    const std::vector<uint8_t> &last_error_z() const {
        return error_z_;
    }
    const DecodeResult &last_decode_x() const {
        return last_x_;
    }
    const DecodeResult &last_decode_z() const {
        return last_z_;
    }

   private:
    const CssCode *code_;
    ChannelConfig channel_;
    bool use_analog_;
    double uniform_llr_;
    TannerGraph graph_x_errors_;
    TannerGraph graph_z_errors_;
    MinSumDecoder decoder_x_;
    MinSumDecoder decoder_z_;
    std::vector<GkpQubitOutcome> qubits_;
    std::vector<uint8_t> error_x_, error_z_;
    std::vector<uint8_t> syndrome_z_, syndrome_x_;
    std::vector<double> llr_x_, llr_z_;
    DecodeResult last_x_, last_z_;
};

TrialOutcome run_trial(const CssCode &code,
                       const ChannelConfig &channel,
                       const DecoderConfig &decoder,
                       bool use_analog,
                       std::mt19937_64 &rng);

struct StopRule {
    /// Stop once this many logical errors are seen; 0 disables the rule.
    uint64_t min_logical_errors = 100;
    /// Hard cap on trials per sigma; must be positive.
    uint64_t max_trials = 1'000'000;
};

struct SweepConfig {
    std::string code_name;
    std::vector<double> sigmas;
    DecoderConfig decoder;
    bool use_analog = true;
    uint64_t seed = 0;
    StopRule stop;
    int series_truncation = kDefaultSeriesTruncation;
    /// Worker threads; 0 means hardware concurrency. Never affects results.
    unsigned workers = 0;

    void validate() const;
};

struct SweepRow {
    double sigma = 0;
    uint64_t trials = 0;
    uint64_t logical_errors = 0;
    uint64_t failures = 0;
    uint64_t miscorrections = 0;
    /// Sum over trials of iterations_x + iterations_z.
    uint64_t total_iterations = 0;

    double logical_error_rate() const;
    double failure_fraction() const;
    double miscorrection_fraction() const;
    double mean_iterations() const;

    bool operator==(const SweepRow &) const = default;
};

struct SweepResult {
    SweepConfig config;
    size_t code_n = 0;
    size_t code_k = 0;
    std::vector<SweepRow> rows;
};

/// Monte Carlo over a sigma grid. Trial t at grid index i draws from
/// stream_rng(seed, i, t), and the stop rule is applied to trials in index
/// order, so results are identical for any worker count.
SweepResult run_sweep(const CssCode &code, const SweepConfig &cfg);

/// Parses "start:stop:step" (inclusive within half a step) or a comma list.
std::vector<double> parse_sigma_grid(std::string_view text);

/// 1 - 2·h2(p). Throws std::domain_error for p outside [0, 1/2].
double css_hamming_rate(double p);

/// Sigma at which css_hamming_rate(p_of_sigma(sigma)) == rate, by bisection on
/// (0.01, 1.0). Throws std::domain_error when no root lies in the bracket.
double css_hamming_sigma(double rate);

}  // namespace qgkp

#endif
