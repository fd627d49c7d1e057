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

#ifndef QGKP_MIN_SUM_H
#define QGKP_MIN_SUM_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qgkp/gf2.h"

namespace qgkp {

enum class Schedule { Flooding, Sequential };
std::string_view schedule_name(Schedule s);
/// Accepts "flooding"/"parallel" and "sequential"/"layered".
Schedule parse_schedule(std::string_view text);

struct DecoderConfig {
    /// Normalization applied to every check-to-variable message.
    double beta = 0.75;
    int max_iters = 100;
    Schedule schedule = Schedule::Sequential;

    void validate() const;
};

/// Bipartite graph of H with edges stored check-major, plus a variable-major
/// index into the same edge ids.
class TannerGraph {
   public:
    explicit TannerGraph(const BinaryMatrix &h);

    size_t num_vars() const {
        return var_start_.size() - 1;
    }
    size_t num_checks() const {
        return check_start_.size() - 1;
    }
    size_t num_edges() const {
        return edge_var_.size();
    }

    /// Edge ids [first, last) incident to check c.
    size_t check_begin(size_t c) const {
        return check_start_[c];
    }
    size_t check_end(size_t c) const {
        return check_start_[c + 1];
    }
    /// Edge ids incident to variable v.
    std::span<const uint32_t> var_edges(size_t v) const {
        return {var_edge_.data() + var_start_[v], var_start_[v + 1] - var_start_[v]};
    }
    uint32_t edge_var(size_t e) const {
        return edge_var_[e];
    }
    uint32_t edge_check(size_t e) const {
        return edge_check_[e];
    }

    /// H·x^T for a 0/1 vector x.
    void syndrome(std::span<const uint8_t> x, std::span<uint8_t> out) const;
    std::vector<uint8_t> syndrome(std::span<const uint8_t> x) const;

   private:
    std::vector<uint32_t> check_start_;
    std::vector<uint32_t> edge_var_;
    std::vector<uint32_t> edge_check_;
    std::vector<uint32_t> var_start_;
    std::vector<uint32_t> var_edge_;
};

struct DecodeResult {
    std::vector<uint8_t> estimate;
    /// True iff H·estimate^T equals the input syndrome.
    bool converged = false;
    int iterations_used = 0;
    /// Channel LLR plus all incoming check messages, per variable.
    std::vector<double> final_llrs;
};

/// Check node update: beta · sgn(s) · Π sgn(m) · min |m|, with sgn(bit 0) = +1,
/// sgn(bit 1) = -1 and sgn(0.0) = +1. Throws on an empty message list.
double cnu(bool syndrome_bit, std::span<const double> extrinsic, double beta);

/// Variable node update: channel LLR plus the sum of extrinsic messages.
double vnu(double channel_llr, std::span<const double> extrinsic);

/// Hard decision: 1 iff value < 0.
inline uint8_t hard_decision(double value) {
    return value < 0 ? 1 : 0;
}

/// Syndrome-based normalized min-sum decoder.
///
/// Owns its message buffers and is reused across calls; one instance per
/// thread. The graph must outlive the decoder.
class MinSumDecoder {
   public:
    MinSumDecoder(const TannerGraph &graph, DecoderConfig cfg);

    const DecoderConfig &config() const {
        return cfg_;
    }

    /// Throws std::invalid_argument on length mismatch or non-finite LLRs.
    const DecodeResult &decode(std::span<const uint8_t> syndrome, std::span<const double> channel_llrs);

   private:
    void flooding_iteration(std::span<const uint8_t> syndrome, std::span<const double> llrs);
    void sequential_iteration(std::span<const uint8_t> syndrome, std::span<const double> llrs);
    double check_message(size_t edge, bool syndrome_bit) const;
    bool matches(std::span<const uint8_t> syndrome);

    const TannerGraph *graph_;
    DecoderConfig cfg_;
    std::vector<double> v2c_;
    std::vector<double> c2v_;
    std::vector<uint8_t> trial_syndrome_;
    DecodeResult result_;
};

/// One-shot convenience wrapper.
DecodeResult decode(const TannerGraph &graph,
                    std::span<const uint8_t> syndrome,
                    std::span<const double> channel_llrs,
                    const DecoderConfig &cfg);

}  // namespace qgkp

#endif
