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

#include "qgkp/min_sum.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qgkp/gkp.h"

namespace qgkp {

namespace {

inline double sign_of(double m) {
    return m < 0 ? -1.0 : 1.0;
}

inline double clamp_llr(double m) {
    return std::clamp(m, -kLlrCap, kLlrCap);
}

}  // namespace

std::string_view schedule_name(Schedule s) {
    return s == Schedule::Flooding ? "flooding" : "sequential";
}

Schedule parse_schedule(std::string_view text) {
    if (text == "flooding" || text == "parallel") {
        return Schedule::Flooding;
    }
    if (text == "sequential" || text == "layered") {
        return Schedule::Sequential;
    }
    throw std::invalid_argument("unknown schedule: " + std::string(text));
}

void DecoderConfig::validate() const {
    if (!(beta > 0 && beta <= 1)) {
        throw std::invalid_argument("beta must lie in (0, 1]");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("max_iters must be at least 1");
    }
}

TannerGraph::TannerGraph(const BinaryMatrix &h) {
    size_t m = h.rows();
    size_t n = h.cols();
    check_start_.reserve(m + 1);
    check_start_.push_back(0);
    std::vector<uint32_t> var_degree(n, 0);
    for (size_t c = 0; c < m; c++) {
        for (size_t v : h.row_support(c)) {
            edge_var_.push_back(static_cast<uint32_t>(v));
            edge_check_.push_back(static_cast<uint32_t>(c));
            var_degree[v]++;
        }
        check_start_.push_back(static_cast<uint32_t>(edge_var_.size()));
    }
    var_start_.assign(n + 1, 0);
    for (size_t v = 0; v < n; v++) {
        var_start_[v + 1] = var_start_[v] + var_degree[v];
    }
    var_edge_.resize(edge_var_.size());
    std::vector<uint32_t> fill(var_start_.begin(), var_start_.end() - 1);
    for (size_t e = 0; e < edge_var_.size(); e++) {
        var_edge_[fill[edge_var_[e]]++] = static_cast<uint32_t>(e);
    }
}

void TannerGraph::syndrome(std::span<const uint8_t> x, std::span<uint8_t> out) const {
    if (x.size() != num_vars() || out.size() != num_checks()) {
        throw std::invalid_argument("TannerGraph::syndrome: dimension mismatch");
    }
    for (size_t c = 0; c < num_checks(); c++) {
        uint8_t parity = 0;
        for (size_t e = check_start_[c]; e < check_start_[c + 1]; e++) {
            parity ^= x[edge_var_[e]];
        }
        out[c] = parity & 1;
    }
}

std::vector<uint8_t> TannerGraph::syndrome(std::span<const uint8_t> x) const {
    std::vector<uint8_t> out(num_checks());
    syndrome(x, out);
    return out;
}

double cnu(bool syndrome_bit, std::span<const double> extrinsic, double beta) {
    if (extrinsic.empty()) {
        throw std::invalid_argument("cnu: at least one extrinsic message is required");
    }
    double sign = syndrome_bit ? -1.0 : 1.0;
    double magnitude = std::abs(extrinsic[0]);
    for (double m : extrinsic) {
        sign *= sign_of(m);
        magnitude = std::min(magnitude, std::abs(m));
    }
    return beta * sign * magnitude;
}

double vnu(double channel_llr, std::span<const double> extrinsic) {
    double total = channel_llr;
    for (double m : extrinsic) {
        total += m;
    }
    return total;
}

MinSumDecoder::MinSumDecoder(const TannerGraph &graph, DecoderConfig cfg) : graph_(&graph), cfg_(cfg) {
    cfg_.validate();
    v2c_.resize(graph.num_edges());
    c2v_.resize(graph.num_edges());
    trial_syndrome_.resize(graph.num_checks());
    result_.estimate.resize(graph.num_vars());
    result_.final_llrs.resize(graph.num_vars());
}

double MinSumDecoder::check_message(size_t edge, bool syndrome_bit) const {
    size_t c = graph_->edge_check(edge);
    double sign = syndrome_bit ? -1.0 : 1.0;
    double magnitude = kLlrCap;
    for (size_t e = graph_->check_begin(c); e < graph_->check_end(c); e++) {
        if (e == edge) {
            continue;
        }
        sign *= sign_of(v2c_[e]);
        magnitude = std::min(magnitude, std::abs(v2c_[e]));
    }
    return cfg_.beta * sign * magnitude;
}

void MinSumDecoder::flooding_iteration(std::span<const uint8_t> syndrome, std::span<const double> llrs) {
    const TannerGraph &g = *graph_;
    for (size_t c = 0; c < g.num_checks(); c++) {
        size_t begin = g.check_begin(c);
        size_t end = g.check_end(c);
        double sign = syndrome[c] ? -1.0 : 1.0;
        double min1 = kLlrCap;
        double min2 = kLlrCap;
        size_t argmin = end;
        for (size_t e = begin; e < end; e++) {
            double m = v2c_[e];
            sign *= sign_of(m);
            double a = std::abs(m);
            if (a < min1) {
                min2 = min1;
                min1 = a;
                argmin = e;
            } else if (a < min2) {
                min2 = a;
            }
        }
        for (size_t e = begin; e < end; e++) {
            double magnitude = e == argmin ? min2 : min1;
            c2v_[e] = cfg_.beta * sign * sign_of(v2c_[e]) * magnitude;
        }
    }
    for (size_t v = 0; v < g.num_vars(); v++) {
        double total = llrs[v];
        for (uint32_t e : g.var_edges(v)) {
            total += c2v_[e];
        }
        for (uint32_t e : g.var_edges(v)) {
            v2c_[e] = clamp_llr(total - c2v_[e]);
        }
        result_.final_llrs[v] = total;
        result_.estimate[v] = hard_decision(total);
    }
}

void MinSumDecoder::sequential_iteration(std::span<const uint8_t> syndrome, std::span<const double> llrs) {
    const TannerGraph &g = *graph_;
    for (size_t v = 0; v < g.num_vars(); v++) {
        auto edges = g.var_edges(v);
        double total = llrs[v];
        for (uint32_t e : edges) {
            c2v_[e] = check_message(e, syndrome[g.edge_check(e)] != 0);
            total += c2v_[e];
        }
        for (uint32_t e : edges) {
            v2c_[e] = clamp_llr(total - c2v_[e]);
        }
        result_.final_llrs[v] = total;
        result_.estimate[v] = hard_decision(total);
    }
}

bool MinSumDecoder::matches(std::span<const uint8_t> syndrome) {
    graph_->syndrome(result_.estimate, trial_syndrome_);
    return std::equal(trial_syndrome_.begin(), trial_syndrome_.end(), syndrome.begin());
}

const DecodeResult &MinSumDecoder::decode(std::span<const uint8_t> syndrome, std::span<const double> channel_llrs) {
    const TannerGraph &g = *graph_;
    if (syndrome.size() != g.num_checks()) {
        throw std::invalid_argument("decode: syndrome length " + std::to_string(syndrome.size()) + " != " +
                                    std::to_string(g.num_checks()));
    }
    if (channel_llrs.size() != g.num_vars()) {
        throw std::invalid_argument("decode: LLR length " + std::to_string(channel_llrs.size()) + " != " +
                                    std::to_string(g.num_vars()));
    }
    for (double l : channel_llrs) {
        if (!std::isfinite(l)) {
            throw std::invalid_argument("decode: channel LLRs must be finite");
        }
    }

    std::fill(c2v_.begin(), c2v_.end(), 0.0);
    for (size_t e = 0; e < g.num_edges(); e++) {
        v2c_[e] = clamp_llr(channel_llrs[g.edge_var(e)]);
    }
    result_.converged = false;
    result_.iterations_used = 0;

    for (int iter = 1; iter <= cfg_.max_iters; iter++) {
        if (cfg_.schedule == Schedule::Flooding) {
            flooding_iteration(syndrome, channel_llrs);
        } else {
            sequential_iteration(syndrome, channel_llrs);
        }
        result_.iterations_used = iter;
        if (matches(syndrome)) {
            result_.converged = true;
            break;
        }
    }
    return result_;
}

DecodeResult decode(const TannerGraph &graph,
                    std::span<const uint8_t> syndrome,
                    std::span<const double> channel_llrs,
                    const DecoderConfig &cfg) {
    MinSumDecoder decoder(graph, cfg);
    return decoder.decode(syndrome, channel_llrs);
}

}  // namespace qgkp
