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

#include "qgkp/threshold.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgkp {

namespace {

struct Gap {
    double sigma;
    double value;  // ln(ler_small) - ln(ler_large)
    double error;  // one standard error of `value`
};

double log_rate(const SweepRow &row, double &variance) {
    double n = static_cast<double>(row.trials);
    // Zero-error points use half an event so the logarithm stays finite.
    double errors = std::max(static_cast<double>(row.logical_errors), 0.5);
    double p = errors / n;
    variance = (1 - std::min(p, 1.0 - 1e-12)) / errors;
    return std::log(p);
}

bool significant(const Gap &g) {
    return std::abs(g.value) > 2 * g.error;
}

}  // namespace

ThresholdEstimate estimate_threshold(const std::vector<SweepResult> &family) {
    if (family.size() < 2) {
        throw std::invalid_argument("estimate_threshold: need at least two codes");
    }
    std::vector<const SweepResult *> order;
    for (const auto &r : family) {
        order.push_back(&r);
    }
    std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return a->code_n < b->code_n; });
    const SweepResult &small = *order[0];
    const SweepResult &large = *order[1];

    ThresholdEstimate est;
    est.smaller_code = small.config.code_name;
    est.larger_code = large.config.code_name;

    std::vector<Gap> gaps;
    for (const SweepRow &a : small.rows) {
        for (const SweepRow &b : large.rows) {
            if (std::abs(a.sigma - b.sigma) < 1e-9 && a.trials > 0 && b.trials > 0) {
                double va, vb;
                double la = log_rate(a, va);
                double lb = log_rate(b, vb);
                gaps.push_back({a.sigma, la - lb, std::sqrt(va + vb)});
            }
        }
    }
    std::sort(gaps.begin(), gaps.end(), [](const Gap &x, const Gap &y) { return x.sigma < y.sigma; });
    if (gaps.size() < 2) {
        throw std::invalid_argument("estimate_threshold: need at least two shared sigma points");
    }

    std::vector<size_t> crossings;
    for (size_t i = 0; i + 1 < gaps.size(); i++) {
        bool a_pos = gaps[i].value > 0;
        bool b_pos = gaps[i + 1].value > 0;
        if (a_pos != b_pos) {
            crossings.push_back(i);
        }
    }
    if (crossings.empty()) {
        est.message = "no crossing in [" + std::to_string(gaps.front().sigma) + ", " +
                      std::to_string(gaps.back().sigma) + "]";
        return est;
    }

    // With several sign changes, keep the steepest one as the point estimate.
    size_t pick = crossings[0];
    for (size_t i : crossings) {
        if (std::abs(gaps[i].value - gaps[i + 1].value) > std::abs(gaps[pick].value - gaps[pick + 1].value)) {
            pick = i;
        }
    }
    const Gap &g0 = gaps[pick];
    const Gap &g1 = gaps[pick + 1];
    est.found = true;
    est.sigma = g0.sigma + (g1.sigma - g0.sigma) * g0.value / (g0.value - g1.value);

    size_t lo = crossings.front();
    size_t hi = crossings.back() + 1;
    while (lo > 0 && !significant(gaps[lo])) {
        lo--;
    }
    while (hi + 1 < gaps.size() && !significant(gaps[hi])) {
        hi++;
    }
    est.bracket_lo = gaps[lo].sigma;
    est.bracket_hi = gaps[hi].sigma;
    est.resolved = crossings.size() == 1 && lo == pick && hi == pick + 1 && significant(gaps[lo]) &&
                   significant(gaps[hi]);
    est.message = est.resolved ? "crossing resolved" : "crossing within bracket only";
    return est;
}

}  // namespace qgkp
