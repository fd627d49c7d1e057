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

#include "qgkp/gkp.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qgkp/rng.h"

namespace qgkp {

namespace {

constexpr double kHalfSqrtPi = kSqrtPi / 2;

void require_sigma(double sigma) {
    if (!(sigma > 0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be positive and finite, got " + std::to_string(sigma));
    }
}

/// Log-sum-exp of the Gaussian peak weights exp(-(s - m√π)² / 2σ²) over
/// |m| <= 2·truncation + 1, split by the parity of m.
struct PeakSums {
    double log_even;
    double log_odd;
};

PeakSums peak_sums(double s, double sigma, int truncation) {
    long long bound = 2LL * truncation + 1;
    double inv = 1.0 / (2.0 * sigma * sigma);
    auto exponent = [&](long long m) {
        double d = s - static_cast<double>(m) * kSqrtPi;
        return -d * d * inv;
    };
    // |s| <= √π/2: the nearest even peak is m = 0, the nearest odd one m = ±1.
    double top_even = exponent(0);
    double top_odd = std::max(exponent(-1), exponent(1));
    double even = 1;
    double odd = 0;
    // Walk outward. Weights fall off faster than geometrically, so once a
    // term drops below 2^-64 of its (>= 1) normalized sum, later ones cannot
    // change the sum.
    for (long long k = 1; k <= bound; k++) {
        bool is_odd = (k % 2) != 0;
        double top = is_odd ? top_odd : top_even;
        double w = std::exp(exponent(k) - top) + std::exp(exponent(-k) - top);
        (is_odd ? odd : even) += w;
        if (k >= 3 && w < 0x1.0p-64) {
            break;
        }
    }
    return {top_even + std::log(even), top_odd + std::log(odd)};
}

double upper_tail(double x, double sigma) {
    return 0.5 * std::erfc(x / (sigma * std::numbers::sqrt2));
}

}  // namespace

void ChannelConfig::validate() const {
    require_sigma(sigma);
    if (series_truncation < 1) {
        throw std::invalid_argument("series_truncation must be at least 1");
    }
}

double centered_mod(double x) {
    double r = x - kSqrtPi * std::floor(x / kSqrtPi + 0.5);
    if (r >= kHalfSqrtPi) {
        r -= kSqrtPi;
    } else if (r < -kHalfSqrtPi) {
        r += kSqrtPi;
    }
    return r;
}

long long lattice_index(double x) {
    return std::llround((x - centered_mod(x)) / kSqrtPi);
}

double analog_error_prob(double syndrome, double sigma, int truncation) {
    require_sigma(sigma);
    if (!(std::abs(syndrome) <= kHalfSqrtPi * (1 + 1e-12))) {
        throw std::domain_error("analog_error_prob: syndrome outside [-sqrt(pi)/2, sqrt(pi)/2]");
    }
    PeakSums sums = peak_sums(syndrome, sigma, truncation);
    // odd / (even + odd), evaluated in log space.
    double hi = std::max(sums.log_even, sums.log_odd);
    double log_total = hi + std::log(std::exp(sums.log_even - hi) + std::exp(sums.log_odd - hi));
    return std::exp(sums.log_odd - log_total);
}

double prob_to_llr(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::domain_error("prob_to_llr: probability outside [0, 1]");
    }
    if (p == 0) {
        return kLlrCap;
    }
    if (p == 1) {
        return -kLlrCap;
    }
    return std::clamp(std::log((1 - p) / p), -kLlrCap, kLlrCap);
}

double no_analog_llr(double sigma, int truncation) {
    require_sigma(sigma);
    PeakSums sums = peak_sums(0.0, sigma, truncation);
    return sums.log_even - sums.log_odd;
}

double no_analog_llr_approx(double sigma) {
    require_sigma(sigma);
    return -std::numbers::ln2 + std::numbers::pi / (2 * sigma * sigma);
}

double p_of_sigma(double sigma, int truncation) {
    require_sigma(sigma);
    // The intervals [(4l+1)√π/2, (4l+3)√π/2] are symmetric about zero under
    // l -> -l-1, so sum the positive half and double it.
    double total = 0;
    for (int l = 0; l <= truncation; l++) {
        total += upper_tail((4.0 * l + 1) * kHalfSqrtPi, sigma) - upper_tail((4.0 * l + 3) * kHalfSqrtPi, sigma);
    }
    return 2 * total;
}

double p_of_sigma_upper_bound(double sigma) {
    require_sigma(sigma);
    return 2 * upper_tail(kHalfSqrtPi, sigma);
}

GkpQubitOutcome correct_displacement(double q_shift, double p_shift, const ChannelConfig &cfg) {
    GkpQubitOutcome out;
    out.q_shift = q_shift;
    out.p_shift = p_shift;
    out.q0 = centered_mod(q_shift);
    out.p0 = centered_mod(p_shift);
    out.logical_x = (std::llround((q_shift - out.q0) / kSqrtPi) & 1) != 0;
    out.logical_z = (std::llround((p_shift - out.p0) / kSqrtPi) & 1) != 0;
    out.p_err_x = analog_error_prob(out.q0, cfg.sigma, cfg.series_truncation);
    out.p_err_z = analog_error_prob(out.p0, cfg.sigma, cfg.series_truncation);
    return out;
}

GkpQubitOutcome sample_qubit(const ChannelConfig &cfg, std::mt19937_64 &rng) {
    auto [zq, zp] = standard_normal_pair(rng);
    return correct_displacement(cfg.sigma * zq, cfg.sigma * zp, cfg);
}

}  // namespace qgkp
