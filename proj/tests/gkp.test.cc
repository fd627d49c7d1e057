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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qgkp/gkp.h"
#include "qgkp/rng.h"

using namespace qgkp;

namespace {

// Direct evaluation of the odd-over-all peak ratio in long double.
long double direct_analog_prob(long double s, long double sigma, int t = 50) {
    long double sp = std::sqrt(std::numbers::pi_v<long double>);
    long double num = 0, den = 0;
    for (int l = -t; l <= t; l++) {
        long double odd = s - (2 * l + 1) * sp;
        num += std::exp(-odd * odd / (2 * sigma * sigma));
    }
    for (int l = -2 * t - 1; l <= 2 * t + 1; l++) {
        long double x = s - l * sp;
        den += std::exp(-x * x / (2 * sigma * sigma));
    }
    return num / den;
}

// Mass of N(0, sigma^2) on the cells whose nearest lattice point is odd,
// by composite Simpson integration cell by cell.
double integrated_p(double sigma) {
    const double sp = std::sqrt(std::numbers::pi);
    const double norm = 1.0 / std::sqrt(2 * std::numbers::pi * sigma * sigma);
    double total = 0;
    for (int j = -41; j <= 41; j += 2) {
        double a = (j - 0.5) * sp, b = (j + 0.5) * sp;
        const int steps = 4000;
        double h = (b - a) / steps, acc = 0;
        for (int i = 0; i <= steps; i++) {
            double x = a + i * h;
            double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
            acc += w * norm * std::exp(-x * x / (2 * sigma * sigma));
        }
        total += acc * h / 3;
    }
    return total;
}

}  // namespace

TEST(gkp, centered_mod_examples) {
    EXPECT_EQ(centered_mod(0.0), 0.0);
    EXPECT_DOUBLE_EQ(centered_mod(kSqrtPi / 2), -kSqrtPi / 2);
    EXPECT_NEAR(centered_mod(1.3 * kSqrtPi), 0.3 * kSqrtPi, 1e-12);
    EXPECT_NEAR(centered_mod(-1.3 * kSqrtPi), -0.3 * kSqrtPi, 1e-12);
    EXPECT_EQ(lattice_index(kSqrtPi), 1);
    EXPECT_EQ(lattice_index(-2.2 * kSqrtPi), -2);
}

TEST(gkp, centered_mod_range_property) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int i = 0; i < 10000; i++) {
        double x = u(rng);
        double r = centered_mod(x);
        EXPECT_GE(r, -kSqrtPi / 2);
        EXPECT_LT(r, kSqrtPi / 2);
        double k = (x - r) / kSqrtPi;
        EXPECT_NEAR(k, std::round(k), 1e-12);
        EXPECT_EQ(lattice_index(x), static_cast<long long>(std::llround(k)));
    }
}

TEST(gkp, correct_displacement_examples) {
    ChannelConfig cfg;
    auto zero = correct_displacement(0, 0, cfg);
    EXPECT_EQ(zero.q0, 0);
    EXPECT_FALSE(zero.logical_x);
    EXPECT_FALSE(zero.logical_z);
    auto one = correct_displacement(kSqrtPi, 2 * kSqrtPi, cfg);
    EXPECT_NEAR(one.q0, 0, 1e-12);
    EXPECT_TRUE(one.logical_x);
    EXPECT_FALSE(one.logical_z);
    auto frac = correct_displacement(0.6 * kSqrtPi, -0.6 * kSqrtPi, cfg);
    EXPECT_NEAR(frac.q0, -0.4 * kSqrtPi, 1e-12);
    EXPECT_TRUE(frac.logical_x);
    EXPECT_TRUE(frac.logical_z);
    EXPECT_DOUBLE_EQ(frac.p_err_x, analog_error_prob(frac.q0, cfg.sigma));
}

TEST(gkp, analog_prob_boundary_is_half) {
    for (double sigma : {0.1, 0.3, 0.5, 0.9}) {
        EXPECT_NEAR(analog_error_prob(kSqrtPi / 2, sigma), 0.5, 1e-12);
        EXPECT_NEAR(analog_error_prob(-kSqrtPi / 2, sigma), 0.5, 1e-12);
    }
}

TEST(gkp, analog_prob_leading_order_at_zero) {
    double v = analog_error_prob(0, 0.5);
    double lead = 2 * std::exp(-std::numbers::pi / (2 * 0.25));
    EXPECT_NEAR(v / lead, 1.0, 0.01);
}

TEST(gkp, analog_prob_matches_direct_series) {
    for (double sigma : {0.2, 0.3, 0.5, 0.7, 1.0}) {
        for (double s : {0.0, 0.1, 0.3, 0.6, 0.85}) {
            double expected = static_cast<double>(direct_analog_prob(s, sigma));
            EXPECT_NEAR(analog_error_prob(s, sigma) / expected, 1.0, 1e-12) << s << " " << sigma;
        }
    }
    EXPECT_NEAR(analog_error_prob(0.3, 0.5), static_cast<double>(direct_analog_prob(0.3L, 0.5L)), 1e-15);
}

TEST(gkp, analog_prob_does_not_underflow_at_small_sigma) {
    double v = analog_error_prob(0.2, 0.08);
    EXPECT_GT(v, 0.0);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_NEAR(analog_error_prob(kSqrtPi / 2, 0.05), 0.5, 1e-12);
}

TEST(gkp, analog_prob_symmetric_and_monotone) {
    for (double sigma : {0.3, 0.4, 0.5, 0.6}) {
        double prev = -1;
        for (int i = 0; i < 100; i++) {
            double s = i * (kSqrtPi / 2) / 100;
            double v = analog_error_prob(s, sigma);
            EXPECT_DOUBLE_EQ(v, analog_error_prob(-s, sigma));
            EXPECT_GE(v, prev);
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
            prev = v;
        }
    }
}

TEST(gkp, analog_prob_rejects_out_of_range) {
    EXPECT_THROW(analog_error_prob(1.0, 0.5), std::domain_error);
}

TEST(gkp, prob_to_llr_examples) {
    EXPECT_EQ(prob_to_llr(0.5), 0.0);
    EXPECT_EQ(prob_to_llr(0.0), kLlrCap);
    EXPECT_EQ(prob_to_llr(1.0), -kLlrCap);
    EXPECT_NEAR(prob_to_llr(0.1), std::log(9.0), 1e-12);
    EXPECT_NEAR(prob_to_llr(0.1), 2.1972, 1e-4);
}

TEST(gkp, no_analog_llr_values) {
    EXPECT_NEAR(no_analog_llr(0.3), 16.76, 0.01);
    EXPECT_LT(std::abs(no_analog_llr(0.3) - no_analog_llr_approx(0.3)), 0.01);
    double p0 = static_cast<double>(direct_analog_prob(0, 0.5L));
    EXPECT_NEAR(no_analog_llr(0.5), std::log((1 - p0) / p0), 1e-10);
    EXPECT_LT(std::abs(no_analog_llr(20.0)), 1e-6);
}

TEST(gkp, p_of_sigma_matches_integration) {
    for (double sigma : {0.3, 0.45, 0.5, 0.545, 0.6, 0.8}) {
        EXPECT_NEAR(p_of_sigma(sigma), integrated_p(sigma), 1e-10) << sigma;
    }
}

TEST(gkp, p_of_sigma_anchors) {
    EXPECT_NEAR(p_of_sigma(0.545), 0.104, 0.001);
    EXPECT_LT(p_of_sigma(0.05), 1e-60);
    for (double sigma = 0.05; sigma <= 0.6 + 1e-12; sigma += 0.01) {
        double gap = p_of_sigma_upper_bound(sigma) - p_of_sigma(sigma);
        EXPECT_GE(gap, 0.0);
        EXPECT_LT(gap, 1e-5);
    }
}

TEST(gkp, config_validation) {
    ChannelConfig cfg;
    cfg.sigma = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.sigma = 0.5;
    cfg.series_truncation = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(gkp, sample_qubit_consistency) {
    ChannelConfig cfg;
    cfg.sigma = 0.6;
    auto rng = stream_rng(5, 0, 0);
    for (int i = 0; i < 1000; i++) {
        auto o = sample_qubit(cfg, rng);
        EXPECT_NEAR(o.q0, centered_mod(o.q_shift), 0);
        EXPECT_EQ(o.logical_x, (lattice_index(o.q_shift) & 1) != 0);
        EXPECT_EQ(o.logical_z, (lattice_index(o.p_shift) & 1) != 0);
        EXPECT_DOUBLE_EQ(o.p_err_z, analog_error_prob(o.p0, cfg.sigma));
    }
}

TEST(gkp, normal_deviates_have_unit_variance) {
    auto rng = stream_rng(9, 1, 2);
    double sum = 0, sq = 0;
    const int n = 100000;
    for (int i = 0; i < n / 2; i++) {
        auto [a, b] = standard_normal_pair(rng);
        sum += a + b;
        sq += a * a + b * b;
    }
    EXPECT_NEAR(sum / n, 0, 0.02);
    EXPECT_NEAR(sq / n, 1, 0.02);
}

TEST(gkp, stream_rng_is_reproducible) {
    auto a = stream_rng(1, 2, 3);
    auto b = stream_rng(1, 2, 3);
    auto c = stream_rng(1, 2, 4);
    auto first = a();
    EXPECT_EQ(first, b());
    EXPECT_NE(first, c());
}
