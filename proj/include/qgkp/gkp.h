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

#ifndef QGKP_GKP_H
#define QGKP_GKP_H

#include <cstdint>
#include <random>

namespace qgkp {

inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
/// Magnitude cap applied to every log-likelihood ratio and decoder message.
inline constexpr double kLlrCap = 40.0;
inline constexpr int kDefaultSeriesTruncation = 50;

struct ChannelConfig {
    /// Standard deviation of the displacement in each quadrature.
    double sigma = 0.5;
    uint64_t seed = 0;
    /// Lattice sums run over |l| <= series_truncation.
    int series_truncation = kDefaultSeriesTruncation;

    /// Throws std::invalid_argument unless sigma > 0 and truncation >= 1.
    void validate() const;
};

/// Result of ideal Steane-type GKP correction on one qubit.
///
/// The Q quadrature drives X errors and P drives Z errors. After feedback
/// the residual displacement is (q_shift - q0), an integer multiple of √π;
/// an odd multiple is a logical X.
struct GkpQubitOutcome {
    double q_shift = 0;
    double p_shift = 0;
    double q0 = 0;
    double p0 = 0;
    bool logical_x = false;
    bool logical_z = false;
    double p_err_x = 0;
    double p_err_z = 0;
};

/// x minus the nearest multiple of √π, in [-√π/2, √π/2). +√π/2 maps to -√π/2.
double centered_mod(double x);

/// The integer l with x = l·√π + centered_mod(x).
long long lattice_index(double x);

/// Probability that the correction leaves a logical error given the measured
/// syndrome: Gaussian weight on odd lattice peaks over weight on all peaks.
/// Sums are taken with the dominant exponent factored out, so small sigma does
/// not underflow. Requires |syndrome| <= √π/2 and sigma > 0.
double analog_error_prob(double syndrome, double sigma, int truncation = kDefaultSeriesTruncation);

/// ln((1 - p) / p), clamped to [-kLlrCap, kLlrCap].
double prob_to_llr(double p);

/// Uniform channel LLR used when the analog syndrome is ignored: the log ratio
/// of even-peak to odd-peak Gaussian weight at zero syndrome.
double no_analog_llr(double sigma, int truncation = kDefaultSeriesTruncation);
/// Small-sigma approximation -ln 2 + π / (2 σ²).
double no_analog_llr_approx(double sigma);

/// Probability that a displacement of standard deviation sigma lands in a
/// logical-error cell, as the exact sum of Gaussian interval masses.
double p_of_sigma(double sigma, int truncation = kDefaultSeriesTruncation);
/// Two-sided tail bound erfc(√π / (2√2 σ)) on p_of_sigma.
double p_of_sigma_upper_bound(double sigma);

/// Deterministic correction of given displacements.
GkpQubitOutcome correct_displacement(double q_shift, double p_shift, const ChannelConfig &cfg);

/// Draws independent N(0, σ²) displacements in Q and P and corrects them.
GkpQubitOutcome sample_qubit(const ChannelConfig &cfg, std::mt19937_64 &rng);

}  // namespace qgkp

#endif
