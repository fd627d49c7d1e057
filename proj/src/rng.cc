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

#include "qgkp/rng.h"

#include <cmath>
#include <numbers>

namespace qgkp {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 stream_rng(uint64_t seed, uint64_t stream, uint64_t index) {
    uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
    s = splitmix64(s ^ index);
    return std::mt19937_64(s);
}

std::pair<double, double> standard_normal_pair(std::mt19937_64 &rng) {
    constexpr double scale = 0x1.0p-53;
    // u1 in (0, 1] keeps the logarithm finite.
    double u1 = static_cast<double>((rng() >> 11) + 1) * scale;
    double u2 = static_cast<double>(rng() >> 11) * scale;
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace qgkp
