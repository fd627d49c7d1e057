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

#ifndef QGKP_RNG_H
#define QGKP_RNG_H

#include <cstdint>
#include <random>
#include <utility>

namespace qgkp {

uint64_t splitmix64(uint64_t x);

/// Generator for trial `index` of stream `stream` under a master seed.
/// Streams are independent of evaluation order, so trials can be spread
/// over any number of workers without changing results.
std::mt19937_64 stream_rng(uint64_t seed, uint64_t stream, uint64_t index);

/// Two independent standard normal deviates (Box-Muller on 53-bit uniforms).
std::pair<double, double> standard_normal_pair(std::mt19937_64 &rng);

}  // namespace qgkp

#endif
