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

#ifndef QGKP_THRESHOLD_H
#define QGKP_THRESHOLD_H

#include <string>
#include <vector>

#include "qgkp/sim.h"

namespace qgkp {

struct ThresholdEstimate {
    bool found = false;
    /// Log-linear interpolation of the crossing.
    double sigma = 0;
    /// Grid interval known to contain the crossing. It widens past the
    /// immediate neighbours while the curves are statistically tied there.
    double bracket_lo = 0;
    double bracket_hi = 0;
    /// False when error bars overlap at a bracketing point or the curves cross
    /// more than once; only the bracket should be quoted then.
    bool resolved = false;
    std::string smaller_code;
    std::string larger_code;
    std::string message;
};

/// Crossing of the logical-error-rate curves of the two shortest codes in
/// `family`, taken over their common sigma points. Below threshold the longer
/// code has the lower rate.
ThresholdEstimate estimate_threshold(const std::vector<SweepResult> &family);

}  // namespace qgkp

#endif
