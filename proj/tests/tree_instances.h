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


#ifndef QGKP_TESTS_TREE_INSTANCES_H
#define QGKP_TESTS_TREE_INSTANCES_H

#include <algorithm>
#include <random>
#include <vector>

#include "qgkp/gf2.h"

namespace testing_support {

struct TreeInstance {
    qgkp::BinaryMatrix h;
    std::vector<uint8_t> syndrome;
    std::vector<double> llrs;
};

// Random forest Tanner graph with n <= 12 variables. Nodes are attached one at
// a time to an existing node of the other type, then a few edges are dropped.
// The syndrome comes from a random error, so it is always solvable.
inline TreeInstance random_tree_instance(std::mt19937_64 &rng) {
    size_t n = 2 + rng() % 11;
    size_t m = 1 + rng() % n;
    std::vector<std::pair<size_t, size_t>> edges;  // (check, var)
    // Node order: check 0 first, then a shuffled mix of the rest.
    std::vector<std::pair<bool, size_t>> order;
    for (size_t c = 1; c < m; c++) order.push_back({true, c});
    for (size_t v = 0; v < n; v++) order.push_back({false, v});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<size_t> checks_in{0}, vars_in;
    for (auto [is_check, id] : order) {
        if (is_check) {
            if (vars_in.empty()) {
                // No variable yet; later variables may attach to this check.
                checks_in.push_back(id);
                continue;
            }
            edges.push_back({id, vars_in[rng() % vars_in.size()]});
            checks_in.push_back(id);
        } else {
            edges.push_back({checks_in[rng() % checks_in.size()], id});
            vars_in.push_back(id);
        }
    }
    size_t drop = rng() % 3;
    for (size_t i = 0; i < drop && edges.size() > 1; i++) {
        edges.erase(edges.begin() + rng() % edges.size());
    }
    qgkp::BinaryMatrix h(m, n);
    for (auto [c, v] : edges) {
        h.set(c, v, true);
    }
    std::uniform_real_distribution<double> u(-3, 3);
    std::vector<uint8_t> e(n);
    std::vector<double> llrs(n);
    for (size_t v = 0; v < n; v++) {
        llrs[v] = u(rng);
        e[v] = rng() % 3 == 0;
    }
    return {h, qgkp::gf2_syndrome(h, e), llrs};
}

// Lowest-cost pattern with the given syndrome; cost is the sum of LLRs over flipped bits.
inline std::vector<uint8_t> brute_force_ml(const qgkp::BinaryMatrix &h,
                                           const std::vector<uint8_t> &syndrome,
                                           const std::vector<double> &llrs) {
    size_t n = h.cols();
    double best = 1e300;
    std::vector<uint8_t> best_x;
    for (uint32_t bits = 0; bits < (1u << n); bits++) {
        std::vector<uint8_t> x(n);
        double cost = 0;
        for (size_t i = 0; i < n; i++) {
            x[i] = (bits >> i) & 1;
            cost += x[i] ? llrs[i] : 0;
        }
        if (cost < best && qgkp::gf2_syndrome(h, x) == syndrome) {
            best = cost;
            best_x = x;
        }
    }
    return best_x;
}

}  // namespace testing_support

#endif
