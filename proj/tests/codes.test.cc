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

#include <deque>
#include <random>
#include <sstream>

#include "qgkp/codes.h"

using namespace qgkp;

namespace {

// Shortest cycle through each edge: delete the edge, then BFS between its ends.
size_t girth_by_edge_removal(const BinaryMatrix &h) {
    size_t m = h.rows(), n = h.cols();
    size_t best = kAcyclic;
    for (size_t c = 0; c < m; c++) {
        for (size_t v = 0; v < n; v++) {
            if (!h.get(c, v)) {
                continue;
            }
            // Nodes: variables 0..n-1, checks n..n+m-1.
            std::vector<size_t> dist(n + m, kAcyclic);
            std::deque<size_t> queue{v};
            dist[v] = 0;
            while (!queue.empty()) {
                size_t u = queue.front();
                queue.pop_front();
                auto visit = [&](size_t w) {
                    if (dist[w] == kAcyclic) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                };
                if (u < n) {
                    for (size_t cc = 0; cc < m; cc++) {
                        if (h.get(cc, u) && !(u == v && cc == c)) {
                            visit(n + cc);
                        }
                    }
                } else {
                    for (size_t vv = 0; vv < n; vv++) {
                        if (h.get(u - n, vv) && !(u - n == c && vv == v)) {
                            visit(vv);
                        }
                    }
                }
            }
            if (dist[n + c] != kAcyclic) {
                best = std::min(best, dist[n + c] + 1);
            }
        }
    }
    return best;
}

// Binary matrices of Bx, Bz built straight from block indices.
std::pair<BinaryMatrix, BinaryMatrix> lp_by_index(const std::vector<std::vector<int>> &b, size_t L) {
    size_t mb = b.size(), nb = b[0].size();
    auto bs = [&](size_t d, size_t e) {
        int s = b[e][d];
        return s < 0 ? -1 : static_cast<int>((L - s) % L);
    };
    size_t n = L * (nb * nb + mb * mb);
    BinaryMatrix hx(L * mb * nb, n), hz(L * nb * mb, n);
    auto put = [&](BinaryMatrix &h, size_t rb, size_t cb, int s) {
        if (s < 0) {
            return;
        }
        for (size_t r = 0; r < L; r++) {
            h.set(rb * L + r, cb * L + (r + s) % L, true);
        }
    };
    // Hx left block: (i, a) x (j, a') -> b[i][j] iff a == a'.
    for (size_t i = 0; i < mb; i++)
        for (size_t a = 0; a < nb; a++)
            for (size_t j = 0; j < nb; j++)
                put(hx, i * nb + a, j * nb + a, b[i][j]);
    // Hx right block: (c, d) x (c, e) -> B*[d][e].
    for (size_t c = 0; c < mb; c++)
        for (size_t d = 0; d < nb; d++)
            for (size_t e = 0; e < mb; e++)
                put(hx, c * nb + d, nb * nb + c * mb + e, bs(d, e));
    // Hz left block: (c, i) x (c, j) -> b[i][j].
    for (size_t c = 0; c < nb; c++)
        for (size_t i = 0; i < mb; i++)
            for (size_t j = 0; j < nb; j++)
                put(hz, c * mb + i, c * nb + j, b[i][j]);
    // Hz right block: (d, a) x (e, a) -> B*[d][e].
    for (size_t d = 0; d < nb; d++)
        for (size_t a = 0; a < mb; a++)
            for (size_t e = 0; e < mb; e++)
                put(hz, d * mb + a, nb * nb + e * mb + a, bs(d, e));
    return {hx, hz};
}

}  // namespace

TEST(codes, base_matrix_validation) {
    EXPECT_THROW(BaseMatrix(1, 2, 5, {0, 5}), std::out_of_range);
    EXPECT_THROW(BaseMatrix(1, 2, 5, {0, -2}), std::out_of_range);
    EXPECT_THROW(BaseMatrix(1, 2, 5, {0}), std::invalid_argument);
    EXPECT_THROW(BaseMatrix(1, 1, 0, {0}), std::invalid_argument);
    EXPECT_NO_THROW(BaseMatrix(1, 2, 5, {-1, 4}));
}

TEST(codes, cpm_examples) {
    EXPECT_EQ(cpm_expand(1, 3), BinaryMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
    EXPECT_EQ(cpm_expand(0, 4), BinaryMatrix::identity(4));
    EXPECT_TRUE(cpm_expand(-1, 4).is_zero());
    EXPECT_THROW(cpm_expand(4, 4), std::out_of_range);
}

TEST(codes, cpm_product_adds_shifts) {
    for (size_t L = 1; L <= 8; L++) {
        for (int a = 0; a < static_cast<int>(L); a++) {
            for (int b = 0; b < static_cast<int>(L); b++) {
                EXPECT_EQ(gf2_matmul(cpm_expand(a, L), cpm_expand(b, L)), cpm_expand((a + b) % L, L));
            }
        }
    }
}

TEST(codes, lift_layout_and_weights) {
    auto base = BaseMatrix::from_rows({{0, -1, 2}, {1, 1, -1}}, 3);
    auto h = lift(base);
    ASSERT_EQ(h.rows(), 6u);
    ASSERT_EQ(h.cols(), 9u);
    for (size_t r = 0; r < 6; r++) {
        EXPECT_EQ(h.row_weight(r), 2u);
    }
    EXPECT_TRUE(h.get(0, 0));
    EXPECT_TRUE(h.get(0, 8));  // block (0,2), shift 2, row 0 -> col 2
    EXPECT_TRUE(h.get(3, 1));  // block (1,0), shift 1
}

TEST(codes, conjugate_transpose_matches_printed_tanner_values) {
    auto bs = conjugate_transpose_base(tanner_base_matrix());
    std::vector<std::vector<int>> printed = {
        {30, 26, 6}, {29, 21, 12}, {27, 11, 24}, {23, 22, 17}, {15, 13, 3}};
    EXPECT_EQ(bs, BaseMatrix::from_rows(printed, 31));
}

TEST(codes, conjugate_transpose_of_zero_shifts_is_transpose) {
    auto b = BaseMatrix::from_rows({{0, 0, -1}, {0, -1, 0}}, 5);
    EXPECT_EQ(conjugate_transpose_base(b), BaseMatrix::from_rows({{0, 0}, {0, -1}, {-1, 0}}, 5));
}

TEST(codes, lift_of_conjugate_transpose_is_transpose_of_lift) {
    auto b = *builtin_base_matrix("LP04-225");
    EXPECT_EQ(lift(conjugate_transpose_base(b)), lift(b).transposed());
}

TEST(codes, kron_identity_patterns) {
    auto b = BaseMatrix::from_rows({{3, -1}}, 5);
    EXPECT_EQ(kron_identity_right(b, 2), BaseMatrix::from_rows({{3, -1, -1, -1}, {-1, 3, -1, -1}}, 5));
    EXPECT_EQ(kron_identity_left(2, b), BaseMatrix::from_rows({{3, -1, -1, -1}, {-1, -1, 3, -1}}, 5));
}

TEST(codes, lifted_product_matches_index_construction) {
    for (const char *name : {"LP04-175", "LP118-544"}) {
        auto base = *builtin_base_matrix(name);
        std::vector<std::vector<int>> rows(base.rows());
        for (size_t i = 0; i < base.rows(); i++) {
            for (size_t j = 0; j < base.cols(); j++) {
                rows[i].push_back(base.at(i, j));
            }
        }
        auto [hx, hz] = lp_by_index(rows, base.lift_size());
        auto code = lifted_product(base);
        EXPECT_EQ(code.hx, hx) << name;
        EXPECT_EQ(code.hz, hz) << name;
    }
}

TEST(codes, lifted_product_invariants) {
    for (const auto &name : builtin_code_names()) {
        auto code = builtin_code(name);
        EXPECT_TRUE(gf2_matmul(code.hx, code.hz.transposed()).is_zero()) << name;
        EXPECT_EQ(code.k, code.n - gf2_rank(code.hx) - gf2_rank(code.hz)) << name;
        if (!code.base) {
            continue;
        }
        size_t L = code.base->lift_size(), mb = code.base->rows(), nb = code.base->cols();
        EXPECT_EQ(code.n, L * (nb * nb + mb * mb)) << name;
        EXPECT_GE(code.k, L * (nb - mb) * (nb - mb)) << name;
        for (size_t r = 0; r < code.hx.rows(); r++) {
            EXPECT_EQ(code.hx.row_weight(r), nb + mb) << name;
        }
        for (size_t r = 0; r < code.hz.rows(); r++) {
            EXPECT_EQ(code.hz.row_weight(r), nb + mb) << name;
        }
    }
}

TEST(codes, small_lifted_product_parameters) {
    auto c175 = builtin_code("LP04-175");
    EXPECT_EQ(c175.n, 175u);
    EXPECT_EQ(c175.k, 19u);
    EXPECT_EQ(c175.girth_x, 6u);
    auto c544 = builtin_code("LP118-544");
    EXPECT_EQ(c544.n, 544u);
    EXPECT_EQ(c544.k, 80u);
    EXPECT_EQ(c544.girth_x, 8u);
}

TEST(codes, tanner_code) {
    auto h = lift(tanner_base_matrix());
    EXPECT_EQ(h.rows(), 93u);
    EXPECT_EQ(h.cols(), 155u);
    EXPECT_EQ(gf2_rank(h), 91u);
    auto lp = lifted_product(tanner_base_matrix(), "LP-1054");
    EXPECT_EQ(lp.n, 1054u);
    EXPECT_EQ(lp.k, 140u);
}

TEST(codes, girth_examples) {
    EXPECT_EQ(girth(BinaryMatrix::from_rows({{1, 1}, {1, 1}})), 4u);
    EXPECT_EQ(girth(BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 6u);
    EXPECT_EQ(girth(BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}})), kAcyclic);
    EXPECT_EQ(girth(steane_parity_check()), 4u);
    EXPECT_EQ(builtin_code("LP04-425").girth_x, 8u);
}

TEST(codes, girth_matches_edge_removal_oracle) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; t++) {
        size_t m = 2 + rng() % 6, n = 2 + rng() % 9;
        std::bernoulli_distribution bit(0.15 + 0.05 * (t % 5));
        BinaryMatrix h(m, n);
        for (size_t r = 0; r < m; r++) {
            for (size_t c = 0; c < n; c++) {
                h.set(r, c, bit(rng));
            }
        }
        EXPECT_EQ(girth(h), girth_by_edge_removal(h)) << h.str();
    }
    auto small = lift(*builtin_base_matrix("LP04-175"));
    EXPECT_EQ(girth(small), girth_by_edge_removal(small));
}

TEST(codes, two_rows_sharing_two_columns_give_girth_four) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; t++) {
        BinaryMatrix h(5, 12);
        for (size_t r = 0; r < 5; r++) {
            for (size_t c = 0; c < 12; c++) {
                h.set(r, c, rng() % 4 == 0);
            }
        }
        h.set(1, 3, true);
        h.set(1, 7, true);
        h.set(4, 3, true);
        h.set(4, 7, true);
        EXPECT_EQ(girth(h), 4u);
    }
}

TEST(codes, steane) {
    auto code = builtin_code("STEANE");
    EXPECT_EQ(code.n, 7u);
    EXPECT_EQ(code.k, 1u);
    EXPECT_EQ(code.hx, steane_parity_check());
    EXPECT_EQ(code.hx.str(), "1110100\n1101010\n1011001\n");
}

TEST(codes, unknown_code_throws) {
    EXPECT_THROW(builtin_code("LP04-999"), std::invalid_argument);
    EXPECT_FALSE(builtin_base_matrix("STEANE").has_value());
}

TEST(codes, make_css_code_rejects_non_commuting) {
    auto h = BinaryMatrix::from_rows({{1, 0, 1}});
    auto g = BinaryMatrix::from_rows({{1, 1, 0}});
    EXPECT_THROW(make_css_code(h, g, "bad"), std::invalid_argument);
    EXPECT_THROW(make_css_code(h, BinaryMatrix(1, 4), "bad"), std::invalid_argument);
}

TEST(codes, base_matrix_text_round_trip) {
    auto b = *builtin_base_matrix("LP118-714");
    std::stringstream ss;
    write_base_matrix(ss, b);
    EXPECT_EQ(ss.str().substr(0, 7), "3 5 21\n");
    EXPECT_EQ(read_base_matrix(ss), b);
    std::istringstream bad("2 2 5\n0 1\n");
    EXPECT_THROW(read_base_matrix(bad), std::invalid_argument);
}
