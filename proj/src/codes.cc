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

#include "qgkp/codes.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace qgkp {

BaseMatrix::BaseMatrix(size_t rows, size_t cols, size_t lift_size, std::vector<int> shifts)
    : rows_(rows), cols_(cols), lift_size_(lift_size), shifts_(std::move(shifts)) {
    if (lift_size_ == 0) {
        throw std::invalid_argument("BaseMatrix: lift size must be at least 1");
    }
    if (shifts_.size() != rows_ * cols_) {
        throw std::invalid_argument("BaseMatrix: expected " + std::to_string(rows_ * cols_) + " shifts, got " +
                                    std::to_string(shifts_.size()));
    }
    for (int s : shifts_) {
        if (s < -1 || s >= static_cast<long long>(lift_size_)) {
            throw std::out_of_range("BaseMatrix: shift " + std::to_string(s) + " outside {-1} U [0, " +
                                    std::to_string(lift_size_) + ")");
        }
    }
}

BaseMatrix BaseMatrix::from_rows(const std::vector<std::vector<int>> &rows, size_t lift_size) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<int> flat;
    flat.reserve(rows.size() * cols);
    for (const auto &row : rows) {
        if (row.size() != cols) {
            throw std::invalid_argument("BaseMatrix::from_rows: ragged rows");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return BaseMatrix(rows.size(), cols, lift_size, std::move(flat));
}

BinaryMatrix cpm_expand(int shift, size_t lift_size) {
    if (shift < -1 || shift >= static_cast<long long>(lift_size)) {
        throw std::out_of_range("cpm_expand: invalid shift " + std::to_string(shift) + " for L = " +
                                std::to_string(lift_size));
    }
    BinaryMatrix m(lift_size, lift_size);
    if (shift < 0) {
        return m;
    }
    for (size_t i = 0; i < lift_size; i++) {
        m.set(i, (i + static_cast<size_t>(shift)) % lift_size, true);
    }
    return m;
}

BinaryMatrix lift(const BaseMatrix &base) {
    size_t L = base.lift_size();
    BinaryMatrix h(base.rows() * L, base.cols() * L);
    for (size_t bi = 0; bi < base.rows(); bi++) {
        for (size_t bj = 0; bj < base.cols(); bj++) {
            int s = base.at(bi, bj);
            if (s < 0) {
                continue;
            }
            for (size_t i = 0; i < L; i++) {
                h.set(bi * L + i, bj * L + (i + static_cast<size_t>(s)) % L, true);
            }
        }
    }
    return h;
}

BaseMatrix conjugate_transpose_base(const BaseMatrix &base) {
    size_t L = base.lift_size();
    std::vector<int> out(base.rows() * base.cols());
    for (size_t i = 0; i < base.rows(); i++) {
        for (size_t j = 0; j < base.cols(); j++) {
            int s = base.at(i, j);
            out[j * base.rows() + i] = s < 0 ? -1 : static_cast<int>((L - static_cast<size_t>(s)) % L);
        }
    }
    return BaseMatrix(base.cols(), base.rows(), L, std::move(out));
}

BaseMatrix kron_identity_right(const BaseMatrix &base, size_t k) {
    size_t rows = base.rows() * k;
    size_t cols = base.cols() * k;
    std::vector<int> out(rows * cols, -1);
    for (size_t i = 0; i < base.rows(); i++) {
        for (size_t j = 0; j < base.cols(); j++) {
            for (size_t a = 0; a < k; a++) {
                out[(i * k + a) * cols + (j * k + a)] = base.at(i, j);
            }
        }
    }
    return BaseMatrix(rows, cols, base.lift_size(), std::move(out));
}

BaseMatrix kron_identity_left(size_t k, const BaseMatrix &base) {
    size_t rows = base.rows() * k;
    size_t cols = base.cols() * k;
    std::vector<int> out(rows * cols, -1);
    for (size_t a = 0; a < k; a++) {
        for (size_t i = 0; i < base.rows(); i++) {
            for (size_t j = 0; j < base.cols(); j++) {
                out[(a * base.rows() + i) * cols + (a * base.cols() + j)] = base.at(i, j);
            }
        }
    }
    return BaseMatrix(rows, cols, base.lift_size(), std::move(out));
}

BaseMatrix hstack(const BaseMatrix &a, const BaseMatrix &b) {
    if (a.rows() != b.rows() || a.lift_size() != b.lift_size()) {
        throw std::invalid_argument("hstack: row count or lift size mismatch");
    }
    size_t cols = a.cols() + b.cols();
    std::vector<int> out;
    out.reserve(a.rows() * cols);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out.push_back(a.at(i, j));
        }
        for (size_t j = 0; j < b.cols(); j++) {
            out.push_back(b.at(i, j));
        }
    }
    return BaseMatrix(a.rows(), cols, a.lift_size(), std::move(out));
}

std::string_view family_name(CodeFamily family) {
    switch (family) {
        case CodeFamily::LP04:
            return "LP04";
        case CodeFamily::LP118:
            return "LP118";
        case CodeFamily::Custom:
            return "custom";
    }
    return "custom";
}

size_t girth(const BinaryMatrix &h) {
    // Nodes [0, n) are variables, [n, n + m) are checks.
    size_t n = h.cols();
    size_t m = h.rows();
    std::vector<std::vector<size_t>> adj(n + m);
    for (size_t r = 0; r < m; r++) {
        for (size_t c : h.row_support(r)) {
            adj[c].push_back(n + r);
            adj[n + r].push_back(c);
        }
    }

    size_t best = kAcyclic;
    std::vector<size_t> dist(n + m);
    std::vector<size_t> parent(n + m);
    std::vector<size_t> touched;
    std::queue<size_t> frontier;
    constexpr size_t unseen = kAcyclic;
    std::fill(dist.begin(), dist.end(), unseen);

    for (size_t root = 0; root < n; root++) {
        if (adj[root].empty()) {
            continue;
        }
        for (size_t t : touched) {
            dist[t] = unseen;
        }
        touched.clear();
        frontier = {};
        dist[root] = 0;
        parent[root] = root;
        touched.push_back(root);
        frontier.push(root);
        while (!frontier.empty()) {
            size_t u = frontier.front();
            frontier.pop();
            // Any cycle closed from here has length >= 2 * dist[u].
            if (best != kAcyclic && 2 * dist[u] >= best) {
                break;
            }
            for (size_t w : adj[u]) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push_back(w);
                    frontier.push(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

CssCode make_css_code(BinaryMatrix hx, BinaryMatrix hz, std::string name, CodeFamily family, size_t distance_bound) {
    if (hx.cols() != hz.cols()) {
        throw std::invalid_argument("make_css_code: Hx has " + std::to_string(hx.cols()) + " columns but Hz has " +
                                    std::to_string(hz.cols()));
    }
    if (!gf2_matmul(hx, hz.transposed()).is_zero()) {
        throw std::invalid_argument("make_css_code: Hx * Hz^T != 0 for " + name);
    }
    CssCode code;
    code.name = std::move(name);
    code.family = family;
    code.distance_bound = distance_bound;
    code.n = hx.cols();
    code.degeneracy_basis_x = gf2_row_reduce(hx);
    code.degeneracy_basis_z = gf2_row_reduce(hz);
    code.k = code.n - code.degeneracy_basis_x.rank() - code.degeneracy_basis_z.rank();
    code.girth_x = girth(hx);
    code.girth_z = girth(hz);
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    return code;
}

CssCode lifted_product(const BaseMatrix &base, std::string name, CodeFamily family, size_t distance_bound) {
    size_t mb = base.rows();
    size_t nb = base.cols();
    BaseMatrix conj = conjugate_transpose_base(base);
    BaseMatrix bx = hstack(kron_identity_right(base, nb), kron_identity_left(mb, conj));
    BaseMatrix bz = hstack(kron_identity_left(nb, base), kron_identity_right(conj, mb));
    CssCode code = make_css_code(lift(bx), lift(bz), std::move(name), family, distance_bound);
    code.base = base;
    return code;
}

BinaryMatrix steane_parity_check() {
    return BinaryMatrix::from_rows({
        {1, 1, 1, 0, 1, 0, 0},
        {1, 1, 0, 1, 0, 1, 0},
        {1, 0, 1, 1, 0, 0, 1},
    });
}

BaseMatrix tanner_base_matrix() {
    return BaseMatrix::from_rows(
        {
            {1, 2, 4, 8, 16},
            {5, 10, 20, 9, 18},
            {25, 19, 7, 14, 28},
        },
        31);
}

namespace {

struct RegistryEntry {
    CodeFamily family;
    size_t distance_bound;
    std::vector<std::vector<int>> shifts;
    size_t lift_size;
};

const std::map<std::string, RegistryEntry, std::less<>> &registry() {
    static const std::map<std::string, RegistryEntry, std::less<>> entries = {
        {"LP04-175", {CodeFamily::LP04, 10, {{0, 0, 0, 0}, {0, 1, 2, 5}, {0, 6, 3, 1}}, 7}},
        {"LP04-225", {CodeFamily::LP04, 12, {{0, 0, 0, 0}, {0, 1, 6, 7}, {0, 4, 5, 2}}, 9}},
        {"LP04-425", {CodeFamily::LP04, 18, {{0, 0, 0, 0}, {0, 1, 2, 11}, {0, 8, 12, 13}}, 17}},
        {"LP04-475", {CodeFamily::LP04, 20, {{0, 0, 0, 0}, {0, 2, 6, 9}, {0, 16, 7, 11}}, 19}},
        {"LP118-544", {CodeFamily::LP118, 12, {{0, 0, 0, 0, 0}, {0, 2, 4, 7, 11}, {0, 3, 10, 14, 15}}, 16}},
        {"LP118-714", {CodeFamily::LP118, 16, {{0, 0, 0, 0, 0}, {0, 4, 5, 7, 17}, {0, 14, 18, 12, 11}}, 21}},
        {"LP118-1020", {CodeFamily::LP118, 20, {{0, 0, 0, 0, 0}, {0, 2, 14, 24, 25}, {0, 16, 11, 14, 13}}, 30}},
    };
    return entries;
}

}  // namespace

const std::vector<std::string> &builtin_code_names() {
    static const std::vector<std::string> names = {
        "LP04-175",
        "LP04-225",
        "LP04-425",
        "LP04-475",
        "LP118-544",
        "LP118-714",
        "LP118-1020",
        "STEANE",
    };
    return names;
}

std::optional<BaseMatrix> builtin_base_matrix(std::string_view name) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        return std::nullopt;
    }
    return BaseMatrix::from_rows(it->second.shifts, it->second.lift_size);
}

CssCode builtin_code(std::string_view name) {
    if (name == "STEANE") {
        return make_css_code(steane_parity_check(), steane_parity_check(), "STEANE", CodeFamily::Custom, 3);
    }
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw std::invalid_argument("unknown code: " + std::string(name));
    }
    const RegistryEntry &e = it->second;
    return lifted_product(BaseMatrix::from_rows(e.shifts, e.lift_size), std::string(name), e.family, e.distance_bound);
}

void write_base_matrix(std::ostream &out, const BaseMatrix &base) {
    out << base.rows() << ' ' << base.cols() << ' ' << base.lift_size() << '\n';
    for (size_t i = 0; i < base.rows(); i++) {
        for (size_t j = 0; j < base.cols(); j++) {
            out << (j ? " " : "") << base.at(i, j);
        }
        out << '\n';
    }
}

BaseMatrix read_base_matrix(std::istream &in) {
    long long rows, cols, lift_size;
    if (!(in >> rows >> cols >> lift_size) || rows < 0 || cols < 0 || lift_size < 1) {
        throw std::invalid_argument("base matrix: bad header, expected 'rows cols L'");
    }
    std::vector<int> shifts(static_cast<size_t>(rows * cols));
    for (auto &s : shifts) {
        if (!(in >> s)) {
            throw std::invalid_argument("base matrix: truncated shift grid");
        }
    }
    return BaseMatrix(static_cast<size_t>(rows), static_cast<size_t>(cols), static_cast<size_t>(lift_size),
                      std::move(shifts));
}

}  // namespace qgkp
