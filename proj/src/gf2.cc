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

#include "qgkp/gf2.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace qgkp {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

std::vector<uint64_t> pack_bits(std::span<const uint8_t> v) {
    std::vector<uint64_t> packed(words_for(v.size()), 0);
    for (size_t k = 0; k < v.size(); k++) {
        if (v[k] & 1) {
            packed[k >> 6] |= uint64_t{1} << (k & 63);
        }
    }
    return packed;
}

bool reduces_to_zero(const RowReduced &basis, std::vector<uint64_t> &v) {
    const auto &m = basis.reduced;
    for (size_t r = 0; r < basis.pivots.size(); r++) {
        size_t p = basis.pivots[r];
        if ((v[p >> 6] >> (p & 63)) & 1) {
            auto row = m.row_words(r);
            for (size_t w = 0; w < v.size(); w++) {
                v[w] ^= row[w];
            }
        }
    }
    for (uint64_t w : v) {
        if (w) {
            return false;
        }
    }
    return true;
}

}  // namespace

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), data_(rows * words_for(cols), 0) {
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<uint8_t>> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BinaryMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("BinaryMatrix::from_rows: ragged rows");
        }
        for (size_t c = 0; c < cols; c++) {
            if (rows[r][c] > 1) {
                throw std::invalid_argument("BinaryMatrix::from_rows: entries must be 0 or 1");
            }
            m.set(r, c, rows[r][c] != 0);
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_row_support(size_t cols, const std::vector<std::vector<size_t>> &support) {
    BinaryMatrix m(support.size(), cols);
    for (size_t r = 0; r < support.size(); r++) {
        for (size_t c : support[r]) {
            if (c >= cols) {
                throw std::out_of_range("BinaryMatrix::from_row_support: column index out of range");
            }
            m.set(r, c, true);
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::row_vector(std::span<const uint8_t> bits) {
    BinaryMatrix m(1, bits.size());
    for (size_t c = 0; c < bits.size(); c++) {
        m.set(0, c, bits[c] & 1);
    }
    return m;
}

void BinaryMatrix::set(size_t r, size_t c, bool value) {
    uint64_t &w = data_[r * words_per_row_ + (c >> 6)];
    uint64_t mask = uint64_t{1} << (c & 63);
    if (value) {
        w |= mask;
    } else {
        w &= ~mask;
    }
}

void BinaryMatrix::xor_row_into(size_t src, size_t dst) {
    uint64_t *d = data_.data() + dst * words_per_row_;
    const uint64_t *s = data_.data() + src * words_per_row_;
    for (size_t w = 0; w < words_per_row_; w++) {
        d[w] ^= s[w];
    }
}

void BinaryMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t w = 0; w < words_per_row_; w++) {
        std::swap(data_[a * words_per_row_ + w], data_[b * words_per_row_ + w]);
    }
}

size_t BinaryMatrix::row_weight(size_t r) const {
    size_t total = 0;
    for (uint64_t w : row_words(r)) {
        total += std::popcount(w);
    }
    return total;
}

size_t BinaryMatrix::col_weight(size_t c) const {
    size_t total = 0;
    for (size_t r = 0; r < rows_; r++) {
        total += get(r, c);
    }
    return total;
}

bool BinaryMatrix::row_is_zero(size_t r) const {
    for (uint64_t w : row_words(r)) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BinaryMatrix::is_zero() const {
    for (uint64_t w : data_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BinaryMatrix::count_ones() const {
    size_t total = 0;
    for (uint64_t w : data_) {
        total += std::popcount(w);
    }
    return total;
}

std::vector<size_t> BinaryMatrix::row_support(size_t r) const {
    std::vector<size_t> out;
    auto words = row_words(r);
    for (size_t w = 0; w < words.size(); w++) {
        uint64_t bits = words[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<size_t> BinaryMatrix::col_support(size_t c) const {
    std::vector<size_t> out;
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<std::vector<size_t>> BinaryMatrix::sparse_rows() const {
    std::vector<std::vector<size_t>> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = row_support(r);
    }
    return out;
}

std::vector<std::vector<size_t>> BinaryMatrix::sparse_cols() const {
    std::vector<std::vector<size_t>> out(cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : row_support(r)) {
            out[c].push_back(r);
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : row_support(r)) {
            t.set(c, r, true);
        }
    }
    return t;
}

std::vector<uint8_t> BinaryMatrix::row_bits(size_t r) const {
    std::vector<uint8_t> out(cols_);
    for (size_t c = 0; c < cols_; c++) {
        out[c] = get(r, c);
    }
    return out;
}

std::string BinaryMatrix::str() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.push_back(get(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

BinaryMatrix gf2_matmul(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument(
            "gf2_matmul: dimension mismatch (" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
            std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
    }
    BinaryMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        auto dst = out.row_words(r);
        for (size_t k : a.row_support(r)) {
            auto src = b.row_words(k);
            for (size_t w = 0; w < dst.size(); w++) {
                dst[w] ^= src[w];
            }
        }
    }
    return out;
}

RowReduced gf2_row_reduce(const BinaryMatrix &m) {
    RowReduced result{m, {}};
    BinaryMatrix &a = result.reduced;
    size_t next_row = 0;
    for (size_t c = 0; c < a.cols() && next_row < a.rows(); c++) {
        size_t pivot = next_row;
        while (pivot < a.rows() && !a.get(pivot, c)) {
            pivot++;
        }
        if (pivot == a.rows()) {
            continue;
        }
        a.swap_rows(pivot, next_row);
        for (size_t r = 0; r < a.rows(); r++) {
            if (r != next_row && a.get(r, c)) {
                a.xor_row_into(next_row, r);
            }
        }
        result.pivots.push_back(c);
        next_row++;
    }
    return result;
}

size_t gf2_rank(const BinaryMatrix &m) {
    return gf2_row_reduce(m).rank();
}

bool in_row_space(const RowReduced &basis, const BinaryMatrix &v) {
    if (v.rows() != 1 || v.cols() != basis.reduced.cols()) {
        throw std::invalid_argument("in_row_space: vector must be 1x" + std::to_string(basis.reduced.cols()));
    }
    auto words = v.row_words(0);
    std::vector<uint64_t> work(words.begin(), words.end());
    return reduces_to_zero(basis, work);
}

bool in_row_space(const RowReduced &basis, std::span<const uint8_t> v) {
    if (v.size() != basis.reduced.cols()) {
        throw std::invalid_argument("in_row_space: vector length " + std::to_string(v.size()) + " != " +
                                    std::to_string(basis.reduced.cols()));
    }
    auto work = pack_bits(v);
    return reduces_to_zero(basis, work);
}

void gf2_syndrome(const BinaryMatrix &h, std::span<const uint8_t> v, std::span<uint8_t> out) {
    if (v.size() != h.cols() || out.size() != h.rows()) {
        throw std::invalid_argument("gf2_syndrome: dimension mismatch");
    }
    auto packed = pack_bits(v);
    for (size_t r = 0; r < h.rows(); r++) {
        auto row = h.row_words(r);
        uint64_t acc = 0;
        for (size_t w = 0; w < row.size(); w++) {
            acc ^= row[w] & packed[w];
        }
        out[r] = std::popcount(acc) & 1;
    }
}

std::vector<uint8_t> gf2_syndrome(const BinaryMatrix &h, std::span<const uint8_t> v) {
    std::vector<uint8_t> out(h.rows());
    gf2_syndrome(h, v, out);
    return out;
}

}  // namespace qgkp
