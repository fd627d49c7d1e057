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

#ifndef QGKP_GF2_H
#define QGKP_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qgkp {

/// Matrix over GF(2), stored as bit-packed rows of 64-bit words.
///
/// Vectors are represented as 1×n matrices. Sparse adjacency views are
/// derived on demand through `row_support` / `col_support`.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);

    static BinaryMatrix identity(size_t n);
    /// Builds a matrix from rows of 0/1 values. All rows must have equal length.
    static BinaryMatrix from_rows(const std::vector<std::vector<uint8_t>> &rows);
    /// Builds a matrix from per-row lists of nonzero column indices.
    static BinaryMatrix from_row_support(size_t cols, const std::vector<std::vector<size_t>> &support);
    /// Single-row matrix from a 0/1 vector.
    static BinaryMatrix row_vector(std::span<const uint8_t> bits);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t words_per_row() const {
        return words_per_row_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool value);
    void flip(size_t r, size_t c) {
        data_[r * words_per_row_ + (c >> 6)] ^= uint64_t{1} << (c & 63);
    }

    std::span<uint64_t> row_words(size_t r) {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const uint64_t> row_words(size_t r) const {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    /// row(dst) ^= row(src)
    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);

    size_t row_weight(size_t r) const;
    size_t col_weight(size_t c) const;
    bool row_is_zero(size_t r) const;
    bool is_zero() const;
    size_t count_ones() const;

    std::vector<size_t> row_support(size_t r) const;
    std::vector<size_t> col_support(size_t c) const;
    /// Sparse adjacency: nonzero column indices for every row.
    std::vector<std::vector<size_t>> sparse_rows() const;
    /// Sparse adjacency: nonzero row indices for every column.
    std::vector<std::vector<size_t>> sparse_cols() const;

    BinaryMatrix transposed() const;
    /// Row `r` as a 0/1 byte vector.
    std::vector<uint8_t> row_bits(size_t r) const;

    bool operator==(const BinaryMatrix &other) const = default;

    /// '0'/'1' characters, one line per row.
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

BinaryMatrix gf2_matmul(const BinaryMatrix &a, const BinaryMatrix &b);
size_t gf2_rank(const BinaryMatrix &m);

/// Matrix in reduced row echelon form together with its pivot columns.
///
/// Zero rows are kept at the bottom so that the shape matches the input.
struct RowReduced {
    BinaryMatrix reduced;
    std::vector<size_t> pivots;

    size_t rank() const {
        return pivots.size();
    }
};

/// Gauss-Jordan elimination. Pivot row is the first nonzero row at or below
/// the current position; columns are never permuted.
RowReduced gf2_row_reduce(const BinaryMatrix &m);

/// True iff `v` (a 1×n matrix) lies in the row space of `basis`.
bool in_row_space(const RowReduced &basis, const BinaryMatrix &v);
/// Same test for a 0/1 byte vector.
bool in_row_space(const RowReduced &basis, std::span<const uint8_t> v);

/// H·v^T over GF(2) for a 0/1 byte vector, written to `out` (size rows).
void gf2_syndrome(const BinaryMatrix &h, std::span<const uint8_t> v, std::span<uint8_t> out);
std::vector<uint8_t> gf2_syndrome(const BinaryMatrix &h, std::span<const uint8_t> v);

}  // namespace qgkp

#endif
