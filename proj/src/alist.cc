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

#include "qgkp/alist.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qgkp {

namespace {

void write_lists(std::ostream &out, const std::vector<std::vector<size_t>> &lists, size_t width) {
    for (const auto &list : lists) {
        for (size_t k = 0; k < width; k++) {
            if (k) {
                out << ' ';
            }
            out << (k < list.size() ? list[k] + 1 : 0);
        }
        out << '\n';
    }
}

size_t read_count(std::istream &in, const char *what) {
    long long v;
    if (!(in >> v)) {
        throw std::invalid_argument(std::string("alist: failed to read ") + what);
    }
    if (v < 0) {
        throw std::invalid_argument(std::string("alist: negative ") + what);
    }
    return static_cast<size_t>(v);
}

size_t max_size(const std::vector<std::vector<size_t>> &lists) {
    size_t m = 0;
    for (const auto &l : lists) {
        m = std::max(m, l.size());
    }
    return m;
}

}  // namespace

void write_alist(std::ostream &out, const BinaryMatrix &h) {
    auto cols = h.sparse_cols();
    auto rows = h.sparse_rows();
    size_t max_col = max_size(cols);
    size_t max_row = max_size(rows);
    out << h.cols() << ' ' << h.rows() << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (size_t c = 0; c < cols.size(); c++) {
        out << (c ? " " : "") << cols[c].size();
    }
    out << '\n';
    for (size_t r = 0; r < rows.size(); r++) {
        out << (r ? " " : "") << rows[r].size();
    }
    out << '\n';
    write_lists(out, cols, max_col);
    write_lists(out, rows, max_row);
}

std::string to_alist(const BinaryMatrix &h) {
    std::ostringstream ss;
    write_alist(ss, h);
    return ss.str();
}

BinaryMatrix read_alist(std::istream &in) {
    size_t n = read_count(in, "column count");
    size_t m = read_count(in, "row count");
    size_t max_col = read_count(in, "max column degree");
    size_t max_row = read_count(in, "max row degree");
    std::vector<size_t> col_deg(n), row_deg(m);
    for (auto &d : col_deg) {
        d = read_count(in, "column degree");
        if (d > max_col) {
            throw std::invalid_argument("alist: column degree exceeds declared maximum");
        }
    }
    for (auto &d : row_deg) {
        d = read_count(in, "row degree");
        if (d > max_row) {
            throw std::invalid_argument("alist: row degree exceeds declared maximum");
        }
    }

    BinaryMatrix by_cols(m, n);
    for (size_t c = 0; c < n; c++) {
        size_t seen = 0;
        for (size_t k = 0; k < max_col; k++) {
            size_t idx = read_count(in, "column entry");
            if (idx == 0) {
                continue;
            }
            if (idx > m) {
                throw std::invalid_argument("alist: row index out of range");
            }
            if (by_cols.get(idx - 1, c)) {
                throw std::invalid_argument("alist: duplicate entry in column list");
            }
            by_cols.set(idx - 1, c, true);
            seen++;
        }
        if (seen != col_deg[c]) {
            throw std::invalid_argument("alist: column " + std::to_string(c + 1) + " degree mismatch");
        }
    }

    BinaryMatrix by_rows(m, n);
    for (size_t r = 0; r < m; r++) {
        size_t seen = 0;
        for (size_t k = 0; k < max_row; k++) {
            size_t idx = read_count(in, "row entry");
            if (idx == 0) {
                continue;
            }
            if (idx > n) {
                throw std::invalid_argument("alist: column index out of range");
            }
            if (by_rows.get(r, idx - 1)) {
                throw std::invalid_argument("alist: duplicate entry in row list");
            }
            by_rows.set(r, idx - 1, true);
            seen++;
        }
        if (seen != row_deg[r]) {
            throw std::invalid_argument("alist: row " + std::to_string(r + 1) + " degree mismatch");
        }
    }

    if (!(by_cols == by_rows)) {
        throw std::invalid_argument("alist: column and row sections disagree");
    }
    return by_rows;
}

BinaryMatrix from_alist(const std::string &text) {
    std::istringstream ss(text);
    return read_alist(ss);
}

}  // namespace qgkp
