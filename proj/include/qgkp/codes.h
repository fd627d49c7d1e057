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

#ifndef QGKP_CODES_H
#define QGKP_CODES_H

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgkp/gf2.h"

namespace qgkp {

/// Array of circulant shift exponents. Entry -1 denotes an all-zero block;
/// entry b >= 0 denotes the L×L identity cyclically right-shifted by b.
class BaseMatrix {
   public:
    BaseMatrix() = default;
    BaseMatrix(size_t rows, size_t cols, size_t lift_size, std::vector<int> shifts);
    static BaseMatrix from_rows(const std::vector<std::vector<int>> &rows, size_t lift_size);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t lift_size() const {
        return lift_size_;
    }
    int at(size_t r, size_t c) const {
        return shifts_[r * cols_ + c];
    }
    const std::vector<int> &shifts() const {
        return shifts_;
    }

    bool operator==(const BaseMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t lift_size_ = 1;
    std::vector<int> shifts_;
};

/// L×L cyclic permutation matrix; shift -1 gives the zero matrix.
BinaryMatrix cpm_expand(int shift, size_t lift_size);

/// Expands every base entry into its L×L circulant block.
BinaryMatrix lift(const BaseMatrix &base);

/// Conjugate transpose over the circulant ring: entry (j, i) = (L - b_ij) mod L.
BaseMatrix conjugate_transpose_base(const BaseMatrix &base);

/// B ⊗ I_k over the shift ring.
BaseMatrix kron_identity_right(const BaseMatrix &base, size_t k);
/// I_k ⊗ B over the shift ring.
BaseMatrix kron_identity_left(size_t k, const BaseMatrix &base);
/// [a, b], requiring equal row counts and lift sizes.
BaseMatrix hstack(const BaseMatrix &a, const BaseMatrix &b);

enum class CodeFamily { LP04, LP118, Custom };
std::string_view family_name(CodeFamily family);

inline constexpr size_t kAcyclic = std::numeric_limits<size_t>::max();

/// Length of the shortest cycle in the Tanner graph of `h`, or kAcyclic.
size_t girth(const BinaryMatrix &h);

struct CssCode {
    std::string name;
    CodeFamily family = CodeFamily::Custom;
    BinaryMatrix hx;
    BinaryMatrix hz;
    size_t n = 0;
    size_t k = 0;
    size_t girth_x = kAcyclic;
    size_t girth_z = kAcyclic;
    /// Upper bound on the minimum distance as tabulated; 0 when unknown.
    size_t distance_bound = 0;
    std::optional<BaseMatrix> base;
    /// Row-reduced X stabilizers; X residuals in their span are harmless.
    RowReduced degeneracy_basis_x;
    /// Row-reduced Z stabilizers.
    RowReduced degeneracy_basis_z;

    size_t girth() const {
        return girth_x < girth_z ? girth_x : girth_z;
    }
    double rate() const {
        return n ? static_cast<double>(k) / static_cast<double>(n) : 0.0;
    }
    size_t lift_size() const {
        return base ? base->lift_size() : 1;
    }
};

/// Validates the CSS condition and fills n, k, girths and degeneracy bases.
/// Throws std::invalid_argument if hx·hz^T != 0 or the widths differ.
CssCode make_css_code(BinaryMatrix hx,
                      BinaryMatrix hz,
                      std::string name,
                      CodeFamily family = CodeFamily::Custom,
                      size_t distance_bound = 0);

/// Lifted product LP(B, B*):
///   Bx = [B ⊗ I_nb, I_mb ⊗ B*],  Bz = [I_nb ⊗ B, B* ⊗ I_mb].
CssCode lifted_product(const BaseMatrix &base,
                       std::string name = "LP",
                       CodeFamily family = CodeFamily::Custom,
                       size_t distance_bound = 0);

BinaryMatrix steane_parity_check();

/// Base matrix of the (3,5)-regular [155,64,20] Tanner code, L = 31.
BaseMatrix tanner_base_matrix();

/// Registry names, in table order.
const std::vector<std::string> &builtin_code_names();
/// Base matrix behind a builtin LP code; nullopt for STEANE.
std::optional<BaseMatrix> builtin_base_matrix(std::string_view name);
/// Throws std::invalid_argument("unknown code: ...") for unregistered names.
CssCode builtin_code(std::string_view name);

/// Plain-text grid: a header line "rows cols L" followed by one line of
/// space-separated shifts per base row.
void write_base_matrix(std::ostream &out, const BaseMatrix &base);
BaseMatrix read_base_matrix(std::istream &in);

}  // namespace qgkp

#endif
