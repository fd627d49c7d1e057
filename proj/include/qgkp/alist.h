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

#ifndef QGKP_ALIST_H
#define QGKP_ALIST_H

#include <iosfwd>
#include <string>

#include "qgkp/gf2.h"

namespace qgkp {

/// Writes `h` (m×n) in MacKay's alist format:
///
///     n m
///     max_col_degree max_row_degree
///     <n column degrees>
///     <m row degrees>
///     <n lines: 1-based row indices of each column, 0-padded to max_col_degree>
///     <m lines: 1-based column indices of each row, 0-padded to max_row_degree>
void write_alist(std::ostream &out, const BinaryMatrix &h);
std::string to_alist(const BinaryMatrix &h);

/// Parses an alist document. Zero padding entries are skipped. The column and
/// row sections must describe the same matrix; any disagreement throws.
BinaryMatrix read_alist(std::istream &in);
BinaryMatrix from_alist(const std::string &text);

}  // namespace qgkp

#endif
