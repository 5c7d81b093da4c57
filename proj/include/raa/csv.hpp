// SPDX-License-Identifier: Apache-2.0
//
// raasim: ray antenna array simulation library
// Copyright (C) 2026 The raasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace raa {

/// Round-trip-exact decimal form of a double ("%.17g"). All CSV emitters use
/// this so identical runs produce byte-identical files.
std::string format_number(double value);

/// Fixed-precision form ("%.*f"), for report-precision columns.
std::string format_fixed(double value, int decimals);

/// Writes each line prefixed with "# ".
void write_comment_header(std::ostream &out, std::span<const std::string> lines);

} // namespace raa
