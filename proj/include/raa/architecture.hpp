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

namespace raa {

enum class Architecture { raa, hbf };

constexpr const char *to_string(Architecture architecture) {
    return architecture == Architecture::raa ? "raa" : "hbf";
}

} // namespace raa
