// Copyright 2026 The gridroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "gridroute/schedule.hpp"
#include "gridroute/types.hpp"

namespace gridroute {

// On-disk formats are 0-based row-major JSON:
//   permutation: {"rows": m, "cols": n, "perm": [d_0, ..., d_{mn-1}]}
//     where slot k = i*n + j holds the destination's row-major index.
//   schedule:    {"rows", "cols", "algorithm",
//                 "layers": [[[[i,j],[i2,j2]], ...], ...], "depth", "swaps"}
// Internal coordinates are 1-based; conversion happens here and only here.

struct LoadedSchedule {
    Grid grid;
    std::string algorithm;
    SwapSchedule schedule;
};

// Throws ParseError when the file is missing, is not valid JSON, or lacks
// the documented shape; throws InvalidPermutationError when the structure
// is fine but "perm" is not a bijection.
Permutation load_permutation(const std::string& path);

// Same error contract; swap endpoints are range-checked here, while
// adjacency and matching constraints are enforced by apply_schedule.
LoadedSchedule load_schedule(const std::string& path);

std::string permutation_to_json(const Permutation& pi);
std::string schedule_to_json(const Grid& grid, const std::string& algorithm,
                             const SwapSchedule& schedule);

// Writes via a temporary file in the destination directory plus an atomic
// rename, so readers never observe a partial file.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace gridroute
