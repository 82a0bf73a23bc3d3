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

#include <cstdint>
#include <random>
#include <string>

#include "gridroute/types.hpp"

namespace gridroute {

// Seeded mt19937_64 plus bounded sampling via rejection, so draws are
// uniform (no modulo bias) and reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [0, bound), bound >= 1.
    std::uint64_t bounded(std::uint64_t bound);

    static constexpr const char* name() { return "mt19937_64"; }

private:
    std::mt19937_64 engine_;
};

enum class FamilyKind {
    uniform,            // uniform random permutation of all vertices
    block_local,        // independent uniform shuffles inside disjoint tiles
    overlapping_block,  // sliding-window shuffles composed across the grid
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::uniform;
    int block_h = 2;
    int block_w = 2;
    int stride = 1;  // overlapping_block only
    std::uint64_t seed = 0;
};

// Accepts "uniform", "block_local[:HxW]", "overlapping_block[:HxW[:S]]", and
// "identity" (alias for 1x1 block_local, i.e. the identity permutation).
// The returned spec has seed 0; callers fill it in per trial.
// Throws InvalidSpecError on anything else.
FamilySpec parse_family(const std::string& text);

// Canonical display name, e.g. "uniform", "block_local:2x2",
// "overlapping_block:3x3:2", or "identity" for 1x1 blocks.
std::string family_name(const FamilySpec& spec);

// Draws the family's permutation on `grid`; the same (grid, spec) pair
// always yields the same output. Throws InvalidSpecError when the block
// does not fit the grid or the stride exceeds the block dimensions.
Permutation generate(const Grid& grid, const FamilySpec& spec);

}  // namespace gridroute
