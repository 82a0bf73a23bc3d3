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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gridroute/types.hpp"

namespace gridroute {

/// An unordered pair of adjacent grid vertices, normalized so a < b.
struct Swap {
    Vertex a;
    Vertex b;

    Swap() = default;
    Swap(Vertex x, Vertex y) {
        if (y < x) {
            std::swap(x, y);
        }
        a = x;
        b = y;
    }

    friend auto operator<=>(const Swap&, const Swap&) = default;
};

using Layer = std::vector<Swap>;
using SwapSequence = std::vector<Swap>;

/// An ordered sequence of swap layers; each layer must be a matching of the
/// grid. depth = layer count, size = total swaps.
struct SwapSchedule {
    std::vector<Layer> layers;

    int depth() const { return static_cast<int>(layers.size()); }

    std::size_t swap_count() const {
        std::size_t total = 0;
        for (const auto& layer : layers) {
            total += layer.size();
        }
        return total;
    }
};

struct VerifyReport {
    bool ok = false;
    std::optional<Vertex> first_mismatch;
};

// Exchanges the two tokens at each swap's endpoints, layer by layer in
// order. Throws InvalidLayerError if a layer reuses a vertex or contains a
// non-edge.
Placement apply_schedule(const Grid& grid, const SwapSchedule& schedule,
                         const Placement& start);

// ok iff applying the schedule to the identity placement sends the token of
// every vertex v to pi(v). On failure reports the first failing vertex in
// row-major order.
VerifyReport verify_schedule(const Grid& grid, const Permutation& pi,
                             const SwapSchedule& schedule);

// The n x m grid together with pi^T, where pi^T(j,i) = (j',i') iff
// pi(i,j) = (i',j'). Involution.
std::pair<Grid, Permutation> transpose(const Grid& grid, const Permutation& pi);

// ASAP list scheduling of a serial swap sequence: each swap lands at layer
// 1 + max(last layer touching either endpoint). Placement semantics match
// serial application; size is preserved.
SwapSchedule layerize(const Grid& grid, const SwapSequence& seq);

// Removes empty layers and hoists each swap to the earliest layer not
// blocked by an earlier vertex-sharing swap. The induced placement function
// is unchanged and the depth never increases.
SwapSchedule compact_schedule(const Grid& grid, const SwapSchedule& schedule);

}  // namespace gridroute
