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

#include "gridroute/schedule.hpp"

#include <algorithm>

namespace gridroute {

namespace {

void check_layer(const Grid& grid, const Layer& layer, int layer_index,
                 std::vector<int>& mark, int stamp) {
    for (const auto& swap : layer) {
        if (!grid.adjacent(swap.a, swap.b)) {
            throw InvalidLayerError("layer " + std::to_string(layer_index) + ": " +
                                    to_string(swap.a) + "-" + to_string(swap.b) +
                                    " is not a grid edge");
        }
        for (const Vertex* v : {&swap.a, &swap.b}) {
            auto& cell = mark[static_cast<std::size_t>(grid.index(*v))];
            if (cell == stamp) {
                throw InvalidLayerError("layer " + std::to_string(layer_index) +
                                        " reuses vertex " + to_string(*v));
            }
            cell = stamp;
        }
    }
}

}  // namespace

Placement apply_schedule(const Grid& grid, const SwapSchedule& schedule,
                         const Placement& start) {
    const int count = grid.vertex_count();
    if (static_cast<int>(start.pos.size()) != count) {
        throw InvalidPermutationError("placement size does not match grid");
    }

    // occupant[vertex] = token, the inverse of pos.
    std::vector<int> occupant(static_cast<std::size_t>(count), -1);
    for (int token = 0; token < count; ++token) {
        const int at = start.pos[static_cast<std::size_t>(token)];
        if (at < 0 || at >= count || occupant[static_cast<std::size_t>(at)] != -1) {
            throw InvalidPermutationError("placement is not a bijection");
        }
        occupant[static_cast<std::size_t>(at)] = token;
    }

    std::vector<int> mark(static_cast<std::size_t>(count), -1);
    int stamp = 0;
    for (const auto& layer : schedule.layers) {
        check_layer(grid, layer, stamp, mark, stamp);
        ++stamp;
        for (const auto& swap : layer) {
            std::swap(occupant[static_cast<std::size_t>(grid.index(swap.a))],
                      occupant[static_cast<std::size_t>(grid.index(swap.b))]);
        }
    }

    Placement result;
    result.pos.resize(static_cast<std::size_t>(count));
    for (int v = 0; v < count; ++v) {
        result.pos[static_cast<std::size_t>(occupant[static_cast<std::size_t>(v)])] = v;
    }
    return result;
}

VerifyReport verify_schedule(const Grid& grid, const Permutation& pi,
                             const SwapSchedule& schedule) {
    const Placement end = apply_schedule(grid, schedule, Placement::identity(grid));
    for (int v = 0; v < grid.vertex_count(); ++v) {
        if (end.pos[static_cast<std::size_t>(v)] != pi.image_index(v)) {
            return VerifyReport{false, grid.vertex(v)};
        }
    }
    return VerifyReport{true, std::nullopt};
}

std::pair<Grid, Permutation> transpose(const Grid& grid, const Permutation& pi) {
    const Grid tgrid(grid.cols(), grid.rows());
    std::vector<int> dest(static_cast<std::size_t>(tgrid.vertex_count()));
    for (int v = 0; v < grid.vertex_count(); ++v) {
        const Vertex src = grid.vertex(v);
        const Vertex dst = pi.image(src);
        dest[static_cast<std::size_t>(tgrid.index(Vertex{src.col, src.row}))] =
            tgrid.index(Vertex{dst.col, dst.row});
    }
    return {tgrid, Permutation(tgrid, std::move(dest))};
}

namespace {

// Shared ASAP list scheduler: swaps are placed in sequence order, each at
// 1 + max(last layer touching either endpoint). Relative order of
// vertex-sharing swaps is preserved, so the placement function is unchanged.
SwapSchedule asap_layers(const Grid& grid, const SwapSequence& seq) {
    std::vector<int> last(static_cast<std::size_t>(grid.vertex_count()), 0);
    SwapSchedule out;
    for (const auto& swap : seq) {
        const auto ia = static_cast<std::size_t>(grid.index(swap.a));
        const auto ib = static_cast<std::size_t>(grid.index(swap.b));
        const int layer = std::max(last[ia], last[ib]) + 1;
        if (layer > out.depth()) {
            out.layers.emplace_back();
        }
        out.layers[static_cast<std::size_t>(layer - 1)].push_back(swap);
        last[ia] = layer;
        last[ib] = layer;
    }
    for (auto& layer : out.layers) {
        std::sort(layer.begin(), layer.end());
    }
    return out;
}

}  // namespace

SwapSchedule layerize(const Grid& grid, const SwapSequence& seq) {
    return asap_layers(grid, seq);
}

SwapSchedule compact_schedule(const Grid& grid, const SwapSchedule& schedule) {
    SwapSequence flat;
    flat.reserve(schedule.swap_count());
    for (const auto& layer : schedule.layers) {
        for (const auto& swap : layer) {
            flat.push_back(swap);
        }
    }
    return asap_layers(grid, flat);
}

}  // namespace gridroute
