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

#include "gridroute/token_swap.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gridroute {

namespace {

constexpr int kNoPointer = -1;

// Lexicographically smallest neighbor of `at` that is strictly closer to
// `dest` in L1 distance. On a grid the four neighbor offsets in (row, col)
// order are up, left, right, down; at least one of them is closer whenever
// the token is displaced.
int desire_pointer(const Grid& grid, const Vertex& at, const Vertex& dest) {
    static constexpr std::array<std::pair<int, int>, 4> kOffsets{
        {{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};
    const int here = grid.l1_distance(at, dest);
    for (const auto& [dr, dc] : kOffsets) {
        Vertex next{at.row + dr, at.col + dc};
        if (!grid.contains(next)) continue;
        if (grid.l1_distance(next, dest) < here) return grid.index(next);
    }
    throw std::logic_error("displaced token has no improving neighbor");
}

}  // namespace

SwapSequence token_swap(const Grid& grid, const Permutation& pi) {
    const int count = grid.vertex_count();
    // occupant[v] = token sitting at vertex v; a token is named by the index
    // of its start vertex, and wants to reach dest[token].
    std::vector<int> occupant(count);
    std::vector<int> dest(count);
    for (int v = 0; v < count; ++v) {
        occupant[v] = v;
        dest[v] = pi.image_index(v);
    }

    SwapSequence swaps;
    const auto do_swap = [&](int u, int v) {
        std::swap(occupant[u], occupant[v]);
        swaps.push_back(Swap(grid.vertex(u), grid.vertex(v)));
    };

    std::vector<int> ptr(count, kNoPointer);
    std::vector<int> indegree(count, 0);
    std::vector<std::int8_t> mark(count, 0);

    // Every resolution either rotates a cycle (all tokens on it advance) or
    // moves one displaced token forward at the cost of nudging a settled one,
    // and the settled token can never land on its own destination, so the
    // process provably terminates; the cap is a defensive bug guard only.
    std::int64_t budget =
        16LL * count * (grid.rows() + grid.cols()) + 64;
    while (true) {
        bool any_unhappy = false;
        for (int v = 0; v < count; ++v) {
            const int home = dest[occupant[v]];
            ptr[v] = home == v ? kNoPointer
                               : desire_pointer(grid, grid.vertex(v),
                                                grid.vertex(home));
            indegree[v] = 0;
            any_unhappy = any_unhappy || ptr[v] != kNoPointer;
        }
        if (!any_unhappy) break;
        if (--budget < 0) {
            throw std::logic_error("token swapping failed to terminate");
        }

        // Hunt for a directed cycle first, scanning start vertices in index
        // order so the resolution picked is deterministic.
        std::fill(mark.begin(), mark.end(), std::int8_t{0});
        std::vector<int> walk;
        std::vector<int> cycle;
        for (int s = 0; s < count && cycle.empty(); ++s) {
            if (mark[s] != 0 || ptr[s] == kNoPointer) continue;
            walk.clear();
            int v = s;
            while (v != kNoPointer && mark[v] == 0) {
                mark[v] = 1;
                walk.push_back(v);
                v = ptr[v];
            }
            if (v != kNoPointer && mark[v] == 1) {
                // Found a vertex from the current walk: the tail of `walk`
                // starting at v is a cycle.
                std::size_t at = walk.size();
                while (at > 0 && walk[at - 1] != v) --at;
                cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(at) - 1,
                             walk.end());
            }
            for (int w : walk) mark[w] = 2;
        }

        if (!cycle.empty()) {
            // Rotate every token on the cycle one step along its desire edge:
            // swapping the edges in reverse order achieves exactly that.
            for (std::size_t i = cycle.size() - 1; i > 0; --i) {
                do_swap(cycle[i - 1], cycle[i]);
            }
            continue;
        }

        // No cycle: the desire graph restricted to displaced vertices is a
        // DAG, so a source exists. Follow the maximal path from the smallest
        // source to its settled sink and perform the one swap on the final
        // edge; the displaced token advances while the settled one retreats.
        for (int v = 0; v < count; ++v) {
            if (ptr[v] != kNoPointer) ++indegree[ptr[v]];
        }
        int source = kNoPointer;
        for (int v = 0; v < count; ++v) {
            if (ptr[v] != kNoPointer && indegree[v] == 0) {
                source = v;
                break;
            }
        }
        if (source == kNoPointer) {
            throw std::logic_error("acyclic desire graph without a source");
        }
        int tail = source;
        while (ptr[ptr[tail]] != kNoPointer) tail = ptr[tail];
        do_swap(tail, ptr[tail]);
    }
    return swaps;
}

}  // namespace gridroute
