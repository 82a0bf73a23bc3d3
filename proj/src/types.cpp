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

#include "gridroute/types.hpp"

#include <numeric>

namespace gridroute {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

Permutation::Permutation(const Grid& grid, std::vector<int> dest)
    : grid_(grid), dest_(std::move(dest)) {
    const int count = grid_.vertex_count();
    if (static_cast<int>(dest_.size()) != count) {
        throw InvalidPermutationError("permutation has " + std::to_string(dest_.size()) +
                                      " entries, expected " + std::to_string(count));
    }
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    for (int v = 0; v < count; ++v) {
        const int d = dest_[static_cast<std::size_t>(v)];
        if (d < 0 || d >= count) {
            throw InvalidPermutationError("destination index " + std::to_string(d) +
                                          " out of range for vertex " +
                                          to_string(grid_.vertex(v)));
        }
        if (seen[static_cast<std::size_t>(d)]) {
            throw InvalidPermutationError("destination " + to_string(grid_.vertex(d)) +
                                          " appears twice; not a bijection");
        }
        seen[static_cast<std::size_t>(d)] = 1;
    }
}

Permutation Permutation::identity(const Grid& grid) {
    std::vector<int> dest(static_cast<std::size_t>(grid.vertex_count()));
    std::iota(dest.begin(), dest.end(), 0);
    return Permutation(grid, std::move(dest));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < grid_.vertex_count(); ++v) {
        if (dest_[static_cast<std::size_t>(v)] != v) {
            return false;
        }
    }
    return true;
}

Placement Placement::identity(const Grid& grid) {
    Placement p;
    p.pos.resize(static_cast<std::size_t>(grid.vertex_count()));
    std::iota(p.pos.begin(), p.pos.end(), 0);
    return p;
}

}  // namespace gridroute
