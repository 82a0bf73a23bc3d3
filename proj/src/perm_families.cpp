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

#include "gridroute/perm_families.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <vector>

namespace gridroute {

std::uint64_t Rng::bounded(std::uint64_t bound) {
    if (bound == 0) throw InvalidSpecError("bounded(0) is meaningless");
    // Reject the tail of the generator range that would bias small residues.
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t r = engine_();
    while (rem != 0 && r > std::numeric_limits<std::uint64_t>::max() - rem) {
        r = engine_();
    }
    return r % bound;
}

namespace {

int parse_positive(std::string_view text, const char* what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
        throw InvalidSpecError(std::string(what) + " must be a positive integer, got '" +
                               std::string(text) + "'");
    }
    return value;
}

std::pair<int, int> parse_dims(std::string_view text) {
    const auto x = text.find('x');
    if (x == std::string_view::npos) {
        throw InvalidSpecError("block size must look like HxW, got '" +
                               std::string(text) + "'");
    }
    return {parse_positive(text.substr(0, x), "block height"),
            parse_positive(text.substr(x + 1), "block width")};
}

// Fisher-Yates over `values` drawing from `rng`.
void shuffle_values(std::vector<int>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(values[i - 1], values[j]);
    }
}

// Shuffles the destinations currently assigned to the window
// [r0, r0+h) x [c0, c0+w), in place; composes with prior shuffles.
void shuffle_window(const Grid& grid, std::vector<int>& dest, int r0, int c0,
                    int h, int w, Rng& rng) {
    std::vector<std::size_t> slots;
    slots.reserve(static_cast<std::size_t>(h) * static_cast<std::size_t>(w));
    for (int i = r0; i < r0 + h; ++i) {
        for (int j = c0; j < c0 + w; ++j) {
            slots.push_back(static_cast<std::size_t>(grid.index(Vertex{i, j})));
        }
    }
    std::vector<int> values;
    values.reserve(slots.size());
    for (auto s : slots) values.push_back(dest[s]);
    shuffle_values(values, rng);
    for (std::size_t k = 0; k < slots.size(); ++k) dest[slots[k]] = values[k];
}

void check_fits(const Grid& grid, const FamilySpec& spec) {
    if (spec.block_h < 1 || spec.block_w < 1 || spec.stride < 1) {
        throw InvalidSpecError("block dimensions and stride must be positive");
    }
    if (spec.kind == FamilyKind::uniform) return;
    if (spec.block_h > grid.rows() || spec.block_w > grid.cols()) {
        throw InvalidSpecError("block " + std::to_string(spec.block_h) + "x" +
                               std::to_string(spec.block_w) +
                               " does not fit a " + std::to_string(grid.rows()) +
                               "x" + std::to_string(grid.cols()) + " grid");
    }
    if (spec.kind == FamilyKind::overlapping_block &&
        spec.stride > std::min(spec.block_h, spec.block_w)) {
        throw InvalidSpecError("stride must not exceed the block dimensions");
    }
}

// Window start offsets along an axis of `extent` for windows of size `size`
// stepped by `stride`, with a final clamped stop so the far edge is covered.
std::vector<int> window_starts(int extent, int size, int stride) {
    std::vector<int> starts;
    for (int s = 1; s + size - 1 <= extent; s += stride) starts.push_back(s);
    const int last = extent - size + 1;
    if (starts.empty() || starts.back() != last) starts.push_back(last);
    return starts;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    std::vector<std::string_view> parts;
    std::string_view rest{text};
    while (true) {
        const auto colon = rest.find(':');
        parts.push_back(rest.substr(0, colon));
        if (colon == std::string_view::npos) break;
        rest.remove_prefix(colon + 1);
    }

    FamilySpec spec;
    spec.seed = 0;
    const std::string_view head = parts[0];
    if (head == "identity") {
        if (parts.size() != 1) {
            throw InvalidSpecError("identity takes no parameters");
        }
        spec.kind = FamilyKind::block_local;
        spec.block_h = spec.block_w = 1;
        return spec;
    }
    if (head == "uniform") {
        if (parts.size() != 1) {
            throw InvalidSpecError("uniform takes no parameters");
        }
        spec.kind = FamilyKind::uniform;
        return spec;
    }
    if (head == "block_local") {
        if (parts.size() > 2) {
            throw InvalidSpecError("block_local takes at most one :HxW parameter");
        }
        spec.kind = FamilyKind::block_local;
        if (parts.size() == 2) {
            std::tie(spec.block_h, spec.block_w) = parse_dims(parts[1]);
        }
        return spec;
    }
    if (head == "overlapping_block") {
        if (parts.size() > 3) {
            throw InvalidSpecError(
                "overlapping_block takes at most :HxW:stride parameters");
        }
        spec.kind = FamilyKind::overlapping_block;
        if (parts.size() >= 2) {
            std::tie(spec.block_h, spec.block_w) = parse_dims(parts[1]);
        }
        if (parts.size() == 3) {
            spec.stride = parse_positive(parts[2], "stride");
        }
        return spec;
    }
    throw InvalidSpecError("unknown permutation family '" + text + "'");
}

std::string family_name(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::uniform:
            return "uniform";
        case FamilyKind::block_local:
            if (spec.block_h == 1 && spec.block_w == 1) return "identity";
            return "block_local:" + std::to_string(spec.block_h) + "x" +
                   std::to_string(spec.block_w);
        case FamilyKind::overlapping_block:
            return "overlapping_block:" + std::to_string(spec.block_h) + "x" +
                   std::to_string(spec.block_w) + ":" +
                   std::to_string(spec.stride);
    }
    throw InvalidSpecError("unknown family kind");
}

Permutation generate(const Grid& grid, const FamilySpec& spec) {
    check_fits(grid, spec);
    Rng rng(spec.seed);

    std::vector<int> dest(static_cast<std::size_t>(grid.vertex_count()));
    std::iota(dest.begin(), dest.end(), 0);

    switch (spec.kind) {
        case FamilyKind::uniform:
            shuffle_values(dest, rng);
            break;
        case FamilyKind::block_local:
            // Disjoint tiles anchored every block_h rows / block_w columns;
            // edge tiles shrink to whatever remains.
            for (int r0 = 1; r0 <= grid.rows(); r0 += spec.block_h) {
                for (int c0 = 1; c0 <= grid.cols(); c0 += spec.block_w) {
                    const int h = std::min(spec.block_h, grid.rows() - r0 + 1);
                    const int w = std::min(spec.block_w, grid.cols() - c0 + 1);
                    shuffle_window(grid, dest, r0, c0, h, w, rng);
                }
            }
            break;
        case FamilyKind::overlapping_block:
            for (int r0 :
                 window_starts(grid.rows(), spec.block_h, spec.stride)) {
                for (int c0 :
                     window_starts(grid.cols(), spec.block_w, spec.stride)) {
                    shuffle_window(grid, dest, r0, c0, spec.block_h,
                                   spec.block_w, rng);
                }
            }
            break;
    }

    return Permutation(grid, std::move(dest));
}

}  // namespace gridroute
