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

#include <doctest.h>

#include <numeric>
#include <vector>

#include "gridroute/perm_families.hpp"
#include "gridroute/schedule.hpp"
#include "gridroute/token_swap.hpp"
#include "gridroute/types.hpp"

#include "oracles.hpp"

using namespace gridroute;

namespace {

// Applies the swaps one by one and reports whether every token lands on its
// pi-destination.
bool realizes(const Grid& g, const Permutation& pi, const SwapSequence& seq) {
    std::vector<int> occupant(static_cast<std::size_t>(g.vertex_count()));
    std::iota(occupant.begin(), occupant.end(), 0);
    for (const Swap& s : seq) {
        if (!g.adjacent(s.a, s.b)) return false;
        std::swap(occupant[static_cast<std::size_t>(g.index(s.a))],
                  occupant[static_cast<std::size_t>(g.index(s.b))]);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int token = occupant[static_cast<std::size_t>(v)];
        if (pi.image_index(token) != v) return false;
    }
    return true;
}

int distance_lower_bound(const Grid& g, const Permutation& pi) {
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        total += g.l1_distance(g.vertex(v), g.vertex(pi.image_index(v)));
    }
    return (total + 1) / 2;
}

}  // namespace

TEST_CASE("token_swap: identity produces no swaps") {
    const Grid g(3, 3);
    CHECK(token_swap(g, Permutation::identity(g)).empty());
}

TEST_CASE("token_swap: one adjacent transposition is one swap") {
    const Grid g(2, 2);
    const Permutation pi(g, {1, 0, 2, 3});
    const SwapSequence seq = token_swap(g, pi);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0] == Swap(Vertex{1, 1}, Vertex{1, 2}));
}

TEST_CASE("token_swap: cyclic shift on a 1x3 path meets the serial optimum") {
    const Grid g(1, 3);
    // Each token shifts one position left, the leftmost wrapping around.
    const Permutation pi(g, {2, 0, 1});
    const SwapSequence seq = token_swap(g, pi);
    CHECK(realizes(g, pi, seq));
    CHECK(seq.size() == 2);
    CHECK(oracles::bfs_serial_optimum(1, 3, {2, 0, 1}) == 2);
}

TEST_CASE("token_swap: end swap on a 1x3 path needs an unhappy step") {
    const Grid g(1, 3);
    // Exchanging the endpoints around a settled middle token exercises the
    // no-cycle branch: the first move must displace the settled token.
    const Permutation pi(g, {2, 1, 0});
    const SwapSequence seq = token_swap(g, pi);
    CHECK(realizes(g, pi, seq));
    CHECK(seq.size() == 3);
    CHECK(oracles::bfs_serial_optimum(1, 3, {2, 1, 0}) == 3);
}

TEST_CASE("token_swap: exhaustive 2x2 against the BFS oracle") {
    const Grid g(2, 2);
    oracles::for_each_permutation(4, [&](const std::vector<int>& dest) {
        const Permutation pi(g, dest);
        const SwapSequence seq = token_swap(g, pi);
        CHECK(realizes(g, pi, seq));
        const int optimum = oracles::bfs_serial_optimum(2, 2, dest);
        CHECK(static_cast<int>(seq.size()) <= 4 * optimum);
        CHECK(static_cast<int>(seq.size()) >= distance_lower_bound(g, pi));
    });
}

TEST_CASE("token_swap: random grids terminate, verify, and layerize") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {5, 3}, {2, 9}}) {
        const Grid g(m, n);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            FamilySpec spec;
            spec.kind = FamilyKind::uniform;
            spec.seed = seed;
            const Permutation pi = generate(g, spec);
            const SwapSequence seq = token_swap(g, pi);
            CHECK(realizes(g, pi, seq));
            CHECK(static_cast<int>(seq.size()) >= distance_lower_bound(g, pi));
            // The layerized schedule must realize the same permutation.
            const SwapSchedule schedule = layerize(g, seq);
            CHECK(verify_schedule(g, pi, schedule).ok);
            CHECK(schedule.swap_count() == seq.size());
        }
    }
}

TEST_CASE("token_swap is deterministic") {
    const Grid g(5, 5);
    FamilySpec spec;
    spec.kind = FamilyKind::uniform;
    spec.seed = 7;
    const Permutation pi = generate(g, spec);
    CHECK(token_swap(g, pi) == token_swap(g, pi));
}
