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

#include <array>
#include <chrono>
#include <string>
#include <vector>

#include "gridroute/matching.hpp"
#include "gridroute/schedule.hpp"
#include "gridroute/types.hpp"

namespace gridroute {

/// Per-column intermediate-row assignments for the first routing round:
/// sigma[j-1][i-1] = r means the token starting at (i,j) is routed to row r
/// within its column. Each sigma_j must be a bijection on [m], and the set
/// must satisfy the Hall property: for every row r, the destination columns
/// of the tokens routed to r are pairwise distinct.
struct ColumnPermutationSet {
    std::vector<std::vector<int>> sigma;
};

/// The three rounds of column-row-column routing, kept separate so callers
/// can inspect intermediate placements.
struct GridRouteRounds {
    std::array<std::vector<Layer>, 3> rounds;

    SwapSchedule concat() const;
};

// Three-round routing: round 1 routes each column j by sigma_j, round 2
// routes each row to destination columns, round 3 routes each column to
// destination rows. Per-path routing is odd-even transposition; rounds are
// unioned layer-by-layer across the parallel paths. Throws
// HallViolationError if the sigmas do not satisfy the precondition.
GridRouteRounds grid_route_rounds(const Grid& grid, const Permutation& pi,
                                  const ColumnPermutationSet& sigmas);
SwapSchedule grid_route(const Grid& grid, const Permutation& pi,
                        const ColumnPermutationSet& sigmas);

// First failing row if the Hall property does not hold, for diagnostics.
std::optional<int> hall_violation(const Grid& grid, const Permutation& pi,
                                  const ColumnPermutationSet& sigmas);

// The doubling window search: peels perfect matchings from the full column
// multigraph through windows [r, min(r+w,m)] of doubling height w, starting
// each sweep at r = 1 on the residual edge set. Returns exactly m matchings
// partitioning the m*n edges, in discovery order.
std::vector<ColumnPerfectMatching> peel_matchings_doubling(const Grid& grid,
                                                           const Permutation& pi);

// Builds sigmas from a full matching decomposition plus a matching->row
// assignment (row_of[k] is the 1-based row of matchings[k]).
ColumnPermutationSet sigmas_from_assignment(
    const Grid& grid, const std::vector<ColumnPerfectMatching>& matchings,
    const std::vector<int>& row_of);

// Locality-aware routing: doubling-window decomposition, then a bottleneck
// assignment of matchings to rows under the delta weight, then three-round
// routing with the induced sigmas.
SwapSchedule local_grid_route(const Grid& grid, const Permutation& pi);

// Baseline: peels matchings from the full window in discovery order and
// assigns matching k to row k.
SwapSchedule naive_grid_route(const Grid& grid, const Permutation& pi);

struct RouteOptions {
    bool use_transpose = true;
    bool naive_fallback = true;
    bool compact = false;
};

struct RouteResult {
    SwapSchedule schedule;
    std::string algorithm;  // "local", "local_transposed", or "naive"
    int depth = 0;
    std::size_t swaps = 0;
    std::chrono::microseconds elapsed{0};
};

// Main procedure: locality-aware routing on (G,pi) and, when requested, on
// the transposed pair with layers mapped back, plus the naive fallback.
// Returns the minimum-depth candidate; ties prefer the untransposed
// orientation, then the locality-aware algorithm. Compaction is applied
// last if requested.
RouteResult route(const Grid& grid, const Permutation& pi,
                  const RouteOptions& options = {});

}  // namespace gridroute
