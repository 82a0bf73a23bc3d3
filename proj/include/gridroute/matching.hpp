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
#include <optional>
#include <vector>

#include "gridroute/types.hpp"

namespace gridroute {

/// One edge of the bipartite column multigraph: column `left` connects to
/// column `right` with a (source row, destination row) label. Rows and
/// columns are 1-based.
struct ColumnEdge {
    int left = 0;
    int right = 0;
    int src_row = 0;
    int dst_row = 0;

    friend auto operator<=>(const ColumnEdge&, const ColumnEdge&) = default;
};

/// Bipartite multigraph on the columns [n] of a grid: one edge per source
/// vertex (i,j) with a <= i <= b, joining columns j and pi(i,j).col and
/// labeled by the (source, destination) row pair. For the full window [1,m]
/// the graph is m-regular on both sides.
class ColumnMultigraph {
  public:
    ColumnMultigraph(int column_count, std::vector<ColumnEdge> edges)
        : column_count_(column_count), edges_(std::move(edges)) {}

    int column_count() const { return column_count_; }
    const std::vector<ColumnEdge>& edges() const { return edges_; }

  private:
    int column_count_;
    std::vector<ColumnEdge> edges_;
};

/// n edges covering each left column and each right column exactly once,
/// sorted by left column.
using ColumnPerfectMatching = std::vector<ColumnEdge>;

ColumnMultigraph build_column_graph(const Grid& grid, const Permutation& pi,
                                    int a, int b);

// Perfect matching of the multigraph if one exists. Deterministic: the
// augmenting-path search scans left columns in ascending order with
// neighbors in ascending column order, and among parallel edges the
// lexicographically smallest (src_row, dst_row) label is chosen.
std::optional<ColumnPerfectMatching> find_perfect_matching(const ColumnMultigraph& g);

// Repeatedly extracts a perfect matching and deletes its edges until none
// exists. On a d-regular multigraph this yields exactly d matchings
// partitioning the edge set.
std::vector<ColumnPerfectMatching> peel_all_matchings(const ColumnMultigraph& g);

// Locality score of a matching relative to row r:
// sum over edges of |src_row - r| + |dst_row - r|.
std::int64_t delta(const ColumnPerfectMatching& matching, int r);

struct BottleneckAssignment {
    // col_of[k] = 0-based column paired with row k of the weight matrix.
    std::vector<int> col_of;
    std::int64_t bottleneck = 0;
};

// Maximum cardinality bottleneck bipartite matching on a complete bipartite
// graph given as a square weight matrix: a perfect pairing minimizing the
// maximum selected weight. Binary search over the distinct weights with a
// maximum-matching feasibility test at each threshold; among optimal
// pairings, the one found by ascending-index augmenting search is returned.
BottleneckAssignment mcbbm(const std::vector<std::vector<std::int64_t>>& weights);

// --- Internals shared with the grid router's peeling loops. ---

/// Mutable residual view over a ColumnMultigraph's edge set, supporting
/// perfect-matching extraction restricted to a source-row window.
class ResidualColumnGraph {
  public:
    explicit ResidualColumnGraph(const ColumnMultigraph& g);

    // Perfect matching using only live edges with src_row in [row_lo, row_hi],
    // as edge indices into the underlying graph; nullopt if none exists.
    // Non-const: reuses internal scratch buffers across calls.
    std::optional<std::vector<int>> find_window_matching(int row_lo, int row_hi);

    void remove_edges(const std::vector<int>& edge_ids);

    int live_edge_count() const { return live_count_; }
    ColumnPerfectMatching materialize(const std::vector<int>& edge_ids) const;

  private:
    ColumnMultigraph graph_;  // owned copy so callers may pass temporaries
    std::vector<char> alive_;
    int live_count_;
    // Scratch for find_window_matching, allocated once. adj_flat_ holds n
    // fixed-width rows of adjacency lists with lengths in adj_len_.
    std::vector<int> best_edge_;
    std::vector<int> adj_flat_;
    std::vector<int> adj_len_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<char> visited_;
};

}  // namespace gridroute
