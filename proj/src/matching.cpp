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

#include "gridroute/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace gridroute {

ColumnMultigraph build_column_graph(const Grid& grid, const Permutation& pi,
                                    int a, int b) {
    if (a < 1 || b > grid.rows() || a > b) {
        throw WindowOutOfRangeError("row window [" + std::to_string(a) + "," +
                                    std::to_string(b) + "] invalid for " +
                                    std::to_string(grid.rows()) + " rows");
    }
    std::vector<ColumnEdge> edges;
    edges.reserve(static_cast<std::size_t>(b - a + 1) * static_cast<std::size_t>(grid.cols()));
    for (int i = a; i <= b; ++i) {
        for (int j = 1; j <= grid.cols(); ++j) {
            const Vertex dst = pi.image(Vertex{i, j});
            edges.push_back(ColumnEdge{j, dst.col, i, dst.row});
        }
    }
    return ColumnMultigraph(grid.cols(), std::move(edges));
}

ResidualColumnGraph::ResidualColumnGraph(const ColumnMultigraph& g)
    : graph_(g),
      alive_(g.edges().size(), 1),
      live_count_(static_cast<int>(g.edges().size())) {
    const std::size_t n = static_cast<std::size_t>(g.column_count());
    best_edge_.resize(n * n);
    adj_flat_.resize(n * n);
    adj_len_.resize(n);
    match_left_.resize(n);
    match_right_.resize(n);
    visited_.resize(n);
}

namespace {

// Kuhn's augmenting-path search on the collapsed simple graph. Row j of the
// flat adjacency (width n, length adj_len[j]) holds the distinct right
// columns reachable from left column j, ascending.
bool try_augment(int left, const std::vector<int>& adj_flat,
                 const std::vector<int>& adj_len, int n,
                 std::vector<int>& match_left, std::vector<int>& match_right,
                 std::vector<char>& visited) {
    const std::size_t row = static_cast<std::size_t>(left) * static_cast<std::size_t>(n);
    for (int k = 0; k < adj_len[static_cast<std::size_t>(left)]; ++k) {
        const int right = adj_flat[row + static_cast<std::size_t>(k)];
        if (visited[static_cast<std::size_t>(right)]) {
            continue;
        }
        visited[static_cast<std::size_t>(right)] = 1;
        const int other = match_right[static_cast<std::size_t>(right)];
        if (other == -1 || try_augment(other, adj_flat, adj_len, n, match_left,
                                       match_right, visited)) {
            match_left[static_cast<std::size_t>(left)] = right;
            match_right[static_cast<std::size_t>(right)] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> ResidualColumnGraph::find_window_matching(
    int row_lo, int row_hi) {
    const int n = graph_.column_count();
    const auto& edges = graph_.edges();
    const auto cell = [n](int j, int r) {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(r);
    };

    // best_edge_[j*n + j'] = live edge id with the smallest (src,dst) label.
    std::fill(best_edge_.begin(), best_edge_.end(), -1);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (!alive_[static_cast<std::size_t>(e)]) {
            continue;
        }
        const auto& edge = edges[static_cast<std::size_t>(e)];
        if (edge.src_row < row_lo || edge.src_row > row_hi) {
            continue;
        }
        int& slot = best_edge_[cell(edge.left - 1, edge.right - 1)];
        if (slot == -1 ||
            std::pair(edge.src_row, edge.dst_row) <
                std::pair(edges[static_cast<std::size_t>(slot)].src_row,
                          edges[static_cast<std::size_t>(slot)].dst_row)) {
            slot = e;
        }
    }

    for (int j = 0; j < n; ++j) {
        int len = 0;
        for (int r = 0; r < n; ++r) {
            if (best_edge_[cell(j, r)] != -1) {
                adj_flat_[cell(j, len++)] = r;
            }
        }
        adj_len_[static_cast<std::size_t>(j)] = len;
    }

    std::fill(match_left_.begin(), match_left_.end(), -1);
    std::fill(match_right_.begin(), match_right_.end(), -1);
    for (int j = 0; j < n; ++j) {
        std::fill(visited_.begin(), visited_.end(), 0);
        if (!try_augment(j, adj_flat_, adj_len_, n, match_left_, match_right_,
                         visited_)) {
            return std::nullopt;
        }
    }

    std::vector<int> result(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        result[static_cast<std::size_t>(j)] =
            best_edge_[cell(j, match_left_[static_cast<std::size_t>(j)])];
    }
    return result;
}

void ResidualColumnGraph::remove_edges(const std::vector<int>& edge_ids) {
    for (const int e : edge_ids) {
        if (alive_[static_cast<std::size_t>(e)]) {
            alive_[static_cast<std::size_t>(e)] = 0;
            --live_count_;
        }
    }
}

ColumnPerfectMatching ResidualColumnGraph::materialize(
    const std::vector<int>& edge_ids) const {
    ColumnPerfectMatching matching;
    matching.reserve(edge_ids.size());
    for (const int e : edge_ids) {
        matching.push_back(graph_.edges()[static_cast<std::size_t>(e)]);
    }
    std::sort(matching.begin(), matching.end());
    return matching;
}

std::optional<ColumnPerfectMatching> find_perfect_matching(const ColumnMultigraph& g) {
    ResidualColumnGraph residual(g);
    const auto ids =
        residual.find_window_matching(std::numeric_limits<int>::min(),
                                      std::numeric_limits<int>::max());
    if (!ids) {
        return std::nullopt;
    }
    return residual.materialize(*ids);
}

std::vector<ColumnPerfectMatching> peel_all_matchings(const ColumnMultigraph& g) {
    std::vector<ColumnPerfectMatching> matchings;
    if (g.column_count() == 0) {
        return matchings;
    }
    ResidualColumnGraph residual(g);
    for (;;) {
        const auto ids =
            residual.find_window_matching(std::numeric_limits<int>::min(),
                                          std::numeric_limits<int>::max());
        if (!ids) {
            break;
        }
        matchings.push_back(residual.materialize(*ids));
        residual.remove_edges(*ids);
    }
    return matchings;
}

std::int64_t delta(const ColumnPerfectMatching& matching, int r) {
    std::int64_t sum = 0;
    for (const auto& edge : matching) {
        sum += std::abs(edge.src_row - r) + std::abs(edge.dst_row - r);
    }
    return sum;
}

namespace {

// Perfect matching using only entries with weight <= threshold; the pairing
// found by ascending-index augmenting search, or nullopt.
std::optional<std::vector<int>> threshold_matching(
    const std::vector<std::vector<std::int64_t>>& weights, std::int64_t threshold) {
    const int n = static_cast<int>(weights.size());
    std::vector<int> adj_flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<int> adj_len(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int len = 0;
        for (int j = 0; j < n; ++j) {
            if (weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <=
                threshold) {
                adj_flat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(len++)] = j;
            }
        }
        adj_len[static_cast<std::size_t>(i)] = len;
    }
    std::vector<int> match_left(static_cast<std::size_t>(n), -1);
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);
    std::vector<char> visited(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!try_augment(i, adj_flat, adj_len, n, match_left, match_right, visited)) {
            return std::nullopt;
        }
    }
    return match_left;
}

}  // namespace

BottleneckAssignment mcbbm(const std::vector<std::vector<std::int64_t>>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n == 0) {
        throw NonSquareInputError("mcbbm requires a nonempty square matrix");
    }
    std::vector<std::int64_t> distinct;
    for (const auto& row : weights) {
        if (static_cast<int>(row.size()) != n) {
            throw NonSquareInputError("mcbbm weight matrix is not square");
        }
        distinct.insert(distinct.end(), row.begin(), row.end());
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    // The full matrix is feasible (H is complete bipartite), so the search
    // always terminates with a valid threshold.
    std::size_t lo = 0;
    std::size_t hi = distinct.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (threshold_matching(weights, distinct[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }

    BottleneckAssignment out;
    out.bottleneck = distinct[lo];
    out.col_of = *threshold_matching(weights, out.bottleneck);
    return out;
}

}  // namespace gridroute
