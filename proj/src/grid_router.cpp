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

#include "gridroute/grid_router.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "gridroute/path_router.hpp"

namespace gridroute {

SwapSchedule GridRouteRounds::concat() const {
    SwapSchedule out;
    for (const auto& round : rounds) {
        out.layers.insert(out.layers.end(), round.begin(), round.end());
    }
    return out;
}

namespace {

void check_sigmas(const Grid& grid, const ColumnPermutationSet& sigmas) {
    const int m = grid.rows();
    const int n = grid.cols();
    if (static_cast<int>(sigmas.sigma.size()) != n) {
        throw HallViolationError("expected one sigma per column");
    }
    for (int j = 0; j < n; ++j) {
        const auto& s = sigmas.sigma[static_cast<std::size_t>(j)];
        if (static_cast<int>(s.size()) != m) {
            throw HallViolationError("sigma for column " + std::to_string(j + 1) +
                                     " has wrong size");
        }
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        for (const int r : s) {
            if (r < 1 || r > m || seen[static_cast<std::size_t>(r - 1)]) {
                throw HallViolationError("sigma for column " + std::to_string(j + 1) +
                                         " is not a bijection on rows");
            }
            seen[static_cast<std::size_t>(r - 1)] = 1;
        }
    }
}

// Union per-path layers into grid layers. vertex_at maps a 1-based path
// position within path p to a grid vertex. Paths are vertex-disjoint, so
// each unioned layer stays a matching.
template <typename VertexAt>
std::vector<Layer> union_rounds(const std::vector<std::vector<PathLayer>>& per_path,
                                VertexAt vertex_at) {
    std::size_t max_len = 0;
    for (const auto& rounds : per_path) {
        max_len = std::max(max_len, rounds.size());
    }
    std::vector<Layer> layers;
    for (std::size_t t = 0; t < max_len; ++t) {
        Layer layer;
        for (int p = 0; p < static_cast<int>(per_path.size()); ++p) {
            const auto& rounds = per_path[static_cast<std::size_t>(p)];
            if (t >= rounds.size()) {
                continue;
            }
            for (const auto& [lo, hi] : rounds[t]) {
                layer.emplace_back(vertex_at(p, lo), vertex_at(p, hi));
            }
        }
        if (!layer.empty()) {
            std::sort(layer.begin(), layer.end());
            layers.push_back(std::move(layer));
        }
    }
    return layers;
}

}  // namespace

std::optional<int> hall_violation(const Grid& grid, const Permutation& pi,
                                  const ColumnPermutationSet& sigmas) {
    const int m = grid.rows();
    const int n = grid.cols();
    // inverse[(j-1)*m + r-1] = source row routed to row r in column j
    std::vector<int> inverse(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
    for (int j = 0; j < n; ++j) {
        for (int i = 1; i <= m; ++i) {
            const int r = sigmas.sigma[static_cast<std::size_t>(j)]
                                      [static_cast<std::size_t>(i - 1)];
            inverse[static_cast<std::size_t>(j) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(r - 1)] = i;
        }
    }
    std::vector<char> used(static_cast<std::size_t>(n));
    for (int r = 1; r <= m; ++r) {
        std::fill(used.begin(), used.end(), 0);
        for (int j = 1; j <= n; ++j) {
            const int i = inverse[static_cast<std::size_t>(j - 1) *
                                      static_cast<std::size_t>(m) +
                                  static_cast<std::size_t>(r - 1)];
            const int dst_col = pi.image(Vertex{i, j}).col;
            if (used[static_cast<std::size_t>(dst_col - 1)]) {
                return r;
            }
            used[static_cast<std::size_t>(dst_col - 1)] = 1;
        }
    }
    return std::nullopt;
}

GridRouteRounds grid_route_rounds(const Grid& grid, const Permutation& pi,
                                  const ColumnPermutationSet& sigmas) {
    const int m = grid.rows();
    const int n = grid.cols();
    check_sigmas(grid, sigmas);
    if (const auto bad_row = hall_violation(grid, pi, sigmas)) {
        throw HallViolationError("duplicate destination column in row " +
                                 std::to_string(*bad_row) +
                                 " after round 1; sigmas violate the Hall property");
    }

    GridRouteRounds result;

    // Round 1: route column j by sigma_j.
    {
        std::vector<std::vector<PathLayer>> per_column(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            per_column[static_cast<std::size_t>(j)] = odd_even_route(
                PathRoutingProblem{m, sigmas.sigma[static_cast<std::size_t>(j)]});
        }
        result.rounds[0] = union_rounds(per_column, [](int path, int position) {
            return Vertex{position, path + 1};
        });
    }

    // After round 1 the token from (i,j) sits at (sigma_j(i), j). occ1[r][j]
    // holds that token's start vertex.
    const auto at = [n](int r0, int j0) {
        return static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j0);
    };
    std::vector<Vertex> occ1(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= m; ++i) {
            const int r = sigmas.sigma[static_cast<std::size_t>(j - 1)]
                                      [static_cast<std::size_t>(i - 1)];
            occ1[at(r - 1, j - 1)] = Vertex{i, j};
        }
    }

    // Round 2: within each row, send every token to its destination column.
    {
        std::vector<std::vector<PathLayer>> per_row(static_cast<std::size_t>(m));
        for (int r = 0; r < m; ++r) {
            std::vector<int> target(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                target[static_cast<std::size_t>(j)] = pi.image(occ1[at(r, j)]).col;
            }
            per_row[static_cast<std::size_t>(r)] =
                odd_even_route(PathRoutingProblem{n, std::move(target)});
        }
        result.rounds[1] = union_rounds(per_row, [](int path, int position) {
            return Vertex{path + 1, position};
        });
    }

    // After round 2 every token is in its destination column.
    std::vector<Vertex> occ2(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j) {
            const Vertex token = occ1[at(r, j)];
            const int dst_col = pi.image(token).col;
            occ2[at(r, dst_col - 1)] = token;
        }
    }

    // Round 3: within each column, send every token to its destination row.
    {
        std::vector<std::vector<PathLayer>> per_column(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            std::vector<int> target(static_cast<std::size_t>(m));
            for (int r = 0; r < m; ++r) {
                target[static_cast<std::size_t>(r)] = pi.image(occ2[at(r, j)]).row;
            }
            per_column[static_cast<std::size_t>(j)] =
                odd_even_route(PathRoutingProblem{m, std::move(target)});
        }
        result.rounds[2] = union_rounds(per_column, [](int path, int position) {
            return Vertex{position, path + 1};
        });
    }

    return result;
}

SwapSchedule grid_route(const Grid& grid, const Permutation& pi,
                        const ColumnPermutationSet& sigmas) {
    return grid_route_rounds(grid, pi, sigmas).concat();
}

std::vector<ColumnPerfectMatching> peel_matchings_doubling(const Grid& grid,
                                                           const Permutation& pi) {
    const int m = grid.rows();
    ResidualColumnGraph residual(build_column_graph(grid, pi, 1, m));
    std::vector<std::vector<int>> peeled_ids;

    int w = 0;
    while (static_cast<int>(peeled_ids.size()) < m) {
        for (int r = 1; r <= m; r += w + 1) {
            const int hi = std::min(r + w, m);
            // Exhaust the window's residual subgraph before moving on.
            while (static_cast<int>(peeled_ids.size()) < m) {
                const auto ids = residual.find_window_matching(r, hi);
                if (!ids) {
                    break;
                }
                residual.remove_edges(*ids);
                peeled_ids.push_back(*ids);
            }
        }
        // Once the window spans all rows the residual graph is regular and
        // decomposes fully, so the doubling terminates.
        if (w > 2 * m) {
            throw std::logic_error("doubling window search failed to terminate");
        }
        w = w == 0 ? 1 : 2 * w;
    }

    if (static_cast<int>(peeled_ids.size()) != m || residual.live_edge_count() != 0) {
        throw std::logic_error("matching decomposition incomplete: got " +
                               std::to_string(peeled_ids.size()) + " matchings, " +
                               std::to_string(residual.live_edge_count()) +
                               " edges left");
    }

    // materialize() reads labels from the original graph, which is intact.
    std::vector<ColumnPerfectMatching> matchings;
    matchings.reserve(peeled_ids.size());
    for (const auto& ids : peeled_ids) {
        matchings.push_back(residual.materialize(ids));
    }
    return matchings;
}

ColumnPermutationSet sigmas_from_assignment(
    const Grid& grid, const std::vector<ColumnPerfectMatching>& matchings,
    const std::vector<int>& row_of) {
    const int m = grid.rows();
    const int n = grid.cols();
    ColumnPermutationSet sigmas;
    sigmas.sigma.assign(static_cast<std::size_t>(n),
                        std::vector<int>(static_cast<std::size_t>(m), 0));
    for (std::size_t k = 0; k < matchings.size(); ++k) {
        const int r = row_of[k];
        for (const auto& edge : matchings[k]) {
            sigmas.sigma[static_cast<std::size_t>(edge.left - 1)]
                        [static_cast<std::size_t>(edge.src_row - 1)] = r;
        }
    }
    return sigmas;
}

SwapSchedule local_grid_route(const Grid& grid, const Permutation& pi) {
    const int m = grid.rows();
    const auto matchings = peel_matchings_doubling(grid, pi);

    std::vector<std::vector<std::int64_t>> weights(
        static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m)));
    for (int k = 0; k < m; ++k) {
        for (int r = 1; r <= m; ++r) {
            weights[static_cast<std::size_t>(k)][static_cast<std::size_t>(r - 1)] =
                delta(matchings[static_cast<std::size_t>(k)], r);
        }
    }
    const auto assignment = mcbbm(weights);

    std::vector<int> row_of(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        row_of[static_cast<std::size_t>(k)] = assignment.col_of[static_cast<std::size_t>(k)] + 1;
    }
    return grid_route(grid, pi, sigmas_from_assignment(grid, matchings, row_of));
}

SwapSchedule naive_grid_route(const Grid& grid, const Permutation& pi) {
    const int m = grid.rows();
    const auto matchings = peel_all_matchings(build_column_graph(grid, pi, 1, m));
    if (static_cast<int>(matchings.size()) != m) {
        throw std::logic_error("full-window peeling produced " +
                               std::to_string(matchings.size()) + " matchings, expected " +
                               std::to_string(m));
    }
    std::vector<int> row_of(static_cast<std::size_t>(m));
    std::iota(row_of.begin(), row_of.end(), 1);
    return grid_route(grid, pi, sigmas_from_assignment(grid, matchings, row_of));
}

namespace {

SwapSchedule untranspose_schedule(const SwapSchedule& schedule) {
    SwapSchedule out;
    out.layers.reserve(schedule.layers.size());
    for (const auto& layer : schedule.layers) {
        Layer mapped;
        mapped.reserve(layer.size());
        for (const auto& swap : layer) {
            mapped.emplace_back(Vertex{swap.a.col, swap.a.row},
                                Vertex{swap.b.col, swap.b.row});
        }
        std::sort(mapped.begin(), mapped.end());
        out.layers.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace

RouteResult route(const Grid& grid, const Permutation& pi, const RouteOptions& options) {
    const auto start = std::chrono::steady_clock::now();

    struct Candidate {
        SwapSchedule schedule;
        std::string name;
        int transposed;
        int algorithm_rank;  // local = 0, naive = 1

        std::tuple<int, int, int> key() const {
            return {static_cast<int>(schedule.layers.size()), transposed, algorithm_rank};
        }
    };
    std::vector<Candidate> candidates;
    candidates.push_back({local_grid_route(grid, pi), "local", 0, 0});
    if (options.use_transpose) {
        const auto [tgrid, tpi] = transpose(grid, pi);
        candidates.push_back(
            {untranspose_schedule(local_grid_route(tgrid, tpi)), "local_transposed", 1, 0});
    }
    if (options.naive_fallback) {
        candidates.push_back({naive_grid_route(grid, pi), "naive", 0, 1});
    }

    // Minimum depth; ties prefer the untransposed orientation, then the
    // locality-aware algorithm.
    const Candidate* best = &candidates.front();
    for (const auto& candidate : candidates) {
        if (candidate.key() < best->key()) {
            best = &candidate;
        }
    }

    RouteResult result;
    result.schedule = options.compact ? compact_schedule(grid, best->schedule)
                                      : best->schedule;
    result.algorithm = best->name;
    result.depth = result.schedule.depth();
    result.swaps = result.schedule.swap_count();
    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace gridroute
