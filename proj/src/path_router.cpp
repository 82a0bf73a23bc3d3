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

#include "gridroute/path_router.hpp"

#include <algorithm>

namespace gridroute {

namespace {

bool is_routed(const std::vector<int>& targets) {
    for (std::size_t p = 0; p < targets.size(); ++p) {
        if (targets[p] != static_cast<int>(p) + 1) {
            return false;
        }
    }
    return true;
}

// Length of the trimmed round sequence run_parity would produce, without
// materializing the layers. Interior empty rounds count; leading and
// trailing ones do not.
int count_parity(std::vector<int> targets, bool odd_first) {
    const int k = static_cast<int>(targets.size());
    int first_nonempty = -1;
    int last_nonempty = -1;
    bool odd = odd_first;
    for (int round = 0; round <= k && !is_routed(targets); ++round) {
        bool any = false;
        const int first = odd ? 0 : 1;
        for (int p = first; p + 1 < k; p += 2) {
            if (targets[static_cast<std::size_t>(p)] >
                targets[static_cast<std::size_t>(p) + 1]) {
                std::swap(targets[static_cast<std::size_t>(p)],
                          targets[static_cast<std::size_t>(p) + 1]);
                any = true;
            }
        }
        if (any) {
            if (first_nonempty < 0) {
                first_nonempty = round;
            }
            last_nonempty = round;
        }
        odd = !odd;
    }
    if (!is_routed(targets)) {
        throw std::logic_error("odd-even transposition did not converge in k+1 rounds");
    }
    return first_nonempty < 0 ? 0 : last_nonempty - first_nonempty + 1;
}

// One run with a fixed start parity. targets[p] is the 1-based destination
// of the token currently at 0-based position p; comparison key is the
// target index, so this sorts tokens by destination.
std::vector<PathLayer> run_parity(std::vector<int> targets, bool odd_first) {
    const int k = static_cast<int>(targets.size());
    std::vector<PathLayer> rounds;
    rounds.reserve(static_cast<std::size_t>(k) + 1);
    bool odd = odd_first;
    // An empty non-leading round implies the arrangement is already sorted,
    // so k+1 rounds suffice for either start parity.
    for (int round = 0; round <= k && !is_routed(targets); ++round) {
        PathLayer layer;
        layer.reserve(static_cast<std::size_t>(k) / 2);
        const int first = odd ? 0 : 1;  // 0-based left endpoint of the first edge
        for (int p = first; p + 1 < k; p += 2) {
            if (targets[static_cast<std::size_t>(p)] >
                targets[static_cast<std::size_t>(p) + 1]) {
                std::swap(targets[static_cast<std::size_t>(p)],
                          targets[static_cast<std::size_t>(p) + 1]);
                layer.emplace_back(p + 1, p + 2);
            }
        }
        rounds.push_back(std::move(layer));
        odd = !odd;
    }
    if (!is_routed(targets)) {
        throw std::logic_error("odd-even transposition did not converge in k+1 rounds");
    }
    while (!rounds.empty() && rounds.front().empty()) {
        rounds.erase(rounds.begin());
    }
    while (!rounds.empty() && rounds.back().empty()) {
        rounds.pop_back();
    }
    return rounds;
}

}  // namespace

std::vector<PathLayer> odd_even_route(const PathRoutingProblem& problem) {
    const int k = problem.length;
    if (k < 1) {
        throw InvalidSpecError("path length must be positive");
    }
    if (static_cast<int>(problem.target.size()) != k) {
        throw InvalidSpecError("path target has wrong size");
    }
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (const int t : problem.target) {
        if (t < 1 || t > k || seen[static_cast<std::size_t>(t - 1)]) {
            throw InvalidPermutationError("path target is not a bijection on {1..k}");
        }
        seen[static_cast<std::size_t>(t - 1)] = 1;
    }

    // Trial both parities by length only, then materialize the winner
    // (ties favor odd-first).
    const int odd_len = count_parity(problem.target, true);
    const int even_len = count_parity(problem.target, false);
    return run_parity(problem.target, even_len < odd_len ? false : true);
}

}  // namespace gridroute
