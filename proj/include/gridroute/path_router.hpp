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

#include <utility>
#include <vector>

#include "gridroute/types.hpp"

namespace gridroute {

/// Routing on a path of k vertices: the token at position p must reach
/// position target[p-1]. Positions are 1-based; target is a bijection on
/// {1..k}.
struct PathRoutingProblem {
    int length = 0;
    std::vector<int> target;
};

// Edges of a path round: (p, p+1) position pairs, 1-based.
using PathLayer = std::vector<std::pair<int, int>>;

// Odd-even transposition routing. Rounds alternate between odd edges
// ((1,2),(3,4),...) and even edges ((2,3),(4,5),...); within a round an
// edge swaps iff the left token's target exceeds the right token's. Both
// start parities are attempted and the shorter result returned (ties
// prefer odd-first). Leading and trailing empty rounds are trimmed; the
// result has at most k rounds and every layer nonempty.
std::vector<PathLayer> odd_even_route(const PathRoutingProblem& problem);

}  // namespace gridroute
