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

#include "gridroute/schedule.hpp"
#include "gridroute/types.hpp"

namespace gridroute {

// Approximate token swapping: serial swap sequence realizing pi on the
// grid. Repeatedly builds the desire digraph in which every vertex holding
// a displaced token points to one lexicographically-smallest neighbor on a
// shortest path toward the token's destination; resolves a directed cycle
// when one exists (rotating every token on it one step closer), otherwise
// performs the single swap on the final edge of a maximal directed path,
// displacing a settled token by one step. Fully deterministic.
SwapSequence token_swap(const Grid& grid, const Permutation& pi);

}  // namespace gridroute
