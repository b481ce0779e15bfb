// Copyright 2026 The cagekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "cagekit/graph.hpp"
#include "cagekit/verify.hpp"

// Slow reference algorithms that share no code with the verification kernel.
namespace cagekit::oracle {

// Shortest cycle as min over edges uv of 1 + dist_{G-uv}(u, v).
Extent girth_by_edge_deletion(const BipartiteGraph& g);

// Floyd-Warshall; intended for a few hundred vertices.
Extent diameter_by_floyd_warshall(const BipartiteGraph& g);

}  // namespace cagekit::oracle
