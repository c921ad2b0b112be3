// Copyright 2026 The cdgame Authors.
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

#ifndef CDGAME_GRAPH_H_
#define CDGAME_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdgame/vertex_set.h"

namespace cdgame {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, 1 <= n <= 64.
//
// Adjacency is stored twice: open rows (N(v)) and closed rows (N[v]), both as
// 64-bit masks, so the game engine can hand them to the vectorized kernels
// directly. Graphs are immutable once built.
class Graph {
 public:
  // Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges,
        std::vector<std::string> labels = {});
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const;  // edge count
  VertexSet vertices() const { return VertexSet::FirstN(n_); }

  VertexSet neighbors(int v) const;
  VertexSet closed_neighbors(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  std::vector<Edge> edges() const;

  // Row v is the neighbor mask of vertex v; these feed the move kernels.
  std::span<const uint64_t> open_rows() const {
    return {open_.data(), static_cast<size_t>(n_)};
  }
  std::span<const uint64_t> closed_rows() const {
    return {closed_.data(), static_cast<size_t>(n_)};
  }

  bool has_labels() const { return !labels_.empty(); }
  // Display name: the stored label, or the decimal index.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> FindLabel(std::string_view name) const;
  Graph WithLabels(std::vector<std::string> labels) const;

  // Same vertex count and edge set; labels are ignored.
  bool operator==(const Graph& other) const;

 private:
  void CheckVertex(int v) const;

  int n_;
  std::array<uint64_t, kMaxVertices> open_{};
  std::array<uint64_t, kMaxVertices> closed_{};
  std::vector<std::string> labels_;
};

// N[v].
VertexSet ClosedNeighborhood(const Graph& g, int v);
// N[S]; N[{}] = {}.
VertexSet ClosedNeighborhood(const Graph& g, VertexSet s);

// True iff the subgraph induced by s is connected. Throws on empty s.
bool IsConnectedInduced(const Graph& g, VertexSet s);
bool IsConnected(const Graph& g);
// Vertices reachable from `from` inside `within`.
VertexSet ReachableWithin(const Graph& g, int from, VertexSet within);

// Shortest-path distances from v; -1 for unreachable vertices.
std::vector<int> Distances(const Graph& g, int v);
// Throws std::domain_error for disconnected graphs.
int Diameter(const Graph& g);
int MaxDegree(const Graph& g);

// Articulation points (low-link).
VertexSet CutVertices(const Graph& g);
VertexSet Leaves(const Graph& g);

Graph Complement(const Graph& g);
Graph DisjointUnion(const Graph& g, const Graph& h);
// G's vertices first, then H's.
Graph Join(const Graph& g, const Graph& h);
// Vertex (a, b) has index a * |V(H)| + b.
Graph CartesianProduct(const Graph& g, const Graph& h);
// Vertex (a, b) has index a * |V(H)| + b, so copy H_a is a contiguous block.
Graph LexicographicProduct(const Graph& g, const Graph& h);

bool IsDominating(const Graph& g, VertexSet s);
// A minimum dominating set, found by size-increasing subset search.
VertexSet MinimumDominatingSet(const Graph& g);
// Throws std::domain_error for disconnected graphs.
VertexSet MinimumConnectedDominatingSet(const Graph& g);
int DominationNumber(const Graph& g);
int ConnectedDominationNumber(const Graph& g);

bool IsComplete(const Graph& g);
bool HasUniversalVertex(const Graph& g);
// Whether G = A v B for some split of V(G) into nonempty A, B with both
// A and B non-complete (resp. at least one of them non-complete).
bool IsJoinOfTwoNonComplete(const Graph& g);
bool IsJoinWithSomeNonComplete(const Graph& g);

}  // namespace cdgame

#endif  // CDGAME_GRAPH_H_
