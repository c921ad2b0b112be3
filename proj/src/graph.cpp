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

#include "cdgame/graph.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdgame/kernels.h"

namespace cdgame {

std::string VertexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [1, 64], got " +
                                std::to_string(n));
  }
  for (int v = 0; v < n_; ++v) closed_[v] = uint64_t{1} << v;
}

Graph::Graph(int n, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : Graph(n) {
  for (const auto& [u, v] : edges) {
    CheckVertex(u);
    CheckVertex(v);
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    open_[u] |= uint64_t{1} << v;
    open_[v] |= uint64_t{1} << u;
    closed_[u] |= uint64_t{1} << v;
    closed_[v] |= uint64_t{1} << u;
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("label count does not match graph order");
  }
  labels_ = std::move(labels);
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph of order " +
                            std::to_string(n_));
  }
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(open_[v]);
  return twice / 2;
}

VertexSet Graph::neighbors(int v) const {
  CheckVertex(v);
  return VertexSet(open_[v]);
}

VertexSet Graph::closed_neighbors(int v) const {
  CheckVertex(v);
  return VertexSet(closed_[v]);
}

bool Graph::adjacent(int u, int v) const {
  CheckVertex(u);
  CheckVertex(v);
  return ((open_[u] >> v) & 1) != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(open_[u])) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(int v) const {
  CheckVertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<int> Graph::FindLabel(std::string_view name) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
    if (labels_[v] == name) return v;
  }
  return std::nullopt;
}

Graph Graph::WithLabels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("label count does not match graph order");
  }
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && open_ == other.open_;
}

VertexSet ClosedNeighborhood(const Graph& g, int v) {
  return g.closed_neighbors(v);
}

VertexSet ClosedNeighborhood(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw std::out_of_range("vertex set " + s.ToString() +
                            " exceeds graph order");
  }
  return VertexSet(kernels::Active().union_rows(g.closed_rows(), s.bits()));
}

VertexSet ReachableWithin(const Graph& g, int from, VertexSet within) {
  VertexSet seen = VertexSet::Single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool IsConnectedInduced(const Graph& g, VertexSet s) {
  if (s.empty()) {
    throw std::invalid_argument("connectivity of the empty set is undefined");
  }
  if (!s.subset_of(g.vertices())) {
    throw std::out_of_range("vertex set " + s.ToString() +
                            " exceeds graph order");
  }
  return ReachableWithin(g, s.lowest(), s) == s;
}

bool IsConnected(const Graph& g) { return IsConnectedInduced(g, g.vertices()); }

std::vector<int> Distances(const Graph& g, int v) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{v};
  dist.at(v) = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int Diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int d : Distances(g, v)) {
      if (d < 0) throw std::domain_error("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

int MaxDegree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexSet CutVertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  VertexSet cuts;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : g.neighbors(u)) {
      if (disc[w] < 0) {
        ++children;
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent >= 0 && low[w] >= disc[u]) cuts = cuts.with(u);
      } else if (w != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent < 0 && children > 1) cuts = cuts.with(u);
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return cuts;
}

VertexSet Leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out = out.with(v);
  }
  return out;
}

Graph Complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges, g.labels());
}

namespace {

int CheckedOrder(long long n, const char* what) {
  if (n > kMaxVertices) {
    throw std::length_error(std::string(what) + " would have " +
                            std::to_string(n) + " vertices; limit is 64");
  }
  return static_cast<int>(n);
}

std::vector<std::string> PairLabels(const Graph& g, const Graph& h) {
  if (!g.has_labels() && !h.has_labels()) return {};
  std::vector<std::string> out;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < h.order(); ++b) {
      out.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    }
  }
  return out;
}

std::vector<std::string> ConcatLabels(const Graph& g, const Graph& h) {
  if (!g.has_labels() || !h.has_labels()) return {};
  std::vector<std::string> out = g.labels();
  out.insert(out.end(), h.labels().begin(), h.labels().end());
  return out;
}

}  // namespace

Graph DisjointUnion(const Graph& g, const Graph& h) {
  const int n = CheckedOrder(g.order() + h.order(), "disjoint union");
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(n, edges, ConcatLabels(g, h));
}

Graph Join(const Graph& g, const Graph& h) {
  const int n = CheckedOrder(g.order() + h.order(), "join");
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + g.order());
  }
  return Graph(n, edges, ConcatLabels(g, h));
}

Graph CartesianProduct(const Graph& g, const Graph& h) {
  const int m = h.order();
  const int n =
      CheckedOrder(static_cast<long long>(g.order()) * m, "cartesian product");
  std::vector<Edge> edges;
  for (int a = 0; a < g.order(); ++a) {
    for (auto [b1, b2] : h.edges()) edges.emplace_back(a * m + b1, a * m + b2);
  }
  for (auto [a1, a2] : g.edges()) {
    for (int b = 0; b < m; ++b) edges.emplace_back(a1 * m + b, a2 * m + b);
  }
  return Graph(n, edges, PairLabels(g, h));
}

Graph LexicographicProduct(const Graph& g, const Graph& h) {
  const int m = h.order();
  const int n = CheckedOrder(static_cast<long long>(g.order()) * m,
                             "lexicographic product");
  std::vector<Edge> edges;
  for (int a = 0; a < g.order(); ++a) {
    for (auto [b1, b2] : h.edges()) edges.emplace_back(a * m + b1, a * m + b2);
  }
  for (auto [a1, a2] : g.edges()) {
    for (int b1 = 0; b1 < m; ++b1) {
      for (int b2 = 0; b2 < m; ++b2) {
        edges.emplace_back(a1 * m + b1, a2 * m + b2);
      }
    }
  }
  return Graph(n, edges, PairLabels(g, h));
}

bool IsDominating(const Graph& g, VertexSet s) {
  return ClosedNeighborhood(g, s) == g.vertices();
}

namespace {

// Depth-limited search for a dominating set of at most `budget` more
// vertices: some vertex of N[u] must be chosen, u the lowest undominated.
bool ExtendToDominating(const Graph& g, VertexSet chosen, VertexSet dominated,
                        int budget, VertexSet& witness) {
  const VertexSet missing = g.vertices() - dominated;
  if (missing.empty()) {
    witness = chosen;
    return true;
  }
  if (budget == 0) return false;
  for (int w : g.closed_neighbors(missing.lowest())) {
    if (ExtendToDominating(g, chosen.with(w),
                           dominated | g.closed_neighbors(w), budget - 1,
                           witness)) {
      return true;
    }
  }
  return false;
}

// Next subset of {0..n-1} with the same popcount (Gosper's hack).
uint64_t NextCombination(uint64_t x) {
  const uint64_t c = x & (~x + 1);
  const uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

VertexSet MinimumDominatingSet(const Graph& g) {
  for (int k = 1; k <= g.order(); ++k) {
    VertexSet witness;
    if (ExtendToDominating(g, {}, {}, k, witness)) return witness;
  }
  return g.vertices();  // unreachable: V(G) dominates
}

VertexSet MinimumConnectedDominatingSet(const Graph& g) {
  if (!IsConnected(g)) {
    throw std::domain_error(
        "connected domination number of a disconnected graph");
  }
  const int n = g.order();
  const auto rows = g.closed_rows();
  const uint64_t all = g.vertices().bits();
  for (int k = 1; k <= n; ++k) {
    const uint64_t last = (k == 64) ? all : ((uint64_t{1} << k) - 1) << (n - k);
    for (uint64_t s = (k == 64) ? all : (uint64_t{1} << k) - 1;;
         s = NextCombination(s)) {
      if (kernels::Active().union_rows(rows, s) == all &&
          IsConnectedInduced(g, VertexSet(s))) {
        return VertexSet(s);
      }
      if (s == last) break;
    }
  }
  return g.vertices();
}

int DominationNumber(const Graph& g) { return MinimumDominatingSet(g).size(); }

int ConnectedDominationNumber(const Graph& g) {
  return MinimumConnectedDominatingSet(g).size();
}

bool IsComplete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool HasUniversalVertex(const Graph& g) {
  return MaxDegree(g) == g.order() - 1;
}

namespace {

struct JoinSplits {
  bool two_non_complete = false;
  bool some_non_complete = false;
};

bool InducesComplete(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s - g.closed_neighbors(v)).empty()) return false;
  }
  return true;
}

// Components of the complement are exactly the blocks a join must keep
// together; every bipartition of them into two nonempty groups is a join.
JoinSplits EnumerateJoinSplits(const Graph& g) {
  const Graph co = Complement(g);
  std::vector<VertexSet> components;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    const VertexSet comp = ReachableWithin(co, left.lowest(), left);
    components.push_back(comp);
    left -= comp;
  }
  JoinSplits out;
  const size_t c = components.size();
  if (c < 2) return out;
  if (c > 20) {
    // A group is non-complete iff it holds a non-singleton component, so the
    // outcome only depends on how many such components exist.
    const auto big = std::count_if(components.begin(), components.end(),
                                   [](VertexSet s) { return s.size() > 1; });
    out.two_non_complete = big >= 2;
    out.some_non_complete = big >= 1;
    return out;
  }
  // Component 0 stays on side A so each bipartition is visited once.
  for (uint64_t mask = 0; mask + 1 < (uint64_t{1} << (c - 1)); ++mask) {
    VertexSet a = components[0], b;
    for (size_t i = 1; i < c; ++i) {
      if ((mask >> (i - 1)) & 1) {
        a |= components[i];
      } else {
        b |= components[i];
      }
    }
    const bool a_nc = !InducesComplete(g, a);
    const bool b_nc = !InducesComplete(g, b);
    out.two_non_complete |= a_nc && b_nc;
    out.some_non_complete |= a_nc || b_nc;
  }
  return out;
}

}  // namespace

bool IsJoinOfTwoNonComplete(const Graph& g) {
  return EnumerateJoinSplits(g).two_non_complete;
}

bool IsJoinWithSomeNonComplete(const Graph& g) {
  return EnumerateJoinSplits(g).some_non_complete;
}

}  // namespace cdgame
