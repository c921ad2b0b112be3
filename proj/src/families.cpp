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

#include "cdgame/families.h"

#include <cctype>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cdgame {

namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph Path(int n) {
  Require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph Cycle(int n) {
  Require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph Complete(int n) {
  Require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph Star(int leaves) {
  Require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph EmptyGraph(int n) {
  Require(n >= 1, "empty graph needs n >= 1");
  return Graph(n);
}

Graph GadgetChain(int n) {
  Require(n >= 2, "gadget chain needs n >= 2");
  const int order = 4 * n - 2;
  auto u = [](int i) { return i; };
  auto x = [n](int i) { return n + i; };               // n+1 .. 2n-1
  auto y = [n](int i) { return 2 * n - 1 + i; };       // 2n .. 3n-2
  auto z = [n](int i) { return 3 * n - 2 + i; };       // 3n-1 .. 4n-3
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(u(i), u(i + 1));
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(u(i), x(i));
    edges.emplace_back(x(i), y(i));
    edges.emplace_back(y(i), z(i));
    edges.emplace_back(u(i + 1), x(i));
    edges.emplace_back(u(i + 1), y(i));
    edges.emplace_back(u(i + 1), z(i));
  }
  std::vector<std::string> labels(order);
  for (int i = 0; i <= n; ++i) labels[u(i)] = "u_" + std::to_string(i);
  for (int i = 1; i < n; ++i) {
    labels[x(i)] = "x_" + std::to_string(i);
    labels[y(i)] = "y_" + std::to_string(i);
    labels[z(i)] = "z_" + std::to_string(i);
  }
  return Graph(order, edges, std::move(labels));
}

namespace {

// Shared construction for FanChain and HatChain.
Graph BuildFanChain(int blocks, int n, bool hats) {
  const int rim = n - 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  auto add = [&labels](std::string name) {
    labels.push_back(std::move(name));
    return static_cast<int>(labels.size()) - 1;
  };
  std::vector<int> prev_rim;
  for (int b = 1; b <= blocks; ++b) {
    const std::string tag = std::to_string(b);
    const int hub = add("h" + tag);
    std::vector<int> rim_ids(rim);
    for (int k = 0; k < rim; ++k) {
      if (b > 1 && k == 0) {
        rim_ids[k] = prev_rim[rim - 1];
      } else {
        rim_ids[k] = add("r" + tag + "_" + std::to_string(k + 1));
      }
    }
    for (int k = 0; k < rim; ++k) {
      edges.emplace_back(hub, rim_ids[k]);
      if (k + 1 < rim) edges.emplace_back(rim_ids[k], rim_ids[k + 1]);
    }
    if (hats) {
      const int hat = add("t" + tag);
      edges.emplace_back(hat, rim_ids[2]);
      edges.emplace_back(hat, rim_ids[3]);
    }
    prev_rim = std::move(rim_ids);
  }
  const int order = static_cast<int>(labels.size());
  if (order > kMaxVertices) {
    throw std::length_error("fan chain would have " + std::to_string(order) +
                            " vertices; limit is 64");
  }
  return Graph(order, edges, std::move(labels));
}

}  // namespace

Graph FanChain(int blocks, int n) {
  Require(blocks >= 1, "fan chain needs at least one block");
  Require(n >= 7, "fan chain needs n >= 7");
  return BuildFanChain(blocks, n, false);
}

Graph HatChain(int i) {
  Require(i >= 0, "hat chain needs i >= 0");
  return BuildFanChain(i + 1, 8, true);
}

Graph CircularLadder(int n) {
  Require(n >= 3, "circular ladder needs n >= 3");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= 2; ++j) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return CartesianProduct(Cycle(n), Complete(2)).WithLabels(std::move(labels));
}

Graph MobiusLadder(int n) {
  Require(n >= 3, "Moebius ladder needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < 2 * n; ++v) edges.emplace_back(v, (v + 1) % (2 * n));
  for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  return Graph(2 * n, edges);
}

Graph Hamming(std::span<const int> factors) {
  Require(!factors.empty(), "Hamming graph needs at least one factor");
  for (int f : factors) Require(f >= 2, "Hamming factors must be >= 2");
  Graph out = Complete(factors[0]);
  for (size_t i = 1; i < factors.size(); ++i) {
    out = CartesianProduct(out, Complete(factors[i]));
  }
  return out;
}

Graph PredominationIncreaseGraph() {
  enum { kA1, kA, kB, kC, kD, kE, kE1, kF, kF1, kG, kG1, kOrder };
  const std::vector<Edge> edges = {
      {kA1, kA}, {kA, kB}, {kB, kC}, {kC, kD}, {kD, kE},   {kE, kF},
      {kF, kG},  {kG, kG1}, {kE, kE1}, {kE1, kF1}, {kF1, kF}};
  return Graph(kOrder, edges,
               {"a'", "a", "b", "c", "d", "e", "e'", "f", "f'", "g", "g'"});
}

Graph RandomTree(int n, uint64_t seed) {
  Require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Path(2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);

  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, edges);
}

FamilySpecError::FamilySpecError(const std::string& message, size_t position)
    : std::invalid_argument(message + " (at position " +
                            std::to_string(position) + ")"),
      position_(position) {}

std::string FamilySpec::ToString() const {
  std::string out = tag;
  if (!params.empty() || !operands.empty()) out += ':';
  bool first = true;
  for (long long p : params) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  for (const FamilySpec& op : operands) {
    if (!first) out += ',';
    out += '(' + op.ToString() + ')';
    first = false;
  }
  return out;
}

namespace {

struct TagInfo {
  std::string_view tag;
  int min_params;
  int max_params;  // -1: unbounded
  int operands;
};

constexpr TagInfo kTags[] = {
    {"path", 1, 1, 0},  {"cycle", 1, 1, 0},   {"complete", 1, 1, 0},
    {"star", 1, 1, 0},  {"empty", 1, 1, 0},   {"gn", 1, 1, 0},
    {"fan", 1, 2, 0},   {"hat", 1, 1, 0},     {"cl", 1, 1, 0},
    {"ml", 1, 1, 0},    {"hamming", 1, -1, 0}, {"raise", 0, 0, 0},
    {"fig3", 0, 0, 0},
    {"tree", 2, 2, 0},  {"lex", 0, 0, 2},     {"cart", 0, 0, 2},
    {"join", 0, 0, 2},
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec ParseAll() {
    FamilySpec spec = ParseSpec();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw FamilySpecError(message, pos_);
  }

  bool Peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void Expect(char c) {
    if (!Peek(c)) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  FamilySpec ParseSpec() {
    if (Peek('(')) {
      ++pos_;
      FamilySpec inner = ParseSpec();
      Expect(')');
      return inner;
    }
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    FamilySpec spec;
    spec.tag = std::string(text_.substr(start, pos_ - start));
    const TagInfo* info = nullptr;
    for (const TagInfo& t : kTags) {
      if (t.tag == spec.tag) info = &t;
    }
    if (info == nullptr) {
      pos_ = start;
      Fail(spec.tag.empty() ? "expected a family tag"
                            : "unknown family tag '" + spec.tag + "'");
    }
    if (info->min_params == 0 && info->operands == 0) return spec;
    Expect(':');
    if (info->operands > 0) {
      spec.operands.push_back(ParseSpec());
      for (int i = 1; i < info->operands; ++i) {
        Expect(',');
        spec.operands.push_back(ParseSpec());
      }
      return spec;
    }
    spec.params.push_back(ParseInt());
    // A comma followed by a digit continues this parameter list; otherwise it
    // belongs to an enclosing binary spec.
    while (Peek(',') && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      spec.params.push_back(ParseInt());
    }
    const int count = static_cast<int>(spec.params.size());
    if (count < info->min_params ||
        (info->max_params >= 0 && count > info->max_params)) {
      Fail("wrong number of parameters for '" + spec.tag + "'");
    }
    return spec;
  }

  long long ParseInt() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected an integer");
    if (pos_ - start > 18) {
      pos_ = start;
      Fail("integer too large");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

int IntParam(const FamilySpec& spec, size_t i) {
  const long long v = spec.params.at(i);
  if (v > 1'000'000) {
    throw FamilySpecError("parameter of '" + spec.tag + "' too large", 0);
  }
  return static_cast<int>(v);
}

}  // namespace

FamilySpec ParseFamilySpec(std::string_view text) {
  return SpecParser(text).ParseAll();
}

Graph BuildFamily(const FamilySpec& spec) {
  try {
    const std::string& t = spec.tag;
    if (t == "path") return Path(IntParam(spec, 0));
    if (t == "cycle") return Cycle(IntParam(spec, 0));
    if (t == "complete") return Complete(IntParam(spec, 0));
    if (t == "star") return Star(IntParam(spec, 0));
    if (t == "empty") return EmptyGraph(IntParam(spec, 0));
    if (t == "gn") return GadgetChain(IntParam(spec, 0));
    if (t == "fan") {
      return FanChain(IntParam(spec, 0),
                      spec.params.size() > 1 ? IntParam(spec, 1) : 8);
    }
    if (t == "hat") return HatChain(IntParam(spec, 0));
    if (t == "cl") return CircularLadder(IntParam(spec, 0));
    if (t == "ml") return MobiusLadder(IntParam(spec, 0));
    if (t == "hamming") {
      std::vector<int> factors;
      for (size_t i = 0; i < spec.params.size(); ++i) {
        factors.push_back(IntParam(spec, i));
      }
      return Hamming(factors);
    }
    if (t == "raise" || t == "fig3") return PredominationIncreaseGraph();
    if (t == "tree") {
      return RandomTree(IntParam(spec, 0),
                        static_cast<uint64_t>(spec.params.at(1)));
    }
    if (t == "lex") {
      return LexicographicProduct(BuildFamily(spec.operands.at(0)),
                                  BuildFamily(spec.operands.at(1)));
    }
    if (t == "cart") {
      return CartesianProduct(BuildFamily(spec.operands.at(0)),
                              BuildFamily(spec.operands.at(1)));
    }
    if (t == "join") {
      return Join(BuildFamily(spec.operands.at(0)),
                  BuildFamily(spec.operands.at(1)));
    }
  } catch (const FamilySpecError&) {
    throw;
  } catch (const std::logic_error& e) {
    throw FamilySpecError(spec.ToString() + ": " + e.what(), 0);
  }
  throw FamilySpecError("unknown family tag '" + spec.tag + "'", 0);
}

Graph BuildFamily(std::string_view text) {
  return BuildFamily(ParseFamilySpec(text));
}

}  // namespace cdgame
