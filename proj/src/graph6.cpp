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

#include "cdgame/graph6.h"

#include <fstream>
#include <string>
#include <vector>

namespace cdgame {

namespace {

constexpr int kBias = 63;

}  // namespace

Graph ParseGraph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw Graph6Error("graph6: empty input");
  for (size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error("graph6: byte " + std::to_string(i) +
                        " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n > 62) {
    throw Graph6Error("graph6: multi-byte order fields are not supported");
  }
  if (n == 0) throw Graph6Error("graph6: graphs need at least one vertex");
  const size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t expected = 1 + (pairs + 5) / 6;
  if (line.size() != expected) {
    throw Graph6Error("graph6: expected " + std::to_string(expected) +
                      " bytes for n=" + std::to_string(n) + ", got " +
                      std::to_string(line.size()));
  }
  std::vector<Edge> edges;
  size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (pairs % 6 != 0) {
    const int byte = static_cast<unsigned char>(line.back()) - kBias;
    const int padding = static_cast<int>(6 - pairs % 6);
    if ((byte & ((1 << padding) - 1)) != 0) {
      throw Graph6Error("graph6: nonzero padding bits");
    }
  }
  return Graph(n, edges);
}

std::string EmitGraph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) {
    throw Graph6Error("graph6: order " + std::to_string(n) +
                      " needs a multi-byte size field");
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<CorpusEntry> ReadGraph6File(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path.string());
  std::vector<CorpusEntry> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '>' || line[0] == '#') continue;
    try {
      out.push_back({number, line, ParseGraph6(line)});
    } catch (const Graph6Error& e) {
      throw Graph6Error(path.string() + ":" + std::to_string(number) + ": " +
                        e.what());
    }
  }
  return out;
}

}  // namespace cdgame
