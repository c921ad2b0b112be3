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

#ifndef CDGAME_GRAPH6_H_
#define CDGAME_GRAPH6_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdgame/graph.h"

namespace cdgame {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// graph6 with the single-byte order field (1 <= n <= 62). Trailing '\r' and
// '\n' are ignored; anything else malformed throws Graph6Error.
Graph ParseGraph6(std::string_view line);
std::string EmitGraph6(const Graph& g);

struct CorpusEntry {
  int line_number;  // 1-based
  std::string text;
  Graph graph;
};

// One graph per line; blank lines and lines starting with '>' or '#' skipped.
// Errors carry the path and line number.
std::vector<CorpusEntry> ReadGraph6File(const std::filesystem::path& path);

}  // namespace cdgame

#endif  // CDGAME_GRAPH6_H_
