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

#ifndef CDGAME_FAMILIES_H_
#define CDGAME_FAMILIES_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdgame/graph.h"

namespace cdgame {

// Standard labelings 0..n-1. Cycle closes with edge (n-1, 0); the star's hub
// is vertex 0.
Graph Path(int n);            // n >= 1
Graph Cycle(int n);           // n >= 3
Graph Complete(int n);        // n >= 1
Graph Star(int leaves);       // leaves >= 1
Graph EmptyGraph(int n);      // n >= 1

// Chain of n gadgets on the spine u_0..u_n. For 1 <= i <= n-1 the gadget is
// the path u_i - x_i - y_i - z_i with u_{i+1} adjacent to x_i, y_i and z_i.
// Vertex order: u_0..u_n, x_1..x_{n-1}, y_1..y_{n-1}, z_1..z_{n-1}.
// Its D-game value is n while the S-game value is 2n.
Graph GadgetChain(int n);     // n >= 2

// Fans K_1 v P_{n-1} chained left to right: the last rim vertex of one block
// is the first rim vertex of the next, so `blocks` fans have
// n + (n-1)(blocks-1) vertices. Labels: hub "h<b>", rim "r<b>_<k>"
// (k = 1..n-1), 1-based blocks; a shared vertex keeps its first label.
Graph FanChain(int blocks, int n = 8);  // blocks >= 1, n >= 7

// FanChain(i + 1, 8) where every block also carries a "hat" vertex "t<b>"
// adjacent to rim vertices 3 and 4 of its block: 9 + 8i vertices.
Graph HatChain(int i);        // i >= 0

// C_n x K_2 with vertex (i, j) (1-based labels "(i,j)") at index
// 2(i-1) + (j-1).
Graph CircularLadder(int n);  // n >= 3
// C_{2n} plus the n chords {i, i+n}.
Graph MobiusLadder(int n);    // n >= 3

// K_{n_1} x ... x K_{n_r}, left associative.
Graph Hamming(std::span<const int> factors);

// The 11-vertex path a'-a-b-c-d-e-f-g-g' with the extra path e-e'-f'-f.
// Predominating c raises the D-game value from 7 to 8.
Graph PredominationIncreaseGraph();

// Uniform labeled tree from a seeded Pruefer sequence.
Graph RandomTree(int n, uint64_t seed);

class FamilySpecError : public std::invalid_argument {
 public:
  FamilySpecError(const std::string& message, size_t position);
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Textual graph address used on the command line, e.g. "path:7", "fan:2,8",
// "raise" (alias "fig3"), "lex:path:3,cycle:4", "cart:(cycle:5),(complete:2)".
struct FamilySpec {
  std::string tag;
  std::vector<long long> params;
  std::vector<FamilySpec> operands;  // lex, cart, join

  std::string ToString() const;
};

FamilySpec ParseFamilySpec(std::string_view text);
// Throws FamilySpecError (position 0) when parameters break a generator's
// precondition.
Graph BuildFamily(const FamilySpec& spec);
Graph BuildFamily(std::string_view text);

}  // namespace cdgame

#endif  // CDGAME_FAMILIES_H_
