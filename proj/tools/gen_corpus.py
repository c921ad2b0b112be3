#!/usr/bin/env python3
# Copyright 2026 The cdgame Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the small-graph corpora and graph6 reference fixtures used by the tests.

  graphs7.g6        all 853 connected graphs on 7 vertices (networkx atlas)
  graphs_le6.g6     all connected graphs on 1..6 vertices
  graph6_ref.txt    random graphs as "<graph6> <n> u-v u-v ...", encoded by networkx
"""
import argparse
import os
import random

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("outdir")
    args = parser.parse_args()

    atlas = [g for g in graph_atlas_g() if len(g) > 0 and nx.is_connected(g)]
    with open(os.path.join(args.outdir, "graphs7.g6"), "w") as f:
        for g in atlas:
            if len(g) == 7:
                f.write(g6(g) + "\n")
    with open(os.path.join(args.outdir, "graphs_le6.g6"), "w") as f:
        for g in atlas:
            if len(g) < 7:
                f.write(g6(g) + "\n")

    rng = random.Random(20261015)
    with open(os.path.join(args.outdir, "graph6_ref.txt"), "w") as f:
        for _ in range(10):
            n = rng.randint(2, 40)
            g = nx.gnp_random_graph(n, rng.uniform(0.1, 0.7), seed=rng.randint(0, 1 << 30))
            edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
            f.write(f"{g6(g)} {n} {edges}".rstrip() + "\n")


if __name__ == "__main__":
    main()
