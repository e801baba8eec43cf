"""Export the Les Miserables co-appearance graph bundled with networkx as a
METIS file for the dataset-dependent acceptance checks.

Usage: python scripts/export_lesmis.py [output-path]
"""

import sys
from pathlib import Path

import networkx as nx

from twopack import StaticGraph
from twopack.graphio import write_metis


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data/instances/lesmis.graph")
    nxg = nx.les_miserables_graph()
    nodes = sorted(nxg.nodes())
    index = {name: i for i, name in enumerate(nodes)}
    g = StaticGraph.from_edges(
        len(nodes), [(index[u], index[v]) for u, v in nxg.edges()]
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(write_metis(g))
    print(f"wrote {out} (n={g.n}, m={g.m})")


if __name__ == "__main__":
    main()
