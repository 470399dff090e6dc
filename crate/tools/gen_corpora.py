"""Regenerates the vendored graph corpora under corpora/.

Connected graphs on up to 7 vertices and trees on up to 10 vertices,
one graph6 line per graph, isomorph-free.
"""

import networkx as nx
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "corpora"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def connected_upto_7():
    # the graph atlas covers all graphs with at most 7 vertices
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() >= 1 and nx.is_connected(g):
            yield g


def main():
    OUT.mkdir(exist_ok=True)
    by_n = {}
    for g in connected_upto_7():
        by_n.setdefault(g.number_of_nodes(), []).append(g6(g))
    all_lines = []
    for n in sorted(by_n):
        lines = sorted(set(by_n[n]))
        (OUT / f"connected_{n}.g6").write_text("\n".join(lines) + "\n")
        all_lines += lines
        print(f"connected n={n}: {len(lines)}")
    (OUT / "connected_upto7.g6").write_text("\n".join(all_lines) + "\n")
    print(f"connected total: {len(all_lines)}")

    trees = []
    trees.append(g6(nx.empty_graph(1)))
    trees.append(g6(nx.path_graph(2)))
    for n in range(3, 11):
        trees += sorted(set(g6(t) for t in nx.nonisomorphic_trees(n)))
    (OUT / "trees_upto10.g6").write_text("\n".join(trees) + "\n")
    print(f"trees total: {len(trees)}")


if __name__ == "__main__":
    main()
