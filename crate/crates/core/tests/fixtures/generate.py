"""Regenerates the fixture corpus and its expected values with networkx.

alpha is the clique number of the complement, mu the size of a maximum
cardinality matching; both are computed here, independently of the crate.

    python3 generate.py
"""

import random

import networkx as nx


def alpha(g):
    if g.number_of_nodes() == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(nx.complement(g)))


def mu(g):
    return len(nx.max_weight_matching(g, maxcardinality=True))


def named():
    yield "k1", nx.empty_graph(1)
    yield "k2", nx.complete_graph(2)
    yield "empty5", nx.empty_graph(5)
    for n in range(3, 21):
        yield f"c{n}", nx.cycle_graph(n)
    for n in (2, 5, 9):
        yield f"p{n}", nx.path_graph(n)
    for n in (3, 4, 5, 7, 10):
        yield f"k{n}", nx.complete_graph(n)
    for a, b in ((1, 3), (1, 6), (2, 3), (3, 3), (2, 5), (4, 6)):
        yield f"k{a}_{b}", nx.complete_bipartite_graph(a, b)
    yield "petersen", nx.petersen_graph()
    yield "q3", nx.hypercube_graph(3)
    yield "q4", nx.hypercube_graph(4)
    yield "heawood", nx.heawood_graph()
    yield "moebius_kantor", nx.moebius_kantor_graph()
    yield "pappus", nx.pappus_graph()
    yield "frucht", nx.frucht_graph()
    yield "dodecahedral", nx.dodecahedral_graph()
    yield "desargues", nx.desargues_graph()
    yield "wheel7", nx.wheel_graph(7)
    yield "octahedral", nx.octahedral_graph()
    yield "tutte", nx.tutte_graph()
    yield "grid3x4", nx.grid_2d_graph(3, 4)


def random_graphs(rng):
    for i in range(120):
        n = rng.randint(1, 18)
        p = rng.choice((0.15, 0.3, 0.5, 0.7))
        yield f"gnp{i}", nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
    for n in (14, 16, 18, 20):
        for i in range(12):
            while True:
                g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
                if nx.is_connected(g):
                    break
            yield f"cubic{n}_{i}", g


def main():
    rng = random.Random(20240611)
    rows = []
    lines = []
    for name, g in list(named()) + list(random_graphs(rng)):
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
        lines.append(g6)
        rows.append(f"{name},{g6},{g.number_of_nodes()},{g.number_of_edges()},{alpha(g)},{mu(g)}")
    with open("corpus.g6", "w") as f:
        f.write("\n".join(lines) + "\n")
    with open("corpus.csv", "w") as f:
        f.write("name,graph6,n,m,alpha,mu\n")
        f.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
