"""Independent brute-force oracles used to pin expected values.

Everything here recomputes results from first principles (plain recursive
walk enumeration, definition-level incidence, one-unit deletions) so the
library paths under test never feed their own answers back in.
"""

from __future__ import annotations

import random

from linkgraph.multigraph import Multigraph


def brute_force_arcs(g: Multigraph, ell: int):
    """Every ell-arc as an interleaved tuple, by naive recursion."""
    out = []

    def grow(seq):
        if len(seq) == 2 * ell + 1:
            out.append(seq)
            return
        v = seq[-1]
        for eid, (a, b) in enumerate(g.edges):
            if len(seq) > 1 and seq[-2] == eid:
                continue
            if a == v:
                grow(seq + (eid, b))
            elif b == v:
                grow(seq + (eid, a))

    for v in range(g.n):
        grow((v,))
    return out


def brute_force_links(g: Multigraph, ell: int):
    """Canonical sequences of all ell-links."""
    return {min(seq, seq[::-1]) for seq in brute_force_arcs(g, ell)}


def brute_force_paths(g: Multigraph, ell: int):
    return {
        seq
        for seq in brute_force_links(g, ell)
        if len(set(seq[0::2])) == ell + 1
    }


def brute_force_incident_units(g: Multigraph, ell: int):
    """(vertex set, edge set) of units incident to at least one ell-link.

    Incidence is symmetric (one sequence inside the other), so at ell = 0
    every edge is incident through its end 0-links.
    """
    if ell == 0:
        return set(range(g.n)), set(range(g.m))
    vertices, edges = set(), set()
    for seq in brute_force_links(g, ell):
        vertices.update(seq[0::2])
        edges.update(seq[1::2])
    return vertices, edges


def delete_unit(g: Multigraph, kind: str, unit: int) -> Multigraph:
    """One-unit-deleted subgraph, vertices relabeled densely."""
    if kind == "edge":
        return Multigraph(g.n, g.edges[:unit] + g.edges[unit + 1:])
    keep = [v for v in range(g.n) if v != unit]
    return g.induced_on(keep)


def random_graph_corpus(seed: int, count: int, max_n: int, max_m: int):
    """Deterministic corpus of random multigraphs (parallel edges allowed)."""
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < count:
        n = rng.randint(1, max_n)
        m = rng.randint(0, max_m) if n >= 2 else 0
        edges = []
        for _ in range(m):
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            if v >= u:
                v += 1
            edges.append((u, v))
        corpus.append(Multigraph(n, edges))
    return corpus


def acceptance_corpus(seed=20260809, count=200, max_n=8, max_m=12):
    """The shared acceptance corpus: random multigraphs, parallel edges
    allowed, resampled when walk spaces leave desk scale so every criterion
    runs on the full corpus without skips."""
    from linkgraph.links import count_arcs_by_length

    rng = random.Random(seed)
    corpus = []
    while len(corpus) < count:
        n = rng.randint(1, max_n)
        m = rng.randint(0, max_m) if n >= 2 else 0
        edges = []
        for _ in range(m):
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            if v >= u:
                v += 1
            edges.append((u, v))
        g = Multigraph(n, edges)
        counts = count_arcs_by_length(g, 7)
        if counts[5] // 2 > 3000 or counts[7] // 2 > 15000:
            continue
        corpus.append(g)
    return corpus


def random_tree(rng: random.Random, n: int) -> Multigraph:
    """Uniform random labeled tree on n vertices via a Pruefer sequence."""
    if n <= 1:
        return Multigraph(max(n, 0))
    if n == 2:
        return Multigraph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Multigraph(n, edges)
