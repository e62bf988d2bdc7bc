"""Canonical forms and isomorphism for loopless multigraphs.

Backtracking colour refinement with individualization, run per connected
component; the certificate is the minimum over the branch leaves.  Parallel
edges are folded into neighbour weights during refinement, so the stable
partition refines both the degree multiset and the multiplicity profile.
Adequate at desk scale (n up to a couple hundred, mild symmetry); not meant
to be asymptotically competitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import Multigraph

_MAX_VERTICES = 255
_DEFAULT_LEAF_BUDGET = 1 << 18


class CanonBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CanonicalForm:
    """Byte string equal between two multigraphs iff they are isomorphic."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    def __lt__(self, other):
        return self.data < other.data


def _weighted_adjacency(g: Multigraph):
    weights = [{} for _ in range(g.n)]
    for u, v in g.edges:
        weights[u][v] = weights[u].get(v, 0) + 1
        weights[v][u] = weights[v].get(u, 0) + 1
    return [tuple(sorted(w.items())) for w in weights]


def _refine(verts, wadj, colors):
    """Stable colour refinement; colors maps vertex -> small int."""
    while True:
        sigs = {
            v: (colors[v], tuple(sorted((colors[u], w) for u, w in wadj[v])))
            for v in verts
        }
        ranking = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        new = {v: ranking[sigs[v]] for v in verts}
        if new == colors:
            return colors
        colors = new


def _classes(verts, colors):
    by_color = {}
    for v in verts:
        by_color.setdefault(colors[v], []).append(v)
    return [by_color[c] for c in sorted(by_color)]


class _ComponentCanon:
    def __init__(self, verts, wadj, init_colors, edges, is_tree, leaf_budget):
        self.verts = verts
        self.wadj = wadj
        self.init_colors = init_colors
        self.edges = edges
        self.is_tree = is_tree
        self.leaf_budget = leaf_budget
        self.leaves = 0
        self.best = None
        self.best_lab = None
        self.pair_weight = {}
        for u in verts:
            for x, w in wadj[u]:
                self.pair_weight[(u, x)] = w

    def run(self):
        self._descend(dict(self.init_colors))
        return self.best, self.best_lab

    def _mutual_twins(self, cls) -> bool:
        """All members swappable pairwise: equal weighted neighbourhoods
        outside the class and one uniform multiplicity inside it."""
        cls_set = set(cls)
        first_ext = None
        for u in cls:
            ext = sorted((x, w) for x, w in self.wadj[u] if x not in cls_set)
            if first_ext is None:
                first_ext = ext
            elif ext != first_ext:
                return False
        intra = {
            self.pair_weight.get((cls[i], cls[j]), 0)
            for i in range(len(cls))
            for j in range(i + 1, len(cls))
        }
        return len(intra) <= 1

    def _descend(self, colors):
        colors = _refine(self.verts, self.wadj, colors)
        classes = _classes(self.verts, colors)
        target = None
        for cls in classes:
            if len(cls) > 1 and (target is None or len(cls) < len(target)):
                target = cls
        if target is None:
            self._leaf(colors)
            return
        # One branch suffices when the class is provably an orbit: colour
        # refinement is orbit-exact on trees, and mutual twins are swappable.
        if self.is_tree or self._mutual_twins(target):
            branch_vertices = target[:1]
        else:
            branch_vertices = target
        for v in branch_vertices:
            split = {u: 2 * colors[u] for u in self.verts}
            split[v] += 1
            self._descend(split)

    def _leaf(self, colors):
        self.leaves += 1
        if self.leaves > self.leaf_budget:
            raise CanonBudgetExceeded(
                f"canonical search exceeded {self.leaf_budget} leaves"
            )
        lab = {v: colors[v] for v in self.verts}
        edges = sorted(
            (lab[u], lab[v]) if lab[u] <= lab[v] else (lab[v], lab[u])
            for u, v in self.edges
        )
        init = tuple(self.init_colors[v] for v in sorted(self.verts, key=lab.get))
        cert = (len(self.verts), len(self.edges), tuple(edges), init)
        if self.best is None or cert < self.best:
            self.best = cert
            self.best_lab = lab


def _pack(n, m, edges, colors) -> bytes:
    out = bytearray()
    out.append(n)
    out += m.to_bytes(2, "big")
    for a, b in edges:
        out.append(a)
        out.append(b)
    if any(colors):
        out.append(0xFF)
        for c in colors:
            out += c.to_bytes(2, "big")
    return bytes(out)


def canonical_labeling(g: Multigraph, colors=None, leaf_budget=_DEFAULT_LEAF_BUDGET):
    """Return (CanonicalForm, labeling) with labeling[v] = canonical id of v.

    ``colors`` is an optional per-vertex sequence; only the induced partition
    (ordered by value) matters.  Raises CanonBudgetExceeded on pathological
    symmetry and MultigraphError-style ValueError above the size cap.
    """
    if g.n > _MAX_VERTICES:
        raise ValueError(f"canonical form supports at most {_MAX_VERTICES} vertices")
    if colors is None:
        dense = [0] * g.n
    else:
        ranking = {c: i for i, c in enumerate(sorted(set(colors)))}
        dense = [ranking[c] for c in colors]

    wadj = _weighted_adjacency(g)
    edge_ids_at = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        edge_ids_at[u].append(eid)
        edge_ids_at[v].append(eid)

    results = []
    for comp in g.components():
        comp_edge_ids = sorted({e for v in comp for e in edge_ids_at[v]})
        comp_edges = [g.edges[e] for e in comp_edge_ids]
        is_tree = len(comp_edges) == len(comp) - 1
        init = {v: dense[v] for v in comp}
        cert, lab = _ComponentCanon(
            comp, wadj, init, comp_edges, is_tree, leaf_budget
        ).run()
        results.append((cert, lab, comp))

    results.sort(key=lambda r: r[0])
    labeling = [0] * g.n
    offset = 0
    all_edges = []
    all_colors = []
    for cert, lab, comp in results:
        size, _, edges, init = cert
        for v in comp:
            labeling[v] = lab[v] + offset
        all_edges.extend((a + offset, b + offset) for a, b in edges)
        all_colors.extend(init)
        offset += size
    form = CanonicalForm(_pack(g.n, g.m, all_edges, all_colors))
    return form, tuple(labeling)


def canonical_form(g: Multigraph, colors=None) -> CanonicalForm:
    return canonical_labeling(g, colors)[0]


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def find_isomorphism(g: Multigraph, h: Multigraph):
    """A vertex bijection g -> h preserving edge multiplicities, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    form_g, lab_g = canonical_labeling(g)
    form_h, lab_h = canonical_labeling(h)
    if form_g != form_h:
        return None
    inverse_h = {lab_h[v]: v for v in range(h.n)}
    return {v: inverse_h[lab_g[v]] for v in range(g.n)}


def verify_isomorphism(g: Multigraph, h: Multigraph, mapping) -> bool:
    """Edge-by-edge check that ``mapping`` preserves edge multiplicities."""
    if sorted(mapping) != list(range(g.n)):
        return False
    if sorted(mapping.values()) != list(range(h.n)):
        return False

    def norm(edges):
        return sorted(tuple(sorted(e)) for e in edges)

    mapped = norm((mapping[u], mapping[v]) for u, v in g.edges)
    return mapped == norm(h.edges)


def vertex_orbits(g: Multigraph):
    """Vertex orbits under the automorphism group, as sorted lists."""
    keys = {}
    for v in range(g.n):
        colors = [0] * g.n
        colors[v] = 1
        keys.setdefault(canonical_form(g, colors).data, []).append(v)
    return sorted(keys.values(), key=lambda orbit: orbit[0])
