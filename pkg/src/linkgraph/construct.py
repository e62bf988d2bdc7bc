"""Construction of link graphs, partitioned link graphs, and path graphs.

Vertices of the result are the ell-links of the source in sorted canonical
order; in link mode each (ell + 1)-link contributes exactly one result edge,
so parallel source edges surface as parallel result edges.  Full provenance
maps are kept from result units back to source links.
"""

from __future__ import annotations

from dataclasses import dataclass

from .links import Link, _canonical, count_links, enumerate_links, is_link_of
from .multigraph import Multigraph, MultigraphError

DEFAULT_MAX_LINKS = 10**6


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinkGraphResult:
    """A constructed link or path graph plus provenance to the source."""

    graph: Multigraph
    mode: str  # "link" or "path"
    source: Multigraph
    ell: int
    vertex_provenance: tuple  # result vertex id -> source ell-link
    edge_provenance: tuple  # link mode: (ell+1)-link; path mode: pair of paths

    def vertex_of(self, link: Link) -> int:
        try:
            return self._index()[link.seq]
        except KeyError:
            raise ConstructionError(f"{link} is not a vertex of this result")

    def _index(self):
        cache = getattr(self, "_idx", None)
        if cache is None:
            cache = {l.seq: i for i, l in enumerate(self.vertex_provenance)}
            object.__setattr__(self, "_idx", cache)
        return cache


@dataclass(frozen=True)
class LinkPartitions:
    """Vertex and edge partitions of a constructed link graph."""

    vertex_parts: tuple  # tuple of sorted vertex-id tuples
    edge_parts: tuple


def _group_parts(ids_with_keys):
    groups = {}
    for unit_id, key in ids_with_keys:
        groups.setdefault(key, []).append(unit_id)
    parts = [tuple(sorted(members)) for members in groups.values()]
    return tuple(sorted(parts, key=lambda p: p[0]))


def link_graph(
    g: Multigraph, ell: int, max_links: int = DEFAULT_MAX_LINKS
) -> LinkGraphResult:
    """The ell-link graph of g with provenance maps."""
    if ell < 0:
        raise MultigraphError("ell must be non-negative")
    total = count_links(g, ell)
    if total > max_links:
        raise ConstructionError(
            f"|L_{ell}(G)| = {total} exceeds the cap of {max_links}"
        )
    vertices = enumerate_links(g, ell)
    index = {l.seq: i for i, l in enumerate(vertices)}
    edge_links = enumerate_links(g, ell + 1, cap=max_links)
    edges = []
    for q in edge_links:
        head = _canonical(q.seq[: 2 * ell + 1])
        tail = _canonical(q.seq[2:])
        i, j = index[head], index[tail]
        if i == j:
            raise ConstructionError(
                "internal error: loop produced by a loopless source"
            )
        edges.append((i, j))
    return LinkGraphResult(
        graph=Multigraph(len(vertices), edges),
        mode="link",
        source=g,
        ell=ell,
        vertex_provenance=vertices,
        edge_provenance=edge_links,
    )


def link_partitions(result: LinkGraphResult) -> LinkPartitions:
    """The vertex partition V_ell and edge partition E_ell of a link graph."""
    if result.mode != "link":
        raise ConstructionError("partitions are defined for link mode only")
    ell = result.ell
    if ell == 0:
        vparts = tuple((i,) for i in range(result.graph.n))
        eparts = tuple((i,) for i in range(result.graph.m))
        return LinkPartitions(vparts, eparts)
    if ell == 1:
        vkeys = [
            (i, (min(l.seq[0], l.seq[2]), max(l.seq[0], l.seq[2])))
            for i, l in enumerate(result.vertex_provenance)
        ]
    else:
        vkeys = [
            (i, _canonical(l.seq[2:-2]))
            for i, l in enumerate(result.vertex_provenance)
        ]
    ekeys = [
        (i, _canonical(q.seq[2:-2]))
        for i, q in enumerate(result.edge_provenance)
    ]
    return LinkPartitions(_group_parts(vkeys), _group_parts(ekeys))


def partitioned_link_graph(
    g: Multigraph, ell: int, max_links: int = DEFAULT_MAX_LINKS
):
    result = link_graph(g, ell, max_links=max_links)
    return result, link_partitions(result)


def path_graph(
    g: Multigraph, ell: int, max_links: int = DEFAULT_MAX_LINKS
) -> LinkGraphResult:
    """The ell-path graph of g (simple), with provenance maps.

    Two ell-paths are adjacent when a common (ell + 1)-walk joins them whose
    unit union is an (ell + 1)-path or an (ell + 1)-cycle, i.e. when some
    (ell + 1)-link that is itself a path or a cycle has them as its initial
    and final subsequences.
    """
    if ell < 0:
        raise MultigraphError("ell must be non-negative")
    if ell == 0:
        # degenerate: two 0-paths are adjacent when some edge joins them
        pairs = sorted({(u, v) for u, v in g.edges})
        return LinkGraphResult(
            graph=Multigraph(g.n, pairs),
            mode="path",
            source=g,
            ell=0,
            vertex_provenance=tuple(Link((v,)) for v in range(g.n)),
            edge_provenance=tuple(
                (Link((u,)), Link((v,))) for u, v in pairs
            ),
        )
    from .links import enumerate_paths

    paths = enumerate_paths(g, ell, cap=max_links)
    index = {p.seq: i for i, p in enumerate(paths)}
    candidate_pairs = set()
    for q in enumerate_links(g, ell + 1, cap=max_links):
        verts = q.vertices
        distinct = len(set(verts))
        is_long_path = distinct == ell + 2
        is_cycle = verts[0] == verts[-1] and distinct == ell + 1
        if not (is_long_path or is_cycle):
            continue
        head = _canonical(q.seq[: 2 * ell + 1])
        tail = _canonical(q.seq[2:])
        i, j = index[head], index[tail]
        if i == j:
            raise ConstructionError(
                "internal error: loop produced by a loopless source"
            )
        candidate_pairs.add((i, j) if i < j else (j, i))
    edges = sorted(candidate_pairs)
    return LinkGraphResult(
        graph=Multigraph(len(paths), edges),
        mode="path",
        source=g,
        ell=ell,
        vertex_provenance=paths,
        edge_provenance=tuple((paths[i], paths[j]) for i, j in edges),
    )


@dataclass(frozen=True)
class ProjectedLink:
    """An s-link of the link graph obtained by projecting an (ell+s)-link.

    ``closed`` follows the arc criterion: the defining arc's initial and
    final ell-subarcs coincide with matching orientation.  Equivalently the
    projected walk returns to its starting link with its first and last
    link-graph edges in different edge parts (cycle-like closure); a walk
    that merely retraces itself backwards does not count as closed.
    """

    link: Link  # in the id space of the link graph result
    closed: bool
    source_link: Link


def project_link(result: LinkGraphResult, r: Link) -> ProjectedLink:
    """Project an (ell + s)-link of the source into the ell-link graph."""
    if result.mode != "link":
        raise ConstructionError("projection lives in link mode")
    ell = result.ell
    s = r.length - ell
    if s < 0 or not is_link_of(result.source, r):
        raise ConstructionError(f"{r} is not an (ell + s)-link of the source")
    seq = r.seq
    vertex_ids = [
        result.vertex_of(Link(_canonical(seq[2 * i: 2 * i + 2 * ell + 1])))
        for i in range(s + 1)
    ]
    edge_index = {q.seq: eid for eid, q in enumerate(result.edge_provenance)}
    out = [vertex_ids[0]]
    for j in range(1, s + 1):
        q = _canonical(seq[2 * (j - 1): 2 * (j - 1) + 2 * ell + 3])
        eid = edge_index[q]
        if len(out) > 1 and out[-2] == eid:
            raise ConstructionError(
                "internal error: projection produced equal consecutive edges"
            )
        out.append(eid)
        out.append(vertex_ids[j])
    closed = seq[: 2 * ell + 1] == seq[2 * s: 2 * s + 2 * ell + 1]
    return ProjectedLink(link=Link(tuple(out)), closed=closed, source_link=r)


def shunt_reachable(g: Multigraph, ell: int, a: Link, b: Link) -> bool:
    """Whether one ell-link can be shunted to another: connectivity in L_ell."""
    for l in (a, b):
        if l.length != ell or not is_link_of(g, l):
            raise ConstructionError(f"{l} is not an {ell}-link of the graph")
    result = link_graph(g, ell)
    va, vb = result.vertex_of(a), result.vertex_of(b)
    return vb in set(result.graph.component_of(va))


def provenance_lines(result: LinkGraphResult):
    """Tab-separated provenance: unit id and rendered link sequence."""
    lines = []
    for i, link in enumerate(result.vertex_provenance):
        lines.append(f"{i}\t{link}")
    for i, prov in enumerate(result.edge_provenance):
        if result.mode == "link":
            lines.append(f"{i}\t{prov}")
        else:
            lines.append(f"{i}\t{prov[0]} | {prov[1]}")
    return lines
