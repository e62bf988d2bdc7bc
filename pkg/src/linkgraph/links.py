"""Walks with distinct consecutive edges: arcs (directed) and links (reversal-free).

An arc of length ell is stored as the interleaved tuple
(v0, e1, v1, e2, ..., e_ell, v_ell).  A link is the pair {arc, reversed arc},
canonically represented by the lexicographically smaller of the two tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import INFINITE, Multigraph, MultigraphError


class LinkCountExceeded(RuntimeError):
    """Raised when a materializing enumeration would exceed its budget."""

    def __init__(self, count, cap):
        super().__init__(f"enumeration of {count} links exceeds the cap of {cap}")
        self.count = count
        self.cap = cap


def _canonical(seq: tuple) -> tuple:
    rev = seq[::-1]
    return seq if seq <= rev else rev


@dataclass(frozen=True)
class Arc:
    """A directed walk whose consecutive edges differ."""

    seq: tuple

    @property
    def length(self) -> int:
        return len(self.seq) // 2

    @property
    def vertices(self) -> tuple:
        return self.seq[0::2]

    @property
    def edge_ids(self) -> tuple:
        return self.seq[1::2]

    def reverse(self) -> "Arc":
        return Arc(self.seq[::-1])

    def link(self) -> "Link":
        return Link(_canonical(self.seq))


@dataclass(frozen=True)
class Link:
    """An arc identified with its reverse; ``seq`` is the canonical orientation."""

    seq: tuple

    def __post_init__(self):
        if self.seq != _canonical(self.seq):
            object.__setattr__(self, "seq", _canonical(self.seq))

    @property
    def length(self) -> int:
        return len(self.seq) // 2

    @property
    def vertices(self) -> tuple:
        return self.seq[0::2]

    @property
    def edge_ids(self) -> tuple:
        return self.seq[1::2]

    def arc(self) -> Arc:
        return Arc(self.seq)

    def sublink(self, i: int, j: int) -> "Link":
        """The (j - i)-link at positions i..j of the canonical orientation."""
        if not 0 <= i <= j <= self.length:
            raise IndexError(f"sublink bounds {i}..{j} outside 0..{self.length}")
        return Link(_canonical(self.seq[2 * i: 2 * j + 1]))

    def is_path(self) -> bool:
        verts = self.vertices
        return len(set(verts)) == len(verts)

    def __lt__(self, other):
        return self.seq < other.seq

    def __str__(self):
        out = [str(self.seq[0])]
        for i in range(1, len(self.seq), 2):
            out.append(f"-{self.seq[i]}-")
            out.append(str(self.seq[i + 1]))
        return " ".join(out)


def _check_host(g: Multigraph, seq: tuple) -> bool:
    if len(seq) % 2 == 0:
        return False
    for i in range(0, len(seq) - 1, 2):
        v, e, w = seq[i], seq[i + 1], seq[i + 2]
        if not 0 <= e < g.m:
            return False
        if set(g.edges[e]) != {v, w}:
            return False
        if i and seq[i - 1] == e:
            return False
    return True


def is_link_of(g: Multigraph, link: Link) -> bool:
    """True when ``link`` is a walk of g with distinct consecutive edges."""
    if not link.seq:
        return False
    if len(link.seq) == 1:
        return 0 <= link.seq[0] < g.n
    return _check_host(g, link.seq)


def iter_arcs(g: Multigraph, ell: int):
    """Yield every ell-arc of g, grouped by starting vertex."""
    if ell < 0:
        raise MultigraphError("arc length must be non-negative")
    if ell == 0:
        for v in range(g.n):
            yield (v,)
        return
    adj = g.adjacency
    stack = [(v,) for v in range(g.n - 1, -1, -1)]
    target = 2 * ell + 1
    while stack:
        seq = stack.pop()
        if len(seq) == target:
            yield seq
            continue
        last_v = seq[-1]
        last_e = seq[-2] if len(seq) > 1 else -1
        for e, w in adj[last_v]:
            if e != last_e:
                stack.append(seq + (e, w))


def count_arcs_by_length(g: Multigraph, max_len: int):
    """Counts of ell-arcs for ell = 0..max_len via dynamic programming."""
    counts = [g.n]
    if max_len == 0:
        return counts
    # state: number of arcs of the current length ending with directed edge
    # (eid, head); indexed as 2*eid + (0 if head is the smaller endpoint).
    cur = [1] * (2 * g.m)
    counts.append(2 * g.m)
    adj = g.adjacency

    def head_index(eid, head):
        u, v = g.edges[eid]
        return 2 * eid + (0 if head == u else 1)

    for _ in range(max_len - 1):
        into = [0] * g.n
        for eid, (u, v) in enumerate(g.edges):
            into[u] += cur[2 * eid]
            into[v] += cur[2 * eid + 1]
        nxt = [0] * (2 * g.m)
        for v in range(g.n):
            base = into[v]
            if not base:
                continue
            for e, w in adj[v]:
                nxt[head_index(e, w)] += base - cur[head_index(e, v)]
        cur = nxt
        counts.append(sum(cur))
    return counts


def count_links(g: Multigraph, ell: int) -> int:
    """|L_ell(g)| without materializing; arcs pair up 2:1 for ell >= 1."""
    if ell == 0:
        return g.n
    return count_arcs_by_length(g, ell)[ell] // 2


def enumerate_links(g: Multigraph, ell: int, cap: int | None = None):
    """All ell-links of g, sorted by canonical sequence.

    Raises LinkCountExceeded when the (cheaply precomputed) count exceeds cap.
    """
    if cap is not None:
        total = count_links(g, ell)
        if total > cap:
            raise LinkCountExceeded(total, cap)
    seen = set()
    for seq in iter_arcs(g, ell):
        seen.add(_canonical(seq))
    return tuple(Link(s) for s in sorted(seen))


def enumerate_arcs(g: Multigraph, ell: int):
    return tuple(Arc(seq) for seq in sorted(iter_arcs(g, ell)))


def iter_paths(g: Multigraph, ell: int):
    """Yield the canonical sequence of every ell-path (no repeated vertices)."""
    if ell == 0:
        for v in range(g.n):
            yield (v,)
        return
    adj = g.adjacency
    target = 2 * ell + 1

    def extend(seq, used):
        if len(seq) == target:
            if seq <= seq[::-1]:
                yield seq
            return
        last_v = seq[-1]
        last_e = seq[-2] if len(seq) > 1 else -1
        for e, w in adj[last_v]:
            if e != last_e and w not in used:
                yield from extend(seq + (e, w), used | {w})

    for v in range(g.n):
        yield from extend((v,), {v})


def enumerate_paths(g: Multigraph, ell: int, cap: int | None = None):
    """All ell-paths of g, sorted; cap guards the materialization."""
    seen = set()
    for seq in iter_paths(g, ell):
        seen.add(seq)
        if cap is not None and len(seen) > cap:
            raise LinkCountExceeded(len(seen), cap)
    return tuple(Link(s) for s in sorted(seen))


def count_paths(g: Multigraph, ell: int, stop_above: int | None = None) -> int:
    """Number of ell-paths; stops early once the count passes ``stop_above``."""
    count = 0
    for _ in iter_paths(g, ell):
        count += 1
        if stop_above is not None and count > stop_above:
            return count
    return count


def link_girth(link: Link) -> float:
    """Minimum length of a sub-cycle of the sequence; INFINITE for paths."""
    verts = link.vertices
    positions = {}
    best = INFINITE
    for i, v in enumerate(verts):
        if v in positions:
            best = min(best, i - positions[v])
        positions[v] = i
    return best


def induced_graph(g: Multigraph, link: Link) -> Multigraph:
    """The subgraph of g induced by the units of the link (ids relabeled)."""
    if not is_link_of(g, link):
        raise MultigraphError("not a link of the given graph")
    return g.induced_on(set(link.vertices), set(link.edge_ids))
