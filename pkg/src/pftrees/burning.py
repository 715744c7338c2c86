"""Depth-first burning of multigraphs and x-vectors, with inverses.

Parallel edges are tracked as a count of unburnt copies per vertex pair;
copies are interchangeable, so only counts matter. Edge labelings are
dicts keyed by the sorted pair ``(min, max)`` of a tree edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from .trees import Edge, Multigraph, RootedPlaneTree, RootedTree, VertexOrder

EdgeLabeling = Dict[Edge, int]


def _key(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass
class BurnResult:
    """Outcome of a multigraph burn: the labeled spanning tree, or the unburnt set."""

    tree: Optional[RootedTree]
    labeling: Optional[EdgeLabeling]
    certificate: Optional[FrozenSet[int]] = None
    trace: List[dict] = field(default_factory=list, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.tree is not None

    def to_json_obj(self) -> dict:
        if not self.ok:
            return {"ok": False, "certificate": sorted(self.certificate)}
        return {
            "ok": True,
            "tree": self.tree.to_json_obj(),
            "labeling": labeling_to_json(self.labeling),
        }


@dataclass
class VectorBurnResult:
    """Outcome of a vector burn: plane tree, labeling and admissible order."""

    tree: Optional[RootedPlaneTree]
    labeling: Optional[EdgeLabeling]
    order: Optional[VertexOrder]
    certificate: Optional[FrozenSet[int]] = None
    trace: List[dict] = field(default_factory=list, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.tree is not None

    def triple(self) -> Tuple[RootedPlaneTree, EdgeLabeling, VertexOrder]:
        return self.tree, self.labeling, self.order

    def to_json_obj(self) -> dict:
        if not self.ok:
            return {"ok": False, "certificate": sorted(self.certificate)}
        return {
            "ok": True,
            "tree": self.tree.to_json_obj(),
            "labeling": labeling_to_json(self.labeling),
            "order": self.order.to_json_obj(),
        }


def labeling_to_json(lab: Mapping[Edge, int]) -> List[List[int]]:
    return [[i, j, lab[(i, j)]] for i, j in sorted(lab)]


def labeling_from_json(rows: Sequence[Sequence[int]]) -> EdgeLabeling:
    out: EdgeLabeling = {}
    for row in rows:
        i, j, v = (int(t) for t in row)
        out[_key(i, j)] = v
    return out


class _Trace:
    __slots__ = ("events", "on")

    def __init__(self, on: bool):
        self.on = on
        self.events: List[dict] = []

    def add(self, event: str, **kw) -> None:
        if self.on:
            kw["step"] = len(self.events) + 1
            self.events.append({"event": event, **kw})


def _run_burn(n: int, rem: List[List[int]], desc: Sequence[int], chips: List[int], grow, trace: _Trace):
    """Shared DFS-burning loop.

    ``rem[u][v]`` counts unburnt copies of ``{u, v}``; ``grow(j)`` is called
    right after ``j`` ignites (the vector variant adds edges there).
    Returns ``(burning, parent, labels)`` in the run's own labels.
    """
    burning = [False] * (n + 1)
    burning[0] = True
    parent = [0] * (n + 1)
    labels: EdgeLabeling = {}
    head = 0
    while True:
        ignited = False
        for j in desc:
            if burning[j]:
                continue
            r = rem[head][j]
            if r == 0:
                continue
            # burn min(r, chips) copies in one step, then ignite if copies remain
            k = chips[j] if chips[j] < r else r
            if k:
                rem[head][j] -= k
                rem[j][head] -= k
                chips[j] -= k
                if trace.on:
                    for _ in range(k):
                        trace.add("burn_edge", edge=[head, j])
            if k < r:
                burning[j] = True
                parent[j] = head
                grow(j)
                labels[_key(head, j)] = r - k - 1
                if trace.on:
                    trace.add("ignite", vertex=j, parent=head)
                head = j
                ignited = True
                break
        if ignited:
            continue
        if head != 0:
            head = parent[head]
            if trace.on:
                trace.add("retreat", vertex=head)
            continue
        return burning, parent, labels


def mg_dfs_burn(g: Multigraph, o: VertexOrder, a: Sequence[int], trace: bool = False) -> BurnResult:
    """Multigraph DFS-burning of chip configuration ``a`` under order ``o``.

    Succeeds exactly when ``a`` is a G-parking function; otherwise the
    unburnt vertices form the certificate.
    """
    n = g.n
    if len(a) != n or o.n != n:
        raise ValueError(f"length mismatch: graph has {n} non-root vertices, alpha {len(a)}, order {o.n}")
    chips = [0] + [int(v) for v in a]
    rem = [list(row) for row in g.matrix]
    tr = _Trace(trace)
    burning, parent, labels = _run_burn(n, rem, o.descending(), chips, lambda j: None, tr)
    if all(burning):
        return BurnResult(RootedTree._trusted(tuple(parent[1:])), labels, None, tr.events)
    unburnt = frozenset(v for v in range(1, n + 1) if not burning[v])
    return BurnResult(None, None, unburnt, tr.events)


def _parent_labels(g: Multigraph, t: RootedTree, lab: Mapping[Edge, int]) -> List[int]:
    """Validate ``lab`` against ``t`` and ``g``; return the label of each vertex's parent edge."""
    par = t.parent
    if len(lab) != t.n:
        raise ValueError("labeling must assign exactly one label to each tree edge")
    m = g.matrix
    out = [0] * (t.n + 1)
    for v in range(1, t.n + 1):
        p = par[v - 1]
        key = (p, v) if p < v else (v, p)
        if key not in lab:
            raise ValueError("labeling must assign exactly one label to each tree edge")
        w = m[p][v]
        if w == 0:
            raise ValueError(f"tree edge {key} is not an edge of the graph")
        val = lab[key]
        if not 0 <= val <= w - 1:
            raise ValueError(f"label {val} on {key} outside 0..{w - 1}")
        out[v] = val
    return out


def mg_dfs_unburn(
    g: Multigraph, o: VertexOrder, t: RootedTree, labeling: Mapping[Edge, int], trace: bool = False
) -> Tuple[int, ...]:
    """Inverse multigraph burn: recover the parking function from ``(t, labeling)``."""
    n = g.n
    if t.n != n or o.n != n:
        raise ValueError("size mismatch between graph, tree and order")
    lab = {_key(i, j): int(v) for (i, j), v in labeling.items()}
    target = _parent_labels(g, t, lab)
    tr = _Trace(trace)
    rem = [list(row) for row in g.matrix]
    par = t.parent
    alpha = [0] * (n + 1)
    burning = [False] * (n + 1)
    burning[0] = True
    head = 0
    desc = o.descending()
    while True:
        ignited = False
        for j in desc:
            if burning[j]:
                continue
            r = rem[head][j]
            if r == 0:
                continue
            # the tree edge ignites once exactly target[j] copies remain unburnt
            k = r - 1 - target[j] if par[j - 1] == head else r
            if k:
                rem[head][j] -= k
                rem[j][head] -= k
                alpha[j] += k
                if tr.on:
                    for _ in range(k):
                        tr.add("burn_edge", edge=[head, j])
            if k < r:
                burning[j] = True
                if tr.on:
                    tr.add("ignite", vertex=j, parent=head)
                head = j
                ignited = True
                break
        if ignited:
            continue
        if head != 0:
            head = par[head - 1]
            if tr.on:
                tr.add("retreat", vertex=head)
            continue
        break
    if not all(burning):
        raise ValueError("tree is not a spanning tree reachable by the burn")
    return tuple(alpha[1:])


def build_gx(x: Sequence[int]) -> Multigraph:
    """Complete multigraph with ``w({i, j}) = x_{min(i, j) + 1}``."""
    x = [int(v) for v in x]
    if any(v < 0 for v in x):
        raise ValueError("x entries must be >= 0")
    n = len(x)
    return Multigraph(n, [(i, j, x[i]) for i in range(n + 1) for j in range(i + 1, n + 1) if x[i]])


def vec_dfs_burn(x: Sequence[int], a: Sequence[int], trace: bool = False) -> VectorBurnResult:
    """Vector DFS-burning: grow ``G_x`` while burning, return ``(T, labeling, order)``.

    The ``k``-th vertex to ignite receives ``x_{k+1}`` parallel edges to
    every vertex not yet burning. Output labels follow ignition order.
    """
    x = [int(v) for v in x]
    n = len(x)
    if len(a) != n:
        raise ValueError(f"length mismatch: x has {n}, alpha has {len(a)}")
    if any(v < 0 for v in x) or any(v < 0 for v in a):
        raise ValueError("entries must be >= 0")
    chips = [0] + [int(v) for v in a]
    rem = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(1, n + 1):
        rem[0][k] = rem[k][0] = x[0]
    sigma = [0]
    burning_now = [True] + [False] * n

    def grow(j: int) -> None:
        sigma.append(j)
        burning_now[j] = True
        counter = len(sigma) - 1
        if counter < n:
            w = x[counter]
            for k in range(1, n + 1):
                if not burning_now[k]:
                    rem[j][k] += w
                    rem[k][j] += w

    tr = _Trace(trace)
    burning, parent, labels = _run_burn(n, rem, range(n, 0, -1), chips, grow, tr)
    if not all(burning):
        unburnt = frozenset(v for v in range(1, n + 1) if not burning[v])
        return VectorBurnResult(None, None, None, unburnt, tr.events)
    new = [0] * (n + 1)
    for k, v in enumerate(sigma):
        new[v] = k
    tparent = [0] * n
    for v in range(1, n + 1):
        tparent[new[v] - 1] = new[parent[v]]
    tlabels = {_key(new[i], new[j]): val for (i, j), val in labels.items()}
    order = VertexOrder(tuple(new[v] for v in range(1, n + 1)))
    return VectorBurnResult(RootedPlaneTree(tparent), tlabels, order, None, tr.events)


def vec_dfs_unburn(
    x: Sequence[int], t: RootedTree, labeling: Mapping[Edge, int], o: VertexOrder
) -> Tuple[int, ...]:
    """Inverse vector burn: unburn on ``G_x`` under ``o``, then undo the relabeling."""
    if not t.is_plane():
        raise ValueError("tree is not a rooted plane tree")
    if not o.is_admissible(t):
        raise ValueError("vertex order is not admissible for the tree")
    beta = mg_dfs_unburn(build_gx(x), o, t, labeling)
    return tuple(beta[v - 1] for v in o.sequence)
