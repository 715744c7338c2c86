"""Multigraphs, rooted (plane) trees, vertex orders and the bijections between them.

Vertices are ``0..n`` with ``0`` the root. Trees are parent arrays
``(par(1), ..., par(n))``; a vertex order is the sequence of non-root
vertices from smallest to largest.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .config import MAX_GRAPH_N, MAX_TREE_N, MAX_PF_SET_SIZE, CapExceededError, DisconnectedGraphError, check_cap

Edge = Tuple[int, int]


# ---------------------------------------------------------------------------
# Multigraph
# ---------------------------------------------------------------------------


class Multigraph:
    """Loopless multigraph on ``{0..n}`` given by a symmetric weight function.

    ``weights`` maps ``(i, j)`` (either orientation) to a multiplicity, or is
    an iterable of ``(i, j, w)`` triples. Absent pairs have weight 0.
    """

    __slots__ = ("n", "_mat", "_hash")

    def __init__(self, n: int, weights: "Mapping[Edge, int] | Iterable[Tuple[int, int, int]]" = ()):
        if n < 0:
            raise ValueError("n must be >= 0")
        mat = [[0] * (n + 1) for _ in range(n + 1)]
        items = ((i, j, w) for (i, j), w in weights.items()) if isinstance(weights, Mapping) else weights
        for i, j, w in items:
            i, j, w = int(i), int(j), int(w)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i <= n and 0 <= j <= n):
                raise ValueError(f"edge ({i}, {j}) outside vertex range 0..{n}")
            if w < 0:
                raise ValueError(f"negative weight on ({i}, {j})")
            mat[i][j] = mat[j][i] = w
        self.n = n
        self._mat = tuple(tuple(row) for row in mat)
        self._hash = None

    @classmethod
    def from_matrix(cls, mat: Sequence[Sequence[int]]) -> "Multigraph":
        n = len(mat) - 1
        return cls(n, [(i, j, mat[i][j]) for i in range(n + 1) for j in range(i + 1, n + 1) if mat[i][j]])

    @property
    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        return self._mat

    def weight(self, i: int, j: int) -> int:
        return self._mat[i][j]

    def edges(self) -> List[Tuple[int, int, int]]:
        """Support edges as ``(i, j, w)`` with ``i < j`` and ``w >= 1``."""
        m = self._mat
        return [(i, j, m[i][j]) for i in range(self.n + 1) for j in range(i + 1, self.n + 1) if m[i][j]]

    def support_edges(self) -> List[Edge]:
        return [(i, j) for i, j, _ in self.edges()]

    @property
    def num_edges(self) -> int:
        """``#E(G)`` counted with multiplicity."""
        return sum(w for _, _, w in self.edges())

    def degree(self, i: int) -> int:
        return sum(self._mat[i])

    def degree_outside(self, subset: Iterable[int], i: int) -> int:
        """``deg_U(i)``: edges from ``i`` to vertices outside ``U``."""
        inside = set(subset)
        row = self._mat[i]
        return sum(w for j, w in enumerate(row) if j not in inside)

    def neighbors(self, i: int) -> List[int]:
        return [j for j, w in enumerate(self._mat[i]) if w]

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n + 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError("multigraph is not connected")

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Graph with vertex ``v`` renamed ``perm[v]`` (``perm[0]`` must be 0)."""
        if perm[0] != 0:
            raise ValueError("relabeling must fix the root")
        return Multigraph(self.n, [(perm[i], perm[j], w) for i, j, w in self.edges()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._mat == other._mat

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._mat)
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={self.edges()})"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Multigraph":
        n = int(obj["n"])
        edges = []
        for e in obj["edges"]:
            i, j, w = (int(v) for v in e)
            if not i < j:
                raise ValueError(f"edge {e}: need i < j")
            if w < 1:
                raise ValueError(f"edge {e}: weight must be >= 1")
            edges.append((i, j, w))
        return cls(n, edges)


def complete_graph(n: int, weight: int = 1) -> Multigraph:
    return Multigraph(n, [(i, j, weight) for i in range(n + 1) for j in range(i + 1, n + 1)])


def kab_graph(n: int, a: int, b: int) -> Multigraph:
    """``K^{a,b}_{n+1}``: root edges of weight ``a``, all other pairs ``b``."""
    return Multigraph(n, [(i, j, a if i == 0 else b) for i in range(n + 1) for j in range(i + 1, n + 1)])


def bipartite_kmm(a: int, m: int) -> Multigraph:
    """``K^a_{m,m}`` on ``{0..2m-1}``: weight ``a`` between vertices of opposite parity."""
    n = 2 * m - 1
    return Multigraph(n, [(i, j, a) for i in range(n + 1) for j in range(i + 1, n + 1) if (j - i) % 2 == 1])


def all_multigraphs(n: int, max_weight: int, connected_only: bool = True) -> Iterator[Multigraph]:
    """Every labeled multigraph on ``{0..n}`` with weights in ``0..max_weight``."""
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    for ws in itertools.product(range(max_weight + 1), repeat=len(pairs)):
        g = Multigraph(n, [(i, j, w) for (i, j), w in zip(pairs, ws) if w])
        if not connected_only or g.is_connected():
            yield g


# ---------------------------------------------------------------------------
# Rooted trees
# ---------------------------------------------------------------------------


@functools.total_ordering
class RootedTree:
    """Tree on ``{0..n}`` rooted at 0, stored as ``parent = (par(1), ..., par(n))``."""

    __slots__ = ("parent",)

    def __init__(self, parent: Sequence[int]):
        parent = tuple(int(p) for p in parent)
        n = len(parent)
        for v, p in enumerate(parent, start=1):
            if not 0 <= p <= n or p == v:
                raise ValueError(f"bad parent {p} for vertex {v}")
        # every vertex must reach the root
        state = [0] * (n + 1)  # 0 unknown, 1 on current path, 2 reaches root
        state[0] = 2
        for v in range(1, n + 1):
            path = []
            u = v
            while state[u] == 0:
                state[u] = 1
                path.append(u)
                u = parent[u - 1]
            if state[u] == 1:
                raise ValueError("parent array contains a cycle")
            for w in path:
                state[w] = 2
        self.parent = parent

    @classmethod
    def _trusted(cls, parent: Tuple[int, ...]) -> "RootedTree":
        """Skip validation; for parent tuples produced by the burning loops."""
        t = object.__new__(cls)
        t.parent = parent
        return t

    @property
    def n(self) -> int:
        return len(self.parent)

    def par(self, v: int) -> int:
        return self.parent[v - 1]

    def children(self, v: int) -> List[int]:
        return [c for c, p in enumerate(self.parent, start=1) if p == v]

    def outdeg(self, v: int) -> int:
        return sum(1 for p in self.parent if p == v)

    def leq(self, i: int, j: int) -> bool:
        """``i <=_T j``: the path from ``j`` to the root passes through ``i``."""
        while True:
            if j == i:
                return True
            if j == 0:
                return False
            j = self.parent[j - 1]

    def proper_ancestors(self, v: int) -> List[int]:
        out = []
        while v != 0:
            v = self.parent[v - 1]
            out.append(v)
        return out

    def edges(self) -> List[Edge]:
        """Tree edges as ``(par(v), v)``, ordered by child."""
        return [(p, v) for v, p in enumerate(self.parent, start=1)]

    def edge_keys(self) -> List[Edge]:
        return [(min(p, v), max(p, v)) for p, v in self.edges()]

    def is_plane(self) -> bool:
        return is_rooted_plane_tree(self.parent)

    def _key(self):
        return self.parent

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.parent == other.parent

    def __lt__(self, other: "RootedTree") -> bool:
        return self.parent < other.parent

    def __hash__(self) -> int:
        return hash(self.parent)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.parent)})"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "parent": list(self.parent)}

    @classmethod
    def from_json_obj(cls, obj: Mapping):
        parent = [int(p) for p in obj["parent"]]
        if "n" in obj and int(obj["n"]) != len(parent):
            raise ValueError("tree 'n' does not match parent array length")
        return cls(parent)


def is_rooted_plane_tree(parent: Sequence[int]) -> bool:
    """Preorder-labeling test: ancestors have smaller labels and
    descendants of each vertex form an interval."""
    n = len(parent)
    for v in range(1, n + 1):
        if parent[v - 1] >= v:
            return False
    # with par(v) < v, descendants-are-intervals is equivalent to: par(v) is
    # v-1 or an ancestor of v-1
    for v in range(2, n + 1):
        p = parent[v - 1]
        u = v - 1
        while u != p and u != 0:
            u = parent[u - 1]
        if u != p:
            return False
    return True


class RootedPlaneTree(RootedTree):
    """A rooted tree whose labels are a depth-first (preorder) labeling."""

    __slots__ = ()

    def __init__(self, parent: Sequence[int]):
        super().__init__(parent)
        if not is_rooted_plane_tree(self.parent):
            raise ValueError(f"{list(self.parent)} is not a preorder-labeled plane tree")


# ---------------------------------------------------------------------------
# Vertex orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexOrder:
    """Total order on ``{1..n}``; ``sequence`` lists vertices from smallest to largest."""

    sequence: Tuple[int, ...]
    _pos: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seq = tuple(int(v) for v in self.sequence)
        n = len(seq)
        if sorted(seq) != list(range(1, n + 1)):
            raise ValueError(f"{list(seq)} is not a permutation of 1..{n}")
        pos = [0] * (n + 1)
        for k, v in enumerate(seq):
            pos[v] = k
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "_pos", tuple(pos))

    @classmethod
    def natural(cls, n: int) -> "VertexOrder":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.sequence)

    def rank(self, v: int) -> int:
        """0-based position of ``v``; ``i < j`` in the order iff ``rank(i) < rank(j)``."""
        return self._pos[v]

    def precedes(self, i: int, j: int) -> bool:
        return self._pos[i] < self._pos[j]

    def descending(self) -> Tuple[int, ...]:
        return self.sequence[::-1]

    def is_admissible(self, t: RootedTree) -> bool:
        """Siblings ``i < j`` must satisfy ``j`` before ``i``."""
        if t.n != self.n:
            return False
        last: Dict[int, int] = {}
        for v in sorted(range(1, t.n + 1)):
            p = t.parent[v - 1]
            if p in last and not self.precedes(v, last[p]):
                return False
            last[p] = v
        return True

    def to_json_obj(self) -> dict:
        return {"sequence": list(self.sequence)}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "VertexOrder":
        return cls(tuple(int(v) for v in obj["sequence"]))


def all_orders(n: int) -> Iterator[VertexOrder]:
    for p in itertools.permutations(range(1, n + 1)):
        yield VertexOrder(p)


# ---------------------------------------------------------------------------
# Compositions Gamma(n) and rooted plane trees
# ---------------------------------------------------------------------------


def is_gamma(c: Sequence[int]) -> bool:
    n = len(c)
    if any(v < 0 for v in c) or sum(c) != n:
        return False
    s = 0
    for j, v in enumerate(c, start=1):
        s += v
        if s < j and j <= n - 1:
            return False
    return True


def enumerate_gamma(n: int, max_n: int = MAX_TREE_N) -> List[Tuple[int, ...]]:
    """``Gamma(n)`` in lexicographic order, by backtracking on prefix sums."""
    if n < 1:
        raise ValueError("n must be >= 1")
    check_cap(n, max_n, "enumerate_gamma n")
    out: List[Tuple[int, ...]] = []
    cur: List[int] = []

    def rec(j: int, s: int) -> None:
        # j = number of entries placed, s = their sum
        if j == n:
            if s == n:
                out.append(tuple(cur))
            return
        lo = max(0, (j + 1) - s) if j + 1 <= n - 1 else n - s
        hi = n - s
        for v in range(lo, hi + 1):
            cur.append(v)
            rec(j + 1, s + v)
            cur.pop()

    rec(0, 0)
    return out


def rpt_to_gamma(t: RootedTree) -> Tuple[int, ...]:
    """``(outdeg(0), ..., outdeg(n-1))``."""
    n = t.n
    deg = [0] * (n + 1)
    for p in t.parent:
        deg[p] += 1
    return tuple(deg[:n])


def gamma_to_rpt(c: Sequence[int]) -> RootedPlaneTree:
    """Rebuild the plane tree from its outdegree sequence.

    The descendants of ``i`` are ``{i+1, ..., i+m}`` where ``m`` is the
    longest run ``k`` with ``c[i+1] + ... + c[i+j] >= j`` for all ``j <= k``
    (1-based ``c``, padded by ``c[n+1] = 0``); the parent of ``v`` is then the
    largest ``i < v`` whose interval contains ``v``.
    """
    c = tuple(int(v) for v in c)
    if not is_gamma(c):
        raise ValueError(f"{list(c)} is not in Gamma({len(c)})")
    n = len(c)
    gam = (0,) + c + (0,)  # gam[k] = c_k, 1-based
    reach = [0] * (n + 1)
    for i in range(n + 1):
        s = 0
        m = 0
        for j in range(1, n - i + 1):
            s += gam[i + j]
            if s < j:
                break
            m = j
        reach[i] = i + m
    parent = []
    for v in range(1, n + 1):
        p = max(i for i in range(v) if reach[i] >= v)
        parent.append(p)
    return RootedPlaneTree(parent)


def enumerate_rpt(n: int, max_n: int = MAX_TREE_N) -> List[RootedPlaneTree]:
    """All of ``RPT(n+1)``, sorted by parent array."""
    return sorted(gamma_to_rpt(c) for c in enumerate_gamma(n, max_n))


def enumerate_avo(t: RootedTree) -> List[VertexOrder]:
    """Admissible orders of ``t``: children of each vertex appear in decreasing label order.

    Output is lexicographic in the sequence.
    """
    n = t.n
    groups: Dict[int, List[int]] = {}
    for v in range(n, 0, -1):
        groups.setdefault(t.parent[v - 1], []).append(v)  # descending labels
    group_of = {v: p for p, vs in groups.items() for v in vs}
    nxt = {p: 0 for p in groups}
    out: List[VertexOrder] = []
    seq: List[int] = []

    def rec() -> None:
        if len(seq) == n:
            out.append(VertexOrder(tuple(seq)))
            return
        cands = sorted(groups[p][nxt[p]] for p in groups if nxt[p] < len(groups[p]))
        for v in cands:
            p = group_of[v]
            nxt[p] += 1
            seq.append(v)
            rec()
            seq.pop()
            nxt[p] -= 1

    rec()
    return out


def avo_count(t: RootedTree) -> int:
    n = t.n
    out = factorial(n)
    for i in range(n + 1):
        out //= factorial(t.outdeg(i))
    return out


# ---------------------------------------------------------------------------
# Labeled trees <-> (plane tree, admissible order)
# ---------------------------------------------------------------------------


def dfs_visit_order(t: RootedTree) -> List[int]:
    """Vertices in DFS order from 0, always descending into the largest label first."""
    kids: Dict[int, List[int]] = {}
    for v, p in enumerate(t.parent, start=1):
        kids.setdefault(p, []).append(v)
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(sorted(kids.get(v, ())))  # largest popped first
    return order


def labeled_to_plane_pair(t: RootedTree) -> Tuple[RootedPlaneTree, VertexOrder]:
    visit = dfs_visit_order(t)  # visit[k] = sigma(k), visit[0] = 0
    n = t.n
    inv = [0] * (n + 1)
    for k, v in enumerate(visit):
        inv[v] = k
    parent = [0] * n
    for v in range(1, n + 1):
        parent[inv[v] - 1] = inv[t.parent[v - 1]]
    order = VertexOrder(tuple(inv[v] for v in range(1, n + 1)))
    return RootedPlaneTree(parent), order


def plane_pair_to_labeled(t: RootedTree, o: VertexOrder) -> RootedTree:
    if not t.is_plane():
        raise ValueError("tree is not a rooted plane tree")
    if not o.is_admissible(t):
        raise ValueError("vertex order is not admissible for the tree")
    n = t.n
    sigma = [0] + [o.rank(i) + 1 for i in range(1, n + 1)]
    parent = [0] * n
    for i in range(1, n + 1):
        parent[sigma[i] - 1] = sigma[t.parent[i - 1]]
    return RootedTree(parent)


def enumerate_labeled_trees(n: int, max_n: int = MAX_TREE_N) -> List[RootedTree]:
    """All ``(n+1)^(n-1)`` trees on ``{0..n}`` rooted at 0, by Pruefer decoding."""
    if n < 1:
        raise ValueError("n must be >= 1")
    check_cap(n, max_n, "enumerate_labeled_trees n")
    out = []
    size = n + 1
    for code in itertools.product(range(size), repeat=n - 1):
        out.append(_pruefer_decode(code, size))
    return sorted(out)


def _pruefer_decode(code: Sequence[int], size: int) -> RootedTree:
    degree = [1] * size
    for v in code:
        degree[v] += 1
    adj: List[List[int]] = [[] for _ in range(size)]
    for v in code:
        leaf = min(u for u in range(size) if degree[u] == 1)
        adj[leaf].append(v)
        adj[v].append(leaf)
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(size) if degree[x] == 1]
    adj[u].append(w)
    adj[w].append(u)
    return _root_at_zero(adj)


def _root_at_zero(adj: Sequence[Sequence[int]]) -> RootedTree:
    size = len(adj)
    parent = [-1] * size
    parent[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if parent[u] == -1:
                parent[u] = v
                stack.append(u)
    return RootedTree(parent[1:])


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------


def inversions(t: RootedTree) -> FrozenSet[Edge]:
    """Pairs ``(i, j)``, ``i < j``, with ``j`` on the path from ``i`` to the root."""
    out = set()
    for i in range(1, t.n + 1):
        for j in t.proper_ancestors(i):
            if j > i:
                out.add((i, j))
    return frozenset(out)


def order_inversions(t: RootedTree, o: VertexOrder) -> FrozenSet[Edge]:
    """Pairs ``(i, j)`` of non-root vertices with ``i <=_T j`` and ``j`` before ``i``."""
    out = set()
    for j in range(1, t.n + 1):
        for i in t.proper_ancestors(j):
            if i != 0 and o.precedes(j, i):
                out.add((i, j))
    return frozenset(out)


def kappa(g: Multigraph, t: RootedTree, o: VertexOrder) -> int:
    """Gessel's kappa: ``sum of w(par(i), j)`` over order-inversions ``(i, j)``."""
    if t.n != g.n or o.n != g.n:
        raise ValueError("size mismatch between graph, tree and order")
    m = g.matrix
    for p, v in t.edges():
        if m[p][v] == 0:
            raise ValueError(f"tree edge ({p}, {v}) is not an edge of the graph")
    total = 0
    par = t.parent
    for j in range(1, t.n + 1):
        i = par[j - 1]
        while i != 0:
            if o.precedes(j, i):
                total += m[par[i - 1]][j]
            i = par[i - 1]
    return total


# ---------------------------------------------------------------------------
# Spanning trees and orientations
# ---------------------------------------------------------------------------


def spanning_trees(g: Multigraph, max_count: int = MAX_PF_SET_SIZE) -> List[RootedTree]:
    """Spanning trees of the support graph (one per vertex-pair set), sorted by parent array."""
    g.require_connected()
    check_cap(g.n, MAX_GRAPH_N + 4, "spanning_trees n")
    n = g.n
    edges = g.support_edges()
    m = len(edges)
    out: List[RootedTree] = []
    uf = list(range(n + 1))

    def find(x: int) -> int:
        while uf[x] != x:
            x = uf[x]
        return x

    chosen: List[Edge] = []

    def rec(start: int) -> None:
        if len(chosen) == n:
            adj: List[List[int]] = [[] for _ in range(n + 1)]
            for a, b in chosen:
                adj[a].append(b)
                adj[b].append(a)
            out.append(_root_at_zero(adj))
            if len(out) > max_count:
                raise CapExceededError(f"more than {max_count} spanning trees")
            return
        need = n - len(chosen)
        for k in range(start, m - need + 1):
            a, b = edges[k]
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            uf[ra] = rb
            chosen.append((a, b))
            rec(k + 1)
            chosen.pop()
            uf[ra] = ra

    rec(0)
    return sorted(out)


@dataclass(frozen=True)
class Orientation:
    """Orientation of a multigraph's support: one arc ``(u, v)`` per support edge."""

    arcs: FrozenSet[Edge]
    indegree: Tuple[int, ...]

    @classmethod
    def from_arcs(cls, g: Multigraph, arcs: Iterable[Edge]) -> "Orientation":
        arcs = frozenset(arcs)
        indeg = [0] * (g.n + 1)
        for u, v in arcs:
            indeg[v] += g.weight(u, v)
        return cls(arcs, tuple(indeg))

    def is_acyclic(self, n: int) -> bool:
        out: Dict[int, List[int]] = {}
        indeg = [0] * (n + 1)
        for u, v in self.arcs:
            out.setdefault(u, []).append(v)
            indeg[v] += 1
        ready = [v for v in range(n + 1) if indeg[v] == 0]
        seen = 0
        while ready:
            u = ready.pop()
            seen += 1
            for v in out.get(u, ()):
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
        return seen == n + 1

    def sorted_arcs(self) -> List[Edge]:
        return sorted(self.arcs)


def acyclic_orientations_unique_source(g: Multigraph, max_n: int = MAX_GRAPH_N) -> List[Orientation]:
    """``A(G)``: acyclic orientations whose only source is 0, sorted by arc list.

    Every such orientation has a topological order starting at 0 in which
    each later vertex is adjacent to an earlier one; we walk those orders
    and deduplicate the induced orientations.
    """
    g.require_connected()
    check_cap(g.n, max_n, "acyclic_orientations n")
    n = g.n
    m = g.matrix
    edges = g.support_edges()
    seen = set()
    rank = [0] * (n + 1)
    placed = [False] * (n + 1)
    placed[0] = True

    def rec(k: int) -> None:
        if k == n + 1:
            arcs = frozenset((a, b) if rank[a] < rank[b] else (b, a) for a, b in edges)
            seen.add(arcs)
            return
        for v in range(1, n + 1):
            if placed[v]:
                continue
            if not any(m[v][u] and placed[u] for u in range(n + 1)):
                continue
            placed[v] = True
            rank[v] = k
            rec(k + 1)
            placed[v] = False

    rec(1)
    return sorted((Orientation.from_arcs(g, arcs) for arcs in seen), key=Orientation.sorted_arcs)
