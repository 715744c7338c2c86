"""Vector (x-) and graphical (G-) parking functions.

Parking vectors and x-vectors are plain tuples of nonnegative integers.
"""

from __future__ import annotations

import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .burning import mg_dfs_burn
from .config import MAX_PF_SET_SIZE, CapExceededError, DisconnectedGraphError, check_cap
from .trees import Multigraph, VertexOrder, acyclic_orientations_unique_source

Vector = Tuple[int, ...]


def _as_vector(v: Sequence[int], what: str) -> Vector:
    out = tuple(int(a) for a in v)
    if any(a < 0 for a in out):
        raise ValueError(f"{what} entries must be >= 0")
    return out


def prefix_sums(x: Sequence[int]) -> List[int]:
    return list(itertools.accumulate(x))


def staircase(x: Sequence[int]) -> Vector:
    """``lambda^x = (x1+...+xn - 1, ..., x1+x2 - 1, x1 - 1)``, largest part first."""
    return tuple(s - 1 for s in reversed(prefix_sums(x)))


def distinct_permutations(seq: Sequence[int]) -> Iterator[Vector]:
    """Distinct rearrangements of ``seq`` in lexicographic order."""
    a = sorted(seq)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1 :] = reversed(a[i + 1 :])


# ---------------------------------------------------------------------------
# vector parking functions
# ---------------------------------------------------------------------------


def is_vector_pf(a: Sequence[int], x: Sequence[int]) -> bool:
    a = _as_vector(a, "alpha")
    x = _as_vector(x, "x")
    if len(a) != len(x):
        raise ValueError(f"length mismatch: alpha has {len(a)}, x has {len(x)}")
    return all(v <= s - 1 for v, s in zip(sorted(a), prefix_sums(x)))


def rsum_vector(a: Sequence[int], x: Sequence[int]) -> int:
    if not is_vector_pf(a, x):
        raise ValueError(f"{tuple(a)} is not an x-parking function for x={tuple(x)}")
    n = len(x)
    return sum((n - i) * xi for i, xi in enumerate(x)) - n - sum(a)


def enumerate_increasing_vector_pf(x: Sequence[int], max_size: int = MAX_PF_SET_SIZE) -> List[Vector]:
    """Weakly increasing members of ``PF(x)``, lexicographic."""
    x = _as_vector(x, "x")
    bounds = [s - 1 for s in prefix_sums(x)]
    n = len(x)
    out: List[Vector] = []
    cur: List[int] = []

    def rec(j: int, lo: int) -> None:
        if j == n:
            out.append(tuple(cur))
            if len(out) > max_size:
                raise CapExceededError(f"PF(x) increasing part exceeds {max_size}")
            return
        for v in range(lo, bounds[j] + 1):
            cur.append(v)
            rec(j + 1, v)
            cur.pop()

    rec(0, 0)
    return out


def enumerate_vector_pf(x: Sequence[int], max_size: int = MAX_PF_SET_SIZE) -> List[Vector]:
    """All of ``PF(x)`` in lexicographic order.

    Sorted candidates are drawn from the prefix-sum box and expanded into
    their distinct rearrangements.
    """
    out: List[Vector] = []
    for base in enumerate_increasing_vector_pf(x, max_size):
        out.extend(distinct_permutations(base))
        if len(out) > max_size:
            raise CapExceededError(f"PF(x) exceeds {max_size} elements")
    out.sort()
    return out


def maximal_vector_pf(x: Sequence[int]) -> List[Vector]:
    """Maximal x-parking functions: rearrangements of ``lambda^x``; empty if ``x1 = 0``."""
    x = _as_vector(x, "x")
    if not x or x[0] == 0:
        return []
    return list(distinct_permutations(staircase(x)))


# ---------------------------------------------------------------------------
# graphical parking functions
# ---------------------------------------------------------------------------


def burning_certificate(a: Sequence[int], g: Multigraph) -> Optional[frozenset]:
    """``None`` when ``a`` is a G-parking function; otherwise a nonempty set
    ``U`` of non-root vertices with ``a_j >= deg_U(j)`` for every ``j`` in ``U``."""
    a = _as_vector(a, "alpha")
    if len(a) != g.n:
        raise ValueError(f"length mismatch: alpha has {len(a)}, graph has {g.n} non-root vertices")
    result = mg_dfs_burn(g, VertexOrder.natural(g.n), a)
    return None if result.ok else result.certificate


def is_graphical_pf(a: Sequence[int], g: Multigraph) -> bool:
    return burning_certificate(a, g) is None


def is_graphical_pf_by_subsets(a: Sequence[int], g: Multigraph) -> bool:
    """Direct subset test of the definition (exponential in ``n``)."""
    a = _as_vector(a, "alpha")
    if len(a) != g.n:
        raise ValueError("length mismatch")
    verts = range(1, g.n + 1)
    for r in range(1, g.n + 1):
        for u in itertools.combinations(verts, r):
            if all(a[i - 1] >= g.degree_outside(u, i) for i in u):
                return False
    return True


def rsum_graphical(a: Sequence[int], g: Multigraph) -> int:
    if not is_graphical_pf(a, g):
        raise ValueError(f"{tuple(a)} is not a G-parking function")
    return g.num_edges - g.n - sum(a)


_CHUNK = 1 << 16


def graphical_pf_array(g: Multigraph, max_size: int = MAX_PF_SET_SIZE) -> np.ndarray:
    """``PF(G)`` as an ``(m, n)`` integer array in lexicographic row order.

    Candidates in the box ``prod [0, deg(i) - 1]`` are screened against every
    nonempty subset ``U``; this is the definition itself, vectorized.
    """
    n = g.n
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    if not g.is_connected():
        return np.zeros((0, n), dtype=np.int64)
    degs = [g.degree(i) for i in range(1, n + 1)]
    box = 1
    for d in degs:
        box *= d
    check_cap(box, max_size, "graphical PF candidate box")
    subsets = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        inside = {i + 1 for i in members}
        subsets.append((members, [g.degree_outside(inside, i + 1) for i in members]))
    # lexicographic row order: first coordinate varies slowest
    radices = np.array(degs, dtype=np.int64)
    strides = np.ones(n, dtype=np.int64)
    for k in range(n - 2, -1, -1):
        strides[k] = strides[k + 1] * radices[k + 1]
    pieces = []
    for start in range(0, box, _CHUNK):
        idx = np.arange(start, min(box, start + _CHUNK), dtype=np.int64)
        cand = (idx[:, None] // strides[None, :]) % radices[None, :]
        ok = np.ones(len(idx), dtype=bool)
        for members, bounds in subsets:
            sub = cand[:, members] < np.array(bounds, dtype=np.int64)[None, :]
            ok &= sub.any(axis=1)
        pieces.append(cand[ok])
    return np.concatenate(pieces, axis=0)


def enumerate_graphical_pf(g: Multigraph, max_size: int = MAX_PF_SET_SIZE) -> List[Vector]:
    """All of ``PF(G)``, lexicographic; empty when ``g`` is disconnected."""
    return [tuple(int(v) for v in row) for row in graphical_pf_array(g, max_size)]


def maximal_graphical_pf(g: Multigraph) -> List[Vector]:
    """``{(indeg(1) - 1, ..., indeg(n) - 1)}`` over acyclic orientations with unique source 0."""
    if not g.is_connected():
        raise DisconnectedGraphError("multigraph is not connected")
    out = {tuple(d - 1 for d in o.indegree[1:]) for o in acyclic_orientations_unique_source(g)}
    return sorted(out)


def maximal_elements(vectors: Sequence[Vector]) -> List[Vector]:
    """Componentwise-maximal members of a finite set (quadratic brute force)."""
    vs = sorted(set(vectors))
    out = []
    for v in vs:
        if not any(w != v and all(a <= b for a, b in zip(v, w)) for w in vs):
            out.append(v)
    return out


def downward_closure(maxima: Sequence[Vector]) -> List[Vector]:
    out = set()
    for m in maxima:
        out.update(itertools.product(*(range(v + 1) for v in m)))
    return sorted(out)
