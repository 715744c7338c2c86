"""Which multigraphs have a symmetric-group-invariant parking set, and which vector they match."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Tuple

from .config import DisconnectedGraphError
from .parking import maximal_graphical_pf
from .trees import Multigraph

TAGS = ("ATree", "ACycle", "Kab", "NotInvariant")


@dataclass(frozen=True)
class Classification:
    tag: str
    a: Optional[int] = None
    b: Optional[int] = None
    x: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")

    @property
    def invariant(self) -> bool:
        return self.tag != "NotInvariant"

    def to_json_obj(self) -> dict:
        return {"tag": self.tag, "a": self.a, "b": self.b, "x": list(self.x) if self.x is not None else None}

    @classmethod
    def from_json_obj(cls, obj) -> "Classification":
        x = obj.get("x")
        return cls(obj["tag"], obj.get("a"), obj.get("b"), tuple(x) if x is not None else None)

    def __str__(self) -> str:
        if self.tag == "NotInvariant":
            return "NotInvariant"
        args = f"{self.a}" if self.b is None else f"{self.a},{self.b}"
        return f"{self.tag}({args}) x={','.join(map(str, self.x))}"


def _require_connected(g: Multigraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("multigraph is not connected")


def is_sn_invariant(g: Multigraph) -> bool:
    """Whether ``PF(g)`` is closed under permuting coordinates.

    Maximal elements all have the same sum, so it is enough to check that
    the maximal set is closed under every transposition.
    """
    _require_connected(g)
    mpf = set(maximal_graphical_pf(g))
    for i, j in itertools.combinations(range(g.n), 2):
        for v in mpf:
            w = list(v)
            w[i], w[j] = w[j], w[i]
            if tuple(w) not in mpf:
                return False
    return True


def _uniform_weight(g: Multigraph) -> Optional[int]:
    ws = {w for _, _, w in g.edges()}
    return ws.pop() if len(ws) == 1 else None


def _is_kab(g: Multigraph) -> Optional[Tuple[int, int]]:
    n = g.n
    if n < 2:
        return None
    a = g.weight(0, 1)
    b = g.weight(1, 2)
    if a < 1 or b < 1:
        return None
    for i, j in itertools.combinations(range(n + 1), 2):
        if g.weight(i, j) != (a if i == 0 else b):
            return None
    return a, b


def _is_hamiltonian_cycle_support(g: Multigraph) -> bool:
    support = g.support_edges()
    if g.n < 2 or len(support) != g.n + 1:
        return False
    deg = [0] * (g.n + 1)
    for i, j in support:
        deg[i] += 1
        deg[j] += 1
    return all(d == 2 for d in deg)


def classify(g: Multigraph) -> Classification:
    """Structural match against the three invariant families.

    Overlaps are resolved as Kab before ACycle before ATree. With a single
    non-root vertex ``b`` is undetermined, so that case is reported as a tree.
    """
    _require_connected(g)
    n = g.n
    kab = _is_kab(g)
    if kab is not None:
        a, b = kab
        return Classification("Kab", a, b, (a,) + (b,) * (n - 1))
    a = _uniform_weight(g)
    if a is not None:
        # connected, so the support size decides tree versus cycle
        if _is_hamiltonian_cycle_support(g):
            return Classification("ACycle", a, None, (a,) + (0,) * (n - 2) + (a,))
        if len(g.support_edges()) == n:
            return Classification("ATree", a, None, (a,) + (0,) * (n - 1))
    return Classification("NotInvariant")
