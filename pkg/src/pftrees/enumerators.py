"""Reversed-sum enumerators and counting formulas, each computed on its own route.

Brute-force enumerators sum over parking functions directly; the tree and
composition formulas never look at a parking function. Agreement between
them is what the verification suites check.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import MAX_PF_SET_SIZE, MAX_TREE_N, DisconnectedGraphError, check_cap
from .core import ONE, ZERO, PolyAccumulator, QPoly, dense_mul, q_number
from .parking import (
    enumerate_increasing_vector_pf,
    enumerate_vector_pf,
    graphical_pf_array,
    maximal_vector_pf,
    prefix_sums,
    rsum_vector,
    staircase,
)
from .trees import (
    Multigraph,
    RootedTree,
    VertexOrder,
    bipartite_kmm,
    enumerate_avo,
    enumerate_gamma,
    enumerate_labeled_trees,
    enumerate_rpt,
    inversions,
    kappa,
    spanning_trees,
)


def _x(x: Sequence[int]) -> Tuple[int, ...]:
    out = tuple(int(v) for v in x)
    if any(v < 0 for v in out):
        raise ValueError("x entries must be >= 0")
    if not out:
        raise ValueError("x must be nonempty")
    return out


def multinomial(parts: Sequence[int]) -> int:
    """``(sum parts)! / prod(part!)`` as a product of binomials."""
    out = 1
    total = 0
    for k in parts:
        total += k
        out *= comb(total, k)
    return out


# ---------------------------------------------------------------------------
# brute force
# ---------------------------------------------------------------------------


def rsum_enum_vector_brute(x: Sequence[int], max_size: int = MAX_PF_SET_SIZE) -> QPoly:
    """``sum over PF(x) of q^rsum``, by listing ``PF(x)``."""
    x = _x(x)
    n = len(x)
    top = sum((n - i) * xi for i, xi in enumerate(x)) - n
    acc = PolyAccumulator()
    for a in enumerate_vector_pf(x, max_size):
        acc.add_count(top - sum(a))
    return acc.to_qpoly()


def rsum_enum_graphical_brute(g: Multigraph, max_size: int = MAX_PF_SET_SIZE) -> QPoly:
    """``sum over PF(G) of q^rsum``, by listing ``PF(G)``."""
    if not g.is_connected():
        raise DisconnectedGraphError("multigraph is not connected")
    arr = graphical_pf_array(g, max_size)
    rs = g.num_edges - g.n - arr.sum(axis=1)
    if len(rs) == 0:
        return ZERO
    return QPoly.from_coefficients(int(c) for c in np.bincount(rs))


# ---------------------------------------------------------------------------
# tree and composition formulas
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _support_trees(n: int, support: Tuple[Tuple[int, int], ...]) -> Tuple[RootedTree, ...]:
    return tuple(spanning_trees(Multigraph(n, [(i, j, 1) for i, j in support])))


@functools.lru_cache(maxsize=None)
def _qproduct(weights: Tuple[int, ...]) -> Tuple[int, ...]:
    dense = [1]
    for w in weights:
        dense = dense_mul(dense, q_number(w).coefficients())
    return tuple(dense)


def rsum_enum_tree_side(g: Multigraph, o: VertexOrder) -> QPoly:
    """``sum over spanning trees T of q^kappa(G, T, o) * prod_e [w(e)]_q``."""
    if not g.is_connected():
        raise DisconnectedGraphError("multigraph is not connected")
    m = g.matrix
    acc = PolyAccumulator()
    for t in _support_trees(g.n, tuple(g.support_edges())):
        ws = tuple(sorted(m[p][v] for p, v in t.edges()))
        acc.add_shifted(_qproduct(ws), kappa(g, t, o))
    return acc.to_qpoly()


def _x_kappa(x: Sequence[int], t: RootedTree, o: VertexOrder) -> int:
    """Exponent ``sum of x_{par(i)+1}`` over order-inversions ``(i, j)`` of ``t``."""
    par = t.parent
    total = 0
    for j in range(1, t.n + 1):
        i = par[j - 1]
        while i != 0:
            if o.precedes(j, i):
                total += x[par[i - 1]]
            i = par[i - 1]
    return total


def _qnum_power_product(x: Sequence[int], exps: Sequence[int]) -> List[int]:
    dense = [1]
    for xi, e in zip(x, exps):
        for _ in range(e):
            dense = dense_mul(dense, q_number(xi).coefficients())
        if not dense:
            return []
    return dense


def rsum_enum_main(x: Sequence[int], max_n: int = MAX_TREE_N) -> QPoly:
    """Rooted-plane-tree formula: sum over ``T`` and admissible ``o`` of
    ``q^(x-weighted inversions) * prod_i [x_i]_q^outdeg(i-1)``."""
    x = _x(x)
    n = len(x)
    acc = PolyAccumulator()
    for t in enumerate_rpt(n, max_n):
        outdeg = [t.outdeg(i) for i in range(n)]
        main = _qnum_power_product(x, outdeg)
        if not main:
            continue
        coeff = PolyAccumulator()
        for o in enumerate_avo(t):
            coeff.add_count(_x_kappa(x, t, o))
        acc.add_shifted(dense_mul(coeff.coeffs, main))
    return acc.to_qpoly()


def rsum_enum_kungyan(x: Sequence[int], max_n: int = MAX_TREE_N) -> QPoly:
    """Composition formula: sum over ``gamma`` in ``Gamma(n)`` of
    ``n!/prod gamma_i! * q^(sum (gamma_1+..+gamma_i - i) x_{i+1}) * prod [x_i]_q^gamma_i``."""
    x = _x(x)
    n = len(x)
    acc = PolyAccumulator()
    for gam in enumerate_gamma(n, max_n):
        main = _qnum_power_product(x, gam)
        if not main:
            continue
        shift = 0
        s = 0
        for i in range(1, n):
            s += gam[i - 1]
            shift += (s - i) * x[i]
        acc.add_shifted(main, shift, multinomial(gam))
    return acc.to_qpoly()


def pitman_stanley_count(x: Sequence[int], max_n: int = MAX_TREE_N) -> int:
    x = _x(x)
    n = len(x)
    return sum(multinomial(gam) * prod(xi**g for xi, g in zip(x, gam)) for gam in enumerate_gamma(n, max_n))


def corollary_count(x: Sequence[int], max_n: int = MAX_TREE_N) -> int:
    """``n! * sum over RPT(n+1) of prod x_i^d / d!`` with ``d = outdeg(i-1)``, in exact rationals."""
    x = _x(x)
    n = len(x)
    total = Fraction(0)
    for t in enumerate_rpt(n, max_n):
        term = Fraction(1)
        for i in range(1, n + 1):
            d = t.outdeg(i - 1)
            term *= Fraction(x[i - 1] ** d, factorial(d))
        total += term
    total *= factorial(n)
    if total.denominator != 1:
        raise ArithmeticError(f"tree-sum count is not integral: {total}")
    return int(total)


def inversion_enum_labeled_trees(n: int, max_n: int = 8) -> QPoly:
    """``sum over labeled trees on {0..n} of q^inv``."""
    acc = PolyAccumulator()
    for t in enumerate_labeled_trees(n, max_n):
        acc.add_count(len(inversions(t)))
    return acc.to_qpoly()


# ---------------------------------------------------------------------------
# weakly increasing parking functions, specializations, exceptional counts
# ---------------------------------------------------------------------------


def partitions_inside(lam: Sequence[int]) -> List[Tuple[int, ...]]:
    """All partitions ``mu`` (weakly decreasing, ``>= 0``) with ``mu_i <= lam_i``."""
    n = len(lam)
    out: List[Tuple[int, ...]] = []
    cur: List[int] = []

    def rec(i: int, cap: int) -> None:
        if i == n:
            out.append(tuple(cur))
            return
        for v in range(min(cap, lam[i]) + 1):
            cur.append(v)
            rec(i + 1, v)
            cur.pop()

    if all(v >= 0 for v in lam):
        rec(0, lam[0] if lam else 0)
    return out


def rsum_enum_increasing(x: Sequence[int]) -> Tuple[QPoly, QPoly]:
    """``(sum over weakly increasing PF(x) of q^rsum, sum over mu inside lambda^x of q^(|lambda|-|mu|))``."""
    x = _x(x)
    acc = PolyAccumulator()
    for a in enumerate_increasing_vector_pf(x):
        acc.add_count(rsum_vector(a, x))
    lam = staircase(x)
    size = sum(lam)
    side = PolyAccumulator()
    for mu in partitions_inside(lam):
        side.add_count(size - sum(mu))
    return acc.to_qpoly(), side.to_qpoly()


def descent_set(p: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def descent_class_size(n: int, s: frozenset) -> int:
    """``beta_n(S)``: permutations of ``1..n`` with descent set exactly ``S``."""
    s = frozenset(s)
    return sum(1 for p in itertools.permutations(range(1, n + 1)) if descent_set(p) == s)


@dataclass
class SpecializationReport:
    x: Tuple[int, ...]
    at1: int
    at0: int
    atMinus1: int
    count: int
    maximal: int
    beta: int
    beta_check: bool

    @property
    def consistent(self) -> bool:
        return self.at1 == self.count and self.at0 == self.maximal and self.beta_check

    def to_json_obj(self) -> dict:
        d = asdict(self)
        d["x"] = list(self.x)
        d["consistent"] = self.consistent
        return d


def minus_one_prediction(x: Sequence[int]) -> int:
    """Predicted ``|value at q = -1|`` of the reversed-sum enumerator.

    With ``b_i = x_1 + ... + x_i`` (the 1-based parking bounds, smallest
    first) the value is 0 when ``b_1`` is even and ``beta_n(S)`` with
    ``S = {i : b_{i+1} odd}`` when ``b_1`` is odd.
    """
    x = _x(x)
    n = len(x)
    b = prefix_sums(x)
    if b[0] % 2 == 0:
        return 0
    return descent_class_size(n, frozenset(i for i in range(1, n) if b[i] % 2 == 1))


def specialization_report(x: Sequence[int]) -> SpecializationReport:
    """Evaluate the brute enumerator at ``q = 1, 0, -1`` and check each value."""
    x = _x(x)
    poly = rsum_enum_vector_brute(x)
    at1, at0, atm1 = poly.eval(1), poly.eval(0), poly.eval(-1)
    count = pitman_stanley_count(x)
    maximal = len(maximal_vector_pf(x))
    beta = minus_one_prediction(x)
    return SpecializationReport(x, at1, at0, atm1, count, maximal, beta, abs(atm1) == beta)


def exceptional_vector(a: int, m: int) -> Tuple[int, ...]:
    """``y(a, 2, m) = (a, 0, a, 0, ..., a)`` of length ``2m - 1``."""
    return tuple(a if i % 2 == 0 else 0 for i in range(2 * m - 1))


@dataclass
class ExceptionalReport:
    a: int
    m: int
    graph_count: int
    vector_count: int
    formula: int
    sets_equal: bool

    @property
    def ok(self) -> bool:
        return self.graph_count == self.vector_count == self.formula

    def to_json_obj(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def exceptional_count_check(a: int, m: int, max_size: int = MAX_PF_SET_SIZE) -> ExceptionalReport:
    """Compare ``#PF(K^a_{m,m})``, ``#PF(y(a,2,m))`` and ``a^(2m-1) m^(2m-2)``."""
    if a < 1 or m < 2:
        raise ValueError("need a >= 1 and m >= 2")
    g = bipartite_kmm(a, m)
    gpf = {tuple(int(v) for v in row) for row in graphical_pf_array(g, max_size)}
    vpf = set(enumerate_vector_pf(exceptional_vector(a, m), max_size))
    return ExceptionalReport(a, m, len(gpf), len(vpf), a ** (2 * m - 1) * m ** (2 * m - 2), gpf == vpf)


ENUMERATORS = {
    "brute": rsum_enum_vector_brute,
    "main": rsum_enum_main,
    "kungyan": rsum_enum_kungyan,
}
