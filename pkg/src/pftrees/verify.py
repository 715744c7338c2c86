"""Named identity suites, each reporting ``{"identity", "instances", "failures"}``.

A suite sweeps a small grid exhaustively and optionally adds seeded random
samples. Failures are listed in canonical instance-key order.
"""

from __future__ import annotations

import itertools
import json
import random
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .classify import classify, is_sn_invariant
from .config import MAX_PF_SET_SIZE
from .enumerators import (
    corollary_count,
    exceptional_count_check,
    inversion_enum_labeled_trees,
    pitman_stanley_count,
    rsum_enum_graphical_brute,
    rsum_enum_increasing,
    rsum_enum_kungyan,
    rsum_enum_main,
    rsum_enum_tree_side,
    rsum_enum_vector_brute,
    specialization_report,
)
from .parking import enumerate_graphical_pf, enumerate_vector_pf
from .trees import Multigraph, VertexOrder, all_multigraphs

Report = Dict[str, object]


def _key(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def x_grid(max_n: int, x_range: int) -> Iterable[Tuple[int, ...]]:
    for n in range(1, max_n + 1):
        yield from itertools.product(range(x_range + 1), repeat=n)


def random_order(n: int, rng: random.Random) -> VertexOrder:
    seq = list(range(1, n + 1))
    rng.shuffle(seq)
    return VertexOrder(tuple(seq))


def random_connected_multigraph(n: int, max_weight: int, rng: random.Random) -> Multigraph:
    """Uniform weights in ``0..max_weight`` on every pair, redrawn until connected."""
    pairs = list(itertools.combinations(range(n + 1), 2))
    while True:
        g = Multigraph(n, [(i, j, rng.randint(0, max_weight)) for i, j in pairs])
        if g.is_connected():
            return g


class _Collector:
    def __init__(self, name: str):
        self.name = name
        self.instances = 0
        self.failures: List[Tuple[str, dict]] = []

    def check(self, key_obj, ok: bool, detail: Optional[dict] = None) -> None:
        self.instances += 1
        if not ok:
            entry = {"instance": key_obj}
            if detail:
                entry.update(detail)
            self.failures.append((_key(key_obj), entry))

    def report(self) -> Report:
        return {
            "identity": self.name,
            "instances": self.instances,
            "failures": [e for _, e in sorted(self.failures, key=lambda t: t[0])],
        }


def _xs(max_n: int, x_range: int, seed: int, samples: int, sample_range: Optional[int] = None):
    yield from x_grid(max_n, x_range)
    rng = random.Random(seed)
    hi = sample_range if sample_range is not None else x_range
    for _ in range(samples):
        yield tuple(rng.randint(0, hi) for _ in range(max_n))


def suite_eq1(max_n: int = 5, **_) -> Report:
    c = _Collector("eq1")
    for n in range(1, max_n + 1):
        lhs = rsum_enum_vector_brute((1,) * n)
        rhs = inversion_enum_labeled_trees(n)
        c.check({"n": n}, lhs == rhs, {"brute": str(lhs), "inversions": str(rhs)})
    return c.report()


def suite_thm31(max_n: int = 3, x_range: int = 2, seed: int = 0, samples: int = 0, orders: int = 2, **_) -> Report:
    """Graph brute force against the spanning-tree side, under several orders each."""
    c = _Collector("thm3.1")
    rng = random.Random(seed)

    def one(g: Multigraph, k: int) -> None:
        lhs = rsum_enum_graphical_brute(g)
        ords = [VertexOrder.natural(g.n)] + [random_order(g.n, rng) for _ in range(k - 1)]
        for o in ords:
            rhs = rsum_enum_tree_side(g, o)
            c.check(
                {"graph": g.to_json_obj(), "order": list(o.sequence)},
                lhs == rhs,
                {"brute": str(lhs), "trees": str(rhs)},
            )

    for n in range(1, max_n + 1):
        for g in all_multigraphs(n, x_range):
            one(g, orders)
    for _ in range(samples):
        one(random_connected_multigraph(max_n, x_range + 1, rng), 5)
    return c.report()


def suite_thm17(max_n: int = 3, x_range: int = 3, seed: int = 0, samples: int = 0, **_) -> Report:
    c = _Collector("thm1.7")
    for x in _xs(max_n, x_range, seed, samples, 6):
        b, m, k = rsum_enum_vector_brute(x), rsum_enum_main(x), rsum_enum_kungyan(x)
        c.check({"x": list(x)}, b == m == k, {"brute": str(b), "main": str(m), "kungyan": str(k)})
    return c.report()


def suite_kungyan(max_n: int = 3, x_range: int = 3, seed: int = 0, samples: int = 0, **_) -> Report:
    c = _Collector("kungyan")
    for x in _xs(max_n, x_range, seed, samples, 6):
        b, k = rsum_enum_vector_brute(x), rsum_enum_kungyan(x)
        c.check({"x": list(x)}, b == k, {"brute": str(b), "kungyan": str(k)})
    return c.report()


def suite_cor18(max_n: int = 3, x_range: int = 3, seed: int = 0, samples: int = 0, **_) -> Report:
    c = _Collector("cor1.8")
    for x in _xs(max_n, x_range, seed, samples):
        ps, cor, size = pitman_stanley_count(x), corollary_count(x), len(enumerate_vector_pf(x))
        c.check({"x": list(x)}, ps == cor == size, {"pitman_stanley": ps, "trees": cor, "brute": size})
    return c.report()


def suite_increasing(max_n: int = 3, x_range: int = 3, seed: int = 0, samples: int = 0, **_) -> Report:
    c = _Collector("increasing")
    for x in _xs(max_n, x_range, seed, samples):
        lhs, rhs = rsum_enum_increasing(x)
        c.check({"x": list(x)}, lhs == rhs, {"brute": str(lhs), "partitions": str(rhs)})
    return c.report()


def suite_spec_q(max_n: int = 3, x_range: int = 3, seed: int = 0, samples: int = 0, **_) -> Report:
    c = _Collector("spec-q")
    for x in _xs(max_n, x_range, seed, samples):
        r = specialization_report(x)
        c.check({"x": list(x)}, r.consistent, r.to_json_obj())
    return c.report()


def suite_exceptional(max_n: int = 3, x_range: int = 2, max_size: int = 10**6, **_) -> Report:
    """Counts for ``K^a_{m,m}`` against the matching vector, ``a <= x_range``, ``2 <= m <= max_n``.

    Instances whose predicted count exceeds ``max_size`` are not run.
    """
    c = _Collector("exceptional")
    for a in range(1, x_range + 1):
        for m in range(2, max_n + 1):
            if a ** (2 * m - 1) * m ** (2 * m - 2) > max_size:
                continue
            r = exceptional_count_check(a, m)
            c.check({"a": a, "m": m}, r.ok, r.to_json_obj())
    return c.report()


def suite_classify(max_n: int = 3, x_range: int = 2, **_) -> Report:
    c = _Collector("classify")
    for n in range(1, max_n + 1):
        for g in all_multigraphs(n, x_range):
            k = classify(g)
            inv = is_sn_invariant(g)
            ok = k.invariant == inv
            if ok and k.invariant:
                ok = set(enumerate_graphical_pf(g)) == set(enumerate_vector_pf(k.x))
            c.check({"graph": g.to_json_obj()}, ok, {"classification": k.to_json_obj(), "invariant": inv})
    return c.report()


SUITES: Dict[str, Callable[..., Report]] = {
    "eq1": suite_eq1,
    "thm3.1": suite_thm31,
    "thm1.7": suite_thm17,
    "kungyan": suite_kungyan,
    "cor1.8": suite_cor18,
    "increasing": suite_increasing,
    "spec-q": suite_spec_q,
    "exceptional": suite_exceptional,
    "classify": suite_classify,
}


def run_suite(name: str, **kwargs) -> Report:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(**{k: v for k, v in kwargs.items() if v is not None})
