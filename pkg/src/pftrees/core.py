"""Sparse univariate polynomials in ``q`` with exact integer coefficients."""

from __future__ import annotations

import json
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Number = Union[int, "QPoly"]


class QPoly:
    """Immutable polynomial ``sum c_k q^k`` stored as ``{k: c_k}``.

    Zero coefficients are never stored, exponents are nonnegative and
    coefficients are Python integers, so arithmetic never overflows.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        clean: Dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                exp = int(exp)
                if exp < 0:
                    raise ValueError(f"negative exponent {exp}")
                clean[exp] = clean.get(exp, 0) + int(coeff)
        self._terms = {k: clean[k] for k in sorted(clean) if clean[k] != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "QPoly":
        # caller guarantees: no zeros, exponents >= 0
        p = object.__new__(cls)
        p._terms = {k: terms[k] for k in sorted(terms)}
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        if exp < 0:
            raise ValueError(f"negative exponent {exp}")
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "QPoly":
        """Build from a dense list ``[c0, c1, ...]``."""
        return cls._raw({k: c for k, c in enumerate(coeffs) if c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms.items())

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def coefficients(self) -> list:
        """Dense coefficient list ``[c0, ..., c_deg]``; ``[]`` for zero."""
        if not self._terms:
            return []
        out = [0] * (self.degree + 1)
        for k, c in self._terms.items():
            out[k] = c
        return out

    @property
    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._terms) if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def eval(self, q0: int) -> int:
        return sum(c * q0**k for k, c in self._terms.items())

    __call__ = eval

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: Number) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Number) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Number) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "QPoly":
        return (-self) + other

    def __mul__(self, other: Number) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[int, int] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return QPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        if k < 0:
            raise ValueError("negative shift")
        return QPoly._raw({e + k: c for e, c in self._terms.items()})

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms.items():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"

    def to_json_obj(self) -> dict:
        return {"terms": [[k, str(c)] for k, c in self._terms.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "QPoly":
        terms = obj["terms"]
        exps = [int(e) for e, _ in terms]
        if exps != sorted(set(exps)):
            raise ValueError("terms must be sorted ascending with unique exponents")
        return cls((int(e), int(c)) for e, c in terms)

    @classmethod
    def from_json(cls, text: str) -> "QPoly":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of ``str``: accepts ``"3 + q - 2*q^4"``."""
        s = text.replace(" ", "")
        if s == "0":
            return ZERO
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        out: Dict[int, int] = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            j = i + 1
            while j < len(s) and s[j] not in "+-":
                j += 1
            tok = s[i + 1 : j]
            if not tok:
                raise ValueError(f"malformed polynomial {text!r}")
            if "q" in tok:
                coeff_s, _, rest = tok.partition("q")
                coeff = int(coeff_s.rstrip("*")) if coeff_s else 1
                exp = int(rest[1:]) if rest.startswith("^") else 1
                if rest and not rest.startswith("^"):
                    raise ValueError(f"malformed term {tok!r}")
            else:
                coeff, exp = int(tok), 0
            out[exp] = out.get(exp, 0) + sign * coeff
            i = j
        return cls(out)


ZERO = QPoly()
ONE = QPoly.constant(1)


def qpoly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def qpoly_eval(p: QPoly, q0: int) -> int:
    return p.eval(q0)


_QNUM_CACHE: Dict[int, QPoly] = {}


def q_number(k: int) -> QPoly:
    """``[k]_q = 1 + q + ... + q^(k-1)``; the zero polynomial for ``k = 0``."""
    if k < 0:
        raise ValueError("q_number needs k >= 0")
    p = _QNUM_CACHE.get(k)
    if p is None:
        p = QPoly._raw({i: 1 for i in range(k)})
        if k <= 256:
            _QNUM_CACHE[k] = p
    return p


class PolyAccumulator:
    """Mutable dense accumulator for summing many small products.

    Used by the enumerators, which add thousands of terms; converting to
    :class:`QPoly` once at the end avoids rebuilding dicts on every step.
    """

    __slots__ = ("coeffs",)

    def __init__(self):
        self.coeffs: list = []

    def add_count(self, exp: int, count: int = 1) -> None:
        c = self.coeffs
        if exp >= len(c):
            c.extend([0] * (exp + 1 - len(c)))
        c[exp] += count

    def add_shifted(self, dense: list, shift: int = 0, scale: int = 1) -> None:
        c = self.coeffs
        top = shift + len(dense)
        if top > len(c):
            c.extend([0] * (top - len(c)))
        for k, v in enumerate(dense):
            if v:
                c[shift + k] += scale * v

    def to_qpoly(self) -> QPoly:
        return QPoly.from_coefficients(self.coeffs)


def dense_mul(a: list, b: list) -> list:
    """Product of dense coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
