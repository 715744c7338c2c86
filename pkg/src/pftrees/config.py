"""Enumeration caps and the exceptions raised when inputs break them."""

from __future__ import annotations

from dataclasses import dataclass

# Catalan / Cayley growth makes anything past these sizes impractical.
MAX_TREE_N = 10
MAX_GRAPH_N = 8
MAX_PF_SET_SIZE = 10**7


class CapExceededError(ValueError):
    """An enumeration would exceed its configured size cap."""


class DisconnectedGraphError(ValueError):
    """The operation needs a connected multigraph."""


@dataclass(frozen=True)
class Config:
    max_n: int = MAX_GRAPH_N
    max_weight: int = 6
    max_pf_set_size: int = MAX_PF_SET_SIZE
    seed: int = 0
    output: str = "text"

    def __post_init__(self):
        if self.max_n < 1 or self.max_weight < 1 or self.max_pf_set_size < 1:
            raise ValueError("caps must be positive")
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output!r}")


def check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise CapExceededError(f"{what}: size {size} exceeds cap {cap}")
