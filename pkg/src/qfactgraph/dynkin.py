"""Type A_n Dynkin diagram bookkeeping.

The diagram is a path on nodes 1..n, so distances, intervals and the
boundary all have closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInterval, InvalidNode


@dataclass(frozen=True, order=True)
class DynkinA:
    """The type A_n diagram on nodes 1..n."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    @property
    def boundary(self) -> frozenset[int]:
        """Monovalent nodes of the diagram, {1, n}."""
        return frozenset({1, self.n})

    def check_node(self, i: int) -> int:
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise InvalidNode(f"node {i!r} is not in 1..{self.n}")
        return i

    def distance(self, i: int, j: int) -> int:
        """Path-metric distance |i - j|."""
        self.check_node(i)
        self.check_node(j)
        return abs(i - j)

    def interval(self, i: int, j: int) -> frozenset[int]:
        """All nodes between i and j inclusive."""
        self.check_node(i)
        self.check_node(j)
        return frozenset(range(min(i, j), max(i, j) + 1))

    def boundary_distance(self, nodes: Iterable[int]) -> int:
        """Distance from a connected interval of nodes to the diagram boundary.

        Equals min(min(J) - 1, n - max(J)) for an interval J.
        """
        js = sorted(set(nodes))
        if not js:
            raise InvalidInterval("empty node set")
        for j in js:
            self.check_node(j)
        if js != list(range(js[0], js[-1] + 1)):
            raise InvalidInterval(f"{js} is not a connected interval")
        return min(js[0] - 1, self.n - js[-1])

    def star(self, i: int) -> int:
        """The diagram involution i -> n + 1 - i."""
        self.check_node(i)
        return self.n + 1 - i

    def dual_coxeter(self) -> int:
        """Dual Coxeter number, n + 1 in type A_n."""
        return self.n + 1
