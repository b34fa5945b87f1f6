"""Type A reducibility sets for pairs of KR strings.

The set attached to colors (i, j) and lengths (r, s) is the arithmetic
progression r + s + d(i,j) - 2p for -d([i,j], boundary) <= p < min(r, s).
A KR pair is reducible exactly when its center gap lies in this set, and
the sign of the gap decides which tensor order is highest-weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .dynkin import DynkinA
from .errors import IntervalDoesNotContain, InvalidInterval, NonPositiveLength
from .lweight import KRFactor

__all__ = [
    "RSet",
    "rset",
    "rset_restricted",
    "rset_same_node",
    "PairRelation",
    "kr_pair_relation",
    "kr_dual_pair_simple",
]


@dataclass(frozen=True)
class RSet:
    """A reducibility set, stored as progression bounds for O(1) membership."""

    i: int
    j: int
    r: int
    s: int
    interval: tuple[int, int] | None
    lo: int
    hi: int

    def __contains__(self, m: object) -> bool:
        return (
            isinstance(m, int)
            and self.lo <= m <= self.hi
            and (m - self.lo) % 2 == 0
        )

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(range(self.lo, self.hi + 1, 2))

    @property
    def params(self) -> tuple:
        return (self.i, self.j, self.r, self.s, self.interval)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _check_lengths(r: int, s: int) -> None:
    for v in (r, s):
        if not isinstance(v, int) or v < 1:
            raise NonPositiveLength(f"string length must be >= 1, got {v!r}")


def rset(d: DynkinA, i: int, j: int, r: int, s: int) -> RSet:
    """Reducibility set for the KR pair (i, r), (j, s) over the full diagram."""
    _check_lengths(r, s)
    dist = d.distance(i, j)
    bd = d.boundary_distance(d.interval(i, j))
    lo = r + s + dist - 2 * (min(r, s) - 1)
    hi = r + s + dist + 2 * bd
    return RSet(i, j, r, s, None, lo, hi)


def rset_restricted(
    d: DynkinA, i: int, j: int, r: int, s: int, J: Iterable[int]
) -> RSet:
    """Reducibility set computed with the interval J as the ambient diagram.

    J must be a connected interval containing [i, j]; its endpoints play
    the role of the diagram boundary.
    """
    _check_lengths(r, s)
    js = sorted(set(J))
    if not js:
        raise InvalidInterval("empty restricting interval")
    for node in js:
        d.check_node(node)
    if js != list(range(js[0], js[-1] + 1)):
        raise InvalidInterval(f"{js} is not a connected interval")
    dist = d.distance(i, j)
    span = d.interval(i, j)
    if not span <= set(js):
        raise IntervalDoesNotContain(f"interval {js} does not contain [{i}, {j}]")
    bd = min(min(span) - js[0], js[-1] - max(span))
    lo = r + s + dist - 2 * (min(r, s) - 1)
    hi = r + s + dist + 2 * bd
    return RSet(i, j, r, s, (js[0], js[-1]), lo, hi)


def rset_same_node(d: DynkinA, i: int, r: int, s: int) -> RSet:
    """Single-node reducibility set {r + s - 2p : 0 <= p < min(r, s)}."""
    _check_lengths(r, s)
    d.check_node(i)
    return RSet(i, i, r, s, (i, i), abs(r - s) + 2, r + s)


class PairRelation(NamedTuple):
    """Outcome of the ordered KR pair test."""

    kind: str  # "Simple" | "ReducibleHLW" | "ReducibleOpposite"
    exponent: int | None = None


SIMPLE = PairRelation("Simple")


def kr_pair_relation(d: DynkinA, f: KRFactor, g: KRFactor) -> PairRelation:
    """Classify the ordered tensor product of two KR strings.

    ReducibleHLW(m) means the product in this order is reducible and
    highest-weight-ordered with positive exponent m; ReducibleOpposite
    means the opposite order is.  Cross-coset pairs are always simple.
    """
    if f.coset != g.coset:
        return SIMPLE
    delta = f.center - g.center
    if abs(delta) in rset(d, f.color, g.color, f.length, g.length):
        kind = "ReducibleHLW" if delta > 0 else "ReducibleOpposite"
        return PairRelation(kind, delta)
    return SIMPLE


def kr_dual_pair_simple(d: DynkinA, f: KRFactor, g: KRFactor) -> bool:
    """True iff the product of f with the right dual of g is simple.

    The right dual of (j, c, s) is (star(j), c - h_vee, s).
    """
    gdual = KRFactor(d.star(g.color), g.center - d.dual_coxeter(), g.length, g.coset)
    return kr_pair_relation(d, f, gdual).kind == "Simple"
