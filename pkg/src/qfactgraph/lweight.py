"""Drinfeld polynomials as multisets of Kirillov-Reshetikhin strings.

A KR factor records a q-string by its color, the q-exponent of the string
center (relative to an arbitrary per-coset anchor), its length, and an
opaque coset tag.  Factors in distinct cosets never interact.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable

from .dynkin import DynkinA
from .errors import InternalInvariantViolation, NonPositiveLength, PolySyntaxError

__all__ = [
    "KRFactor",
    "DrinfeldPoly",
    "roots_of",
    "q_factorize",
    "is_q_factorization",
    "weight",
    "support",
    "dual_negate",
    "dual_sigma",
    "dual_star",
    "dual_kappa",
    "shift",
    "parse_poly",
    "poly_to_text",
    "poly_to_json",
    "poly_from_json",
]


@dataclass(frozen=True, order=True)
class KRFactor:
    """One KR string: color, center exponent, length, coset tag."""

    color: int
    center: int
    length: int
    coset: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.length, int) or self.length < 1:
            raise NonPositiveLength(f"string length must be >= 1, got {self.length!r}")


@dataclass(frozen=True)
class DrinfeldPoly:
    """A multiset of KR factors over a fixed type A diagram.

    Factors are kept sorted, so equality is multiset equality.
    """

    rank: DynkinA
    factors: tuple[KRFactor, ...] = ()

    def __post_init__(self) -> None:
        fs = tuple(sorted(self.factors))
        for f in fs:
            self.rank.check_node(f.color)
        object.__setattr__(self, "factors", fs)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def roots_of(f: KRFactor) -> tuple[int, ...]:
    """Exponents of the string roots: center + length - 1 - 2p for 0 <= p < length."""
    return tuple(f.center - f.length + 1 + 2 * p for p in range(f.length))


def _strings_interact(a: KRFactor, b: KRFactor) -> bool:
    # Two same-color strings fail the q-factorization condition exactly when
    # their center gap lies in {r + s - 2p : 0 <= p < min(r, s)}, i.e. the
    # strings overlap without nesting or abut with a gap of one step.
    gap = abs(a.center - b.center)
    hi = a.length + b.length
    lo = abs(a.length - b.length) + 2
    return lo <= gap <= hi and (hi - gap) % 2 == 0


def is_q_factorization(p: DrinfeldPoly) -> bool:
    """True iff no same-color, same-coset pair of factors interacts."""
    for a, b in combinations(p.factors, 2):
        if a.color == b.color and a.coset == b.coset and _strings_interact(a, b):
            return False
    return True


def _longest_run(pool: Counter) -> tuple[int, int]:
    """Longest step-2 run in the support of ``pool``; leftmost on ties.

    Runs live inside one parity class, so each class is scanned separately.
    """
    runs = []
    for parity in (0, 1):
        support = sorted(x for x in pool if x % 2 == parity)
        k = 0
        while k < len(support):
            j = k
            while j + 1 < len(support) and support[j + 1] - support[j] == 2:
                j += 1
            runs.append((support[k], j - k + 1))
            k = j + 1
    return max(runs, key=lambda run: (run[1], -run[0]))


def q_factorize(p: DrinfeldPoly) -> DrinfeldPoly:
    """Canonical factorization of a (pseudo) factorization into KR strings.

    Per (color, coset) class the factors are expanded into their root
    multiset; the longest step-2 run present is peeled off repeatedly
    (leftmost on ties), each peel emitting one KR factor.  The result is
    verified pairwise; a failure indicates a bug, not bad input.
    """
    out: list[KRFactor] = []
    groups: dict[tuple[int, int], Counter] = defaultdict(Counter)
    for f in p.factors:
        groups[(f.color, f.coset)].update(roots_of(f))
    for (color, coset), pool in sorted(groups.items()):
        while pool:
            start, length = _longest_run(pool)
            for x in range(start, start + 2 * length, 2):
                pool[x] -= 1
                if not pool[x]:
                    del pool[x]
            out.append(KRFactor(color, start + length - 1, length, coset))
    result = DrinfeldPoly(p.rank, tuple(out))
    if not is_q_factorization(result):
        raise InternalInvariantViolation("run peeling produced interacting strings")
    return result


def weight(p: DrinfeldPoly) -> dict[int, int]:
    """Total string length per color."""
    out: dict[int, int] = {}
    for f in p.factors:
        out[f.color] = out.get(f.color, 0) + f.length
    return out


def support(p: DrinfeldPoly) -> frozenset[int]:
    return frozenset(f.color for f in p.factors)


def dual_negate(p: DrinfeldPoly) -> DrinfeldPoly:
    """Negate every center (the root-inversion dual)."""
    return DrinfeldPoly(p.rank, tuple(replace(f, center=-f.center) for f in p.factors))


def dual_sigma(p: DrinfeldPoly) -> DrinfeldPoly:
    """Apply the diagram involution to every color."""
    return DrinfeldPoly(
        p.rank, tuple(replace(f, color=p.rank.star(f.color)) for f in p.factors)
    )


def shift(p: DrinfeldPoly, c: int) -> DrinfeldPoly:
    """Add c to every center."""
    return DrinfeldPoly(p.rank, tuple(replace(f, center=f.center + c) for f in p.factors))


def dual_star(p: DrinfeldPoly) -> DrinfeldPoly:
    """Right-dual transform: star the colors, then shift centers by -h_vee."""
    return shift(dual_sigma(p), -p.rank.dual_coxeter())


def dual_kappa(p: DrinfeldPoly) -> DrinfeldPoly:
    """Composite of root inversion and the right dual; an involution."""
    return dual_star(dual_negate(p))


_TOKEN = re.compile(r"(\d+):(-?\d+):(-?\d+)(?:@(-?\d+))?\Z")


def parse_poly(text: str, rank: DynkinA | int) -> DrinfeldPoly:
    """Parse whitespace-separated ``color:center:length[@coset]`` tokens.

    Duplicate tokens accumulate multiplicity.
    """
    diagram = rank if isinstance(rank, DynkinA) else DynkinA(rank)
    factors: list[KRFactor] = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        parsed = _TOKEN.match(tok)
        if parsed is None:
            raise PolySyntaxError(f"bad token {tok!r}", m.start())
        color, center, length = (int(parsed.group(k)) for k in (1, 2, 3))
        coset = int(parsed.group(4)) if parsed.group(4) is not None else 0
        factors.append(KRFactor(color, center, length, coset))
    return DrinfeldPoly(diagram, tuple(factors))


def poly_to_text(p: DrinfeldPoly) -> str:
    parts = []
    for f in p.factors:
        tok = f"{f.color}:{f.center}:{f.length}"
        if f.coset:
            tok += f"@{f.coset}"
        parts.append(tok)
    return " ".join(parts)


def poly_to_json(p: DrinfeldPoly) -> list[dict[str, int]]:
    return [
        {"color": f.color, "center": f.center, "length": f.length, "coset": f.coset}
        for f in p.factors
    ]


def poly_from_json(data: Iterable[dict[str, int]], rank: DynkinA | int) -> DrinfeldPoly:
    diagram = rank if isinstance(rank, DynkinA) else DynkinA(rank)
    factors = tuple(
        KRFactor(d["color"], d["center"], d["length"], d.get("coset", 0)) for d in data
    )
    return DrinfeldPoly(diagram, factors)
