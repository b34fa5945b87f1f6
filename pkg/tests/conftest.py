from __future__ import annotations

import pytest

from qfactgraph import (
    DrinfeldPoly,
    DynkinA,
    KRFactor,
    Snake,
    SkewShape,
    build_graph,
    parse_poly,
    snake_to_poly,
)

A1 = DynkinA(1)
A2 = DynkinA(2)
A3 = DynkinA(3)
A5 = DynkinA(5)
A8 = DynkinA(8)


@pytest.fixture
def two_source_poly():
    return parse_poly("2:0:2 1:3:2 1:4:1", A2)


@pytest.fixture
def two_source_graph(two_source_poly):
    return build_graph(two_source_poly)


@pytest.fixture
def triangle1_graph():
    # All-pairs triangle on A_3 with exponents {6, 3, 3}.
    return build_graph(DrinfeldPoly(A3, (KRFactor(3, 6, 3), KRFactor(2, 3, 3), KRFactor(1, 0, 3))))


@pytest.fixture
def triangle2_graph():
    # All-pairs triangle on A_3 with exponents {7, 3, 4}.
    return build_graph(DrinfeldPoly(A3, (KRFactor(2, 7, 3), KRFactor(3, 4, 3), KRFactor(1, 0, 3))))


@pytest.fixture
def snake_a5():
    return Snake(A5, ((4, -2), (3, 1), (2, 4), (3, 7)))


@pytest.fixture
def snake_graph(snake_a5):
    return build_graph(snake_to_poly(snake_a5))


@pytest.fixture
def skew1_shape():
    return SkewShape(A3, (20, 16, 10, 7, 2, 0), (17, 5))


def vertex_data(g, v):
    vert = g.vertices[v]
    return (vert.color, vert.center, vert.weight)


def arrow_data(g):
    """Arrows as ((tail color, center), (head color, center), exp) triples."""
    out = set()
    for a in g.arrows:
        t, h = g.vertices[a.tail], g.vertices[a.head]
        out.add(((t.color, t.center), (h.color, h.center), a.exp))
    return out
