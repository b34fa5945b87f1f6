from __future__ import annotations

import pytest

from qfactgraph import (
    ChainConditionViolated,
    DrinfeldPoly,
    InvalidCut,
    KRFactor,
    NotQFactGraph,
    PreconditionViolated,
    alternating_line_check,
    build_graph,
    chain_arrow_closure,
    chain_p_matrix,
    classify,
    classify_cut,
    cut_arrowless_simple,
    cut_reducible_extremal,
    cuts,
    dual_neighborhood_certificate,
    is_totally_ordered,
    kr_dual_pair_simple,
    parse_poly,
    partial_order,
    subgraph,
    tournament_family,
)
from qfactgraph.fgraph import Cut

from conftest import A2, A3, A5, A8


def cut_isolating(g, v):
    return next(c for c in cuts(g) if c.left == {v} or c.right == {v})


def test_classify_tournament_totally_ordered():
    verdict = classify(build_graph(tournament_family(4, 8)))
    assert (verdict.outcome, verdict.certificate) == ("Prime", "TotallyOrdered")


def test_classify_disconnected_cosets():
    g = build_graph(parse_poly("1:0:1 1:0:1@1", A2))
    verdict = classify(g)
    assert verdict.outcome == "NotPrime"
    assert len(verdict.witness) == 2
    assert all(len(part) == 1 for part in verdict.witness)


def test_classify_two_vertex_connected():
    verdict = classify(build_graph(parse_poly("1:3:2 2:0:2", A2)))
    assert (verdict.outcome, verdict.certificate) == ("Prime", "TwoVertexConnected")


def test_classify_single_vertex():
    verdict = classify(build_graph(DrinfeldPoly(A5, (KRFactor(3, 0, 2),))))
    assert (verdict.outcome, verdict.certificate) == ("Prime", "SingleVertex")


def test_classify_monotonic_line_certificate():
    g = build_graph(parse_poly("1:6:1 2:3:1 1:0:1", A2))
    verdict = classify(g)
    assert (verdict.outcome, verdict.certificate) == ("Prime", "TotallyOrderedLine")


def test_classify_two_source_unknown(two_source_graph):
    verdict = classify(two_source_graph)
    assert verdict.outcome == "Unknown"
    statuses = sorted(c.status for c in verdict.report)
    assert statuses == ["ReducibleByExtremal", "Undetermined", "Undetermined"]
    assert len(verdict.report) == 3


def test_classify_rejects_pseudo_input():
    with pytest.raises(NotQFactGraph):
        classify(build_graph(parse_poly("1:0:1 1:2:1", A2)))


def test_classify_empty_polynomial():
    verdict = classify(build_graph(DrinfeldPoly(A3)))
    assert verdict.outcome == "NotPrime" and verdict.witness == ()


def test_extremal_cut_witnesses_on_triangles(triangle1_graph, triangle2_graph):
    for g in (triangle1_graph, triangle2_graph):
        order = partial_order(g)
        ranked = sorted(g.ids(), key=lambda v: sum((v, w) in order for w in g.ids()))
        bottom, middle, top = ranked
        assert cut_reducible_extremal(g, cut_isolating(g, top)) is not None
        assert cut_reducible_extremal(g, cut_isolating(g, bottom)) is not None
        assert cut_reducible_extremal(g, cut_isolating(g, middle)) is None


def test_extremal_cut_two_vertex():
    g = build_graph(parse_poly("1:3:2 2:0:2", A2))
    witness = cut_reducible_extremal(g, next(cuts(g)))
    assert witness is not None


def test_extremal_witness_satisfies_conditions(triangle1_graph):
    g = triangle1_graph
    for cut in cuts(g):
        witness = cut_reducible_extremal(g, cut)
        if witness is None:
            continue
        vl, vr = witness.left_vertex, witness.right_vertex
        assert vl in cut.left and vr in cut.right
        assert {witness.arrow.tail, witness.arrow.head} == {vl, vr}
        for v, side in ((vl, cut.left), (vr, cut.right)):
            side_sub = subgraph(g, side)
            ins = [a for a in side_sub.arrows if a.head == v]
            outs = [a for a in side_sub.arrows if a.tail == v]
            assert not ins or not outs  # extremal in its side
            full_ins = [a for a in g.arrows if a.head == v]
            full_outs = [a for a in g.arrows if a.tail == v]
            if not full_ins or not full_outs:  # extremal in the whole graph
                assert not ins and not outs


def test_cut_reducible_extremal_rejects_bad_cut(triangle1_graph):
    bad = Cut(frozenset({0}), frozenset({1}), ())
    with pytest.raises(InvalidCut):
        cut_reducible_extremal(triangle1_graph, bad)


def test_cut_arrowless(two_source_graph):
    split = build_graph(parse_poly("1:0:1 1:0:1@1", A2))
    component_cut = next(c for c in cuts(split) if not c.crossing)
    assert cut_arrowless_simple(split, component_cut)
    assert all(not cut_arrowless_simple(two_source_graph, c) for c in cuts(two_source_graph))
    two = build_graph(parse_poly("1:3:2 2:0:2", A2))
    assert not cut_arrowless_simple(two, next(cuts(two)))


def test_dual_certificate_two_vertex_vacuous():
    g = build_graph(parse_poly("1:3:2 2:0:2", A2))
    cert = dual_neighborhood_certificate(g)
    assert cert is not None and len(cert.cuts) == 1
    assert cert.cuts[0].checked == ()


def test_dual_certificate_two_source_none(two_source_graph):
    assert dual_neighborhood_certificate(two_source_graph) is None


def test_dual_certificate_consistent_with_total_order():
    g = build_graph(tournament_family(3, 5))
    cert = dual_neighborhood_certificate(g)
    assert classify(g).outcome == "Prime"
    if cert is not None:
        for cw in cert.cuts:
            assert (cw.right_base, cw.left_base) in g.arrow_map or (
                cw.left_base,
                cw.right_base,
            ) in g.arrow_map


def test_dual_certificate_claims_reverify(snake_graph, triangle1_graph):
    for g in (snake_graph, triangle1_graph, build_graph(tournament_family(3, 5))):
        cert = dual_neighborhood_certificate(g)
        if cert is None:
            continue
        for cw in cert.cuts:
            for x, y in cw.checked:
                fx = g.vertices[x]
                fy = g.vertices[y]
                kx = KRFactor(fx.color, fx.center, fx.weight, fx.coset)
                ky = KRFactor(fy.color, fy.center, fy.weight, fy.coset)
                if cw.condition == 1:
                    assert kr_dual_pair_simple(g.rank, kx, ky)
                else:
                    assert kr_dual_pair_simple(g.rank, ky, kx)


def test_classify_cut_statuses(two_source_graph):
    for cut in cuts(two_source_graph):
        cc = classify_cut(two_source_graph, cut)
        assert cc.status in ("ReducibleByExtremal", "Undetermined")
        if cc.status == "ReducibleByExtremal":
            assert cc.witness is not None


def test_notprime_witness_parts_have_no_crossing():
    g = build_graph(parse_poly("1:0:1 3:0:1 1:9:1@1", A3))
    verdict = classify(g)
    assert verdict.outcome == "NotPrime"
    ids_by_part = []
    for part in verdict.witness:
        part_keys = {(f.color, f.center, f.coset) for f in part}
        ids_by_part.append(
            {
                v
                for v in g.ids()
                if (g.vertices[v].color, g.vertices[v].center, g.vertices[v].coset)
                in part_keys
            }
        )
    for k, left in enumerate(ids_by_part):
        for right in ids_by_part[k + 1 :]:
            crossing = [
                a
                for a in g.arrows
                if (a.tail in left and a.head in right)
                or (a.tail in right and a.head in left)
            ]
            assert not crossing


def test_totally_ordered_verdicts_reverify(snake_graph):
    verdict = classify(snake_graph)
    assert verdict.certificate == "TotallyOrdered"
    assert is_totally_ordered(snake_graph)
    order = partial_order(snake_graph)
    ids = snake_graph.ids()
    assert len(order) == len(ids) * (len(ids) - 1) // 2


def test_chain_p_matrix_examples():
    assert chain_p_matrix(A5, [(0, 1, 2), (3, 1, 3)]) == {(2, 1): 0}
    pmat = chain_p_matrix(A5, [(0, 1, 2), (3, 1, 3), (6, 1, 4)])
    assert pmat[(3, 1)] == -1
    assert chain_p_matrix(A5, [(0, 2, 3)]) == {}


def test_chain_p_matrix_rejects_unlinked_consecutive():
    with pytest.raises(ChainConditionViolated):
        chain_p_matrix(A5, [(0, 1, 2), (1, 1, 3)])


def test_chain_arrow_closure_tournament():
    chain = [(0, 1, 3), (3, 1, 4), (6, 1, 5), (9, 1, 6)]
    report = chain_arrow_closure(A8, chain)
    assert report.ok
    assert len(report.pairs) == 6
    assert all(p.in_full for p in report.pairs)


def test_chain_arrow_closure_matches_skew_graph():
    chain = [(-4, 1, 4), (0, 2, 3), (4, 1, 2), (7, 1, 3)]
    report = chain_arrow_closure(A5, chain)
    assert report.ok
    linked = {(p.k, p.l) for p in report.pairs if p.in_full}
    assert linked == {(1, 2), (2, 3), (3, 4), (2, 4)}


def test_chain_arrow_closure_boundary_chain_only_consecutive():
    chain = [(0, 1, 1), (3, 1, 2), (6, 1, 1)]
    report = chain_arrow_closure(A2, chain)
    assert report.ok
    linked = {(p.k, p.l) for p in report.pairs if p.in_full}
    assert linked == {(1, 2), (2, 3)}


def test_chain_arrow_closure_requires_increasing():
    with pytest.raises(ChainConditionViolated):
        chain_arrow_closure(A5, [(3, 1, 2), (0, 1, 3)])


def test_alternating_line_check_two_vertex():
    assert alternating_line_check(build_graph(parse_poly("1:3:2 2:0:2", A2)))


def test_alternating_line_check_three_chain():
    g = build_graph(parse_poly("1:0:1 2:3:1 1:6:1", A2))
    assert alternating_line_check(g)


def test_alternating_line_check_preconditions(two_source_graph, triangle1_graph):
    with pytest.raises(PreconditionViolated):
        alternating_line_check(two_source_graph)  # not totally ordered
    with pytest.raises(PreconditionViolated):
        alternating_line_check(triangle1_graph)  # color 2 is not a boundary node


def test_classify_invariance_spot_check(snake_graph):
    from qfactgraph import arrow_dual, color_dual, shift, to_polynomial

    base = classify(snake_graph)
    shifted = classify(build_graph(shift(to_polynomial(snake_graph), 9)))
    dualized = classify(color_dual(arrow_dual(snake_graph)))
    assert (base.outcome, base.certificate) == (shifted.outcome, shifted.certificate)
    assert (base.outcome, base.certificate) == (dualized.outcome, dualized.certificate)
