"""Free faces, guided collapses, trace verification."""

import pytest

from qgor import (
    GF2,
    QQ,
    CollapseTrace,
    Failure,
    InvalidStep,
    collapse_onto,
    faces_avoiding,
    free_faces,
    from_facets,
    reduced_betti,
    verify_trace,
)
from qgor.fixtures import corpus, get_fixture

FIELDS = [QQ, GF2]


def test_free_faces_of_single_triangle():
    delta = from_facets([[1, 2, 3]], 3)
    pairs = free_faces(delta)
    assert pairs == [
        ((1, 2), (1, 2, 3)),
        ((1, 3), (1, 2, 3)),
        ((2, 3), (1, 2, 3)),
    ]


def test_free_faces_of_closed_sphere_is_empty():
    assert free_faces(get_fixture("boundary-3-simplex").complex()) == []


def test_free_faces_of_two_glued_triangles():
    delta = from_facets([[1, 2, 3], [2, 3, 4]], 4)
    pairs = free_faces(delta)
    # the shared edge (2,3) has two cofaces; each boundary edge has one;
    # every vertex has several. The empty face never counts.
    assert pairs == [
        ((1, 2), (1, 2, 3)),
        ((1, 3), (1, 2, 3)),
        ((2, 4), (2, 3, 4)),
        ((3, 4), (2, 3, 4)),
    ]


def test_free_faces_of_lone_edge_includes_vertices():
    delta = from_facets([[1, 2]], 2)
    assert free_faces(delta) == [((1,), (1, 2)), ((2,), (1, 2))]


def test_collapse_two_triangles_onto_shared_edge():
    delta_a = from_facets([[1, 2, 3], [2, 3, 4]], 4)
    trace = collapse_onto(delta_a, {1, 4})
    assert isinstance(trace, CollapseTrace)
    assert trace.end == faces_avoiding(delta_a, {1, 4})
    assert trace.end.facets == ((2, 3),)
    # v' = 2 in both rounds, so the free pair deleting (2,) is skipped
    assert trace.steps == (
        ((1, 3), (1, 2, 3)),
        ((1,), (1, 2)),
        ((3, 4), (2, 3, 4)),
        ((4,), (2, 4)),
    )
    for field in FIELDS:
        assert verify_trace(trace, field)


def test_collapse_star_onto_center():
    delta_a = from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4]], 4)
    trace = collapse_onto(delta_a, {2, 3, 4})
    assert isinstance(trace, CollapseTrace)
    assert trace.end.facets == ((1,),)
    assert verify_trace(trace, QQ)


def test_collapse_triangle_to_vertex():
    trace = collapse_onto(from_facets([[1, 2, 3]], 3), {2, 3})
    assert isinstance(trace, CollapseTrace)
    assert trace.end.facets == ((1,),)
    assert len(trace.steps) == 3
    assert verify_trace(trace, QQ)


def test_collapse_counterexample_one_fails():
    # two triangles glued along an edge cannot collapse onto the
    # complement of {1,2,5}: the target is two isolated vertices
    delta_a = get_fixture("paper-cex1-A").complex()
    result = collapse_onto(delta_a, {1, 2, 5})
    assert isinstance(result, Failure)
    target = faces_avoiding(delta_a, {1, 2, 5})
    b_a = reduced_betti(delta_a, QQ)
    b_t = reduced_betti(target, QQ)
    assert b_a[0] == 0 and b_t[0] == 1  # the certifying mismatch
    assert result.partial_trace.start == delta_a


def test_collapse_counterexample_two_fails():
    # Delta_B = <235,145,123> touches every vertex, so the target is the
    # empty complex and no collapse can reach it
    delta_a = get_fixture("paper-cex2-A").complex()
    forbidden = {1, 2, 3, 4, 5}
    result = collapse_onto(delta_a, forbidden)
    assert isinstance(result, Failure)
    target = faces_avoiding(delta_a, forbidden)
    assert target.is_empty
    assert reduced_betti(delta_a, QQ) != reduced_betti(target, QQ)
    assert reduced_betti(target, QQ)[-1] == 1


def test_collapse_nothing_to_do():
    delta = get_fixture("four-cycle").complex()
    trace = collapse_onto(delta, {9})
    assert isinstance(trace, CollapseTrace)
    assert trace.steps == ()
    assert trace.end == delta


def test_collapse_preserves_betti_on_corpus():
    for fx in corpus():
        delta = fx.complex()
        verts = delta.vertices()
        result = collapse_onto(delta, {verts[0]})
        if isinstance(result, CollapseTrace):
            assert result.end == faces_avoiding(delta, {verts[0]}), fx.name
            for field in FIELDS:
                assert verify_trace(result, field), (fx.name, field)
        else:
            # a stuck collapse must still leave a replayable partial trace
            assert result.partial_trace.start == delta
            assert result.reason


def test_verify_trace_rejects_forged_steps():
    delta_a = from_facets([[1, 2, 3], [2, 3, 4]], 4)
    trace = collapse_onto(delta_a, {1, 4})
    forged = CollapseTrace(trace.start, trace.end, [((2, 3), (2, 3, 4))] + list(trace.steps[1:]))
    with pytest.raises(InvalidStep) as exc:
        verify_trace(forged, QQ)
    assert exc.value.index == 0


def test_verify_trace_rejects_wrong_end():
    delta_a = from_facets([[1, 2, 3], [2, 3, 4]], 4)
    trace = collapse_onto(delta_a, {1, 4})
    wrong = CollapseTrace(trace.start, from_facets([[2]], 4), trace.steps)
    with pytest.raises(InvalidStep):
        verify_trace(wrong, QQ)


def test_failure_serialization_carries_partial_trace():
    result = collapse_onto(get_fixture("paper-cex1-A").complex(), {1, 2, 5})
    payload = result.to_json()
    assert payload["reason"] == result.reason
    assert "end" not in payload
    assert payload["stuck"] == [list(f) for f in result.stuck_complex.facets]
    assert all(set(step) == {"free", "coface"} for step in payload["steps"])


def test_trace_serialization_round_trip():
    trace = collapse_onto(from_facets([[1, 2, 3], [2, 3, 4]], 4), {1, 4})
    payload = trace.to_json()
    assert payload["start"] == [[1, 2, 3], [2, 3, 4]]
    assert payload["end"] == [[2, 3]]
    rebuilt = CollapseTrace(
        from_facets(payload["start"], 4),
        from_facets(payload["end"], 4),
        [(tuple(s["free"]), tuple(s["coface"])) for s in payload["steps"]],
    )
    assert verify_trace(rebuilt, QQ)
