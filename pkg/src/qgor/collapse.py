"""Elementary collapses and the guided vertex-elimination procedure.

An elementary collapse removes a pair (beta, gamma) where beta is a
nonempty face properly contained in exactly one face of the complex;
that face is then automatically a facet gamma with dim gamma =
dim beta + 1, and removing the pair preserves the homotopy type.

collapse_onto eliminates a set of forbidden vertices one at a time:
for the smallest forbidden vertex v still present, its link is
collapsed greedily down to a single preferred vertex v', mirroring
every link collapse inside the ambient complex (if (beta, gamma) is
free in lk v then (beta+v, gamma+v) is free in the complex, since
faces over beta+v are exactly the link faces over beta, joined with
v).  The run ends with the pair ({v}, {v,v'}) and moves on.  A stuck
state is returned as a Failure value, not raised: on inputs violating
the procedure's hypotheses that is the expected, informative outcome.
"""

from .errors import InvalidStep
from .homology import reduced_betti
from .simplicial_core import (
    FACE_CAP,
    SimplicialComplex,
    face,
    face_key,
    faces_avoiding,
)


class CollapseTrace:
    """An ordered, replayable record of elementary collapses."""

    __slots__ = ("start", "end", "steps")

    def __init__(self, start, end, steps):
        self.start = start
        self.end = end
        self.steps = tuple((face(b), face(g)) for b, g in steps)

    def to_json(self):
        return {
            "start": [list(f) for f in self.start.facets],
            "end": [list(f) for f in self.end.facets],
            "steps": [
                {"free": list(b), "coface": list(g)} for b, g in self.steps
            ],
        }

    def __repr__(self):
        return f"CollapseTrace({len(self.steps)} steps)"


class Failure:
    """A stuck collapse attempt: where it stopped and how it got there."""

    __slots__ = ("stuck_complex", "partial_trace", "reason")

    def __init__(self, stuck_complex, partial_trace, reason):
        self.stuck_complex = stuck_complex
        self.partial_trace = partial_trace
        self.reason = reason

    def to_json(self):
        out = self.partial_trace.to_json()
        del out["end"]
        out["stuck"] = [list(f) for f in self.stuck_complex.facets]
        out["reason"] = self.reason
        return out

    def __repr__(self):
        return f"Failure({self.reason!r}, after {len(self.partial_trace.steps)} steps)"


def _proper_superfaces(beta, face_set):
    bs = set(beta)
    return [g for g in face_set if len(g) > len(beta) and bs.issubset(g)]


def _free_pairs(face_set):
    """Sorted (beta, gamma) pairs with beta nonempty and one superface.

    The empty face is never free: removing it together with a lone
    vertex would change reduced homology in degree -1.
    """
    pairs = []
    for beta in face_set:
        if not beta:
            continue
        sup = _proper_superfaces(beta, face_set)
        if len(sup) == 1:
            pairs.append((beta, sup[0]))
    return sorted(pairs, key=lambda p: (face_key(p[0]), face_key(p[1])))


def _facets_of(face_set):
    return tuple(sorted(
        (f for f in face_set if not _proper_superfaces(f, face_set)),
        key=face_key,
    ))


def _to_complex(face_set, n_vertices):
    facets = _facets_of(face_set)
    if facets == ((),):
        return SimplicialComplex(n_vertices, ((),))
    return SimplicialComplex(n_vertices, tuple(f for f in facets if f))


def free_faces(delta, cap=FACE_CAP):
    """All free pairs of the complex, in canonical order."""
    if delta.is_void:
        return []
    return _free_pairs(set(delta.faces(cap)))


def collapse_onto(delta_a, forbidden_vertices, cap=FACE_CAP):
    """Collapse away the forbidden vertices, one link at a time.

    Returns a CollapseTrace whose end equals
    faces_avoiding(delta_a, forbidden_vertices), or a Failure with the
    stuck state.  Tie-breaks are fixed: smallest forbidden vertex
    first; the link's target vertex v' prefers non-forbidden ids, then
    smallest; inner collapses take the canonically first free pair
    that does not delete v'.
    """
    forbidden = set(forbidden_vertices)
    target = faces_avoiding(delta_a, forbidden)
    current = set(delta_a.faces(cap))
    steps = []

    def state():
        return _to_complex(current, delta_a.n_vertices)

    def fail(reason):
        trace = CollapseTrace(delta_a, state(), steps)
        return Failure(state(), trace, reason)

    while True:
        present = sorted({v for f in current for v in f} & forbidden)
        if not present:
            break
        v = present[0]
        link_faces = {tuple(w for w in f if w != v) for f in current if v in f}
        link_verts = {w for f in link_faces for w in f}
        if not link_verts:
            return fail(f"vertex {v} has an empty link; it cannot be collapsed away")
        outside = sorted(link_verts - forbidden)
        v_prime = outside[0] if outside else min(link_verts)

        while link_faces != {(), (v_prime,)}:
            pick = None
            for beta, gamma in _free_pairs(link_faces):
                if beta != (v_prime,):
                    pick = (beta, gamma)
                    break
            if pick is None:
                return fail(
                    f"link of vertex {v} is stuck with no usable free face"
                )
            beta, gamma = pick
            link_faces.discard(beta)
            link_faces.discard(gamma)
            current.discard(face(beta + (v,)))
            current.discard(face(gamma + (v,)))
            steps.append((face(beta + (v,)), face(gamma + (v,))))

        current.discard((v,))
        current.discard(face((v, v_prime)))
        steps.append(((v,), face((v, v_prime))))

    end = state()
    if end != target:
        return fail("collapse removed the forbidden vertices but left extra faces")
    return CollapseTrace(delta_a, end, steps)


def verify_trace(trace, field, cap=FACE_CAP):
    """Replay a trace and compare Betti vectors of start and end.

    Structural problems raise InvalidStep with the offending index:
    a step whose pair is not a free pair of the current state, or a
    final state that differs from the recorded end.  The boolean
    verdict is reserved for the homology comparison.
    """
    current = set(trace.start.faces(cap))
    for k, (beta, gamma) in enumerate(trace.steps):
        if beta not in current or gamma not in current:
            raise InvalidStep(k, f"pair ({beta}, {gamma}) is not in the complex")
        sup = _proper_superfaces(beta, current)
        if not beta or sup != [gamma]:
            raise InvalidStep(k, f"face {beta} is not free with coface {gamma}")
        current.discard(beta)
        current.discard(gamma)
    if _to_complex(current, trace.start.n_vertices) != trace.end:
        raise InvalidStep(len(trace.steps), "replayed end differs from recorded end")
    b_start = reduced_betti(trace.start, field, cap)
    b_end = reduced_betti(trace.end, field, cap)
    return b_start == b_end
