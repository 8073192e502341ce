"""Simplicial complexes as canonical facet lists.

A face is a tuple of strictly increasing positive vertex ids; the empty
face is the empty tuple.  A complex stores its inclusion-maximal faces
(facets) sorted by size and then lexicographically, so two equal
complexes compare equal structurally.  Two degenerate complexes are
kept distinct: the *void* complex with no faces at all, and the *empty*
complex whose only face is the empty face.  The distinction matters
because reduced homology of the empty complex is one-dimensional in
degree -1, which Hochster's formula relies on for links of facets.

Vertex ids are 1-based and need not all occur in a facet; unused ids
stay in the ambient set (this matters for multidegrees downstream).
"""

import math
from itertools import combinations

from .errors import (
    CapacityExceeded,
    EmptySelection,
    IndexOutOfRange,
    NotAFace,
    VertexOutOfRange,
)

#: Default cap on how many faces any single enumeration may produce.
FACE_CAP = 2 ** 24


def face(vertices):
    """Canonicalize an iterable of vertex ids into a face tuple."""
    return tuple(sorted(set(vertices)))


def face_key(f):
    """Sort key realizing the canonical (cardinality, lexicographic) order."""
    return (len(f), f)


def check_face_budget(facets, cap=FACE_CAP):
    """Refuse facets whose subset count alone already exceeds cap.

    This is the cheap screen shared by every routine that enumerates
    faces dimension by dimension; it guarantees such routines fail
    before doing any real work on absurdly wide input.
    """
    for f in facets:
        if 2 ** len(f) > cap:
            raise CapacityExceeded(
                f"facet of size {len(f)} alone has {2 ** len(f)} subsets, cap is {cap}"
            )


class SimplicialComplex:
    """A simplicial complex on the vertex set {1, ..., n_vertices}.

    Instances are immutable value objects; build them with from_facets
    rather than calling the constructor directly, so facet lists are
    always canonical (maximal, deduplicated, sorted).
    """

    __slots__ = ("n_vertices", "facets")

    def __init__(self, n_vertices, facets):
        self.n_vertices = n_vertices
        self.facets = tuple(facets)

    @property
    def is_void(self):
        """True when the complex has no faces whatsoever."""
        return not self.facets

    @property
    def is_empty(self):
        """True when the only face is the empty face."""
        return self.facets == ((),)

    @property
    def dim(self):
        """Dimension, i.e. max |F| - 1 over facets (-1 for the empty complex)."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return len(self.facets[-1]) - 1

    def is_pure(self):
        """True when all facets share one dimension (void and empty count as pure)."""
        return len({len(f) for f in self.facets}) <= 1

    def vertices(self):
        """The vertex ids that occur in at least one facet, ascending."""
        seen = set()
        for f in self.facets:
            seen.update(f)
        return tuple(sorted(seen))

    def is_face(self, sigma):
        """Membership test; accepts any iterable of vertex ids."""
        s = set(sigma)
        return any(s.issubset(f) for f in self.facets)

    def faces(self, cap=FACE_CAP):
        """All faces in canonical order, including the empty face.

        The void complex yields nothing.  Raises CapacityExceeded when
        more than cap faces would have to be materialized.
        """
        check_face_budget(self.facets, cap)
        seen = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                for s in combinations(f, k):
                    seen.add(s)
            if len(seen) > cap:
                raise CapacityExceeded(f"more than {cap} faces")
        return sorted(seen, key=face_key)

    def faces_of_dim(self, k, cap=FACE_CAP):
        """All k-dimensional faces in lexicographic order.

        k = -1 yields the empty face (unless the complex is void);
        out-of-range k yields an empty list.
        """
        if self.is_void or k < -1:
            return []
        if k == -1:
            return [()]
        seen = set()
        for f in self.facets:
            if len(f) < k + 1:
                continue
            if math.comb(len(f), k + 1) > cap:
                raise CapacityExceeded(
                    f"facet of size {len(f)} has too many {k}-faces, cap is {cap}"
                )
            seen.update(combinations(f, k + 1))
            if len(seen) > cap:
                raise CapacityExceeded(f"more than {cap} faces of dimension {k}")
        return sorted(seen)

    def face_count(self, cap=FACE_CAP):
        """Total number of faces, empty face included."""
        return len(self.faces(cap))

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.n_vertices == other.n_vertices
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.n_vertices, self.facets))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(n={self.n_vertices}, void)"
        if self.is_empty:
            return f"SimplicialComplex(n={self.n_vertices}, empty)"
        body = ",".join("".join(map(str, f)) if all(v < 10 for v in f) else str(f) for f in self.facets)
        return f"SimplicialComplex(n={self.n_vertices}, <{body}>)"


def from_facets(raw_facets, n_vertices=None):
    """Build the canonical complex generated by the given faces.

    Parameters
    ----------
    raw_facets : iterable of iterables of positive ints
        Generating faces; non-maximal and duplicate entries are absorbed.
        Repeated ids inside one entry are deduplicated.
    n_vertices : int, optional
        Ambient vertex count.  Defaults to the largest id seen (0 when
        no faces or only the empty face are given).

    Raises
    ------
    VertexOutOfRange
        If an id is nonpositive or exceeds an explicit n_vertices.
    """
    cleaned = []
    for entry in raw_facets:
        f = face(entry)
        for v in f:
            if not isinstance(v, int) or isinstance(v, bool):
                raise VertexOutOfRange(f"vertex id {v!r} in facet {sorted(entry)} is not an integer")
            if v <= 0:
                raise VertexOutOfRange(f"vertex id {v} in facet {sorted(entry)} is not positive")
        cleaned.append(f)

    top = max((f[-1] for f in cleaned if f), default=0)
    if n_vertices is None:
        n_vertices = top
    else:
        if n_vertices < 0:
            raise VertexOutOfRange(f"n_vertices must be nonnegative, got {n_vertices}")
        if top > n_vertices:
            offender = next(f for f in cleaned if f and f[-1] == top)
            raise VertexOutOfRange(
                f"vertex id {top} in facet {list(offender)} exceeds n_vertices={n_vertices}"
            )

    # Absorption: keep only inclusion-maximal faces.
    maximal = []
    for f in sorted(set(cleaned), key=len, reverse=True):
        fs = set(f)
        if not any(fs.issubset(m) for m in maximal):
            maximal.append(f)
    maximal.sort(key=face_key)
    return SimplicialComplex(n_vertices, maximal)


def link(delta, sigma):
    """The link lk(sigma) = {tau : tau disjoint from sigma, tau + sigma a face}.

    Stays on the same ambient vertex set.  The link of the empty face is
    the complex itself; the link of a facet is the empty complex.

    Raises NotAFace when sigma is not a face of delta.
    """
    s = face(sigma)
    if not delta.is_face(s):
        raise NotAFace(f"{list(s)} is not a face")
    ss = set(s)
    new_facets = [tuple(v for v in f if v not in ss) for f in delta.facets if ss.issubset(f)]
    return from_facets(new_facets, delta.n_vertices)


def restrict_to_facets(delta, indices):
    """The subcomplex generated by the facets at the given 0-based positions.

    Positions refer to the canonical facet order.  Raises EmptySelection
    for an empty selection and IndexOutOfRange for a bad position.
    """
    idx = sorted(set(indices))
    if not idx:
        raise EmptySelection("at least one facet index is required")
    for i in idx:
        if not isinstance(i, int) or isinstance(i, bool) or i < 0 or i >= len(delta.facets):
            raise IndexOutOfRange(
                f"facet index {i} out of range for {len(delta.facets)} facets"
            )
    return from_facets([delta.facets[i] for i in idx], delta.n_vertices)


def faces_avoiding(delta, forbidden_vertices):
    """The subcomplex of faces containing no forbidden vertex."""
    forbidden = set(forbidden_vertices)
    new_facets = [tuple(v for v in f if v not in forbidden) for f in delta.facets]
    return from_facets(new_facets, delta.n_vertices)


def core(delta):
    """Strip cone points (vertices lying in every facet) until none remain.

    Removing all current cone points at once leaves a complex whose
    facets have empty common intersection, so a single pass converges;
    the operation is idempotent.
    """
    if delta.is_void:
        raise ValueError("the void complex has no core")
    cone = set(delta.facets[0])
    for f in delta.facets[1:]:
        cone &= set(f)
    if not cone:
        return delta
    return from_facets([tuple(v for v in f if v not in cone) for f in delta.facets], delta.n_vertices)


def minimal_nonfaces(delta, cap=FACE_CAP):
    """Inclusion-minimal subsets of {1..n} that are not faces.

    These index the minimal monomial generators of the Stanley-Reisner
    ideal.  Every minimal non-face is a face plus one vertex with all
    codimension-one subsets faces, so a scan over (face, vertex) pairs
    finds them all.  For the void complex the empty set itself is the
    unique minimal non-face (the ideal is the unit ideal).
    """
    if delta.is_void:
        return [()]
    all_faces = set(delta.faces(cap))
    found = set()
    for sigma in all_faces:
        for v in range(1, delta.n_vertices + 1):
            if v in sigma:
                continue
            tau = tuple(sorted(sigma + (v,)))
            if tau in all_faces or tau in found:
                continue
            if all(tau[:i] + tau[i + 1:] in all_faces for i in range(len(tau))):
                found.add(tau)
    return sorted(found, key=face_key)
