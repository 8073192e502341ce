"""Local cohomology of Stanley-Reisner rings via Hochster's formula.

For a complex with Krull dimension d = dim(Delta) + 1, the squarefree
multidegree -sigma piece of H^i_m(k[Delta]) has

    dim_k H^i_m(k[Delta])_{-sigma} = dim_k H~^{i - |sigma| - 1}(lk sigma; k)

for every face sigma (the empty face included), and every other
multidegree vanishes.  This module is bookkeeping on top of that
formula: the graded table, depth and the Reisner Cohen-Macaulay
criterion, the a-invariant, the Buchsbaum predicate and the Serre
condition (S_l).  Over a field the cohomology dimensions of a link
equal its homology dimensions, so link Betti vectors serve throughout.
"""

from .homology import reduced_betti
from .simplicial_core import FACE_CAP, face, face_key, link


class LocalCohomologyTable:
    """Sparse table of dim_k H^i_m(k[Delta])_{-sigma} over faces sigma.

    Only nonzero entries are stored.  total(i, j) aggregates over the
    squarefree multidegrees with |sigma| = -j; positive j never occurs.
    """

    __slots__ = ("d", "n_vertices", "_entries")

    def __init__(self, d, n_vertices, entries):
        self.d = d
        self.n_vertices = n_vertices
        self._entries = dict(entries)

    def entry(self, i, sigma):
        return self._entries.get((i, face(sigma)), 0)

    def entries(self):
        """Nonzero (i, sigma, dim) triples in canonical order."""
        return sorted(
            ((i, s, v) for (i, s), v in self._entries.items()),
            key=lambda t: (t[0], face_key(t[1])),
        )

    def total(self, i, j):
        return sum(v for (ii, s), v in self._entries.items() if ii == i and len(s) == -j)

    def totals(self):
        """Nonzero (i, j, dim) aggregates in canonical order."""
        agg = {}
        for (i, s), v in self._entries.items():
            key = (i, -len(s))
            agg[key] = agg.get(key, 0) + v
        return sorted((i, j, v) for (i, j), v in agg.items())

    def max_i(self):
        return max((i for i, _ in self._entries), default=None)

    def min_i(self):
        return min((i for i, _ in self._entries), default=None)

    def to_json(self):
        return {
            "d": self.d,
            "entries": [
                {"i": i, "sigma": list(s), "dim": v} for i, s, v in self.entries()
            ],
            "total": [{"i": i, "j": j, "dim": v} for i, j, v in self.totals()],
        }

    def __eq__(self, other):
        return (
            isinstance(other, LocalCohomologyTable)
            and self.d == other.d
            and self._entries == other._entries
        )

    def __repr__(self):
        return f"LocalCohomologyTable(d={self.d}, {len(self._entries)} nonzero entries)"


class DepthReport:
    """Depth of k[Delta] read off the table, with a CM verdict."""

    __slots__ = ("depth", "is_cohen_macaulay", "witness")

    def __init__(self, depth, is_cohen_macaulay, witness):
        self.depth = depth
        self.is_cohen_macaulay = is_cohen_macaulay
        self.witness = witness

    def __repr__(self):
        return (
            f"DepthReport(depth={self.depth}, cm={self.is_cohen_macaulay}, "
            f"witness={self.witness})"
        )


def local_cohomology_table(delta, field, cap=FACE_CAP):
    """The full Hochster table of delta over the given field.

    One link homology computation per face; links that coincide as
    facet lists share a memoized Betti vector.
    """
    if delta.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    d = delta.dim + 1
    entries = {}
    memo = {}
    for sigma in delta.faces(cap):
        lk = link(delta, sigma)
        b = memo.get(lk.facets)
        if b is None:
            b = reduced_betti(lk, field, cap)
            memo[lk.facets] = b
        for r, dim_r in b.dims.items():
            if dim_r:
                entries[(r + len(sigma) + 1, sigma)] = dim_r
    return LocalCohomologyTable(d, delta.n_vertices, entries)


def depth_report(delta, field, cap=FACE_CAP):
    """Depth and Cohen-Macaulayness from the table.

    depth = min { i : H^i_m(k[Delta]) != 0 }; Cohen-Macaulay means
    depth = d.  The witness is the first table entry below d (in
    canonical order), None when CM.
    """
    table = local_cohomology_table(delta, field, cap)
    depth = table.min_i()
    below = [(i, s) for i, s, _ in table.entries() if i < table.d]
    witness = below[0] if below else None
    return DepthReport(depth, depth == table.d, witness)


def cohen_macaulay_direct(delta, field, cap=FACE_CAP):
    """Reisner's criterion checked directly on links, without the table.

    k[Delta] is Cohen-Macaulay iff H~_i(lk sigma; k) = 0 for every face
    sigma (the empty face included) and every i < dim lk sigma.  Kept
    as a second code path so the table-derived verdict can be
    cross-checked.
    """
    if delta.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    for sigma in delta.faces(cap):
        lk = link(delta, sigma)
        b = reduced_betti(lk, field, cap)
        for i in range(-1, lk.dim):
            if b[i]:
                return False
    return True


def a_invariant(delta, field, cap=FACE_CAP):
    """The a-invariant: the top degree j with total(d, j) nonzero.

    Equals -min{ |sigma| : H~^{d - |sigma| - 1}(lk sigma; k) != 0 } and
    is never positive; it is 0 exactly when the complex itself has
    nonzero top reduced homology.
    """
    table = local_cohomology_table(delta, field, cap)
    sizes = [len(s) for i, s, _ in table.entries() if i == table.d]
    # A maximal-dimension facet always contributes H~^{-1} of an empty
    # link at i = d, so the top module is never zero.
    return -min(sizes)


def is_buchsbaum(delta, field, cap=FACE_CAP):
    """Buchsbaum test: links of nonempty faces have no low homology.

    Returns (flag, witness) where witness is a violating (sigma, i)
    pair or None.  The empty face is exempt, which is what separates
    Buchsbaum from Cohen-Macaulay here.
    """
    if delta.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    memo = {}
    for sigma in delta.faces(cap):
        if not sigma:
            continue
        lk = link(delta, sigma)
        b = memo.get(lk.facets)
        if b is None:
            b = reduced_betti(lk, field, cap)
            memo[lk.facets] = b
        for i in range(-1, lk.dim):
            if b[i]:
                return False, (sigma, i)
    return True, None


def serre_condition(delta, field, ell, cap=FACE_CAP):
    """The link-vanishing form of Serre's condition (S_ell).

    True iff H~_i(lk sigma; k) = 0 for every face sigma (the empty face
    included) and every i < min(ell - 1, dim lk sigma).  For ell = 2
    this coincides with normality of the complex (all low links
    connected); larger ell is an extension of that criterion, and
    (S_1) is vacuously true.
    """
    if ell < 1:
        raise ValueError(f"ell must be at least 1, got {ell}")
    if delta.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    memo = {}
    for sigma in delta.faces(cap):
        lk = link(delta, sigma)
        b = memo.get(lk.facets)
        if b is None:
            b = reduced_betti(lk, field, cap)
            memo[lk.facets] = b
        for i in range(-1, min(ell - 1, lk.dim)):
            if b[i]:
                return False
    return True
