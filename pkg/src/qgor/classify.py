"""Classification predicates with machine-checkable witnesses.

The chain of notions, strongest to weakest, for a complex Delta of
dimension d over a field k:

    homology sphere  =>  Gorenstein
    homology manifold with H~_d != 0  =>  quasi-Gorenstein (if Buchsbaum)
    quasi-Gorenstein  =  normal pseudomanifold with H~_d(Delta; k) != 0
    normal pseudomanifold  =  pure + connected low links + every ridge
                              in exactly two facets

Orientability is rational: for a pseudomanifold, H~_d(Delta; Q) != 0
certifies an integral orientation because top homology of a
pseudomanifold is torsion-free.  Every predicate returns its first
witness in canonical face order, so failures are reproducible.
"""

from .errors import NotAPseudomanifold, NotPure
from .homology import FieldSpec, reduced_betti
from .hochster import depth_report, is_buchsbaum
from .simplicial_core import FACE_CAP, core, face_key, link


class NormalPseudomanifoldReport:
    """Sub-flags of the normal pseudomanifold test plus witnesses."""

    __slots__ = ("ok", "pure", "normal", "ridge_condition", "witnesses")

    def __init__(self, ok, pure, normal, ridge_condition, witnesses):
        self.ok = ok
        self.pure = pure
        self.normal = normal
        self.ridge_condition = ridge_condition
        self.witnesses = witnesses

    def __repr__(self):
        return (
            f"NormalPseudomanifoldReport(ok={self.ok}, pure={self.pure}, "
            f"normal={self.normal}, ridge_condition={self.ridge_condition})"
        )


def _is_connected(delta):
    """Graph connectivity of a complex: nonempty and one vertex component."""
    verts = delta.vertices()
    if not verts:
        return False
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in delta.faces_of_dim(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    roots = {find(v) for v in verts}
    return len(roots) == 1


def normal_pseudomanifold_report(delta, cap=FACE_CAP):
    """Purity, normality and the ridge condition, with first witnesses.

    Normality asks that lk(sigma) be connected for every face sigma of
    dimension at most dim(Delta) - 2, the empty face included.  The
    ridge condition asks that every (dim Delta - 1)-face lie in exactly
    two facets; in dimension 0 the relevant ridge is the empty face, so
    a 0-sphere passes and three points fail.
    """
    if delta.is_void or delta.is_empty:
        raise ValueError("classification needs a complex with at least one vertex")
    d = delta.dim
    witnesses = {}

    pure = delta.is_pure()
    if not pure:
        witnesses["pure"] = min((f for f in delta.facets if len(f) - 1 < d), key=face_key)

    normal = True
    for sigma in delta.faces(cap):
        if len(sigma) - 1 > d - 2:
            continue
        if not _is_connected(link(delta, sigma)):
            normal = False
            witnesses["normal"] = sigma
            break

    ridge_condition = True
    for ridge in delta.faces_of_dim(d - 1, cap):
        rs = set(ridge)
        count = sum(1 for f in delta.facets if rs.issubset(f))
        if count != 2:
            ridge_condition = False
            witnesses["ridge_condition"] = (ridge, count)
            break

    ok = pure and normal and ridge_condition
    return NormalPseudomanifoldReport(ok, pure, normal, ridge_condition, witnesses)


def _facet_ridge_edges(delta):
    """Edges of the facet adjacency graph: facets sharing a ridge."""
    d = delta.dim
    facets = delta.facets
    edges = []
    for i in range(len(facets)):
        si = set(facets[i])
        for j in range(i + 1, len(facets)):
            if len(si & set(facets[j])) == d:
                edges.append((i, j))
    return edges


def is_strongly_connected(delta):
    """True when any two facets are joined by a walk across ridges."""
    if not delta.is_pure():
        raise NotPure("strong connectivity is defined for pure complexes")
    m = len(delta.facets)
    if m <= 1:
        return True
    parent = list(range(m))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in _facet_ridge_edges(delta):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return len({find(i) for i in range(m)}) == 1


def is_pseudomanifold(delta, cap=FACE_CAP):
    """Pure + strongly connected + every ridge in exactly two facets."""
    if delta.is_void or delta.is_empty or not delta.is_pure():
        return False
    report = normal_pseudomanifold_report(delta, cap)
    return report.ridge_condition and is_strongly_connected(delta)


def is_orientable(delta, cap=FACE_CAP):
    """Orientability of a pseudomanifold via rational top homology.

    Raises NotAPseudomanifold when the input is not a pseudomanifold
    (the notion presumes one).
    """
    if not is_pseudomanifold(delta, cap):
        raise NotAPseudomanifold("orientability is defined for pseudomanifolds")
    return reduced_betti(delta, FieldSpec.rationals(), cap)[delta.dim] != 0


def _sphere_betti(betti, dim):
    """Does a Betti vector equal that of a sphere of the given dimension?"""
    want = {dim: 1} if dim >= -1 else {}
    return betti.nonzero() == want


def is_homology_manifold(delta, field, cap=FACE_CAP):
    """(manifold_flag, sphere_flag) over the given field.

    manifold: every nonempty face has a link with the reduced homology
    of a sphere of the link's dimension (the empty complex counts as
    the (-1)-sphere, so facet links pass).  sphere: additionally the
    complex itself has sphere homology.
    """
    if delta.is_void or delta.is_empty:
        raise ValueError("classification needs a complex with at least one vertex")
    if not delta.is_pure():
        raise NotPure("homology manifolds are pure")
    memo = {}
    manifold = True
    for sigma in delta.faces(cap):
        if not sigma:
            continue
        lk = link(delta, sigma)
        b = memo.get(lk.facets)
        if b is None:
            b = reduced_betti(lk, field, cap)
            memo[lk.facets] = b
        if not _sphere_betti(b, lk.dim):
            manifold = False
            break
    sphere = manifold and _sphere_betti(reduced_betti(delta, field, cap), delta.dim)
    return manifold, sphere


def is_quasi_gorenstein(delta, field, cap=FACE_CAP):
    """Normal pseudomanifold with nonvanishing top homology over the field."""
    if delta.is_void or delta.is_empty:
        raise ValueError("classification needs a complex with at least one vertex")
    if not normal_pseudomanifold_report(delta, cap).ok:
        return False
    return reduced_betti(delta, field, cap)[delta.dim] != 0


def is_gorenstein(delta, field, cap=FACE_CAP):
    """Gorenstein = the core is quasi-Gorenstein and Cohen-Macaulay.

    Cone points are free ring variables, so they are stripped first;
    an empty core (the complex was a full simplex) is Gorenstein.
    """
    if delta.is_void or delta.is_empty:
        raise ValueError("classification needs a complex with at least one vertex")
    cored = core(delta)
    if cored.is_empty:
        return True
    return (
        is_quasi_gorenstein(cored, field, cap)
        and depth_report(cored, field, cap).is_cohen_macaulay
    )


class ClassificationReport:
    """Flat bundle of every predicate for one complex and field."""

    __slots__ = (
        "field", "n_vertices", "dim", "pure", "strongly_connected", "normal",
        "pseudomanifold_ridge_condition", "normal_pseudomanifold", "orientable",
        "buchsbaum", "homology_manifold", "homology_sphere", "cohen_macaulay",
        "quasi_gorenstein", "gorenstein", "witnesses",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def to_json(self):
        out = {
            "field": self.field.spec_string(),
            "n_vertices": self.n_vertices,
            "dim": self.dim,
        }
        for name in (
            "pure", "strongly_connected", "normal",
            "pseudomanifold_ridge_condition", "normal_pseudomanifold",
            "orientable", "buchsbaum", "homology_manifold", "homology_sphere",
            "cohen_macaulay", "quasi_gorenstein", "gorenstein",
        ):
            out[name] = getattr(self, name)
        out["witnesses"] = {k: _witness_json(v) for k, v in self.witnesses.items()}
        return out

    def __repr__(self):
        flags = ", ".join(
            f"{n}={getattr(self, n)}"
            for n in ("normal_pseudomanifold", "quasi_gorenstein", "gorenstein")
        )
        return f"ClassificationReport({self.field}, {flags})"


def _witness_json(w):
    if isinstance(w, tuple) and len(w) == 2 and isinstance(w[1], int) and isinstance(w[0], tuple):
        return {"face": list(w[0]), "count": w[1]}
    if isinstance(w, tuple) and all(isinstance(v, int) for v in w):
        return list(w)
    return str(w)


def classification_report(delta, field, cap=FACE_CAP):
    """Run every predicate once and bundle the outcome.

    Predicates whose preconditions fail are reported false rather than
    raising: a non-pseudomanifold is not orientable, a non-pure complex
    is not a homology manifold.
    """
    np_report = normal_pseudomanifold_report(delta, cap)
    witnesses = dict(np_report.witnesses)

    strongly_connected = np_report.pure and is_strongly_connected(delta)
    pseudo = np_report.pure and np_report.ridge_condition and strongly_connected

    betti = reduced_betti(delta, field, cap)
    orientable = False
    if pseudo:
        orientable = reduced_betti(delta, FieldSpec.rationals(), cap)[delta.dim] != 0

    buchsbaum, bb_witness = is_buchsbaum(delta, field, cap)
    if bb_witness is not None:
        witnesses["buchsbaum"] = bb_witness[0]

    if np_report.pure:
        manifold, sphere = is_homology_manifold(delta, field, cap)
    else:
        manifold, sphere = False, False

    depth = depth_report(delta, field, cap)
    if depth.witness is not None:
        witnesses["cohen_macaulay"] = depth.witness[1]

    qg = np_report.ok and betti[delta.dim] != 0
    return ClassificationReport(
        field=field,
        n_vertices=delta.n_vertices,
        dim=delta.dim,
        pure=np_report.pure,
        strongly_connected=strongly_connected,
        normal=np_report.normal,
        pseudomanifold_ridge_condition=np_report.ridge_condition,
        normal_pseudomanifold=np_report.ok,
        orientable=orientable,
        buchsbaum=buchsbaum,
        homology_manifold=manifold,
        homology_sphere=sphere,
        cohen_macaulay=depth.is_cohen_macaulay,
        quasi_gorenstein=qg,
        gorenstein=is_gorenstein(delta, field, cap),
        witnesses=witnesses,
    )
