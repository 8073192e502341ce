"""Facet graphs Gamma_t and connectivity experiments.

For a pure complex of dimension dimDelta the graph Gamma_t has the
facets as vertices, with an edge between two facets sigma, tau exactly
when |sigma cap tau| >= dimDelta + 1 - t.  Thus Gamma_0 is edgeless,
Gamma_1 is the dual graph (adjacency across ridges), and
Gamma_{dimDelta+1} is complete.  removal_experiment checks the
connectedness statement: deleting a set of facets that is edgeless in
Gamma_2 never disconnects Gamma_1.
"""

from .errors import GammaTwoNotIsolated, IndexOutOfRange, NotPure, TOutOfRange
from .simplicial_core import FACE_CAP


class GammaGraph:
    """The graph Gamma_t on the facets of a pure complex.

    Vertices are 0-based facet indices into the canonical facet order;
    serialized forms use 1-based indices to match the CLI convention.
    """

    __slots__ = ("t", "facets", "edges")

    def __init__(self, t, facets, edges):
        self.t = t
        self.facets = facets
        self.edges = frozenset(edges)

    @property
    def n_vertices(self):
        return len(self.facets)

    def has_edge(self, i, j):
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i):
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def adjacency(self):
        adj = {i: set() for i in range(len(self.facets))}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def to_json(self):
        adj = self.adjacency()
        return {
            "t": self.t,
            "n_facets": len(self.facets),
            "facets": {str(i + 1): list(f) for i, f in enumerate(self.facets)},
            "adjacency": {str(i + 1): sorted(j + 1 for j in adj[i]) for i in adj},
        }

    def to_dot(self):
        """Plain DOT text, one node per facet, no layout hints."""
        lines = [f"graph gamma_{self.t} {{"]
        for i, f in enumerate(self.facets):
            label = "{" + ",".join(str(v) for v in f) + "}"
            lines.append(f'  f{i + 1} [label="{label}"];')
        for a, b in sorted(self.edges):
            lines.append(f"  f{a + 1} -- f{b + 1};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, GammaGraph):
            return NotImplemented
        return (self.t, self.facets, self.edges) == (other.t, other.facets, other.edges)

    def __repr__(self):
        return (
            f"GammaGraph(t={self.t}, facets={len(self.facets)}, "
            f"edges={len(self.edges)})"
        )


def gamma_graph(delta, t):
    """Build Gamma_t: facets adjacent iff |sigma cap tau| >= dimDelta+1-t."""
    if delta.is_void or delta.is_empty:
        raise ValueError("Gamma_t needs a complex with at least one facet vertex")
    if not delta.is_pure():
        raise NotPure("Gamma_t is defined for pure complexes")
    d = delta.dim
    if not 0 <= t <= d + 1:
        raise TOutOfRange(f"t must lie in 0..{d + 1}, got {t}")
    facets = delta.facets
    threshold = d + 1 - t
    edges = []
    sets = [set(f) for f in facets]
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if len(sets[i] & sets[j]) >= threshold:
                edges.append((i, j))
    return GammaGraph(t, facets, edges)


class ConnectivityReport:
    """Components, articulation points and the 2-connectivity verdict.

    Graphs on at most two vertices have no meaningful 2-connectivity
    notion; they are reported as two_connected when connected, with
    trivial set so callers can tell the degenerate case apart.
    """

    __slots__ = ("components", "two_connected", "articulation_points", "trivial")

    def __init__(self, components, two_connected, articulation_points, trivial):
        self.components = components
        self.two_connected = two_connected
        self.articulation_points = articulation_points
        self.trivial = trivial

    def __iter__(self):
        return iter((self.components, self.two_connected, self.articulation_points))

    def to_json(self):
        return {
            "components": self.components,
            "two_connected": self.two_connected,
            "articulation_points": [i + 1 for i in self.articulation_points],
            "trivial": self.trivial,
        }

    def __repr__(self):
        return (
            f"ConnectivityReport(components={self.components}, "
            f"two_connected={self.two_connected}, "
            f"articulation_points={self.articulation_points})"
        )


def _components(adj, skip=frozenset()):
    """Connected-component count of the graph minus a vertex set."""
    alive = [v for v in adj if v not in skip]
    seen = set()
    count = 0
    for start in alive:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in skip and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def _articulation_points(adj):
    """Articulation points by iterative depth-first search.

    Standard low-link computation; the root of each DFS tree is an
    articulation point iff it has at least two tree children.
    """
    disc = {}
    low = {}
    points = set()
    timer = 0
    for root in adj:
        if root in disc:
            continue
        root_children = 0
        disc[root] = low[root] = timer
        timer += 1
        # stack entries: (vertex, parent, iterator over neighbors)
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    points.add(parent)
        if root_children >= 2:
            points.add(root)
    return sorted(points)


def connectivity_report(graph):
    adj = graph.adjacency()
    components = _components(adj)
    points = _articulation_points(adj)
    n = graph.n_vertices
    trivial = n <= 2
    if trivial:
        two_connected = components == 1
    else:
        two_connected = components == 1 and not points
    return ConnectivityReport(components, two_connected, points, trivial)


def removal_experiment(delta, b_indices, cap=FACE_CAP):
    """Does deleting the facet set B (edgeless in Gamma_2) disconnect Gamma_1?

    Returns True when Gamma_1 minus B is connected.  B must induce no
    edge of Gamma_2, otherwise GammaTwoNotIsolated reports the first
    offending pair; a graph on zero or one remaining vertices counts
    as connected.
    """
    b = sorted(set(b_indices))
    m = len(delta.facets)
    for i in b:
        if not 0 <= i < m:
            raise IndexOutOfRange(f"facet index {i} out of range 0..{m - 1}")
    # For dimDelta = 0 the threshold |sigma cap tau| >= dim+1-t is already
    # nonpositive at t = dim+1, so clamping t reproduces the same graph the
    # defining inequality would give at t = 2.
    gamma2 = gamma_graph(delta, min(2, delta.dim + 1))
    for x in range(len(b)):
        for y in range(x + 1, len(b)):
            if gamma2.has_edge(b[x], b[y]):
                raise GammaTwoNotIsolated((b[x], b[y]))
    gamma1 = gamma_graph(delta, 1)
    return _components(gamma1.adjacency(), skip=frozenset(b)) <= 1
