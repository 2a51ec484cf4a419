"""Bigraphs, trigraphs and n-graphs, plain and neutrosophic.

An n-graph is an ordered union ``G_1 ∪ ... ∪ G_k`` of graphs over one shared
namespace of vertex labels: two components glued at a vertex simply both
contain that label. Edges are determinate or indeterminate (the dotted edges
of a neutrosophic graph), may carry a weight, and a component is either
directed or undirected as a whole.
"""
from __future__ import division, print_function, absolute_import
from collections import namedtuple
import enum
from itertools import combinations

import networkx as nx

from nmaps.errors import DomainError, ValidationError
from nmaps.neutro import INDET, ONE, ZERO, as_value, format_value
from nmaps.nmatrix import NMatrix
from nmaps.utils import ABSENT_SYMBOL, logger


class EdgeKind(enum.Enum):
    DETERMINATE = 'determinate'
    INDETERMINATE = 'indeterminate'


class Edge(namedtuple('Edge', ['u', 'v', 'kind', 'weight', 'directed',
                               'label'])):
    """An edge of one component.

    ``label`` is the edge's identifier (``e1``, ``e2``, ... in declaration
    order unless given) and names incidence-matrix columns.
    """
    __slots__ = ()

    @property
    def key(self):
        if self.directed:
            return (self.u, self.v)
        return tuple(sorted((self.u, self.v)))

    @property
    def signature(self):
        """Identity used when comparing edges of different graphs."""
        return (self.key, self.kind, self.directed)

    @property
    def is_indeterminate(self):
        return self.kind is EdgeKind.INDETERMINATE


def _as_kind(kind):
    if isinstance(kind, EdgeKind):
        return kind
    try:
        return EdgeKind(kind)
    except ValueError:
        raise ValidationError("Unknown edge kind {!r}.".format(kind))


class Graph(object):
    """One component of an n-graph.

    Parameters
    ----------
    vertices : iterable of str
        Vertex labels, kept in the given order.
    edges : iterable of Edge or tuple
        Tuples are passed to :meth:`add_edge` as ``(u, v[, kind[, weight]])``.
    directed : bool (defaults to False)
        Whether every edge of this graph is directed.
    """
    def __init__(self, vertices=(), edges=(), directed=False):
        self.directed = bool(directed)
        self._vertices = []
        self._vertex_set = set()
        self._edges = []
        self._by_key = {}
        for v in vertices:
            self.add_vertex(v)
        for e in edges:
            if isinstance(e, Edge):
                self.add_edge(e.u, e.v, kind=e.kind, weight=e.weight,
                              label=e.label)
            else:
                self.add_edge(*e)

    def add_vertex(self, v):
        v = str(v)
        if v in self._vertex_set:
            msg = "Duplicate vertex {!r}.".format(v)
            logger.error(msg)
            raise ValidationError(msg)
        self._vertices.append(v)
        self._vertex_set.add(v)

    def add_edge(self, u, v, kind=EdgeKind.DETERMINATE, weight=None,
                 label=None):
        """Add the edge ``u -> v`` (or ``u -- v`` when undirected).

        Raises
        ------
        ValidationError on self-loops, unknown endpoints and repeated edges.
        """
        u, v = str(u), str(v)
        for x in (u, v):
            if x not in self._vertex_set:
                msg = "Edge endpoint {!r} is not a vertex.".format(x)
                logger.error(msg)
                raise ValidationError(msg)
        if u == v:
            msg = "Self-loop at {!r}.".format(u)
            logger.error(msg)
            raise ValidationError(msg)
        if weight is not None:
            weight = as_value(weight)
        if label is None:
            label = 'e{}'.format(len(self._edges) + 1)
        edge = Edge(u, v, _as_kind(kind), weight, self.directed, str(label))
        if edge.key in self._by_key:
            msg = "Repeated edge {} {} {}.".format(
                u, '->' if self.directed else '--', v)
            logger.error(msg)
            raise ValidationError(msg)
        self._edges.append(edge)
        self._by_key[edge.key] = edge
        return edge

    @property
    def vertices(self):
        return tuple(self._vertices)

    @property
    def vertex_set(self):
        return frozenset(self._vertex_set)

    @property
    def edges(self):
        return tuple(self._edges)

    @property
    def order(self):
        return len(self._vertices)

    @property
    def is_neutrosophic(self):
        """True if at least one edge is indeterminate."""
        return any(e.is_indeterminate for e in self._edges)

    def has_vertex(self, v):
        return v in self._vertex_set

    def edge(self, u, v):
        """The edge joining `u` to `v`, or None."""
        key = (u, v) if self.directed else tuple(sorted((u, v)))
        return self._by_key.get(key)

    def has_edge(self, u, v):
        return self.edge(u, v) is not None

    def in_degree(self, v):
        return sum(1 for e in self._edges if e.v == v)

    def out_degree(self, v):
        return sum(1 for e in self._edges if e.u == v)

    def degree(self, v):
        """Number of edges incident with `v`."""
        return sum(1 for e in self._edges if v in (e.u, e.v))

    def signatures(self):
        return frozenset(e.signature for e in self._edges)

    def to_networkx(self):
        """Copy into a networkx graph; edge data carries kind and weight."""
        nxg = nx.DiGraph() if self.directed else nx.Graph()
        nxg.add_nodes_from(self._vertices)
        for e in self._edges:
            nxg.add_edge(e.u, e.v, kind=e.kind, weight=e.weight,
                         label=e.label)
        return nxg

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.directed == other.directed
                and self._vertex_set == other._vertex_set
                and (frozenset((e.signature, e.weight) for e in self._edges)
                     == frozenset((e.signature, e.weight)
                                  for e in other._edges)))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "Graph(order={}, size={}, directed={})".format(
            self.order, len(self._edges), self.directed)


class NGraph(object):
    """An ordered union of k graphs sharing one label namespace.

    Parameters
    ----------
    components : sequence of Graph
    names : sequence of str, optional
        Component names; defaults to ``G1``, ``G2``, ...
    """
    def __init__(self, components, names=None):
        components = tuple(components)
        if not components:
            msg = "An n-graph needs at least one component."
            logger.error(msg)
            raise ValidationError(msg)
        for c in components:
            if not isinstance(c, Graph):
                raise TypeError("Components must be nmaps.ngraph.Graph. {} "
                                "was passed.".format(type(c)))
        if names is None:
            names = ['G{}'.format(i + 1) for i in range(len(components))]
        if len(names) != len(components):
            raise ValidationError("Expected {} component names, got {}."
                                  "".format(len(components), len(names)))
        self.components = components
        self.names = tuple(str(n) for n in names)
        self._warn_if_not_ngraph()

    def _warn_if_not_ngraph(self):
        for i, j in combinations(range(self.k), 2):
            a, b = self.components[i], self.components[j]
            nested = (a.vertex_set <= b.vertex_set
                      or b.vertex_set <= a.vertex_set)
            if nested and a.signatures() == b.signatures():
                logger.warning("Components {} and {} do not differ in any "
                               "vertex or edge; this is not an n-graph in "
                               "the strict sense.".format(i + 1, j + 1))

    @property
    def k(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        if not isinstance(other, NGraph):
            return NotImplemented
        return self.components == other.components

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "NGraph(k={}, orders={})".format(
            self.k, [c.order for c in self.components])


def _require_k(g, k, op):
    if g.k != k:
        msg = "{} needs an n-graph with k = {}; got k = {}.".format(op, k, g.k)
        logger.error(msg)
        raise DomainError(msg)


# Vertex orderings ------------------------------------------------------------

def vertex_ordering(c, ordering=None):
    """Order of the rows of `c`'s matrices: `ordering` or sorted labels.

    Raises
    ------
    ValidationError if `ordering` is not a permutation of the vertices.
    """
    if ordering is None:
        return tuple(sorted(c.vertices))
    ordering = tuple(str(v) for v in ordering)
    if len(ordering) != c.order or set(ordering) != c.vertex_set:
        msg = ("Ordering {} is not a permutation of the vertices {}."
               "".format(list(ordering), sorted(c.vertices)))
        logger.error(msg)
        raise ValidationError(msg)
    return ordering


def _orderings(g, orderings):
    if orderings is None:
        orderings = [None] * g.k
    if len(orderings) != g.k:
        raise ValidationError("Expected {} orderings, got {}."
                              "".format(g.k, len(orderings)))
    return [vertex_ordering(c, o) for c, o in zip(g.components, orderings)]


# Gluing ----------------------------------------------------------------------

class GluingVerdict(enum.Enum):
    DISJOINT = 'Disjoint'
    VERTEX_GLUED = 'VertexGlued'
    EDGE_GLUED = 'EdgeGlued'
    STRONG_SUBGRAPH_GLUED = 'StrongSubgraphGlued'


class GluingClass(namedtuple('GluingClass', ['verdict', 'shared_vertices',
                                             'shared', 'neutrosophic'])):
    """How the two components of a bigraph are glued.

    ``shared_vertices`` counts the vertices in common (the ``n`` of
    ``VertexGlued(n)``); ``neutrosophic`` is True when some shared edge is
    indeterminate.
    """
    __slots__ = ()

    def __str__(self):
        if self.verdict is GluingVerdict.VERTEX_GLUED:
            return 'VertexGlued({})'.format(self.shared_vertices)
        return self.verdict.value


def common_subgraph(a, b):
    """Vertices of both graphs and the edges present in both.

    Edges match when they join the same endpoints with the same kind and
    direction. Weights are taken from `a`.
    """
    shared = [v for v in a.vertices if b.has_vertex(v)]
    common = Graph(shared, directed=a.directed and b.directed)
    if a.directed != b.directed:
        return common
    b_signatures = b.signatures()
    for e in a.edges:
        if e.signature in b_signatures:
            common.add_edge(e.u, e.v, kind=e.kind, weight=e.weight,
                            label=e.label)
    return common


def gluing_classify(g):
    """Classify a bigraph as disjoint, vertex, edge or strong-subgraph glued.

    A single shared edge is edge glued; at least two shared vertices and two
    shared edges make a strong subgraph.

    Returns
    -------
    gluing : GluingClass
    """
    _require_k(g, 2, 'Gluing classification')
    shared = common_subgraph(g[0], g[1])
    n_vertices, n_edges = shared.order, len(shared.edges)
    if n_vertices == 0:
        verdict = GluingVerdict.DISJOINT
    elif n_edges == 0:
        verdict = GluingVerdict.VERTEX_GLUED
    elif n_edges == 1:
        verdict = GluingVerdict.EDGE_GLUED
    else:
        verdict = GluingVerdict.STRONG_SUBGRAPH_GLUED
    return GluingClass(verdict, n_vertices, shared, shared.is_neutrosophic)


# Matrices --------------------------------------------------------------------

def adjacency_nmatrix(g, orderings=None):
    """Adjacency n-matrix; ``I`` where the edge is indeterminate.

    Undirected components give symmetric matrices; a directed edge
    ``u -> v`` sets only entry ``(u, v)``. Weights are ignored.
    """
    orders = _orderings(g, orderings)
    comps = []
    for c, order in zip(g.components, orders):
        index = {v: i for i, v in enumerate(order)}
        rows = [[ZERO] * len(order) for _ in order]
        for e in c.edges:
            value = INDET if e.is_indeterminate else ONE
            rows[index[e.u]][index[e.v]] = value
            if not c.directed:
                rows[index[e.v]][index[e.u]] = value
        comps.append(rows)
    return NMatrix(comps, row_labels=orders, col_labels=orders)


class _Absent(object):
    """Marks non-adjacent pairs of a weighted matrix."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Absent, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'ABSENT'

    def __str__(self):
        return ABSENT_SYMBOL


ABSENT = _Absent()


class WeightedNMatrix(object):
    """Weighted adjacency n-matrix with :data:`ABSENT` for non-adjacency."""
    def __init__(self, components, labels):
        self.components = tuple(tuple(tuple(row) for row in comp)
                                for comp in components)
        self.labels = tuple(tuple(lab) for lab in labels)

    @property
    def k(self):
        return len(self.components)

    def __eq__(self, other):
        if not isinstance(other, WeightedNMatrix):
            return NotImplemented
        return self.components == other.components

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        blocks = []
        for comp in self.components:
            blocks.append('\n'.join(
                ' '.join(str(x) if x is ABSENT else format_value(x)
                         for x in row) for row in comp))
        return '\n---\n'.join(blocks) + '\n'


def weighted_nmatrix(g, orderings=None):
    """Symmetric weight matrices of an undirected weighted n-graph.

    Raises
    ------
    ValidationError if a component is directed or an edge has no weight.
    """
    orders = _orderings(g, orderings)
    comps = []
    for n, (c, order) in enumerate(zip(g.components, orders)):
        if c.directed:
            msg = ("Component {} is directed; weighted matrices need "
                   "undirected components.".format(n + 1))
            logger.error(msg)
            raise ValidationError(msg)
        index = {v: i for i, v in enumerate(order)}
        rows = [[ABSENT] * len(order) for _ in order]
        for e in c.edges:
            if e.weight is None:
                msg = ("Edge {} -- {} of component {} has no weight."
                       "".format(e.u, e.v, n + 1))
                logger.error(msg)
                raise ValidationError(msg)
            rows[index[e.u]][index[e.v]] = e.weight
            rows[index[e.v]][index[e.u]] = e.weight
        comps.append(rows)
    return WeightedNMatrix(comps, orders)


def ngraph_from_weighted(w, names=None):
    """Rebuild the undirected weighted n-graph of a weighted n-matrix.

    Raises
    ------
    ValidationError if a component is not symmetric or has a diagonal weight.
    """
    comps = []
    for n, (rows, labels) in enumerate(zip(w.components, w.labels)):
        c = Graph(labels)
        for i, j in combinations(range(len(labels)), 2):
            if rows[i][j] != rows[j][i]:
                msg = ("Component {} is not symmetric at ({}, {})."
                       "".format(n + 1, labels[i], labels[j]))
                logger.error(msg)
                raise ValidationError(msg)
            if rows[i][j] is not ABSENT:
                kind = (EdgeKind.INDETERMINATE if rows[i][j].indet
                        else EdgeKind.DETERMINATE)
                c.add_edge(labels[i], labels[j], kind=kind,
                           weight=rows[i][j])
        if any(rows[i][i] is not ABSENT for i in range(len(labels))):
            raise ValidationError("Component {} has a weight on its diagonal."
                                  "".format(n + 1))
        comps.append(c)
    return NGraph(comps, names=names)


def incidence_nmatrix(g, orderings=None):
    """Vertex-by-edge 0/1 n-matrix, edges in declaration order.

    Columns are labelled with the edge identifiers.
    """
    orders = _orderings(g, orderings)
    comps, col_labels = [], []
    for c, order in zip(g.components, orders):
        rows = [[ZERO] * len(c.edges) for _ in order]
        index = {v: i for i, v in enumerate(order)}
        for j, e in enumerate(c.edges):
            rows[index[e.u]][j] = ONE
            rows[index[e.v]][j] = ONE
        comps.append(rows)
        col_labels.append([e.label for e in c.edges])
    return NMatrix(comps, row_labels=orders, col_labels=col_labels,
                   allow_empty=True)


def kirchhoff_nmatrix(g, orderings=None):
    """Kirchhoff n-matrix of a directed n-graph.

    The diagonal holds in-degrees and entry ``(i, j)`` is minus the adjacency
    entry. With indeterminate edges the in-degree is the sum of the column's
    adjacency entries (``1 + I`` for one determinate and one indeterminate
    incoming edge), so every column sums to zero.

    Raises
    ------
    ValidationError if a component is undirected.
    """
    for n, c in enumerate(g.components):
        if not c.directed:
            msg = ("Component {} is undirected; the Kirchhoff matrix is "
                   "defined for directed graphs.".format(n + 1))
            logger.error(msg)
            raise ValidationError(msg)
    adj = adjacency_nmatrix(g, orderings)
    comps = []
    for i in range(adj.k):
        rows = adj.component(i)
        size = len(rows)
        out = []
        for r in range(size):
            row = []
            for col in range(size):
                if r == col:
                    row.append(sum((rows[x][col] for x in range(size)), ZERO))
                else:
                    row.append(-rows[r][col])
            out.append(row)
        comps.append(out)
    return NMatrix(comps, row_labels=adj.row_labels,
                   col_labels=adj.col_labels)


# Derived graphs --------------------------------------------------------------

def complement(g):
    """Complement every component over its own vertex set.

    Raises
    ------
    ValidationError if a component is directed or has indeterminate edges.
    """
    comps = []
    for n, c in enumerate(g.components):
        if c.directed or c.is_neutrosophic:
            msg = ("Component {} must be undirected and determinate to be "
                   "complemented.".format(n + 1))
            logger.error(msg)
            raise ValidationError(msg)
        nxc = nx.complement(c.to_networkx())
        edges = sorted(tuple(sorted(e)) for e in nxc.edges())
        comps.append(Graph(c.vertices, edges))
    return NGraph(comps, names=g.names)


def union_graph(g):
    """All labels and edges of `g` as one undirected networkx graph."""
    union = nx.Graph()
    for c in g.components:
        union.add_nodes_from(c.vertices)
        union.add_edges_from((e.u, e.v) for e in c.edges)
    return union


def is_separable_at(g, v):
    """True if removing `v` disconnects the union of the components further.

    Raises
    ------
    DomainError if `v` is not a vertex of `g`.
    """
    union = union_graph(g)
    if v not in union:
        msg = "{!r} is not a vertex of the n-graph.".format(v)
        logger.error(msg)
        raise DomainError(msg)
    before = nx.number_connected_components(union)
    union.remove_node(v)
    return nx.number_connected_components(union) > before


# Degrees ---------------------------------------------------------------------

def bidegree(g, v):
    """Degree of the shared vertex `v` in G_1 plus its degree in G_2.

    Raises
    ------
    DomainError if `v` is not a vertex of both components.
    """
    _require_k(g, 2, 'Bidegree')
    if not (g[0].has_vertex(v) and g[1].has_vertex(v)):
        msg = "{!r} is not shared by both components.".format(v)
        logger.error(msg)
        raise DomainError(msg)
    return g[0].degree(v) + g[1].degree(v)


def _regular_degree(c):
    degrees = set(c.degree(v) for v in c.vertices)
    if len(degrees) == 1:
        return degrees.pop()
    return None


def is_biregular(g):
    """Return ``(K1, K2)`` if the bigraph is ``K1 + K2`` biregular, else None.

    Raises
    ------
    DomainError if the components share no vertex (no bidegree exists).
    """
    _require_k(g, 2, 'Biregularity')
    shared = g[0].vertex_set & g[1].vertex_set
    if not shared:
        msg = "The components share no vertex, so no bidegree exists."
        logger.error(msg)
        raise DomainError(msg)
    k1, k2 = _regular_degree(g[0]), _regular_degree(g[1])
    if k1 is None or k2 is None:
        return None
    if any(bidegree(g, v) != k1 + k2 for v in shared):
        return None
    return (k1, k2)


def ngraph_order(g):
    """Number of distinct vertices, ``o(G_1) + o(G_2) - o(G_1 ∩ G_2)``."""
    if g.k == 2:
        return (g[0].order + g[1].order
                - len(g[0].vertex_set & g[1].vertex_set))
    return len(frozenset().union(*(c.vertex_set for c in g.components)))


# Neutrosophic taxonomy -------------------------------------------------------

class NeutroGraphClass(enum.Enum):
    FULLY_NEUTROSOPHIC = 'FullyNeutrosophic'
    WEAK = 'Weak'
    VERY_WEAK = 'VeryWeak'
    NON_NEUTROSOPHIC = 'NonNeutrosophic'


def neutrosophic_classify(g):
    """Count the components with an indeterminate edge.

    All of them: fully neutrosophic. None: not neutrosophic. Exactly one out
    of three or more: very weak. Anything in between: weak.
    """
    count = sum(1 for c in g.components if c.is_neutrosophic)
    if count == 0:
        return NeutroGraphClass.NON_NEUTROSOPHIC
    if count == g.k:
        return NeutroGraphClass.FULLY_NEUTROSOPHIC
    if count == 1 and g.k >= 3:
        return NeutroGraphClass.VERY_WEAK
    return NeutroGraphClass.WEAK


def is_neutrosophic_oriented(c):
    """Directed, neutrosophic, and no indeterminate edge has its reverse
    also indeterminate."""
    if not c.directed or not c.is_neutrosophic:
        return False
    for e in c.edges:
        if e.is_indeterminate:
            back = c.edge(e.v, e.u)
            if back is not None and back.is_indeterminate:
                return False
    return True


def is_neutrosophic_subgraph(h, c):
    """True if `h` is a subgraph of `c` and is itself neutrosophic."""
    if not h.vertex_set <= c.vertex_set or h.directed != c.directed:
        return False
    if not h.signatures() <= c.signatures():
        return False
    return h.is_neutrosophic


class Connectivity(enum.Enum):
    DISCONNECTED = 'Disconnected'
    WEAKLY_CONNECTED = 'WeaklyConnected'
    CONNECTED = 'Connected'


def connectivity_classify(g):
    """How the components of `g` are linked through shared vertices.

    Components are joined when their vertex sets meet. No joins at all is
    disconnected; if the joins link every component it is connected;
    otherwise weakly connected.
    """
    overlap = nx.Graph()
    overlap.add_nodes_from(range(g.k))
    for i, j in combinations(range(g.k), 2):
        if g[i].vertex_set & g[j].vertex_set:
            overlap.add_edge(i, j)
    if overlap.number_of_edges() == 0:
        return Connectivity.DISCONNECTED
    if nx.is_connected(overlap):
        return Connectivity.CONNECTED
    return Connectivity.WEAKLY_CONNECTED


# Partitions ------------------------------------------------------------------

PartitionReport = namedtuple('PartitionReport', ['valid',
                                                 'cross_indeterminate'])


def partition_check(c, parts):
    """Check that `parts` is a p-partition of the graph `c`.

    Parameters
    ----------
    c : Graph
    parts : sequence of iterables of str
        Must cover the vertex set of `c` and nothing else.

    Returns
    -------
    report : PartitionReport
        ``valid`` if the parts are pairwise disjoint and no edge joins two
        vertices of one part; ``cross_indeterminate`` counts indeterminate
        edges between distinct parts.

    Raises
    ------
    DomainError if the parts do not cover exactly the vertex set.
    """
    parts = [frozenset(str(v) for v in p) for p in parts]
    covered = frozenset().union(*parts) if parts else frozenset()
    if covered != c.vertex_set:
        msg = ("Parts cover {} but the vertex set is {}."
               "".format(sorted(covered), sorted(c.vertex_set)))
        logger.error(msg)
        raise DomainError(msg)
    disjoint = sum(len(p) for p in parts) == len(covered)
    part_of = {}
    for n, p in enumerate(parts):
        for v in p:
            part_of.setdefault(v, n)
    valid = disjoint
    cross = 0
    for e in c.edges:
        if part_of[e.u] == part_of[e.v]:
            valid = False
        elif e.is_indeterminate:
            cross += 1
    return PartitionReport(valid, cross)


BipartiteReport = namedtuple('BipartiteReport', [
    'bipartitions', 'is_bipartite_ngraph', 'is_strongly_biconnected'])


def _canonical_bipartition(c):
    nxg = c.to_networkx()
    if c.directed:
        nxg = nxg.to_undirected()
    if not nx.is_bipartite(nxg):
        return None
    left, right = set(), set()
    for piece in nx.connected_components(nxg):
        sub = nxg.subgraph(piece)
        colors = nx.bipartite.color(sub)
        anchor = min(piece)
        for v, color in colors.items():
            if color == colors[anchor]:
                left.add(v)
            else:
                right.add(v)
    return (frozenset(left), frozenset(right))


def bipartite_structure(g, parts=None):
    """Bipartitions of the components and the bigraph flags.

    Parameters
    ----------
    g : NGraph
    parts : sequence of (pair of iterables or None), optional
        Declared bipartition per component (a relational map's domain and
        range). Without one, each connected piece is 2-coloured with its
        smallest label on the left.

    Returns
    -------
    report : BipartiteReport
        ``bipartitions[i]`` is a pair of frozensets, or None when component
        i is not bipartite (or its declared parts are not a bipartition).
        The strongly-biconnected flag needs k = 2: both components bipartite
        and a non-empty part of G_1 equal to a part of G_2.
    """
    if parts is None:
        parts = [None] * g.k
    bipartitions = []
    for c, declared in zip(g.components, parts):
        if declared is None:
            bipartitions.append(_canonical_bipartition(c))
            continue
        left, right = (frozenset(str(v) for v in p) for p in declared)
        report = partition_check(c, [left, right])
        bipartitions.append((left, right) if report.valid else None)
    is_bipartite = all(b is not None for b in bipartitions)
    strongly = False
    if g.k == 2 and is_bipartite:
        strongly = any(p and p == q for p in bipartitions[0]
                       for q in bipartitions[1])
    return BipartiteReport(tuple(bipartitions), is_bipartite, strongly)


# Export ----------------------------------------------------------------------

def to_dot(c, name='G'):
    """DOT text of one component; indeterminate edges are dashed."""
    keyword = 'digraph' if c.directed else 'graph'
    arrow = '->' if c.directed else '--'
    lines = ['{} "{}" {{'.format(keyword, name)]
    for v in c.vertices:
        lines.append('    "{}";'.format(v))
    for e in c.edges:
        attrs = []
        if e.is_indeterminate:
            attrs.append('style=dashed')
        if e.weight is not None:
            attrs.append('label="{}"'.format(format_value(e.weight)))
        suffix = ' [{}]'.format(', '.join(attrs)) if attrs else ''
        lines.append('    "{}" {} "{}"{};'.format(e.u, arrow, e.v, suffix))
    lines.append('}')
    return '\n'.join(lines) + '\n'
