"""Utilities for test scripts."""
from __future__ import division, print_function, absolute_import
from fractions import Fraction
import os

from hypothesis import strategies as st

from nmaps.cognitive import CognitiveMap
from nmaps.mapfile import (ComponentBlock, DocumentKind, EdgeDecl,
                           MapDocument, MatrixBlock, ScenarioBlock)
from nmaps.neutro import (INDET, MINUS_ONE, ONE, ZERO, NeutroValue,
                          ThresholdMode, ThresholdPolicy)
from nmaps.ngraph import EdgeKind, Graph, NGraph
from nmaps.nmatrix import NMatrix
from nmaps.relational import RelationalMap, RelationalState, Side

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')


def data_path(name):
    """Path of a map file shipped in nmaps/data."""
    return os.path.join(DATA_DIR, name)


def check_equal(list_):
    """Return True if all items of a list are equal."""
    return list_[1:] == list_[:-1]


def labels(prefix, n, suffix=''):
    return ['{}{}{}'.format(prefix, j + 1, suffix) for j in range(n)]


# Child labour as a relational bimap: G (government) -> C (causes) and
# C -> P (public attitudes).
child_labour_g_c = [[1, 0, 0, 0, 0, 1, 0],
                    [-1, 1, 1, 1, 1, 1, 1],
                    [1, -1, -1, -1, 1, -1, -1],
                    [-1, 0, 1, 0, 1, 1, 1]]
child_labour_c_p = [[-1, -1, 1, 0, -1],
                    [-1, 1, 0, -1, 1],
                    [1, 1, 0, -1, 1],
                    [-1, -1, 1, 1, -1],
                    [1, 1, 1, 0, 1],
                    [1, 1, 0, -1, 1],
                    [1, 0, -1, -1, 0]]

# The same concepts as a relational trimap C -> G, G -> P, P -> C.
child_labour_c_g = [[1, -1, 1, -1],
                    [0, 1, -1, 0],
                    [0, 1, -1, 1],
                    [0, 1, -1, 0],
                    [0, 1, 1, 1],
                    [1, 1, -1, 1],
                    [0, 1, -1, 1]]
child_labour_g_p = [[0, 0, 0, 1, 0],
                    [1, 1, -1, -1, 1],
                    [1, -1, 1, 1, 1],
                    [1, 1, -1, 1, 1]]
child_labour_p_c = [[-1, -1, 1, -1, 1, 1, 1],
                    [-1, 1, 1, -1, 0, 1, 0],
                    [1, 0, -1, 1, 1, -1, -1],
                    [0, -1, -1, 1, 0, -1, -1],
                    [-1, 1, 1, -1, 1, 1, 0]]


def child_labour_bimap():
    matrix = NMatrix([child_labour_g_c, child_labour_c_p])
    return RelationalMap(matrix,
                         domain_labels=[labels('G', 4), labels('C', 7)],
                         range_labels=[labels('C', 7), labels('P', 5)])


def child_labour_trimap():
    matrix = NMatrix([child_labour_c_g, child_labour_g_p, child_labour_p_c])
    return RelationalMap(matrix,
                         domain_labels=[labels('C', 7), labels('G', 4),
                                        labels('P', 5)],
                         range_labels=[labels('G', 4), labels('P', 5),
                                       labels('C', 7)])


# Relational matrix of the female infanticide map, as printed by
# `export-matrix`.
infanticide_text = u"""\
I 0 1 0 1
0 0 1 I 1
1 1 1 0 0
0 1 1 0 1
1 1 1 1 1
1 0 1 1 I
0 0 0 I I
"""

# Adjacency matrices of two simple graphs on six and five vertices.
x1 = [[0, 1, 0, 0, 1, 1],
      [1, 0, 0, 1, 1, 0],
      [0, 0, 0, 1, 0, 0],
      [0, 1, 1, 0, 1, 1],
      [1, 1, 0, 1, 0, 1],
      [1, 0, 0, 1, 1, 0]]
x2 = [[0, 1, 0, 0, 1],
      [1, 0, 1, 0, 1],
      [0, 1, 0, 1, 1],
      [0, 0, 1, 0, 0],
      [1, 1, 1, 0, 0]]

# Weighted edges of a graph on v1..v7.
w1_edges = [('v1', 'v2', 6), ('v1', 'v3', 4), ('v1', 'v6', 17),
            ('v1', 'v7', 5), ('v2', 'v3', 10), ('v3', 'v4', 16),
            ('v3', 'v5', 11), ('v3', 'v7', 6), ('v4', 'v5', 21),
            ('v4', 'v7', 12), ('v5', 'v6', 3), ('v5', 'v7', 9),
            ('v6', 'v7', 1)]


def graph_from_adjacency(rows, names, directed=False):
    """Graph whose (determinate) edges are the 1 entries of `rows`."""
    g = Graph(names, directed=directed)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x and (directed or i < j):
                g.add_edge(names[i], names[j])
    return g


# Strategies ------------------------------------------------------------------

_LABELS = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h']
_ENTRIES = [MINUS_ONE, ZERO, ZERO, ONE, INDET]
_DETERMINATE_ENTRIES = [MINUS_ONE, ZERO, ZERO, ONE]
_WEIGHTS = [MINUS_ONE, ONE, INDET, NeutroValue(2, 0), NeutroValue(2, 1),
            NeutroValue(0, -1)]
_MATRIX_VALUES = [ZERO, ONE, MINUS_ONE, INDET, NeutroValue(2, 1),
                  NeutroValue(Fraction(1, 4), 0), NeutroValue(0, Fraction(1, 2))]

policies = st.builds(ThresholdPolicy, st.integers(min_value=1, max_value=3),
                     st.sampled_from(list(ThresholdMode)))


@st.composite
def graphs(draw, pool=_LABELS, directed=False, min_vertices=1):
    """A random graph on up to ``len(pool)`` vertices."""
    vertices = draw(st.lists(st.sampled_from(pool), min_size=min_vertices,
                             max_size=len(pool), unique=True))
    pairs = [(u, v) for u in vertices for v in vertices
             if u != v and (directed or u < v)]
    chosen = []
    if pairs:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True,
                               max_size=len(pairs)))
    edges = [(u, v, draw(st.sampled_from(list(EdgeKind))))
             for u, v in chosen]
    return Graph(vertices, edges, directed=directed)


@st.composite
def ngraphs(draw, min_k=1, max_k=3, directed=False):
    """An n-graph whose components draw labels from one small pool."""
    components = draw(st.lists(graphs(directed=directed), min_size=min_k,
                               max_size=max_k))
    return NGraph(components)


@st.composite
def connected_graphs(draw, pool, shared):
    """A connected undirected graph on `shared` and at least one label of
    `pool`."""
    vertices = [shared] + draw(st.lists(st.sampled_from(pool), min_size=1,
                                        max_size=len(pool), unique=True))
    g = Graph(vertices)
    for i in range(1, len(vertices)):
        parent = draw(st.integers(min_value=0, max_value=i - 1))
        g.add_edge(vertices[parent], vertices[i])
    extra = [(u, v) for n, u in enumerate(vertices)
             for v in vertices[n + 1:] if not g.has_edge(u, v)]
    if extra:
        for u, v in draw(st.lists(st.sampled_from(extra), unique=True,
                                  max_size=len(extra))):
            g.add_edge(u, v)
    return g


@st.composite
def vertex_glued_bigraphs(draw):
    """Two connected graphs sharing exactly the vertex ``x``."""
    g1 = draw(connected_graphs(['a1', 'a2', 'a3', 'a4'], 'x'))
    g2 = draw(connected_graphs(['b1', 'b2', 'b3', 'b4'], 'x'))
    return NGraph([g1, g2])


@st.composite
def square_components(draw, entries, max_order=5):
    n = draw(st.integers(min_value=1, max_value=max_order))
    return [[ZERO if i == j else draw(st.sampled_from(entries))
             for j in range(n)] for i in range(n)]


@st.composite
def binary_states(draw, lengths):
    return [[ONE if draw(st.booleans()) else ZERO for _ in range(n)]
            for n in lengths]


@st.composite
def cognitive_scenarios(draw, indeterminate=True):
    """A random cognitive map with up to two components and a start state."""
    entries = _ENTRIES if indeterminate else _DETERMINATE_ENTRIES
    k = draw(st.integers(min_value=1, max_value=2))
    comps = [draw(square_components(entries)) for _ in range(k)]
    m = CognitiveMap(NMatrix(comps))
    return m, draw(binary_states(m.orders))


@st.composite
def relational_scenarios(draw, indeterminate=True):
    """A random relational map and a start state on either side."""
    entries = _ENTRIES if indeterminate else _DETERMINATE_ENTRIES
    k = draw(st.integers(min_value=1, max_value=2))
    comps = []
    for _ in range(k):
        rows = draw(st.integers(min_value=1, max_value=4))
        cols = draw(st.integers(min_value=1, max_value=4))
        comps.append([[draw(st.sampled_from(entries)) for _ in range(cols)]
                      for _ in range(rows)])
    m = RelationalMap(NMatrix(comps))
    side = draw(st.sampled_from(list(Side)))
    start = RelationalState(side, draw(binary_states(m.sizes(side))))
    return m, start


def _optional_order(draw, members):
    if not draw(st.booleans()):
        return None
    return tuple(draw(st.permutations(sorted(members))))


def _edge_decls(draw, pairs, ops):
    chosen = []
    if pairs:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True,
                               max_size=len(pairs)))
    weights = st.one_of(st.none(), st.sampled_from(_WEIGHTS))
    return tuple(EdgeDecl(u, draw(st.sampled_from(ops)), v, draw(weights))
                 for u, v in chosen)


@st.composite
def _node_component(draw, name, kind):
    nodes = draw(st.lists(st.sampled_from(_LABELS), min_size=1,
                          max_size=5, unique=True))
    if kind is DocumentKind.COGNITIVE or draw(st.booleans()):
        pairs = [(u, v) for u in nodes for v in nodes if u != v]
        ops = ['->']
    else:
        pairs = [(u, v) for u in nodes for v in nodes if u < v]
        ops = ['--', '~~']
    return ComponentBlock(name, frozenset(nodes),
                          _optional_order(draw, nodes), frozenset(),
                          frozenset(), None, None,
                          _edge_decls(draw, pairs, ops))


@st.composite
def _relational_component(draw, name):
    dom = draw(st.lists(st.sampled_from(labels('D', 4)), min_size=1,
                        unique=True))
    ran = draw(st.lists(st.sampled_from(labels('R', 4)), min_size=1,
                        unique=True))
    pairs = [(u, v) for u in dom for v in ran]
    return ComponentBlock(name, frozenset(dom) | frozenset(ran), None,
                          frozenset(dom), frozenset(ran),
                          _optional_order(draw, dom),
                          _optional_order(draw, ran),
                          _edge_decls(draw, pairs, ['->']))


@st.composite
def map_documents(draw):
    """A valid document of any kind, built field by field."""
    kind = draw(st.sampled_from(list(DocumentKind)))
    policy = draw(policies)
    if kind is DocumentKind.MATRIX:
        matrices = []
        for n in range(draw(st.integers(min_value=1, max_value=3))):
            cols = draw(st.integers(min_value=1, max_value=4))
            rows = draw(st.lists(st.lists(st.sampled_from(_MATRIX_VALUES),
                                          min_size=cols, max_size=cols)
                                 .map(tuple), min_size=1, max_size=4))
            matrices.append(MatrixBlock('A{}'.format(n + 1), tuple(rows)))
        return MapDocument(kind, (), (), policy, tuple(matrices))

    k = draw(st.integers(min_value=1, max_value=3))
    names = ['expert {}'.format(i + 1) for i in range(k)]
    if kind is DocumentKind.RELATIONAL:
        components = [draw(_relational_component(n)) for n in names]
    else:
        components = [draw(_node_component(n, kind)) for n in names]

    scenarios = []
    if kind is not DocumentKind.GRAPH_ONLY:
        if kind is DocumentKind.RELATIONAL:
            pools = [sorted(frozenset().union(*(c.domain
                                                for c in components))),
                     sorted(frozenset().union(*(c.range
                                                for c in components)))]
        else:
            pools = [sorted(frozenset().union(*(c.nodes
                                                for c in components)))]
        for n in range(draw(st.integers(min_value=0, max_value=2))):
            pool = draw(st.sampled_from(pools))
            on = draw(st.lists(st.sampled_from(pool), unique=True,
                               max_size=len(pool)))
            scenarios.append(ScenarioBlock('S{}'.format(n + 1), tuple(on)))
    return MapDocument(kind, tuple(components), tuple(scenarios), policy, ())
