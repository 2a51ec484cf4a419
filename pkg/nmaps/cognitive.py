"""Square-map dynamical systems: cognitive maps and their n-component
generalisations, stepped with thresholding and updating until a hidden
pattern appears.
"""
from __future__ import division, print_function, absolute_import
from collections import namedtuple

import networkx as nx
import numpy as np

from nmaps.base import (BaseMap, FixedPoint, LimitCycle, StateVector,
                        check_lengths, classify_cycle, labels_or_default,
                        edge_weight, update)
from nmaps.errors import ValidationError
from nmaps.neutro import DEFAULT_POLICY, ZERO, threshold_arrays
from nmaps.nmatrix import NMatrix, nm_add, vec_mul_arrays
from nmaps.ngraph import vertex_ordering
from nmaps.utils import logger

__all__ = ['CognitiveMap', 'StateVector', 'HiddenPattern', 'FixedPoint',
           'LimitCycle', 'cmap_from_ngraph', 'cstep', 'find_hidden_pattern',
           'combine_cmaps', 'is_cyclic', 'single_node_scenarios',
           'iteration_bound']


class CognitiveMap(BaseMap):
    """A map whose components are square adjacency matrices over concepts.

    Parameters
    ----------
    matrix : NMatrix
        Every component square with a zero diagonal and integer entries.
    node_labels : sequence of sequences of str, optional
        Concept labels of each component, in row order. Taken from the
        matrix's row labels if present, otherwise ``C1, C2, ...``.
    names : sequence of str, optional
        Component names.

    Attributes
    ----------
    node_labels : tuple of tuples of str
    combined : bool
        True if the map is a sum of expert maps.
    """
    _label_attrs = ('node_labels',)

    def __init__(self, matrix, node_labels=None, names=None):
        super(CognitiveMap, self).__init__(matrix, names=names)
        for i, (rows, cols) in enumerate(self.matrix.shapes):
            if rows != cols:
                msg = ("Component {} of a cognitive map must be square. It "
                       "is {} x {}.".format(i + 1, rows, cols))
                logger.error(msg)
                raise ValidationError(msg)
            if np.any(np.diagonal(self.matrix.real(i)) != 0) or np.any(
                    np.diagonal(self.matrix.indet(i)) != 0):
                msg = ("Component {} has a non-zero diagonal; a concept "
                       "cannot act on itself.".format(i + 1))
                logger.error(msg)
                raise ValidationError(msg)
        if node_labels is None:
            node_labels = labels_or_default(self.matrix.row_labels, 'C',
                                            self.orders)
        node_labels = tuple(tuple(str(lab) for lab in comp)
                            for comp in node_labels)
        if len(node_labels) != self.k or any(
                len(labs) != n for labs, n in zip(node_labels, self.orders)):
            msg = "Node labels do not match the component orders {}.".format(
                list(self.orders))
            logger.error(msg)
            raise ValidationError(msg)
        for i, labs in enumerate(node_labels):
            if len(set(labs)) != len(labs):
                msg = "Component {} repeats a node label.".format(i + 1)
                logger.error(msg)
                raise ValidationError(msg)
        self.node_labels = node_labels

    @property
    def orders(self):
        """Number of concepts in each component."""
        return tuple(r for r, _ in self.matrix.shapes)

    def __repr__(self):
        return "<CognitiveMap k={} orders={}>".format(self.k, list(self.orders))


class HiddenPattern(namedtuple('HiddenPattern', ['verdicts', 'trace',
                                                 'iterations'])):
    """Result of :func:`find_hidden_pattern`.

    Attributes
    ----------
    verdicts : tuple of FixedPoint or LimitCycle
        One per component.
    trace : tuple of StateVector
        The initial state, every stepped state, and finally the state that
        repeated an earlier one.
    iterations : int
        Number of steps taken.
    """
    __slots__ = ()

    @property
    def is_fixed(self):
        return all(v.is_fixed for v in self.verdicts)


def cmap_from_ngraph(g, weights=None, orderings=None):
    """Build a cognitive map from a directed n-graph.

    Parameters
    ----------
    g : NGraph
        Every component directed.
    weights : dict or callable, optional
        Weight of each edge, keyed by ``(u, v)`` or ``(component, u, v)``, or
        a callable ``weights(edge, component)``. By default an edge's own
        weight, else ``1`` (``I`` for indeterminate edges).
    orderings : sequence, optional
        Concept ordering of each component; lexicographic by default.

    Returns
    -------
    m : CognitiveMap
    """
    components = []
    labels = []
    for i, c in enumerate(g):
        if not c.directed:
            msg = ("Component {} is undirected; cognitive maps need directed "
                   "edges.".format(i + 1))
            logger.error(msg)
            raise ValidationError(msg)
        order = vertex_ordering(c, orderings[i] if orderings else None)
        index = dict((v, j) for j, v in enumerate(order))
        rows = [[ZERO] * len(order) for _ in order]
        for edge in c.edges:
            if edge.u == edge.v:
                msg = "Self-loop at {} in component {}.".format(edge.u, i + 1)
                logger.error(msg)
                raise ValidationError(msg)
            rows[index[edge.u]][index[edge.v]] = edge_weight(edge, i, weights)
        components.append(rows)
        labels.append(order)
    matrix = NMatrix(components, row_labels=labels, col_labels=labels,
                     allow_empty=True)
    return CognitiveMap(matrix, node_labels=labels, names=g.names)


def _initial_arrays(initial, i):
    if initial is None:
        return None
    return initial.arrays(i)


def cstep(m, s, policy=DEFAULT_POLICY, initial=None):
    """One step: multiply, threshold, then update.

    Parameters
    ----------
    m : CognitiveMap
    s : StateVector
        Current state.
    policy : ThresholdPolicy
    initial : StateVector, optional
        Coordinates on here are forced to ``1`` in the result.

    Returns
    -------
    state : StateVector
    """
    check_lengths(s, m.orders, "State")
    if initial is not None:
        check_lengths(initial, m.orders, "Initial state")
    reals, indets = [], []
    for i in range(m.k):
        vr, vi = s.arrays(i)
        raw_r, raw_i = vec_mul_arrays(vr, vi, m.matrix.real(i),
                                      m.matrix.indet(i))
        real, indet = threshold_arrays(raw_r, raw_i, policy)
        init = _initial_arrays(initial, i)
        if m.combined and init is not None and np.any(indet[init[0] == 1]):
            logger.warning("Combined map: an initially-on concept of "
                           "component {} thresholds to I and is forced "
                           "on.".format(i + 1))
        real, indet = update(real, indet, init)
        reals.append(real)
        indets.append(indet)
    return StateVector.from_arrays(reals, indets)


def iteration_bound(orders):
    """Size of the state space plus one, ``prod(3 ** n) + 1``."""
    bound = 1
    for n in orders:
        bound *= 3 ** n
    return bound + 1


def find_hidden_pattern(m, initial, policy=DEFAULT_POLICY,
                        max_iterations=None):
    """Step from `initial` until the joint state repeats.

    Parameters
    ----------
    m : CognitiveMap
    initial : StateVector
        Only ``0`` and ``1`` entries.
    policy : ThresholdPolicy
    max_iterations : int, optional
        Defaults to :func:`iteration_bound` of the map.

    Returns
    -------
    pattern : HiddenPattern

    Raises
    ------
    RuntimeError if no repeat occurs within `max_iterations` steps.
    """
    check_lengths(initial, m.orders, "Initial state")
    initial.require_binary()
    if max_iterations is None:
        max_iterations = iteration_bound(m.orders)
    state = StateVector(initial.components)
    trace = [state]
    seen = {state: 0}
    iterations = 0
    while True:
        if iterations >= max_iterations:
            msg = "No hidden pattern within {} iterations.".format(
                max_iterations)
            logger.error(msg)
            raise RuntimeError(msg)
        nxt = cstep(m, state, policy, initial)
        iterations += 1
        logger.debug("Iteration {}: {}".format(iterations, nxt))
        if nxt in seen:
            cycle = trace[seen[nxt]:]
            trace.append(nxt)
            break
        seen[nxt] = len(trace)
        trace.append(nxt)
        state = nxt
    verdicts = classify_cycle(cycle)
    logger.info("Hidden pattern after {} iterations: {}".format(
        iterations, ', '.join(str(v) for v in verdicts)))
    return HiddenPattern(verdicts, tuple(trace), iterations)


def combine_cmaps(maps):
    """Sum the adjacency matrices of aligned expert maps.

    Parameters
    ----------
    maps : sequence of CognitiveMap
        Same component count, orders and node labels.

    Returns
    -------
    m : CognitiveMap
        Marked as ``combined``.

    Raises
    ------
    AlignmentError naming the first label that differs.
    """
    maps = list(maps)
    if not maps:
        raise ValidationError("Nothing to combine.")
    first = maps[0]
    total = first.matrix
    for other in maps[1:]:
        first.check_aligned(other)
        total = nm_add(total, other.matrix)
    combined = CognitiveMap(total, node_labels=first.node_labels,
                            names=first.names)
    combined.combined = len(maps) > 1
    return combined


def is_cyclic(m):
    """Whether each component has a directed cycle (feedback).

    Returns
    -------
    cyclic : tuple of bool
    """
    out = []
    for i in range(m.k):
        nz = (m.matrix.real(i) != 0) | (m.matrix.indet(i) != 0)
        dg = nx.DiGraph()
        dg.add_nodes_from(range(nz.shape[0]))
        dg.add_edges_from(zip(*np.nonzero(nz)))
        out.append(not nx.is_directed_acyclic_graph(dg))
    return tuple(out)


def single_node_scenarios(m):
    """One initial state per distinct label, with only that concept on.

    Returns
    -------
    scenarios : list of (str, StateVector)
        In declaration order of the labels.
    """
    seen = []
    for labs in m.node_labels:
        for lab in labs:
            if lab not in seen:
                seen.append(lab)
    return [(lab, StateVector.from_on_labels(m.node_labels, [lab]))
            for lab in seen]
