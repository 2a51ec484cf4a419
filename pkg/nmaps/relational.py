"""Rectangular-map dynamical systems: relational maps between a domain space
and a disjoint range space, iterated through the matrix and its transpose.
"""
from __future__ import division, print_function, absolute_import
from collections import namedtuple
import enum

import numpy as np

from nmaps.base import (BaseMap, FixedPoint, LimitCycle, StateVector,
                        check_lengths, classify_cycle, labels_or_default,
                        edge_weight, update)
from nmaps.errors import DomainError, ValidationError
from nmaps.neutro import DEFAULT_POLICY, ZERO, threshold_arrays
from nmaps.nmatrix import NMatrix, nm_add, nm_transpose, vec_mul_arrays
from nmaps.ngraph import partition_check
from nmaps.utils import logger

__all__ = ['Side', 'RelationalMap', 'RelationalState',
           'RelationalHiddenPattern', 'FixedPoint', 'LimitCycle',
           'rmap_from_ngraph', 'rstep_forward', 'rstep_backward',
           'rfind_hidden_pattern', 'combine_rmaps', 'round_bound',
           'infer_side']


class Side(enum.Enum):
    DOMAIN = 'domain'
    RANGE = 'range'

    @property
    def other(self):
        return Side.RANGE if self is Side.DOMAIN else Side.DOMAIN

    @property
    def prefix(self):
        return 'D' if self is Side.DOMAIN else 'R'


def infer_side(domain_labels, range_labels, on):
    """Side a start state naming the concepts `on` lies on.

    A concept may be a domain concept of one component and a range concept
    of another (the middle layer of a chain). The domain is chosen when
    every label is a domain concept of some component, else the range when
    every label is a range concept of some component. Labels found on
    neither side are left for the caller to report.

    Parameters
    ----------
    domain_labels, range_labels : sequences of sequences of str
        Concept labels per component.
    on : iterable of str
        Labels switched on.

    Returns
    -------
    side : Side

    Raises
    ------
    ValidationError if the labels fit neither side.
    """
    dom = set(lab for comp in domain_labels for lab in comp)
    ran = set(lab for comp in range_labels for lab in comp)
    known = [lab for lab in on if lab in dom or lab in ran]
    if all(lab in dom for lab in known):
        return Side.DOMAIN
    if all(lab in ran for lab in known):
        return Side.RANGE
    only_dom = [lab for lab in known if lab not in ran]
    only_ran = [lab for lab in known if lab not in dom]
    msg = ("A start state lies on one side; {} are only domain and {} are "
           "only range concepts.".format(', '.join(only_dom),
                                         ', '.join(only_ran)))
    logger.error(msg)
    raise ValidationError(msg)


class RelationalMap(BaseMap):
    """A map from domain concepts (rows) to range concepts (columns).

    Parameters
    ----------
    matrix : NMatrix
        Integer components, domain rows by range columns.
    domain_labels, range_labels : sequence of sequences of str, optional
        Default to the matrix's row and column labels, else ``D1, ...`` and
        ``R1, ...``.
    names : sequence of str, optional
    """
    _label_attrs = ('domain_labels', 'range_labels')

    def __init__(self, matrix, domain_labels=None, range_labels=None,
                 names=None):
        super(RelationalMap, self).__init__(matrix, names=names)
        shapes = self.matrix.shapes
        if domain_labels is None:
            domain_labels = labels_or_default(self.matrix.row_labels, 'D',
                                              [r for r, _ in shapes])
        if range_labels is None:
            range_labels = labels_or_default(self.matrix.col_labels, 'R',
                                             [c for _, c in shapes])
        self.domain_labels = self._check_labels(domain_labels,
                                                [r for r, _ in shapes],
                                                'Domain')
        self.range_labels = self._check_labels(range_labels,
                                               [c for _, c in shapes], 'Range')
        for i, (dom, ran) in enumerate(zip(self.domain_labels,
                                           self.range_labels)):
            shared = set(dom) & set(ran)
            if shared:
                msg = ("Component {}: domain and range share the label(s) {}."
                       "".format(i + 1, ', '.join(sorted(shared))))
                logger.error(msg)
                raise ValidationError(msg)
        self.transposed = nm_transpose(self.matrix)

    def _check_labels(self, labels, sizes, what):
        labels = tuple(tuple(str(lab) for lab in comp) for comp in labels)
        if len(labels) != self.k or any(
                len(labs) != n for labs, n in zip(labels, sizes)):
            msg = "{} labels do not match the sizes {}.".format(what, sizes)
            logger.error(msg)
            raise ValidationError(msg)
        for i, labs in enumerate(labels):
            if len(set(labs)) != len(labs):
                msg = "{} of component {} repeats a label.".format(what, i + 1)
                logger.error(msg)
                raise ValidationError(msg)
        return labels

    @property
    def domain_sizes(self):
        return tuple(r for r, _ in self.matrix.shapes)

    @property
    def range_sizes(self):
        return tuple(c for _, c in self.matrix.shapes)

    def sizes(self, side):
        return self.domain_sizes if side is Side.DOMAIN else self.range_sizes

    def labels(self, side):
        return self.domain_labels if side is Side.DOMAIN else self.range_labels

    def __repr__(self):
        return "<RelationalMap k={} shapes={}>".format(
            self.k, list(self.matrix.shapes))


class RelationalState(StateVector):
    """A state of the domain space or of the range space.

    Parameters
    ----------
    side : Side or str
    components : sequence of sequences
    """
    def __init__(self, side, components):
        super(RelationalState, self).__init__(components)
        self.side = Side(side)

    @classmethod
    def from_arrays(cls, side, reals, indets):
        state = StateVector.from_arrays(reals, indets)
        return cls(side, state.components)

    @classmethod
    def zeros(cls, side, lengths):
        return cls(side, [[ZERO] * n for n in lengths])

    @classmethod
    def from_on_labels(cls, m, on, side=None):
        """State of `m` with the concepts named in `on` switched on.

        The side is inferred from the labels unless given, see
        `infer_side`.

        Raises
        ------
        ValidationError if the labels fit neither side or name no concept
        of `m`.
        """
        on = list(on)
        if side is None:
            side = infer_side(m.domain_labels, m.range_labels, on)
        side = Side(side)
        state = StateVector.from_on_labels(m.labels(side), on)
        return cls(side, state.components)

    def __eq__(self, other):
        if isinstance(other, RelationalState) and other.side is not self.side:
            return False
        return super(RelationalState, self).__eq__(other)

    def __hash__(self):
        return hash((self.side, self.components))

    def __repr__(self):
        return "RelationalState({}, '{}')".format(self.side.value, str(self))


class RelationalHiddenPattern(namedtuple('RelationalHiddenPattern', [
        'domain', 'range', 'rounds', 'trace', 'start_side', 'iterations'])):
    """Result of :func:`rfind_hidden_pattern`.

    Attributes
    ----------
    domain, range : tuple of FixedPoint or LimitCycle
        Per-component verdicts of each side.
    rounds : tuple of (RelationalState, RelationalState)
        ``(domain, range)`` pairs in order, ending with the repeated round.
    trace : tuple of RelationalState
        Every state in the order it was computed, starting from the start
        state.
    start_side : Side
    iterations : int
        Number of rounds stepped.
    """
    __slots__ = ()

    def verdicts(self, side):
        return self.domain if Side(side) is Side.DOMAIN else self.range

    @property
    def is_fixed(self):
        return all(v.is_fixed for v in self.domain + self.range)


def rmap_from_ngraph(g, parts, weights=None):
    """Build a relational map from a bipartite directed n-graph.

    Parameters
    ----------
    g : NGraph
    parts : sequence of (domain, range)
        Per component, the ordered domain and range concepts. The orders give
        the rows and columns of the matrix.
    weights : dict or callable, optional
        As for :func:`nmaps.cognitive.cmap_from_ngraph`.

    Returns
    -------
    m : RelationalMap

    Raises
    ------
    ValidationError if a component is undirected, not split by its parts,
    or has an edge inside one part or from range to domain.
    """
    if len(parts) != g.k:
        raise ValidationError("Expected {} domain/range splits, got {}."
                              "".format(g.k, len(parts)))
    components, doms, rans = [], [], []
    for i, (c, (dom, ran)) in enumerate(zip(g, parts)):
        dom = tuple(str(v) for v in dom)
        ran = tuple(str(v) for v in ran)
        if c.edges and not c.directed:
            msg = ("Component {} is undirected; relational maps need edges "
                   "directed from domain to range.".format(i + 1))
            logger.error(msg)
            raise ValidationError(msg)
        try:
            valid = partition_check(c, [dom, ran]).valid
        except DomainError as e:
            raise ValidationError("Component {}: {}".format(i + 1, e))
        if not valid or set(dom) & set(ran):
            msg = ("Component {} is not bipartite over its domain and "
                   "range; an edge lies inside one part.".format(i + 1))
            logger.error(msg)
            raise ValidationError(msg)
        row = dict((v, j) for j, v in enumerate(dom))
        col = dict((v, j) for j, v in enumerate(ran))
        rows = [[ZERO] * len(ran) for _ in dom]
        for edge in c.edges:
            if edge.u not in row:
                msg = ("Edge {} -> {} of component {} runs from range to "
                       "domain.".format(edge.u, edge.v, i + 1))
                logger.error(msg)
                raise ValidationError(msg)
            rows[row[edge.u]][col[edge.v]] = edge_weight(edge, i, weights)
        components.append(rows)
        doms.append(dom)
        rans.append(ran)
    matrix = NMatrix(components, row_labels=doms, col_labels=rans,
                     allow_empty=True)
    return RelationalMap(matrix, domain_labels=doms, range_labels=rans,
                         names=g.names)


def _step(m, state, policy, initial, source, matrix):
    if state.side is not source:
        msg = "Expected a {} state, got a {} state.".format(
            source.value, state.side.value)
        logger.error(msg)
        raise ValidationError(msg)
    target = source.other
    check_lengths(state, m.sizes(source), "{} state".format(
        source.value.capitalize()))
    if initial is not None:
        check_lengths(initial, m.sizes(target), "Initial {} state".format(
            target.value))
    reals, indets = [], []
    for i in range(m.k):
        vr, vi = state.arrays(i)
        raw_r, raw_i = vec_mul_arrays(vr, vi, matrix.real(i), matrix.indet(i))
        real, indet = threshold_arrays(raw_r, raw_i, policy)
        init = None if initial is None else initial.arrays(i)
        if m.combined and init is not None and np.any(indet[init[0] == 1]):
            logger.warning("Combined map: an initially-on {} node of "
                           "component {} thresholds to I and is forced "
                           "on.".format(target.value, i + 1))
        real, indet = update(real, indet, init)
        reals.append(real)
        indets.append(indet)
    return RelationalState.from_arrays(target, reals, indets)


def rstep_forward(m, a, policy=DEFAULT_POLICY, initial_range=None):
    """Domain state to range state through the relational matrix.

    Parameters
    ----------
    m : RelationalMap
    a : RelationalState
        A domain state.
    policy : ThresholdPolicy
    initial_range : StateVector, optional
        Range coordinates forced to ``1``.

    Returns
    -------
    state : RelationalState
        A range state.
    """
    return _step(m, a, policy, initial_range, Side.DOMAIN, m.matrix)


def rstep_backward(m, b, policy=DEFAULT_POLICY, initial_domain=None):
    """Range state to domain state through the transposed matrix."""
    return _step(m, b, policy, initial_domain, Side.RANGE, m.transposed)


def round_bound(m):
    """Number of joint (domain, range) states plus one."""
    bound = 1
    for d, r in m.matrix.shapes:
        bound *= 3 ** (d + r)
    return bound + 1


def _as_round(s, o):
    if s.side is Side.DOMAIN:
        return (s, o)
    return (o, s)


def rfind_hidden_pattern(m, start, policy=DEFAULT_POLICY,
                         max_iterations=None):
    """Alternate between the two spaces until a (domain, range) round repeats.

    Updating applies to the start side only; the start state is its own
    initial vector.

    Parameters
    ----------
    m : RelationalMap
    start : RelationalState
        Only ``0`` and ``1`` entries.
    policy : ThresholdPolicy
    max_iterations : int, optional
        Defaults to :func:`round_bound`.

    Returns
    -------
    pattern : RelationalHiddenPattern

    Raises
    ------
    RuntimeError if no round repeats within `max_iterations` rounds.
    """
    if not isinstance(start, RelationalState):
        raise TypeError("start must be nmaps.relational.RelationalState. {} "
                        "was passed.".format(type(start)))
    side = start.side
    check_lengths(start, m.sizes(side), "Start state")
    start.require_binary()
    if max_iterations is None:
        max_iterations = round_bound(m)
    if side is Side.DOMAIN:
        there, back = rstep_forward, rstep_backward
    else:
        there, back = rstep_backward, rstep_forward

    state = start
    other = there(m, state, policy)
    rounds = [_as_round(state, other)]
    trace = [state, other]
    seen = {rounds[0]: 0}
    iterations = 0
    while True:
        if iterations >= max_iterations:
            msg = "No hidden pattern within {} rounds.".format(max_iterations)
            logger.error(msg)
            raise RuntimeError(msg)
        state = back(m, other, policy, start)
        other = there(m, state, policy)
        iterations += 1
        trace.extend([state, other])
        rnd = _as_round(state, other)
        logger.debug("Round {}: D {} R {}".format(iterations, rnd[0], rnd[1]))
        if rnd in seen:
            cycle = rounds[seen[rnd]:]
            rounds.append(rnd)
            break
        seen[rnd] = len(rounds)
        rounds.append(rnd)

    domain = classify_cycle([d for d, _ in cycle])
    range_ = classify_cycle([r for _, r in cycle])
    logger.info("Relational hidden pattern after {} rounds: domain {}; "
                "range {}".format(iterations,
                                  ', '.join(str(v) for v in domain),
                                  ', '.join(str(v) for v in range_)))
    return RelationalHiddenPattern(domain, range_, tuple(rounds),
                                   tuple(trace), side, iterations)


def combine_rmaps(maps):
    """Sum aligned relational maps entrywise.

    Raises
    ------
    AlignmentError naming the first domain or range label that differs.
    """
    maps = list(maps)
    if not maps:
        raise ValidationError("Nothing to combine.")
    first = maps[0]
    total = first.matrix
    for other in maps[1:]:
        first.check_aligned(other)
        total = nm_add(total, other.matrix)
    combined = RelationalMap(total, domain_labels=first.domain_labels,
                             range_labels=first.range_labels,
                             names=first.names)
    combined.combined = len(maps) > 1
    return combined
