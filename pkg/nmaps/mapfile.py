"""Read and write ``.nmap`` files.

A map file is UTF-8 text with ``#`` line comments. Top-level ``key = value``
lines set the document kind and the threshold policy; sections follow::

    kind = relational
    threshold = 1
    mode = real

    [component "expert 1"]
    domain = D1 D2 D3
    range = R1 R2
    D1 -> R2 : 1
    D3 -> R1 : I

    [scenario "D1 on"]
    on = D1

Graph and cognitive components declare ``nodes`` (and optionally ``order``);
relational components declare ``domain`` and ``range`` (and optionally
``domain_order`` and ``range_order``). Edges are ``A -> B`` (directed),
``A -- B`` (undirected) or ``A ~~ B`` (indeterminate undirected), each with an
optional ``: weight``. Matrix documents hold ``[matrix "name"]`` sections of
whitespace-separated value rows instead of components. A ``---`` line inside
a matrix section starts the next component, named ``name 2``, ``name 3``
and so on, so ``export-matrix`` output loads back under one header.

Parsing never stops at the first problem: :func:`parse` returns every
diagnostic with its line and column.
"""
from __future__ import division, print_function, absolute_import
from collections import namedtuple
import enum
import io
import json
import re

from nmaps.base import StateVector
from nmaps.cognitive import CognitiveMap, cmap_from_ngraph
from nmaps.default_policies import mode_names, threshold_policies
from nmaps.errors import MapFileError, ValidationError
from nmaps.neutro import (DEFAULT_POLICY, ThresholdPolicy, format_value,
                          parse_value)
from nmaps.nmatrix import NMatrix
from nmaps.ngraph import EdgeKind, Graph, NGraph, adjacency_nmatrix
from nmaps.relational import RelationalMap, RelationalState, rmap_from_ngraph
from nmaps.utils import logger

__all__ = ['DocumentKind', 'MapDocument', 'ComponentBlock', 'EdgeDecl',
           'ScenarioBlock', 'MatrixBlock', 'Diagnostic', 'ParseResult',
           'parse', 'serialize', 'load', 'dump', 'to_json', 'from_json',
           'document_to_ngraph', 'document_to_cognitive_map',
           'document_to_relational_map', 'document_to_nmatrix',
           'document_orderings', 'scenario_state',
           'document_from_cognitive_map', 'document_from_relational_map']

_LABEL = r"[A-Za-z_][A-Za-z0-9_']*"
_LABEL_RE = re.compile(r'^' + _LABEL + r'$')
_SECTION_RE = re.compile(r'^\[\s*([A-Za-z_]+)\s+"([^"]+)"\s*\]$')
_KEY_RE = re.compile(r'^([A-Za-z_]+)\s*=\s*(.*)$')
_EDGE_RE = re.compile(r'^(' + _LABEL + r')\s*(->|--|~~)\s*(' + _LABEL
                      + r')(?:\s*:\s*(\S+))?$')
_TOKEN_RE = re.compile(r'\S+')

_TOP_KEYS = ('kind', 'threshold', 'mode')
_COMPONENT_KEYS = ('nodes', 'order', 'domain', 'range', 'domain_order',
                   'range_order')
_SCENARIO_KEYS = ('on',)


class DocumentKind(enum.Enum):
    COGNITIVE = 'cognitive'
    RELATIONAL = 'relational'
    GRAPH_ONLY = 'graph'
    MATRIX = 'matrix'


EdgeDecl = namedtuple('EdgeDecl', ['u', 'op', 'v', 'weight'])
EdgeDecl.__doc__ = """An edge line ``u op v [: weight]``; weight may be None."""

ComponentBlock = namedtuple('ComponentBlock', [
    'name', 'nodes', 'order', 'domain', 'range', 'domain_order',
    'range_order', 'edges'])
ComponentBlock.__doc__ = """One ``[component]`` section.

``nodes``, ``domain`` and ``range`` are frozensets; the ``*order`` fields are
tuples or None; ``edges`` is a tuple of EdgeDecl in declaration order. For
relational components ``nodes`` is the union of domain and range.
"""

ScenarioBlock = namedtuple('ScenarioBlock', ['name', 'on'])
MatrixBlock = namedtuple('MatrixBlock', ['name', 'rows'])

MapDocument = namedtuple('MapDocument', ['kind', 'components', 'scenarios',
                                         'policy', 'matrices'])
MapDocument.__doc__ = """A parsed map file.

Attributes
----------
kind : DocumentKind
components : tuple of ComponentBlock
scenarios : tuple of ScenarioBlock
policy : nmaps.neutro.ThresholdPolicy
matrices : tuple of MatrixBlock
    Only for matrix documents; rows are tuples of NeutroValue.
"""


class Diagnostic(namedtuple('Diagnostic', ['line', 'column', 'message'])):
    """A problem found at a 1-based line and column."""
    __slots__ = ()

    def __str__(self):
        return '{}:{}: {}'.format(self.line, self.column, self.message)


ParseResult = namedtuple('ParseResult', ['document', 'diagnostics'])
ParseResult.__doc__ = """``document`` is None whenever ``diagnostics`` is
non-empty."""


class _Value(namedtuple('_Value', ['text', 'line', 'column'])):
    """Right-hand side of a ``key = value`` line with its position."""
    __slots__ = ()

    def tokens(self):
        return [(m.group(0), self.column + m.start())
                for m in _TOKEN_RE.finditer(self.text)]


class _Section(object):
    def __init__(self, kind, name, line, column):
        self.kind = kind
        self.name = name
        self.line = line
        self.column = column
        self.keys = {}
        self.edges = []
        self.rows = []
        self.base = name
        self.part = 1

    def next_part(self, line, column):
        """The matrix component following a ``---`` line."""
        section = _Section(self.kind, '{} {}'.format(self.base, self.part + 1),
                           line, column)
        section.base = self.base
        section.part = self.part + 1
        return section


class _Parser(object):
    """Line scanner followed by validation; collects diagnostics."""

    def __init__(self, text):
        self.text = text
        self.diagnostics = []
        self.top = _Section('top', None, 1, 1)
        self.sections = []

    def error(self, line, column, message):
        self.diagnostics.append(Diagnostic(line, column, message))

    # Scanning ----------------------------------------------------------------

    def scan(self):
        current = self.top
        for line_no, raw in enumerate(self.text.splitlines(), 1):
            body = raw.split('#', 1)[0].rstrip()
            stripped = body.strip()
            if not stripped:
                continue
            col = len(body) - len(body.lstrip()) + 1
            match = _SECTION_RE.match(stripped)
            if match is not None:
                kind, name = match.groups()
                if kind not in ('component', 'scenario', 'matrix'):
                    self.error(line_no, col,
                               "unknown section {!r}".format(kind))
                current = _Section(kind, name, line_no, col)
                self.sections.append(current)
                continue
            match = _KEY_RE.match(stripped)
            if match is not None and current.kind != 'matrix':
                self._scan_key(current, match, line_no, col)
                continue
            match = _EDGE_RE.match(stripped)
            if match is not None and current.kind == 'component':
                self._scan_edge(current, match, line_no, col)
                continue
            if current.kind == 'matrix' and stripped == '---':
                current = current.next_part(line_no, col)
                self.sections.append(current)
                continue
            if current.kind == 'matrix':
                current.rows.append((line_no, [
                    (m.group(0), col + m.start())
                    for m in _TOKEN_RE.finditer(stripped)]))
                continue
            self.error(line_no, col, "unrecognised line {!r}".format(stripped))

    def _scan_key(self, section, match, line_no, col):
        key, value = match.groups()
        allowed = {'top': _TOP_KEYS, 'component': _COMPONENT_KEYS,
                   'scenario': _SCENARIO_KEYS}.get(section.kind, ())
        if key not in allowed:
            self.error(line_no, col, "unknown key {!r}".format(key))
            return
        if key in section.keys:
            self.error(line_no, col, "duplicate key {!r}".format(key))
            return
        value_col = col + match.start(2)
        section.keys[key] = _Value(value.strip(), line_no, value_col)

    def _scan_edge(self, section, match, line_no, col):
        u, op, v, weight = match.groups()
        positions = (col + match.start(1), col + match.start(3),
                     col + match.start(4) if weight is not None else None)
        section.edges.append((u, op, v, weight, line_no, positions))

    # Validation --------------------------------------------------------------

    def document(self):
        kind = self._kind()
        policy = self._policy()
        names = set()
        for s in self.sections:
            key = (s.kind, s.name)
            if key in names:
                self.error(s.line, s.column, "duplicate {} name {!r}".format(
                    s.kind, s.name))
            names.add(key)

        components = []
        matrices = []
        for s in self.sections:
            if s.kind == 'component':
                if kind is DocumentKind.MATRIX:
                    self.error(s.line, s.column, "matrix documents declare "
                               "[matrix] sections, not components")
                    continue
                block = self._component(s, kind)
                if block is not None:
                    components.append(block)
            elif s.kind == 'matrix':
                if kind is not DocumentKind.MATRIX:
                    self.error(s.line, s.column, "[matrix] sections need "
                               "kind = matrix")
                    continue
                block = self._matrix(s)
                if block is not None:
                    matrices.append(block)
        if kind is DocumentKind.MATRIX and not matrices and not any(
                s.kind == 'matrix' for s in self.sections):
            self.error(1, 1, "a matrix document needs a [matrix] section")
        if kind not in (None, DocumentKind.MATRIX) and not any(
                s.kind == 'component' for s in self.sections):
            self.error(1, 1, "a map document needs a [component] section")

        scenarios = []
        for s in self.sections:
            if s.kind == 'scenario':
                block = self._scenario(s, kind, components)
                if block is not None:
                    scenarios.append(block)
        if self.diagnostics:
            return None
        return MapDocument(kind, tuple(components), tuple(scenarios), policy,
                           tuple(matrices))

    def _kind(self):
        value = self.top.keys.get('kind')
        if value is None:
            return DocumentKind.GRAPH_ONLY
        try:
            return DocumentKind(value.text)
        except ValueError:
            self.error(value.line, value.column,
                       "unknown kind {!r}; use cognitive, relational, graph "
                       "or matrix".format(value.text))
            return None

    def _policy(self):
        k = threshold_policies['default'].k
        mode = threshold_policies['default'].mode
        value = self.top.keys.get('threshold')
        if value is not None:
            if re.match(r'^\d+$', value.text) and int(value.text) >= 1:
                k = int(value.text)
            else:
                self.error(value.line, value.column,
                           "threshold must be a positive integer")
        value = self.top.keys.get('mode')
        if value is not None:
            if value.text in mode_names:
                mode = mode_names[value.text]
            else:
                self.error(value.line, value.column,
                           "mode must be real or indet")
        return ThresholdPolicy(k, mode)

    def _labels(self, value, what, unique=True):
        labels = []
        for tok, col in value.tokens():
            if not _LABEL_RE.match(tok):
                self.error(value.line, col, "malformed label {!r}".format(tok))
            elif unique and tok in labels:
                self.error(value.line, col, "duplicate node {!r}".format(tok))
            else:
                labels.append(tok)
        return labels

    def _order(self, s, key, members):
        value = s.keys.get(key)
        if value is None:
            return None
        order = self._labels(value, key)
        if set(order) != set(members) or len(order) != len(members):
            self.error(value.line, value.column,
                       "{} must list every node of the component exactly "
                       "once".format(key))
        return tuple(order)

    def _component(self, s, kind):
        relational = kind is DocumentKind.RELATIONAL
        wrong = (('nodes', 'order') if relational
                 else ('domain', 'range', 'domain_order', 'range_order'))
        for key in wrong:
            if key in s.keys:
                value = s.keys[key]
                self.error(value.line, value.column,
                           "{!r} is not allowed in a {} component".format(
                               key, kind.value if kind else 'map'))
        domain = rng = frozenset()
        order = domain_order = range_order = None
        if relational:
            dom = self._labels(s.keys['domain'], 'domain') \
                if 'domain' in s.keys else []
            ran = self._labels(s.keys['range'], 'range') \
                if 'range' in s.keys else []
            for lab in set(dom) & set(ran):
                value = s.keys['range']
                self.error(value.line, value.column,
                           "{!r} is both a domain and a range node".format(
                               lab))
            domain, rng = frozenset(dom), frozenset(ran)
            nodes = domain | rng
            if not dom or not ran:
                self.error(s.line, s.column, "a relational component must "
                           "declare domain and range nodes")
            domain_order = self._order(s, 'domain_order', dom)
            range_order = self._order(s, 'range_order', ran)
        else:
            labels = self._labels(s.keys['nodes'], 'nodes') \
                if 'nodes' in s.keys else []
            nodes = frozenset(labels)
            if not labels:
                self.error(s.line, s.column,
                           "component must declare at least one node")
            order = self._order(s, 'order', labels)

        edges = []
        keys = set()
        ops = set()
        for u, op, v, token, line, (ucol, vcol, wcol) in s.edges:
            ok = True
            for lab, col in ((u, ucol), (v, vcol)):
                if lab not in nodes:
                    self.error(line, col, "unknown label {!r}".format(lab))
                    ok = False
            if u == v:
                self.error(line, ucol, "self-loop at {!r}".format(u))
                ok = False
            weight = None
            if token is not None:
                try:
                    weight = parse_value(token)
                except ValidationError:
                    self.error(line, wcol,
                               "malformed weight token {!r}".format(token))
                    ok = False
                else:
                    if weight.is_fractional:
                        self.error(line, wcol, "decimal weights are only "
                                   "allowed in matrix documents")
                        ok = False
            if kind is DocumentKind.COGNITIVE and op != '->':
                self.error(line, ucol, "cognitive maps take directed edges "
                           "(->) only")
                ok = False
            if relational and (op != '->' or u not in domain
                               or v not in rng):
                self.error(line, ucol,
                           "edge must run from domain to range (D -> R)")
                ok = False
            key = (u, v) if op == '->' else tuple(sorted((u, v)))
            if key in keys:
                self.error(line, ucol, "repeated edge {} {} {}".format(
                    u, op, v))
                ok = False
            keys.add(key)
            ops.add(op == '->')
            if kind is DocumentKind.GRAPH_ONLY and len(ops) > 1:
                self.error(line, ucol, "a component cannot mix directed and "
                           "undirected edges")
                ops = set([op == '->'])
                ok = False
            if ok:
                edges.append(EdgeDecl(u, op, v, weight))
        return ComponentBlock(s.name, nodes, order, domain, rng,
                              domain_order, range_order, tuple(edges))

    def _scenario(self, s, kind, components):
        if kind not in (DocumentKind.COGNITIVE, DocumentKind.RELATIONAL):
            self.error(s.line, s.column, "scenarios need a cognitive or "
                       "relational document")
            return None
        value = s.keys.get('on')
        if value is None:
            return ScenarioBlock(s.name, ())
        on = self._labels(value, 'on')
        known = set()
        for c in components:
            known |= c.nodes
        for tok, col in value.tokens():
            if tok in on and tok not in known:
                self.error(value.line, col, "unknown label {!r}".format(tok))
        if kind is DocumentKind.RELATIONAL:
            domain, rng = set(), set()
            for c in components:
                domain |= c.domain
                rng |= c.range
            named = [lab for lab in on if lab in known]
            if not (all(lab in domain for lab in named) or
                    all(lab in rng for lab in named)):
                self.error(value.line, value.column, "a scenario switches "
                           "on domain or range nodes, not both")
        return ScenarioBlock(s.name, tuple(on))

    def _matrix(self, s):
        rows = []
        for line_no, row in s.rows:
            values = []
            for tok, col in row:
                try:
                    values.append(parse_value(tok))
                except ValidationError:
                    self.error(line_no, col,
                               "malformed value {!r}".format(tok))
            rows.append(tuple(values))
        if not rows:
            self.error(s.line, s.column, "matrix must have at least one row")
            return None
        if len(set(len(r) for r in rows)) != 1:
            self.error(s.line, s.column, "matrix rows differ in length")
            return None
        return MatrixBlock(s.name, tuple(rows))


def parse(text):
    """Parse map-file text.

    Parameters
    ----------
    text : str

    Returns
    -------
    result : ParseResult
        Either a document and no diagnostics, or None and every diagnostic
        found, sorted by position.
    """
    if text.startswith(u"\ufeff"):
        text = text[1:]
    parser = _Parser(text)
    parser.scan()
    doc = parser.document()
    diagnostics = sorted(parser.diagnostics)
    for d in diagnostics:
        logger.debug("Diagnostic {}".format(d))
    return ParseResult(None if diagnostics else doc, diagnostics)


# Serialization ---------------------------------------------------------------

def _format_edge(e):
    text = '{} {} {}'.format(e.u, e.op, e.v)
    if e.weight is not None:
        text += ' : {}'.format(format_value(e.weight))
    return text


def serialize(doc):
    """Canonical text of `doc`: sorted node sets, edges in declaration order.

    ``parse(serialize(doc)).document == doc`` for every valid document.
    """
    lines = ['kind = {}'.format(doc.kind.value),
             'threshold = {}'.format(doc.policy.k),
             'mode = {}'.format(doc.policy.mode.value)]
    for c in doc.components:
        lines.extend(['', '[component "{}"]'.format(c.name)])
        if doc.kind is DocumentKind.RELATIONAL:
            lines.append('domain = ' + ' '.join(sorted(c.domain)))
            lines.append('range = ' + ' '.join(sorted(c.range)))
            if c.domain_order is not None:
                lines.append('domain_order = ' + ' '.join(c.domain_order))
            if c.range_order is not None:
                lines.append('range_order = ' + ' '.join(c.range_order))
        else:
            lines.append('nodes = ' + ' '.join(sorted(c.nodes)))
            if c.order is not None:
                lines.append('order = ' + ' '.join(c.order))
        lines.extend(_format_edge(e) for e in c.edges)
    for m in doc.matrices:
        lines.extend(['', '[matrix "{}"]'.format(m.name)])
        lines.extend(' '.join(format_value(v) for v in row) for row in m.rows)
    for s in doc.scenarios:
        lines.extend(['', '[scenario "{}"]'.format(s.name)])
        lines.append(('on = ' + ' '.join(s.on)).rstrip())
    return '\n'.join(lines) + '\n'


def load(path):
    """Read and parse a map file.

    Raises
    ------
    MapFileError carrying the diagnostics if the file cannot be read, is
    not UTF-8 or does not parse.
    """
    try:
        with io.open(path, 'rb') as f:
            data = f.read()
    except (IOError, OSError) as e:
        diag = Diagnostic(1, 1, 'cannot read file: {}'.format(
            e.strerror or e))
        msg = "Cannot read {}: {}".format(path, diag.message)
        logger.error(msg)
        raise MapFileError(msg, [diag])
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        # The column counts bytes.
        line = data.count(b'\n', 0, e.start) + 1
        column = e.start - (data.rfind(b'\n', 0, e.start) + 1) + 1
        diag = Diagnostic(line, column, 'invalid UTF-8 byte 0x{:02x}'.format(
            bytearray(data[e.start:e.start + 1])[0]))
        msg = "{}:{}".format(path, diag)
        logger.error(msg)
        raise MapFileError(msg, [diag])
    result = parse(text)
    if result.diagnostics:
        msg = "{} problem(s) in {}:\n{}".format(
            len(result.diagnostics), path,
            '\n'.join('{}:{}'.format(path, d) for d in result.diagnostics))
        logger.error(msg)
        raise MapFileError(msg, result.diagnostics)
    return result.document


def dump(doc, path):
    """Write `doc` to `path` in canonical form."""
    with io.open(path, 'w', encoding='utf-8') as f:
        f.write(serialize(doc))


def to_json(doc):
    """JSON mirror of `doc`."""
    def _labels(x):
        return None if x is None else list(x)

    obj = {
        'kind': doc.kind.value,
        'threshold': doc.policy.k,
        'mode': doc.policy.mode.value,
        'components': [{
            'name': c.name,
            'nodes': sorted(c.nodes),
            'order': _labels(c.order),
            'domain': sorted(c.domain),
            'range': sorted(c.range),
            'domain_order': _labels(c.domain_order),
            'range_order': _labels(c.range_order),
            'edges': [{'u': e.u, 'op': e.op, 'v': e.v,
                       'weight': None if e.weight is None
                       else format_value(e.weight)} for e in c.edges],
        } for c in doc.components],
        'scenarios': [{'name': s.name, 'on': list(s.on)}
                      for s in doc.scenarios],
        'matrices': [{'name': m.name,
                      'rows': [[format_value(v) for v in row]
                               for row in m.rows]} for m in doc.matrices],
    }
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=True)


def from_json(text):
    """Inverse of :func:`to_json`; the result is validated like a file.

    Raises
    ------
    MapFileError if the JSON does not describe a valid document.
    """
    try:
        obj = json.loads(text)
        doc = MapDocument(
            DocumentKind(obj.get('kind', 'graph')),
            tuple(ComponentBlock(
                c['name'], frozenset(c.get('nodes', ())),
                _tuple_or_none(c.get('order')),
                frozenset(c.get('domain', ())), frozenset(c.get('range', ())),
                _tuple_or_none(c.get('domain_order')),
                _tuple_or_none(c.get('range_order')),
                tuple(EdgeDecl(e['u'], e['op'], e['v'],
                               None if e.get('weight') is None
                               else parse_value(e['weight']))
                      for e in c.get('edges', ())))
                  for c in obj.get('components', ())),
            tuple(ScenarioBlock(s['name'], tuple(s.get('on', ())))
                  for s in obj.get('scenarios', ())),
            ThresholdPolicy(obj.get('threshold', 1), obj.get('mode', 'real')),
            tuple(MatrixBlock(m['name'], tuple(tuple(parse_value(t)
                                                     for t in row)
                                               for row in m['rows']))
                  for m in obj.get('matrices', ())))
    except (AttributeError, KeyError, TypeError, ValueError) as e:
        msg = "Not a map document: {}".format(e)
        logger.error(msg)
        raise MapFileError(msg)
    result = parse(serialize(doc))
    if result.diagnostics:
        msg = "Invalid map document:\n{}".format(
            '\n'.join(str(d) for d in result.diagnostics))
        logger.error(msg)
        raise MapFileError(msg, result.diagnostics)
    return result.document


def _tuple_or_none(x):
    return None if x is None else tuple(x)


# Builders --------------------------------------------------------------------

def _require_kind(doc, *kinds):
    if doc.kind not in kinds:
        msg = "Expected a {} document, got a {} document.".format(
            ' or '.join(k.value for k in kinds), doc.kind.value)
        logger.error(msg)
        raise ValidationError(msg)


def document_orderings(doc):
    """Vertex ordering of each component: declared, else lexicographic.

    Relational components are ordered domain first, then range.
    """
    out = []
    for c in doc.components:
        if doc.kind is DocumentKind.RELATIONAL:
            dom = c.domain_order or tuple(sorted(c.domain))
            ran = c.range_order or tuple(sorted(c.range))
            out.append(dom + ran)
        else:
            out.append(c.order or tuple(sorted(c.nodes)))
    return out


def _edge_kind(e):
    if e.op == '~~' or (e.weight is not None and e.weight.indet != 0):
        return EdgeKind.INDETERMINATE
    return EdgeKind.DETERMINATE


def document_to_ngraph(doc):
    """The n-graph declared by a graph, cognitive or relational document."""
    _require_kind(doc, DocumentKind.GRAPH_ONLY, DocumentKind.COGNITIVE,
                  DocumentKind.RELATIONAL)
    components = []
    for c, order in zip(doc.components, document_orderings(doc)):
        directed = (doc.kind is not DocumentKind.GRAPH_ONLY
                    or any(e.op == '->' for e in c.edges))
        graph = Graph(order, directed=directed)
        for e in c.edges:
            graph.add_edge(e.u, e.v, kind=_edge_kind(e), weight=e.weight)
        components.append(graph)
    return NGraph(components, names=[c.name for c in doc.components])


def document_to_cognitive_map(doc):
    _require_kind(doc, DocumentKind.COGNITIVE)
    return cmap_from_ngraph(document_to_ngraph(doc),
                            orderings=document_orderings(doc))


def document_to_relational_map(doc):
    _require_kind(doc, DocumentKind.RELATIONAL)
    parts = [(c.domain_order or tuple(sorted(c.domain)),
              c.range_order or tuple(sorted(c.range)))
             for c in doc.components]
    return rmap_from_ngraph(document_to_ngraph(doc), parts)


def document_to_map(doc):
    """The cognitive or relational map of `doc`."""
    if doc.kind is DocumentKind.RELATIONAL:
        return document_to_relational_map(doc)
    return document_to_cognitive_map(doc)


def document_to_nmatrix(doc):
    """The matrix a document stands for.

    Matrix documents give their sections, maps their map matrix and graph
    documents their adjacency n-matrix.
    """
    if doc.kind is DocumentKind.MATRIX:
        return NMatrix([m.rows for m in doc.matrices])
    if doc.kind is DocumentKind.GRAPH_ONLY:
        return adjacency_nmatrix(document_to_ngraph(doc),
                                 document_orderings(doc))
    return document_to_map(doc).matrix


def scenario_state(doc, m, name):
    """Initial state of the scenario called `name` on the map `m`.

    Raises
    ------
    ValidationError if there is no such scenario.
    """
    for s in doc.scenarios:
        if s.name == name:
            if isinstance(m, RelationalMap):
                return RelationalState.from_on_labels(m, s.on)
            return StateVector.from_on_labels(m.node_labels, s.on)
    msg = "No scenario named {!r}. Known: {}.".format(
        name, ', '.join(repr(s.name) for s in doc.scenarios) or 'none')
    logger.error(msg)
    raise ValidationError(msg)


def _matrix_edges(m, i, rows, cols):
    edges = []
    for r, row in enumerate(m.matrix.component(i)):
        for c, v in enumerate(row):
            if not v.is_zero:
                edges.append(EdgeDecl(rows[r], '->', cols[c], v))
    return tuple(edges)


def document_from_cognitive_map(m, policy=DEFAULT_POLICY, scenarios=()):
    """A cognitive document whose map is `m`, with explicit orderings."""
    if not isinstance(m, CognitiveMap):
        raise TypeError("m must be nmaps.cognitive.CognitiveMap. {} was "
                        "passed.".format(type(m)))
    components = tuple(
        ComponentBlock(name, frozenset(labels), tuple(labels), frozenset(),
                       frozenset(), None, None,
                       _matrix_edges(m, i, labels, labels))
        for i, (name, labels) in enumerate(zip(m.names, m.node_labels)))
    return MapDocument(DocumentKind.COGNITIVE, components, tuple(scenarios),
                       policy, ())


def document_from_relational_map(m, policy=DEFAULT_POLICY, scenarios=()):
    """A relational document whose map is `m`, with explicit orderings."""
    if not isinstance(m, RelationalMap):
        raise TypeError("m must be nmaps.relational.RelationalMap. {} was "
                        "passed.".format(type(m)))
    components = tuple(
        ComponentBlock(name, frozenset(dom) | frozenset(ran), None,
                       frozenset(dom), frozenset(ran), tuple(dom), tuple(ran),
                       _matrix_edges(m, i, dom, ran))
        for i, (name, dom, ran) in enumerate(zip(m.names, m.domain_labels,
                                                 m.range_labels)))
    return MapDocument(DocumentKind.RELATIONAL, components, tuple(scenarios),
                       policy, ())
