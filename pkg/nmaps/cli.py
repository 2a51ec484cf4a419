"""Command-line front end.

Usage::

    python -m nmaps classify MAP
    python -m nmaps run MAP --scenario NAME [--trace] [--format json]
    python -m nmaps run MAP --on C1 E2 [--threshold 2] [--mode indet]
    python -m nmaps run MAP --all-scenarios | --each-node
    python -m nmaps combine MAP MAP [MAP ...] [--output OUT]
    python -m nmaps export-matrix MAP [--matrix kirchhoff] [--labels]

Exit codes are 0 on success, 2 for bad input (unparseable files, unknown
scenarios, misaligned maps) and 1 for anything else.
"""
from __future__ import division, print_function, absolute_import
import argparse
import io
import json
import logging
import sys

from nmaps.base import StateVector, run_in_threads
from nmaps.cognitive import (combine_cmaps, find_hidden_pattern, is_cyclic,
                             single_node_scenarios)
from nmaps.default_policies import mode_names, threshold_policies
from nmaps.errors import MapFileError, NMapsError, ValidationError
from nmaps.mapfile import (DocumentKind, document_from_cognitive_map,
                           document_from_relational_map, document_to_map,
                           document_to_ngraph, document_to_nmatrix,
                           document_orderings, load, scenario_state,
                           serialize)
from nmaps.neutro import ThresholdPolicy, format_value
from nmaps.nmatrix import format_nmatrix, nm_classify
from nmaps.ngraph import (adjacency_nmatrix, bipartite_structure,
                          connectivity_classify, gluing_classify,
                          incidence_nmatrix, kirchhoff_nmatrix,
                          neutrosophic_classify, weighted_nmatrix)
from nmaps.relational import (RelationalMap, RelationalState, Side,
                              combine_rmaps, rfind_hidden_pattern)
from nmaps.utils import UNION, logger, set_log_level

_MATRICES = ('adjacency', 'weighted', 'incidence', 'kirchhoff')


def create_parser():
    parser = argparse.ArgumentParser(
        prog='nmaps',
        description="Classify n-graphs and n-matrices and run neutrosophic "
                    "cognitive and relational maps.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true',
                           help="Log engine progress.")
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help="Only log errors.")
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('classify', help="Report the structure of a map file.")
    p.add_argument('path')
    p.add_argument('--format', choices=('text', 'json'), default='text')

    p = sub.add_parser('run', help="Find hidden patterns of scenarios.")
    p.add_argument('path')
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument('--scenario', help="Name of a scenario in the file.")
    which.add_argument('--on', nargs='*', metavar='LABEL',
                       help="Labels switched on in the initial state.")
    which.add_argument('--all-scenarios', action='store_true',
                       help="Run every scenario of the file.")
    which.add_argument('--each-node', action='store_true',
                       help="Run one scenario per node with only it on.")
    p.add_argument('--threshold', type=int, metavar='K')
    p.add_argument('--mode', choices=sorted(mode_names))
    p.add_argument('--trace', action='store_true',
                   help="Print every state, not only the hidden pattern.")
    p.add_argument('--format', choices=('text', 'json'), default='text')

    p = sub.add_parser('combine', help="Sum aligned expert maps.")
    p.add_argument('paths', nargs='+', metavar='path')
    p.add_argument('-o', '--output', help="Write here instead of stdout.")

    p = sub.add_parser('export-matrix', help="Print the matrix of a file.")
    p.add_argument('path')
    p.add_argument('--matrix', choices=_MATRICES)
    p.add_argument('--labels', action='store_true',
                   help="Label rows and columns.")
    return parser


def setup_logging(verbose=False, quiet=False):
    if verbose:
        set_log_level(logging.DEBUG)
    elif quiet:
        set_log_level(logging.ERROR)
    else:
        set_log_level(logging.WARNING)


def resolve_policy(doc, threshold=None, mode=None):
    """Command-line flags, then the file's fields, then the default."""
    policy = doc.policy if doc is not None else threshold_policies['default']
    k = policy.k if threshold is None else threshold
    mode = policy.mode if mode is None else mode_names[mode]
    return ThresholdPolicy(k, mode)


# classify --------------------------------------------------------------------

def _sizes(matrix):
    return ' {} '.format(UNION).join('{}x{}'.format(r, c)
                                     for r, c in matrix.shapes)


def classify_report(doc):
    """Structure report of a document as ordered (key, value) pairs."""
    matrix = document_to_nmatrix(doc)
    kind = nm_classify(matrix)
    report = [('kind', doc.kind.value),
              ('shape', kind.shape.value),
              ('sizes', _sizes(matrix)),
              ('content', kind.content.value)]
    if doc.kind is DocumentKind.MATRIX:
        return report
    g = document_to_ngraph(doc)
    parts = None
    if doc.kind is DocumentKind.RELATIONAL:
        m = document_to_map(doc)
        parts = list(zip(m.domain_labels, m.range_labels))
    bip = bipartite_structure(g, parts)
    if g.k == 2:
        gluing = gluing_classify(g)
        report.append(('gluing', str(gluing)))
        report.append(('neutrosophically glued',
                       'yes' if gluing.neutrosophic else 'no'))
    else:
        report.append(('gluing', 'n/a'))
    report.extend([
        ('neutrosophic', neutrosophic_classify(g).value),
        ('bipartite', 'yes' if bip.is_bipartite_ngraph else 'no'),
        ('strongly biconnected', 'yes' if bip.is_strongly_biconnected
         else 'no'),
        ('connectivity', connectivity_classify(g).value)])
    if doc.kind is DocumentKind.COGNITIVE:
        report.append(('feedback', ', '.join(
            'yes' if c else 'no' for c in is_cyclic(document_to_map(doc)))))
    return report


def cmd_classify(args, out):
    doc = load(args.path)
    report = classify_report(doc)
    if args.format == 'json':
        out.write(json.dumps(dict(report), indent=2, ensure_ascii=False)
                  + '\n')
    else:
        for key, value in report:
            out.write(u'{}: {}\n'.format(key, value))
    return 0


# run -------------------------------------------------------------------------

def _states(component):
    return [format_value(v) for v in component]


def _verdict_json(verdict):
    return {'verdict': 'fixed' if verdict.is_fixed else 'cycle',
            'states': [_states(s) for s in verdict.states]}


def run_scenario(m, name, initial, policy):
    """Run one scenario; returns a JSON-ready dict."""
    if isinstance(m, RelationalMap):
        pattern = rfind_hidden_pattern(m, initial, policy)
        hidden = []
        for i in range(m.k):
            for side in (Side.DOMAIN, Side.RANGE):
                entry = {'component': i + 1, 'name': m.names[i],
                         'side': side.value}
                entry.update(_verdict_json(pattern.verdicts(side)[i]))
                hidden.append(entry)
        trace = [{'side': s.side.value, 'state': [_states(c) for c in s]}
                 for s in pattern.trace]
        return {'scenario': name, 'kind': 'relational',
                'start_side': pattern.start_side.value,
                'iterations': pattern.iterations, 'trace': trace,
                'hidden': hidden}
    pattern = find_hidden_pattern(m, initial, policy)
    hidden = []
    for i, verdict in enumerate(pattern.verdicts):
        entry = {'component': i + 1, 'name': m.names[i]}
        entry.update(_verdict_json(verdict))
        hidden.append(entry)
    trace = [{'state': [_states(c) for c in s]} for s in pattern.trace]
    return {'scenario': name, 'kind': 'cognitive',
            'iterations': pattern.iterations, 'trace': trace,
            'hidden': hidden}


def _format_states(components):
    return ' {} '.format(UNION).join(
        '(' + ' '.join(c) + ')' for c in components)


def format_run(result, trace=False):
    """Text rendering of a :func:`run_scenario` result."""
    lines = ['scenario {}: {} iterations'.format(result['scenario'],
                                                 result['iterations'])]
    if trace:
        for step in result['trace']:
            text = _format_states(step['state'])
            if 'side' in step:
                text = '{}: {}'.format('D' if step['side'] == 'domain'
                                       else 'R', text)
            lines.append(text)
    for entry in result['hidden']:
        states = ['(' + ' '.join(s) + ')' for s in entry['states']]
        if entry['verdict'] == 'fixed':
            verdict = 'FIXED' + states[0]
        else:
            verdict = 'CYCLE({})'.format(', '.join(states))
        where = 'component {}'.format(entry['component'])
        if 'side' in entry:
            where += ' ' + entry['side']
        lines.append('HIDDEN: {} = {}'.format(where, verdict))
    return '\n'.join(lines) + '\n'


def _scenarios(doc, m, args):
    if args.scenario is not None:
        return [(args.scenario, scenario_state(doc, m, args.scenario))]
    if args.on is not None:
        name = ' '.join(args.on) or 'all off'
        if isinstance(m, RelationalMap):
            return [(name, RelationalState.from_on_labels(m, args.on))]
        return [(name, StateVector.from_on_labels(m.node_labels, args.on))]
    if args.each_node:
        if isinstance(m, RelationalMap):
            return [(lab, RelationalState.from_on_labels(m, [lab], side))
                    for side in (Side.DOMAIN, Side.RANGE)
                    for lab in _distinct(m.labels(side))]
        return single_node_scenarios(m)
    if not doc.scenarios:
        raise ValidationError("The file declares no scenarios.")
    return [(s.name, scenario_state(doc, m, s.name)) for s in doc.scenarios]


def _distinct(labels):
    out = []
    for comp in labels:
        for lab in comp:
            if lab not in out:
                out.append(lab)
    return out


def cmd_run(args, out):
    doc = load(args.path)
    if doc.kind not in (DocumentKind.COGNITIVE, DocumentKind.RELATIONAL):
        raise ValidationError("run needs a cognitive or relational map; {} "
                              "is a {} document.".format(args.path,
                                                         doc.kind.value))
    m = document_to_map(doc)
    policy = resolve_policy(doc, args.threshold, args.mode)
    scenarios = _scenarios(doc, m, args)
    if len(scenarios) > 1:
        results = run_in_threads(
            [(name, (lambda s=state, n=name: run_scenario(m, n, s, policy)))
             for name, state in scenarios], prefix='scenario')
    else:
        results = [run_scenario(m, name, state, policy)
                   for name, state in scenarios]
    if args.format == 'json':
        out.write(json.dumps({'runs': results}, indent=2, ensure_ascii=False)
                  + '\n')
    else:
        out.write('\n'.join(format_run(r, trace=args.trace) for r in results))
    return 0


# combine ---------------------------------------------------------------------

def cmd_combine(args, out):
    if len(args.paths) < 2:
        raise ValidationError("combine needs at least two maps.")
    docs = [load(p) for p in args.paths]
    kinds = set(d.kind for d in docs)
    if len(kinds) != 1 or kinds.pop() not in (DocumentKind.COGNITIVE,
                                              DocumentKind.RELATIONAL):
        raise ValidationError("combine needs maps of one kind, all cognitive "
                              "or all relational.")
    maps = [document_to_map(d) for d in docs]
    first = docs[0]
    if first.kind is DocumentKind.RELATIONAL:
        doc = document_from_relational_map(combine_rmaps(maps), first.policy,
                                           first.scenarios)
    else:
        doc = document_from_cognitive_map(combine_cmaps(maps), first.policy,
                                          first.scenarios)
    text = serialize(doc)
    if args.output:
        with io.open(args.output, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info("Wrote {}".format(args.output))
    else:
        out.write(text)
    return 0


# export-matrix ---------------------------------------------------------------

def cmd_export_matrix(args, out):
    doc = load(args.path)
    if args.matrix is None or doc.kind is DocumentKind.MATRIX:
        if args.matrix not in (None, 'adjacency'):
            raise ValidationError("Matrix documents hold their matrix "
                                  "directly.")
        matrix = document_to_nmatrix(doc)
    else:
        g = document_to_ngraph(doc)
        orderings = document_orderings(doc)
        if args.matrix == 'weighted':
            out.write(str(weighted_nmatrix(g, orderings)))
            return 0
        build = {'adjacency': adjacency_nmatrix,
                 'incidence': incidence_nmatrix,
                 'kirchhoff': kirchhoff_nmatrix}[args.matrix]
        matrix = build(g, orderings)
    out.write(format_nmatrix(matrix, with_labels=args.labels))
    return 0


_COMMANDS = {
    'classify': cmd_classify,
    'run': cmd_run,
    'combine': cmd_combine,
    'export-matrix': cmd_export_matrix,
}


def main(argv=None, out=None):
    """Run the command line; returns the exit code."""
    parser = create_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.quiet)
    out = sys.stdout if out is None else out
    try:
        return _COMMANDS[args.command](args, out)
    except MapFileError:
        # Already logged with every diagnostic.
        return 2
    except NMapsError as e:
        logger.error(str(e))
        return 2
    except Exception as e:
        logger.error("Internal error: {}".format(e))
        return 1


if __name__ == '__main__':
    sys.exit(main())
