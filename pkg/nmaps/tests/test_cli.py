"""Tests for nmaps.cli.py"""
from __future__ import division, print_function, absolute_import
import io
import json
import logging

from nmaps.cli import main, resolve_policy, setup_logging
from nmaps.mapfile import (ScenarioBlock, document_from_relational_map, dump,
                           load, parse)
from nmaps.neutro import ThresholdMode
from nmaps.tests.utils import child_labour_bimap, data_path, infanticide_text
from nmaps.utils import logger, set_log_level

fcbm_matrix = u"""\
0 1 0 1 1
0 0 -1 0 0
1 -1 0 0 0
1 0 0 0 -1
0 0 0 -1 0
---
0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 1 1 0
0 0 0 0 0 1 1 0 0
0 0 0 0 0 1 0 0 1
0 0 0 0 0 0 0 0 0
0 0 1 1 0 0 0 0 0
0 1 1 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0
"""

frbm_matrix = u"""\
0 0 0 0 1
1 0 0 0 0
0 0 1 0 0
1 0 0 0 0
0 1 0 0 0
0 0 0 0 1
1 0 0 0 0
0 0 0 1 0
---
0 0 0 0 1
0 0 1 1 0
0 0 1 0 0
1 1 0 0 0
0 0 1 0 0
0 0 0 1 0
0 0 0 0 1
0 0 0 0 1
"""

ncbm_child_labour_matrix = u"""\
0 I -1 1 1 0 0
I 0 I 0 0 0 0
1 I 0 0 I 0 0
1 0 0 0 0 0 0
1 0 0 0 0 0 0
0 0 0 0 I 0 -1
-1 0 0 0 0 0 0
---
0 1 -1 1 I 0 -1
0 0 0 0 I 0 I
-1 0 0 0 0 0 0
1 0 0 0 0 0 0
I I 0 0 0 0 0
0 0 0 1 0 0 -1
-1 0 0 0 0 -1 0
"""


def _main(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def _write(tmpdir, name, text):
    path = str(tmpdir.join(name))
    with io.open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    return path


def test_export_matrix():
    code, text = _main(['export-matrix', data_path('fcbm_business_employee'
                                                   '.nmap')])
    assert code == 0
    assert text == fcbm_matrix

    code, text = _main(['export-matrix', data_path('frbm_employee.nmap')])
    assert text == frbm_matrix

    code, text = _main(['export-matrix', data_path('ncbm_child_labour.nmap')])
    assert code == 0
    assert text == ncbm_child_labour_matrix

    code, text = _main(['export-matrix',
                        data_path('nrm_female_infanticide.nmap')])
    assert text == infanticide_text

    code, text = _main(['export-matrix', '--labels',
                        data_path('nrm_female_infanticide.nmap')])
    lines = text.splitlines()
    assert lines[0] == u'# R1 R2 R3 R4 R5'
    assert lines[1] == u'D1: I 0 1 0 1'


def test_export_graph_matrices(tmpdir):
    path = _write(tmpdir, 'g.nmap', u'[component "G"]\nnodes = a b c\n'
                  u'a -- b\nb ~~ c\n')
    code, text = _main(['export-matrix', path])
    assert code == 0
    assert text == u"0 1 0\n1 0 I\n0 I 0\n"

    path = _write(tmpdir, 'd.nmap', u'[component "G"]\nnodes = a b c\n'
                  u'a -> b\nb -> c\na -> c\n')
    code, text = _main(['export-matrix', '--matrix', 'kirchhoff', path])
    assert code == 0
    assert text == u"0 -1 -1\n0 1 -1\n0 0 2\n"

    # The Kirchhoff matrix needs directed components.
    path = _write(tmpdir, 'u.nmap', u'[component "G"]\nnodes = a b\na -- b\n')
    code, _ = _main(['export-matrix', '--matrix', 'kirchhoff', path])
    assert code == 2


def test_classify():
    code, text = _main(['classify', '--format', 'json',
                        data_path('frbm_employee.nmap')])
    assert code == 0
    report = json.loads(text)
    assert report['kind'] == 'relational'
    assert report['shape'] == 'Rectangular'
    assert report['sizes'] == u'8x5 ∪ 8x5'
    assert report['content'] == 'Fuzzy'
    assert report['gluing'] == 'Disjoint'
    assert report['neutrosophically glued'] == 'no'
    assert report['neutrosophic'] == 'NonNeutrosophic'
    assert report['bipartite'] == 'yes'
    assert report['strongly biconnected'] == 'no'
    assert report['connectivity'] == 'Disconnected'

    code, text = _main(['classify', data_path('fcbm_business_employee.nmap')])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == 'kind: cognitive'
    assert 'shape: MixedSquare' in lines
    assert 'feedback: yes, yes' in lines

    code, text = _main(['classify', data_path('frtm_employee.nmap')])
    assert 'gluing: n/a' in text.splitlines()


def test_run_cognitive():
    path = data_path('fcbm_business_employee.nmap')
    code, text = _main(['run', path, '--scenario', 'C1 and E2'])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == 'scenario C1 and E2: 7 iterations'
    assert lines[1].startswith('HIDDEN: component 1 = CYCLE(')
    assert lines[2] == 'HIDDEN: component 2 = FIXED(0 1 1 1 0 1 1 1 1)'

    code, text = _main(['run', path, '--on', 'C1', 'E2', '--format', 'json'])
    assert code == 0
    run = json.loads(text)['runs'][0]
    assert run['scenario'] == 'C1 E2'
    assert run['iterations'] == 7
    assert len(run['trace']) == 8
    assert [h['verdict'] for h in run['hidden']] == ['cycle', 'fixed']
    assert run['hidden'][1]['name'] == 'employee'

    code, text = _main(['run', path, '--each-node', '--format', 'json'])
    assert code == 0
    assert len(json.loads(text)['runs']) == 5 + 9


def test_run_relational():
    path = data_path('nrm_female_infanticide.nmap')
    code, text = _main(['run', path, '--all-scenarios', '--trace'])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == 'scenario social stigma: 2 iterations'
    assert lines[1] == 'R: (0 1 0 0 0)'
    assert 'HIDDEN: component 1 domain = FIXED(1 1 1 1 1 1 I)' in lines
    assert 'HIDDEN: component 1 range = FIXED(1 1 1 1 1)' in lines

    code, text = _main(['run', path, '--on', 'R2', '--format', 'json'])
    run = json.loads(text)['runs'][0]
    assert run['kind'] == 'relational'
    assert run['start_side'] == 'range'
    assert run['trace'][0] == {'side': 'range',
                               'state': [['0', '1', '0', '0', '0']]}


def test_run_relational_chain(tmpdir):
    # The child labour concepts C1..C7 are on both sides of the map.
    doc = document_from_relational_map(
        child_labour_bimap(), scenarios=[ScenarioBlock('G1 and C3',
                                                       ('G1', 'C3'))])
    path = str(tmpdir.join('child_labour.nmap'))
    dump(doc, path)

    code, text = _main(['run', path, '--scenario', 'G1 and C3'])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == 'scenario G1 and C3: 2 iterations'
    assert 'HIDDEN: component 1 domain = FIXED(1 0 0 0)' in lines
    assert 'HIDDEN: component 2 domain = FIXED(0 1 1 0 1 1 1)' in lines
    assert 'HIDDEN: component 1 range = FIXED(1 0 0 0 0 1 0)' in lines
    assert 'HIDDEN: component 2 range = FIXED(1 1 0 0 1)' in lines

    code, text = _main(['run', path, '--on', 'C3', 'P1', '--format', 'json'])
    assert code == 0
    assert json.loads(text)['runs'][0]['start_side'] == 'range'
    assert _main(['run', path, '--on', 'G1', 'P1'])[0] == 2


def test_run_errors(tmpdir):
    path = data_path('fcbm_business_employee.nmap')
    assert _main(['run', path, '--scenario', 'missing'])[0] == 2
    assert _main(['run', path, '--on', 'Z9'])[0] == 2
    assert _main(['run', data_path('bigraph_adjacency.nmap'),
                  '--all-scenarios'])[0] == 2

    broken = _write(tmpdir, 'broken.nmap', u'kind = cognitive\n'
                    u'[component "A"]\nnodes = a\na -> b\n')
    assert _main(['run', broken, '--on', 'a'])[0] == 2
    assert _main(['classify', str(tmpdir.join('absent.nmap'))])[0] == 2
    latin = str(tmpdir.join('latin.nmap'))
    with io.open(latin, 'wb') as f:
        f.write(b'kind = graph\n[component "caf\xe9"]\nnodes = a\n')
    assert _main(['classify', latin])[0] == 2


def test_resolve_policy():
    doc = load(data_path('nrbm_hiv_patients.nmap'))
    assert resolve_policy(doc).mode is ThresholdMode.INDET_DOMINANT
    policy = resolve_policy(doc, threshold=2, mode='real')
    assert policy.k == 2 and policy.mode is ThresholdMode.REAL_DOMINANT
    assert resolve_policy(None).k == 1


def test_combine(tmpdir):
    a = _write(tmpdir, 'a.nmap', u'kind = cognitive\n[component "A"]\n'
               u'nodes = a b c\na -> b\nb -> c : I\n')
    b = _write(tmpdir, 'b.nmap', u'kind = cognitive\n[component "A"]\n'
               u'nodes = a b c\na -> b : -1\nb -> c : I\n')
    code, text = _main(['combine', a, b])
    assert code == 0
    doc = parse(text).document
    edges = doc.components[0].edges
    assert len(edges) == 1, "Opposite weights must cancel."
    assert (edges[0].u, edges[0].v) == ('b', 'c')
    assert str(edges[0].weight) == '2I'

    out = str(tmpdir.join('sum.nmap'))
    assert _main(['combine', a, a, '--output', out])[0] == 0
    assert load(out).components[0].edges[0].weight.real == 2

    c = _write(tmpdir, 'c.nmap', u'kind = cognitive\n[component "A"]\n'
               u'nodes = a b d\na -> b\n')
    assert _main(['combine', a, c])[0] == 2
    assert _main(['combine', a])[0] == 2
    assert _main(['combine', a, data_path('frbm_employee.nmap')])[0] == 2


def test_setup_logging():
    setup_logging(verbose=True)
    assert logger.level == logging.DEBUG
    setup_logging(quiet=True)
    assert logger.level == logging.ERROR
    set_log_level('warning')
    assert logger.level == logging.WARNING
    assert _main(['-q', 'classify', data_path('frbm_employee.nmap')])[0] == 0
    setup_logging()
    assert logger.level == logging.WARNING
