import json

import pytest

from coverforge import analyze, build_diagram, compare, errors, export_diagram, load_diagram, negative_stabilize, \
    write_diagram, write_report


def test_json_export(trefoil):
    d = build_diagram(trefoil, 3)

    text = export_diagram(d)
    data = json.loads(text)

    assert data['params'] == {'p': 3, 'n': 2}
    assert data['components'][0] == {'sheet': 2, 'strand': 1, 'time': 0, 'contact': -1}
    assert load_diagram(text) == d
    assert export_diagram(d) == text


def test_dot_export(trefoil):
    text = export_diagram(build_diagram(trefoil, 2), 'dot')

    assert text.splitlines() == [
        'graph surgery_p2_n2 {',
        '  c0 [label="a1^1 t=0 (-2)"];',
        '  c1 [label="a1^1 t=1 (-2)"];',
        '  c0 -- c1 [label="-1"];',
        '}',
    ]


def test_unknown_format(trefoil):
    with pytest.raises(errors.ExportFormatError):
        export_diagram(build_diagram(trefoil, 2), 'svg')


@pytest.mark.parametrize('text', [
    'not json',
    '{"params": {"p": 2, "n": 2}}',
    '{"params": {"p": 1, "n": 2}, "components": [], "linking": []}',
    '{"params": {"p": 2, "n": 2}, "components": [], "linking": [[0]]}',
])
def test_load_diagram_errors(text):
    with pytest.raises(errors.ExportFormatError):
        load_diagram(text)


def test_write_diagram_creates_directories(tmp_path, trefoil):
    path = tmp_path / 'diagrams' / 'trefoil.dot'

    write_diagram(build_diagram(trefoil, 2), str(path), 'dot')

    assert path.read_text().startswith('graph surgery_p2_n2 {')


def test_write_report(tmp_path, trefoil):
    report_path = tmp_path / 'reports' / 'trefoil.json'
    verdict_path = tmp_path / 'verdict.json'

    write_report(analyze(trefoil, 2), str(report_path))
    write_report(compare(trefoil, negative_stabilize(trefoil), 2), str(verdict_path))

    assert json.loads(report_path.read_text())['h1_factors'] == [3]
    assert json.loads(verdict_path.read_text())['conclusion'] == 'invariants_distinguish'
