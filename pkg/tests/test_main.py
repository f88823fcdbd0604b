import json

import pytest

import main


def run(capsys, *argv):
    code = main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().split("\n")]


# --- count ---

def test_count_all_methods_agree(capsys):
    code, out, _ = run(capsys, 'count', '--outer', '5,5,3,3,2', '--inner', '2,2')
    assert code == 0
    result = json.loads(out)
    assert result["shape"] == {"outer": [5, 5, 3, 3, 2], "inner": [2, 2]}
    assert result["counts"] == {"brute": "445445", "nhlf": "445445", "oof": "445445", "minimal": "445445"}
    assert result["agree"] is True


def test_count_straight_shape_ascii(capsys):
    code, out, _ = run(capsys, 'count', '--outer', '3,2,1', '--method', 'hlf', '--format', 'ascii')
    assert code == 0
    assert out.strip() == "16"


def test_count_disconnected_shape_skips_minimal(capsys):
    code, out, _ = run(capsys, 'count', '--outer', '2,1', '--inner', '1')
    assert code == 0
    assert set(json.loads(out)["counts"]) == {"brute", "nhlf", "oof"}


@pytest.mark.parametrize("argv", [
    ['count', '--outer', '2,3'],
    ['count', '--outer', '2,2', '--inner', '3'],
    ['count', '--outer', '2,2', '--inner', '1', '--method', 'hlf'],
    ['count', '--outer', '2,1', '--inner', '1', '--method', 'minimal'],
    ['verify', 'commutation', '--inner', '1'],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "Error:" in err


@pytest.mark.parametrize("argv", [[], ['bogus'], ['enumerate', 'nothing', '--outer', '1']])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


# --- enumerate ---

def test_enumerate_excited(capsys):
    code, out, _ = run(capsys, 'enumerate', 'excited', '--outer', '5,5,3,3,2', '--inner', '2,2')
    assert code == 0
    lines = json_lines(out)
    assert lines[-1] == {"count": 6}
    assert lines[0]["cells"] == [[1, 1], [1, 2], [2, 1], [2, 2]]


@pytest.mark.parametrize("family, count", [
    ('excited', 2), ('ssyt-min', 2), ('sf', 2), ('oot', 2), ('broken', 2), ('ne-excited', 2),
])
def test_enumerate_families(capsys, family, count):
    code, out, _ = run(capsys, 'enumerate', family, '--outer', '2,2', '--inner', '1')
    assert code == 0
    assert json_lines(out)[-1] == {"count": count}


def test_enumerate_ascii_with_limit(capsys):
    code, out, _ = run(capsys, 'enumerate', 'ssyt-min', '--outer', '2,2', '--inner', '1',
                       '--format', 'ascii', '--limit', '1')
    assert code == 0
    assert out == "# 1\n. 0\n0 1\n\ncount: 2\n"


# --- verify ---

def test_verify_single_shape(capsys):
    code, out, _ = run(capsys, 'verify', 'formulas', '--outer', '3,3', '--inner', '1')
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "formulas"
    assert report["passed"] is True


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, 'verify', 'term-counts', '--sweep-max-size', '4', '--format', 'ascii')
    assert code == 0
    assert out.startswith("term-counts: PASS")


def test_verify_term_counts_with_empty_row(capsys):
    code, out, _ = run(capsys, 'verify', 'term-counts', '--outer', '3,1', '--inner', '2,1')
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_straight_additivity_sweep(capsys):
    code, out, _ = run(capsys, 'verify', 'straight-additivity', '--sweep-max-size', '3', '--format', 'ascii')
    assert code == 0
    assert out.startswith("straight-additivity: PASS")


def test_verify_disconnected_shape_is_unsupported(capsys):
    code, _, _ = run(capsys, 'verify', 'gamma-theta', '--outer', '2,1', '--inner', '1')
    assert code == 2


# --- map and hg ---

def test_map_phi_and_inverse(capsys, tmp_path):
    diagram = tmp_path / "diagram.json"
    diagram.write_text(json.dumps({"outer": [2, 2], "inner": [1], "cells": [[2, 2]]}))
    code, out, _ = run(capsys, 'map', 'phi', '--input', str(diagram))
    assert code == 0
    tableau = json.loads(out)
    assert tableau["rows"] == [[None, 0], [1, 1]]

    tableau_file = tmp_path / "tableau.json"
    tableau_file.write_text(out)
    code, out, _ = run(capsys, 'map', 'inverse', '--input', str(tableau_file))
    assert code == 0
    assert json.loads(out)["cells"] == [[2, 2]]


def test_map_rejects_non_excited_cells(capsys, tmp_path):
    diagram = tmp_path / "diagram.json"
    diagram.write_text(json.dumps({"outer": [2, 2], "inner": [1], "cells": [[1, 2]]}))
    code, _, _ = run(capsys, 'map', 'phi', '--input', str(diagram))
    assert code == 2


def test_hg_apply_and_invert(capsys, tmp_path):
    rpp = tmp_path / "rpp.json"
    rpp.write_text(json.dumps({"outer": [2, 2], "values": [[1, 1], [1, 2]]}))
    code, out, _ = run(capsys, 'hg', 'apply', '--input', str(rpp))
    assert code == 0
    assert json.loads(out) == {"outer": [2, 2], "values": [[1, 0], [0, 2]]}

    array = tmp_path / "array.json"
    array.write_text(out)
    code, out, _ = run(capsys, 'hg', 'invert', '--input', str(array), '--format', 'ascii')
    assert code == 0
    assert out == "1 1\n1 2\n"


def test_hg_rejects_non_rpp(capsys, tmp_path):
    rpp = tmp_path / "rpp.json"
    rpp.write_text(json.dumps({"outer": [2, 2], "values": [[2, 1], [1, 2]]}))
    code, _, _ = run(capsys, 'hg', 'apply', '--input', str(rpp))
    assert code == 2
