import json

import pytest

from errors import PreconditionError, ShapeError
from excited_lib import enumerate_excited, excited_array, initial_diagram
from hillman_grassl_lib import RppLambda, WeightArray
from print_output_lib import (
    array_from_json, diagram_from_json, load_json_file, print_listing, render_ascii,
    tableau_from_json, to_json_text, write_report,
)
from qseries_lib import QPolynomial
from report_lib import VerificationReport
from shape_lib import Partition, SkewShape
from tableau_lib import minimum_tableau


# --- ASCII ---

def test_render_shape_and_tableau(square_minus_corner):
    assert render_ascii(square_minus_corner) == ". #\n# #"
    assert render_ascii(minimum_tableau(square_minus_corner)) == ". 0\n0 1"
    assert render_ascii(SkewShape.of((1,), (1,))) == ""


def test_render_diagram_and_array(square_minus_corner):
    d = initial_diagram(square_minus_corner)
    assert render_ascii(d) == "X o\no *"
    assert render_ascii(excited_array(d)) == "0 0\n0 1"


def test_render_pads_to_widest_label():
    lines = render_ascii(RppLambda.from_rows(Partition((2, 1)), [[0, 10], [3]])).split("\n")
    assert lines == [" 0 10", " 3"]


def test_render_series_and_report():
    assert render_ascii(QPolynomial.from_exponents([1, 2])) == "q + q^2"
    report = VerificationReport("formulas", "2,2/1", checked=3)
    report.fail("nhlf", 2, 3)
    text = render_ascii(report)
    assert text.startswith("formulas: FAIL (checked 3, skipped 0")
    assert text.endswith("nhlf: expected 2, got 3")


# --- JSON ---

def test_json_text(square_minus_corner):
    d = enumerate_excited(square_minus_corner)[1]
    assert json.loads(to_json_text(d)) == {"outer": [2, 2], "inner": [1], "cells": [[2, 2]], "broken": [[2, 1]]}
    assert json.loads(to_json_text(QPolynomial([1, 1], 1))) == {"degree": 1, "coeffs": ["1", "1"]}


def test_print_listing_json(square_minus_corner, capsys):
    total = print_listing(enumerate_excited(square_minus_corner), 'json', limit=1)
    lines = capsys.readouterr().out.strip().split("\n")
    assert total == 2
    assert len(lines) == 2
    assert json.loads(lines[0])["cells"] == [[1, 1]]
    assert json.loads(lines[-1]) == {"count": 2}


def test_print_listing_ascii(square_minus_corner, capsys):
    print_listing([square_minus_corner], 'ascii')
    assert capsys.readouterr().out == "# 1\n. #\n# #\n\ncount: 1\n"


# --- Input Files ---

def test_load_json_file(tmp_path):
    good = tmp_path / "shape.json"
    good.write_text('{"outer": [2, 2], "inner": [1]}')
    assert load_json_file(str(good)) == {"outer": [2, 2], "inner": [1]}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ShapeError):
        load_json_file(str(bad))
    with pytest.raises(ShapeError):
        load_json_file(str(tmp_path / "missing.json"))


def test_decoders(square_minus_corner):
    second = enumerate_excited(square_minus_corner)[1]
    assert diagram_from_json({"outer": [2, 2], "inner": [1], "cells": [[2, 2]]}) == second
    with pytest.raises(PreconditionError):
        diagram_from_json({"outer": [2, 2], "inner": [1], "cells": [[1, 2]]})
    t = tableau_from_json({"outer": [2, 2], "inner": [1], "rows": [[None, 0], [0, 1]]})
    assert t == minimum_tableau(square_minus_corner)
    with pytest.raises(ShapeError):
        tableau_from_json({"outer": [2, 2], "inner": [1]})
    a = array_from_json({"outer": [2, 2], "values": [[0, 0], [1, 1]]}, RppLambda)
    assert isinstance(a, RppLambda)
    with pytest.raises(ShapeError):
        array_from_json({"values": [[1]]}, WeightArray)
    with pytest.raises(PreconditionError):
        array_from_json({"outer": [2, 2], "values": [[1, 0], [1, 1]]}, RppLambda)


# --- Report Files ---

def test_write_report(tmp_path):
    report = VerificationReport("qnhlf", checked=4)
    path = write_report(report, str(tmp_path / "reports"))
    with open(path, encoding='utf-8') as handle:
        data = json.load(handle)
    assert path.endswith("qnhlf.json")
    assert data["passed"] is True
    assert data["checked"] == 4
