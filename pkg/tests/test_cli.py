import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from monomial_mult import cli
from monomial_mult.lattice import ideal_from_json, minimalize, parse_ideal


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_mult_paper_example(capsys):
    code, out, _ = run(capsys, "mult", "-r", "1", "x^8, y^6")
    assert code == 0
    assert out == "x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5\n"


def test_mult_principal_one_variable(capsys):
    assert run(capsys, "mult", "-r", "1", "x^5")[1] == "x^5\n"


def test_lct_json(capsys):
    code, out, _ = run(capsys, "lct", "x*y^4*z^6, x^5*y, y^7*z, x^8*z^8")
    doc = json.loads(out)
    assert code == 0
    assert doc["t"] == "68/191" and doc["remoteness"] == "191/68"
    assert doc["witness_facet"] == {"normal": [33, 26, 9], "offset": 191}
    assert doc["trivial_at_one"] is False
    assert out.startswith('{"t":"68/191","remoteness":"191/68",')


def test_lct_unit(capsys):
    doc = json.loads(run(capsys, "lct", "1", "--vars", "2")[1])
    assert doc["t"] == "inf" and doc["remoteness"] == "0"


def test_facets_json(capsys):
    doc = json.loads(run(capsys, "facets", "x^8, y^6")[1])
    assert doc["facets"][0] == {"normal": [3, 4], "offset": 24}
    assert sorted(doc["vertices"]) == [[0, 6], [8, 0]]


def test_closure_and_json_roundtrip(capsys):
    code, out, _ = run(capsys, "closure", "x^3, y^2", "--json")
    assert ideal_from_json(out) == minimalize(2, [(3, 0), (2, 1), (0, 2)])
    out = run(capsys, "mult", "-r", "3/2", "x1^3 x4, x2^2, x3^5 x4^2")[1]
    again = run(capsys, "mult", "-r", "3/2", "x1^3 x4, x2^2, x3^5 x4^2")[1]
    assert out == again
    parse_ideal(out, nvars=4)


def test_json_stdin_and_file(capsys, monkeypatch, tmp_path):
    doc = '{"nvars": 2, "generators": [[8, 0], [0, 6]]}'
    code, out, _ = run(capsys, "mult", "-r", "1", stdin=doc, monkeypatch=monkeypatch)
    assert out.startswith("x^6, ")
    path = tmp_path / "ideal.txt"
    path.write_text("x^8, y^6\n")
    assert run(capsys, "mult", "-r", "1", "-f", str(path))[1] == out


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "mult", "-r", "1", "x^q")[0] == 2
    assert run(capsys, "lct", '{"nvars": 2, "generators": []}')[0] == 3
    assert run(capsys, "plot2d", "x*y*z")[0] == 2
    assert run(capsys, "mult", "-r", "-1", "x")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.run(["mult", "-r", "0.5", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        cli.run(["mult", "x"])  # -r is required


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-r", "3/2", "x*y^4*z^6, x^5*y, y^7*z, x^8*z^8")
    assert code == 0 and out == ""
    code, out, err = run(capsys, "mult", "-r", "1", "--verify", "x^8, y^6")
    assert code == 0 and err == ""


def test_verify_reports_disagreement(capsys, monkeypatch):
    monkeypatch.setattr(cli, "multiplier_ideal", lambda I, r, P=None: minimalize(I.dim, [(0,) * I.dim]))
    code, out, _ = run(capsys, "verify", "x^8, y^6")
    assert code == 4 and "multiplier ideal" in out


def test_plot2d_svg_and_csv(capsys):
    code, out, _ = run(capsys, "plot2d", "x^8, y^6")
    root = ET.fromstring(out)
    assert root.tag.endswith("svg")
    circles = [c for c in root.iter() if c.tag.endswith("circle")]
    assert len(circles) == 10 * 8
    highlighted = [c for c in circles if c.get("fill") == "#c0392b"]
    # lattice points of the window inside J(x^8, y^6)
    J = parse_ideal("x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5")
    assert len(highlighted) == sum(1 for x in range(10) for y in range(8) if (x, y) in J)
    code, out, _ = run(capsys, "plot2d", "x^8, y^6", "--csv")
    lines = out.splitlines()
    assert lines[0] == "x,y,point_class,shifted_class,in_multiplier_ideal"
    assert "4,3,boundary,interior,1" in lines
    assert "3,2,exterior,boundary,0" in lines


def test_search_stream(capsys):
    code, out, _ = run(capsys, "search", "--dim", "2", "--max-exp", "3", "--diagonal")
    records = [json.loads(line) for line in out.splitlines()]
    assert records[-1]["threshold"] == "5/6"
    assert records[-1]["witness_ideal"] == {"nvars": 2, "generators": [[0, 3], [2, 0]]}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monomial_mult", "mult", "-r", "1/2", "x^8, y^6"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "x^2, x*y, y^2\n"
