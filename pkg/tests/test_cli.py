import json
import xml.etree.ElementTree as ET

from origami_lab.cli import main
from origami_lab.io import curve_to_json, write_json
from origami_lab.origami import core_curves

from conftest import DATA

LSHAPE = str(DATA / "l-shape.origami.json")
HEMPEL = str(DATA / "hempel.curvepair.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genus_of_l_shape(capsys):
    assert run(capsys, "genus", LSHAPE)[:2] == (0, "2\n")


def test_pair2origami_rejects_non_filling(capsys, tmp_path, l_shape):
    (h0, _), (v0, _) = core_curves(l_shape)
    write_json(curve_to_json(h0), tmp_path / "a.curve.json")
    write_json(curve_to_json(v0), tmp_path / "b.curve.json")
    code, _, err = run(capsys, "pair2origami", str(tmp_path / "a.curve.json"), str(tmp_path / "b.curve.json"))
    assert code == 2 and "not filling" in err


def test_usage_errors(capsys):
    assert run(capsys, "no-such-command")[0] == 1
    assert run(capsys, "pair2origami", HEMPEL, HEMPEL, HEMPEL)[0] == 1


def test_malformed_json(capsys, tmp_path):
    (tmp_path / "x.json").write_text("{")
    assert run(capsys, "genus", str(tmp_path / "x.json"))[0] == 2


def test_path_commands(capsys, tmp_path):
    out = str(tmp_path / "p.json")
    code, text, _ = run(capsys, "bicorn-path", HEMPEL, "--out", out)
    assert code == 0 and "length 4" in text
    assert run(capsys, "verify-path", out)[0] == 0
    code, text, _ = run(capsys, "--format", "json", "quotients", out)
    assert json.loads(text)["strictly_decreasing"]
    code, text, _ = run(capsys, "--format", "json", "bounds", HEMPEL, "--path", out)
    assert json.loads(text)["upper_rasmussen"] == 4
    assert run(capsys, "validate", out)[0] == 0


def test_render(capsys, tmp_path):
    out = tmp_path / "o.svg"
    assert run(capsys, "render", "--out", str(out), str(DATA / "hempel.origami.json"))[0] == 0
    root = ET.parse(out).getroot()
    assert len(root.findall(".//{http://www.w3.org/2000/svg}rect")) == 21


def test_twist_and_iterate(capsys, tmp_path, four_square):
    (a,), (g,) = core_curves(four_square)
    write_json(curve_to_json(a), tmp_path / "a.curve.json")
    write_json(curve_to_json(g), tmp_path / "g.curve.json")
    code, text, _ = run(
        capsys, "--format", "json", "twist", "--about", str(tmp_path / "a.curve.json"),
        "--direction", "+1", str(tmp_path / "g.curve.json"),
    )
    assert code == 0 and len(json.loads(text)["points"]) == 20
    report = tmp_path / "r.json"
    csvf = tmp_path / "r.csv"
    code, text, _ = run(
        capsys, "iterate-pa", "--n", "2", str(tmp_path / "a.curve.json"), str(tmp_path / "g.curve.json"),
        "--report", str(report), "--emit-csv", str(csvf),
    )
    assert code == 0
    assert [r["i_a"] for r in json.loads(report.read_text())["rows"]] == [4, 68]
    assert csvf.read_text().startswith("n,i_a")
    code, _, err = run(
        capsys, "twist", "--budget", "5", "--about", str(tmp_path / "a.curve.json"), str(tmp_path / "g.curve.json"),
    )
    assert code == 2 and "budget" in err


def test_enumerate_and_cores(capsys):
    code, text, _ = run(capsys, "--format", "json", "enumerate", "5", "--genus", "3")
    assert code == 0 and len(json.loads(text)) == 2
    code, text, _ = run(capsys, "--format", "json", "cores", LSHAPE)
    d = json.loads(text)
    assert len(d["horizontal"]) == 2 and len(d["vertical"]) == 2


def test_greedy_and_growth(capsys, tmp_path):
    code, text, _ = run(capsys, "--format", "json", "greedy", HEMPEL)
    assert code == 0 and json.loads(text)["origami_length_upper"] <= 4
    code, text, _ = run(capsys, "growth", "--n", "1", HEMPEL)
    assert code == 0 and "i_a strictly increasing" in text
