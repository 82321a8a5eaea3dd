from fractions import Fraction
from pathlib import Path

import pytest

from legendrian import io
from legendrian.circles import Circle, LineOrInfinity
from legendrian.cli import main
from legendrian.core import E3, E4, Lagrangian
from legendrian.flags import sample_positive_tuple

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_polygon_doc_round_trip():
    P = io.polygon_from_doc(io.load_file(FIXTURES / "octagon.json"))
    again = io.polygon_from_doc(io.loads(io.dumps(io.polygon_to_doc(P))))
    assert again == P
    assert io.polygon_to_doc(P)["sign"] == "-"


def test_sign_formats():
    doc = {"vertices": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]}
    for raw in ("-", "-1", -1):
        assert io.polygon_from_doc({**doc, "sign": raw}).sign == -1
    for raw in ("+", "+1", 1):
        assert io.polygon_from_doc({**doc, "sign": raw}).sign == 1
    with pytest.raises(io.ParseError, match=r"\$\.sign"):
        io.polygon_from_doc({**doc, "sign": 0})


def test_parse_errors_locate_the_field():
    with pytest.raises(io.ParseError, match=r"line 1, column"):
        io.loads("{ nope")
    with pytest.raises(io.ParseError, match=r"\$\.vertices\[1\]\[2\].*float"):
        io.polygon_from_doc({"sign": "-", "vertices": [[1, 0, 0, 0], [0, 1, 0.5, 0]]})
    with pytest.raises(io.ParseError, match=r"\$\.vertices\[0\]"):
        io.polygon_from_doc({"sign": "-", "vertices": [[1, 0, 0]]})
    with pytest.raises(io.ParseError, match="missing field 'vertices'"):
        io.polygon_from_doc({"sign": "-"})
    with pytest.raises(io.ParseError, match=r"\$\.flags\[0\]"):
        io.flags_from_doc({"flags": [[[1, 0, 0, 0], [0, 0, 0, 1]]]})


def test_flags_and_circles_docs():
    flags = sample_positive_tuple(4, 3)
    assert io.flags_from_doc(io.loads(io.dumps(io.flags_to_doc(flags)))) == flags
    circles = (Circle(Fraction(1, 2), 0, -3), LineOrInfinity(Lagrangian(E3, E4)))
    back = io.circles_from_doc(io.loads(io.dumps(io.circles_to_doc(circles))))
    assert back[0] == circles[0]
    assert back[1].lagrangian == circles[1].lagrangian


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", FIXTURES / "quadrilateral.json")
    assert code == 0
    assert "transverse: positive-transverse" in out
    assert "generic: yes" in out
    code, out, _ = run(capsys, "check", FIXTURES / "octagon.json")
    assert "generic: no" in out and "decreasing curvature: no" in out and "positive: no" in out
    code, out, _ = run(capsys, "check", FIXTURES / "crossed_quadrilateral.json")
    assert "transverse: no" in out


def test_check_reports_invalid_input(capsys):
    code, _, err = run(capsys, "check", FIXTURES / "broken.json")
    assert code == 2 and "not Legendrian" in err
    code, _, err = run(capsys, "check", FIXTURES / "missing.json")
    assert code == 2


def test_maslov_command(capsys):
    code, out, _ = run(capsys, "maslov", FIXTURES / "nested_circles.json")
    assert code == 0 and out.strip() == "1"


def test_flags_of_and_polygon_of(capsys, tmp_path):
    code, out, _ = run(capsys, "flags-of", FIXTURES / "quadrilateral.json")
    assert code == 0
    flags_file = tmp_path / "flags.json"
    flags_file.write_text(out)
    code, out, _ = run(capsys, "polygon-of", flags_file)
    assert code == 0
    P = io.polygon_from_doc(io.loads(out))
    assert P.n == 4 and P.sign == -1


def test_sample_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "sample", "--k", 5, "--seed", 7, "--out", a)[0] == 0
    assert run(capsys, "sample", "--k", 5, "--seed", 7, "--out", b)[0] == 0
    for name in ("flags.json", "polygon.json", "polygon.svg"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    code, out, _ = run(capsys, "check", a / "polygon.json")
    assert "positive: yes" in out and "decreasing curvature: yes" in out


def test_translate_and_render(capsys, tmp_path):
    code, out, _ = run(capsys, "translate", FIXTURES / "octagon.json", "--r=-3/2", "--frames", 3, "--out", tmp_path)
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["frame_1.svg", "frame_2.svg", "frame_3.svg"]
    assert "r = -3/2" in out
    svg = tmp_path / "one.svg"
    assert run(capsys, "render", FIXTURES / "quadrilateral.json", "--out", svg)[0] == 0
    assert svg.read_text().startswith("<")


def test_veronese_command(capsys, tmp_path):
    code, _, _ = run(capsys, "veronese", "--samples", 10, "--polygon-k", 5, "--out", tmp_path)
    assert code == 0
    P = io.polygon_from_doc(io.load_file(tmp_path / "polygon.json"))
    assert P.n == 10
    assert (tmp_path / "osculating.svg").read_text().count("<circle") >= 9
