import io
import json

import pytest

from stackwise import catalog
from stackwise.cli import parse_poset, render_poset, run
from stackwise.errors import PosetFormatError

FIG_DOC = """colors: a b c d
edges: a-b b-c c-d
elements: v:a w:c x:b y:d z:c
covers: v<x w<x w<y x<z y<z
"""


def call(*argv, stdin=None):
    out = io.StringIO()
    status = run(list(argv), stdout=out, stdin=io.StringIO(stdin) if stdin is not None else None)
    return status, out.getvalue()


def test_parse_and_roundtrip():
    D, P = parse_poset(FIG_DOC)
    assert P == catalog.dcomplete5()
    assert render_poset(P) == FIG_DOC
    assert render_poset(parse_poset(render_poset(P))[1]) == FIG_DOC


@pytest.mark.parametrize("factory", [lambda: catalog.rectangle(2, 3), lambda: catalog.chain(4),
                                     catalog.ice2_failure])
def test_roundtrip_catalog(factory):
    doc = render_poset(factory())
    assert render_poset(parse_poset(doc)[1]) == doc


@pytest.mark.parametrize("doc, line, column", [
    ("colors: a b\nedges: a-q\n", 2, 8),
    ("colors: a b\nedges: a-b\nelements: x:a y\n", 3, 15),
    ("colors: a\nbogus: 1\n", 2, 1),
    ("colors: a a\n", 1, 11),
])
def test_parse_errors_have_positions(doc, line, column):
    with pytest.raises(PosetFormatError) as info:
        parse_poset(doc)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}: ")


def test_empty_elements():
    status, out = call("check", stdin="colors: a\nedges:\nelements:\ncovers:\n")
    assert status == 2 and "poset must be nonempty" in out


def test_nd_failure_reported():
    doc = "colors: a b\nedges: a-b\nelements: x:a y:a z:b\ncovers: x<y y<z\n"
    status, out = call("check", stdin=doc)
    assert status == 0 and "ND fails witness: x y" in out


def test_classify_and_count():
    assert call("classify", "--catalog", "chain:3") == (0, "minuscule\n")
    assert call("classify", stdin=FIG_DOC) == (0, "d-complete\n")
    assert call("count", "--catalog", "rectangle:2x2", "--m", "2") == (0, "20\n")


def test_expand_two_flag_word():
    status, out = call("expand", "--catalog", "dcomplete5", "--m", "2", "--word", "d,c,d,b,c,a")
    assert status == 0
    assert out.splitlines() == ["2{vwxy; wy}", "1 * [vwxy;wy]"]


def test_stackwise_command(tmp_path):
    path = tmp_path / "fig.poset"
    path.write_text(FIG_DOC)
    status, out = call("stackwise", str(path), "--m", "4", "--flag", "vwxy;vw;vw;w")
    assert status == 0
    assert "word: <d,b,c^4,a^3>" in out and "leading: 12{vwxy; vw; vw; w}" in out


def test_json_mode():
    status, out = call("expand", "--catalog", "dcomplete5", "--m", "2", "--word", "d,c,d,b,c,a", "--json")
    data = json.loads(out)
    assert data["status"] == 0
    assert data["expansion"] == [{"flag": ["vwxy", "wy"], "coefficient": "1"}]


def test_mu_output():
    status, out = call("mu", "--catalog", "dcomplete5")
    lines = [line.strip() for line in out.splitlines()]
    assert "vwxy: 0, 1, -1, 1" in lines
    assert lines[-1] == "highest weight: 0, 0, 1, 0"


def test_verify_rep_statuses():
    assert call("verify-rep", "--catalog", "dcomplete5")[0] == 0
    status, out = call("verify-rep", "--catalog", "dcomplete5", "--algebra", "kac-moody")
    assert status == 1 and "XY" in out


def test_dependence_exit_status():
    doc = render_poset(catalog.antichain_ec_failure())
    status, out = call("certify", "--m-max", "2", "--random", "3", stdin=doc)
    assert status == 1 and "LinearDependence" in out


def test_input_errors():
    assert call("count", "--catalog", "nope", "--m", "1")[0] == 2
    assert call("seshadri", "--catalog", "dcomplete5", "--m", "1")[0] == 2
    assert call("expand", "--catalog", "dcomplete5", "--m", "2", "--word", "q")[0] == 2
    assert call("lattice", "--catalog", "dcomplete5", "--extension", "z y x w v")[0] == 2


def test_deterministic_output():
    args = ("certify", "--catalog", "rectangle:2x2", "--m-max", "2", "--random", "30", "--seed", "7")
    assert call(*args) == call(*args)


def test_other_commands_run():
    for cmd in (["lattice"], ["extensions"], ["seshadri", "--m", "2"],
                ["verify-identities", "--pmax", "1", "--qmax", "2", "--rmax", "1", "--m", "2"]):
        status, out = call(cmd[0], "--catalog", "chain:2", *cmd[1:])
        assert status == 0 and out


def test_failure_catalog_names():
    status, out = call("check", "--catalog", "antichain-ec-failure")
    assert status == 0 and "EC fails" in out
    assert call("classify", "--catalog", "ucb1-failure") == (0, "ec-nd-only\n")
    status, out = call("expand", "--catalog", "ucb1-failure", "--m", "2", "--word", "b,a,c,b")
    assert status == 1 and "SpanViolation" in out
