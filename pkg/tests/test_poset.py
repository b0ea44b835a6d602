import pytest

from conftest import CATALOG, EXT
from oracles import all_ideals, count_linear_extensions
from stackwise import ColoredPoset, DynkinDiagram, catalog, check_axiom, classify
from stackwise.errors import InputError, PosetError
from stackwise.poset import AXIOMS, violates


@pytest.mark.parametrize("name, label", [
    ("dcomplete5", "d-complete"), ("chain1", "minuscule"), ("chain2", "minuscule"),
    ("chain3", "minuscule"), ("rect22", "minuscule"), ("rect23", "minuscule"),
])
def test_classification(name, label):
    assert classify(CATALOG[name]()).label == label


def test_failure_posets_are_not_d_complete():
    assert classify(catalog.antichain_ec_failure()).label == "general"
    assert classify(catalog.ice2_failure()).label == "ec-nd-only"


def test_dcomplete5_fails_lcb1_only():
    P = catalog.dcomplete5()
    failing = [a for a in AXIOMS if not check_axiom(P, a).holds]
    assert failing == ["LCB1"]


def test_witnesses_replay():
    for P in (catalog.antichain_ec_failure(), catalog.ice2_failure(), catalog.dcomplete5()):
        for axiom in AXIOMS:
            report = check_axiom(P, axiom)
            if not report.holds:
                assert violates(P, axiom, report.witness)


def test_nd_failure_witness():
    D = DynkinDiagram.path("ab")
    P = ColoredPoset("xyz", [("x", "y"), ("y", "z")], {"x": "a", "y": "a", "z": "b"}, D)
    report = check_axiom(P, "ND")
    assert not report.holds and report.witness == ("x", "y")
    assert str(report) == "ND fails witness: x y"


def test_unknown_axiom():
    with pytest.raises(InputError):
        check_axiom(catalog.dcomplete5(), "XYZ")


@pytest.mark.parametrize("name", list(CATALOG))
def test_enumerate_ideals_matches_oracle(name):
    P = CATALOG[name]()
    assert sorted(map(sorted, P.enumerate_ideals())) == sorted(map(sorted, all_ideals(P)))


def test_dcomplete5_ideals_in_gravity_order():
    P = catalog.dcomplete5()
    names = [P.ideal_name(i) for i in P.enumerate_ideals(EXT)]
    assert names == ["vwxyz", "vwxy", "vwx", "vwy", "vw", "wy", "v", "w", "∅"]


@pytest.mark.parametrize("name", ["dcomplete5", "chain3", "rect22", "rect23"])
def test_linear_extensions(name):
    P = CATALOG[name]()
    exts = list(P.linear_extensions())
    assert len(exts) == len(set(exts)) == count_linear_extensions(P)
    assert all(P.is_extension(e) for e in exts)


def test_dcomplete5_has_five_extensions():
    assert len(list(catalog.dcomplete5().linear_extensions())) == 5


def test_default_extension_is_declaration_order():
    assert catalog.dcomplete5().default_extension() == EXT


def test_check_extension_rejects_non_extensions():
    with pytest.raises(InputError):
        catalog.dcomplete5().check_extension("xvwyz")
    with pytest.raises(InputError):
        catalog.dcomplete5().check_extension("vwxy")


@pytest.mark.parametrize("kwargs, message", [
    (dict(elements="", covers=[], coloring={}), "nonempty"),
    (dict(elements="xy", covers=[("x", "y"), ("y", "x")], coloring={"x": "a", "y": "b"}), "cycle"),
    (dict(elements="xy", covers=[], coloring={"x": "a", "y": "b"}), "disconnected"),
    (dict(elements="xy", covers=[("x", "y")], coloring={"x": "a", "y": "a"}), "surjective"),
    (dict(elements="xyz", covers=[("x", "y"), ("y", "z"), ("x", "z")],
          coloring={"x": "a", "y": "b", "z": "a"}), "implied"),
])
def test_invalid_posets(kwargs, message):
    with pytest.raises(PosetError, match=message):
        ColoredPoset(diagram=DynkinDiagram.path("ab"), **kwargs)


def test_parse_ideal():
    P = catalog.dcomplete5()
    assert P.parse_ideal("vwxy") == frozenset("vwxy")
    assert P.parse_ideal("0") == frozenset()
    assert P.parse_ideal("∅") == frozenset()
    assert P.parse_ideal("w, v") == frozenset("vw")
    with pytest.raises(InputError):
        P.parse_ideal("x")  # not an ideal
    with pytest.raises(InputError):
        P.parse_ideal("vq")


def test_dual_reverses_order():
    P = catalog.dcomplete5()
    Q = P.dual()
    assert Q.lt("z", "v") and not Q.lt("v", "z")
    assert Q.dual() == P
