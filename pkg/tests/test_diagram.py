import warnings

import pytest

from stackwise import DynkinDiagram, adjacent, gcm
from stackwise.errors import InputError


def path():
    return DynkinDiagram.path("abcd")


@pytest.mark.parametrize("a, b, value", [("a", "a", 2), ("a", "b", -1), ("a", "c", 0), ("d", "c", -1)])
def test_gcm_entries(a, b, value):
    D = path()
    idx = D.index
    assert gcm(D)[idx[a]][idx[b]] == value


def test_gcm_symmetric():
    G = gcm(path())
    assert all(G[i][j] == G[j][i] for i in range(4) for j in range(4))


def test_adjacent():
    D = path()
    assert adjacent(D, "a", "b") and adjacent(D, "b", "a")
    assert not adjacent(D, "a", "c")
    assert not adjacent(D, "a", "a")
    with pytest.raises(InputError):
        adjacent(D, "a", "q")


def test_invalid_diagrams():
    with pytest.raises(InputError):
        DynkinDiagram(("a", "a"), frozenset())
    with pytest.raises(InputError):
        DynkinDiagram(("a", "b"), frozenset({frozenset({"a", "z"})}))
    with pytest.raises(InputError):
        DynkinDiagram((), frozenset())


def test_disconnected_diagram_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        DynkinDiagram(("a", "b"), frozenset())
    assert caught
