"""Small named posets used throughout the tests and the CLI ``--catalog`` option."""
from __future__ import annotations

from .diagram import DynkinDiagram
from .errors import InputError
from .poset import ColoredPoset


def dcomplete5() -> ColoredPoset:
    """Five-element d-complete poset over the path a-b-c-d.

    v(a), w(c) minimal; x(b) covers v and w; y(d) covers w; z(c) covers x and y.
    """
    diagram = DynkinDiagram.path("abcd")
    coloring = {"v": "a", "w": "c", "x": "b", "y": "d", "z": "c"}
    covers = [("v", "x"), ("w", "x"), ("w", "y"), ("x", "z"), ("y", "z")]
    return ColoredPoset("vwxyz", covers, coloring, diagram)


def chain(n: int) -> ColoredPoset:
    """Chain x1 < ... < xn colored a1, ..., an over type A_n."""
    if n < 1:
        raise InputError("chain length must be positive")
    colors = [f"a{i}" for i in range(1, n + 1)]
    elements = [f"x{i}" for i in range(1, n + 1)]
    return ColoredPoset(elements, list(zip(elements, elements[1:])),
                        dict(zip(elements, colors)), DynkinDiagram.path(colors))


def rectangle(k: int, l: int) -> ColoredPoset:
    """k-by-l rectangle with componentwise order; (i, j) gets color a_{k-i+j} of A_{k+l-1}."""
    if k < 1 or l < 1:
        raise InputError("rectangle sides must be positive")
    colors = [f"a{i}" for i in range(1, k + l)]
    name = {(i, j): f"r{i}{j}" if k < 10 and l < 10 else f"r{i}_{j}"
            for i in range(1, k + 1) for j in range(1, l + 1)}
    covers = []
    for (i, j), x in name.items():
        if i < k:
            covers.append((x, name[i + 1, j]))
        if j < l:
            covers.append((x, name[i, j + 1]))
    coloring = {x: f"a{k - i + j}" for (i, j), x in name.items()}
    return ColoredPoset(list(name.values()), covers, coloring, DynkinDiagram.path(colors))


def antichain_ec_failure() -> ColoredPoset:
    """r(a) below two incomparable b-colored elements x, y: breaks EC."""
    diagram = DynkinDiagram.path("ab")
    return ColoredPoset("rxy", [("r", "x"), ("r", "y")], {"r": "a", "x": "b", "y": "b"}, diagram)


def ice2_failure() -> ColoredPoset:
    """Three-chain colored c, b, c over b-c: breaks ICE2."""
    diagram = DynkinDiagram.path("bc")
    return ColoredPoset(["p1", "p2", "p3"], [("p1", "p2"), ("p2", "p3")],
                        {"p1": "c", "p2": "b", "p3": "c"}, diagram)


def ucb1_failure() -> ColoredPoset:
    """x(b) covered by y(a) and z(c) over a-b-c: two adjacent colors above the top b."""
    diagram = DynkinDiagram.path("abc")
    return ColoredPoset("xyz", [("x", "y"), ("x", "z")], {"x": "b", "y": "a", "z": "c"}, diagram)


FIXED = {
    "dcomplete5": dcomplete5,
    "antichain-ec-failure": antichain_ec_failure,
    "ice2-failure": ice2_failure,
    "ucb1-failure": ucb1_failure,
}


def from_name(text: str) -> ColoredPoset:
    """Parse a fixed name (see ``FIXED``), ``chain:N`` or ``rectangle:KxL``."""
    name, _, arg = text.partition(":")
    try:
        if name in FIXED and not arg:
            return FIXED[name]()
        if name == "chain":
            return chain(int(arg))
        if name == "rectangle":
            k, l = arg.lower().split("x")
            return rectangle(int(k), int(l))
    except ValueError as exc:
        raise InputError(f"bad catalog argument in {text!r}") from exc
    names = ", ".join(FIXED)
    raise InputError(f"unknown catalog poset {text!r}; try {names}, chain:N, rectangle:KxL")
