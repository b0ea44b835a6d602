"""Colored posets: validation, order ideals, linear extensions and the coloring axioms.

Ideals are plain ``frozenset`` objects of element names. Their canonical text
form lists the members in declaration order with no separators (``"vwxy"``),
and ``"∅"`` when empty.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional

from .diagram import DynkinDiagram
from .errors import InputError, PosetError

Ideal = frozenset

AXIOMS = ("EC", "ND", "NA", "AC", "ICE2", "UCB1", "LCB1")
D_COMPLETE_AXIOMS = ("EC", "NA", "AC", "ICE2", "UCB1")

EMPTY_NAME = "∅"


class ColoredPoset:
    """A finite connected poset colored surjectively by the nodes of a Dynkin diagram.

    Parameters
    ----------
    elements : sequence of str
        Element names; their order is the declaration order used for canonical
        ideal names and lexicographic witnesses.
    covers : iterable of (x, y)
        Cover relations ``x -> y`` (``y`` covers ``x``).
    coloring : mapping element -> color
    diagram : DynkinDiagram
    """

    def __init__(self, elements: Iterable[str], covers: Iterable[tuple[str, str]],
                 coloring: Mapping[str, str], diagram: DynkinDiagram):
        self.elements = tuple(elements)
        self.covers = frozenset((x, y) for x, y in covers)
        self.coloring = dict(coloring)
        self.diagram = diagram
        self._cache: dict = {}
        self._validate()
        self.position = {x: i for i, x in enumerate(self.elements)}
        self.upper = {x: [] for x in self.elements}
        self.lower = {x: [] for x in self.elements}
        for x, y in sorted(self.covers, key=lambda c: (self.position[c[0]], self.position[c[1]])):
            self.upper[x].append(y)
            self.lower[y].append(x)
        self._below = self._closure(self.lower)
        self._above = self._closure(self.upper)
        self._check_reduction()
        self._check_connected()

    # -- construction -------------------------------------------------

    def _validate(self):
        if not self.elements:
            raise PosetError("poset must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise PosetError("duplicate element names")
        known = set(self.elements)
        for x, y in self.covers:
            bad = {x, y} - known
            if bad:
                raise PosetError(f"cover {x}<{y} uses unknown elements {sorted(bad)}")
            if x == y:
                raise PosetError(f"cover {x}<{y} is a self-loop")
        missing = [x for x in self.elements if x not in self.coloring]
        if missing:
            raise PosetError(f"uncolored elements {missing}")
        extra = set(self.coloring) - known
        if extra:
            raise PosetError(f"coloring mentions unknown elements {sorted(extra)}")
        for x, c in self.coloring.items():
            if c not in self.diagram.colors:
                raise PosetError(f"element {x} has unknown color {c!r}")
        unused = [c for c in self.diagram.colors if c not in set(self.coloring.values())]
        if unused:
            raise PosetError(f"coloring is not surjective; unused colors {unused}")

    def _closure(self, step):
        # recursive DFS; raises on a cycle
        result = {}
        state = {}

        def visit(x):
            if state.get(x) == 1:
                return
            if state.get(x) == 0:
                raise PosetError(f"cover relation has a cycle through {x}")
            state[x] = 0
            acc = set()
            for y in step[x]:
                visit(y)
                acc.add(y)
                acc |= result[y]
            result[x] = frozenset(acc)
            state[x] = 1

        for x in self.elements:
            visit(x)
        return result

    def _check_reduction(self):
        for x, y in self.covers:
            for z in self.upper[x]:
                if z != y and y in self._above[z]:
                    raise PosetError(f"cover {x}<{y} is implied by {x}<{z}<...<{y}")

    def _check_connected(self):
        start = self.elements[0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.upper[x] + self.lower[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(self.elements):
            rest = [x for x in self.elements if x not in seen]
            raise PosetError(f"Hasse diagram is disconnected; unreachable from {start}: {rest}")

    # -- identity -----------------------------------------------------

    def _key(self):
        return (self.elements, tuple(sorted(self.covers)),
                tuple(self.coloring[x] for x in self.elements), self.diagram)

    def __eq__(self, other):
        return isinstance(other, ColoredPoset) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"ColoredPoset({len(self.elements)} elements, colors {self.diagram.colors})"

    def __len__(self):
        return len(self.elements)

    # -- order queries --------------------------------------------------

    def lt(self, x, y) -> bool:
        return x in self._below[y]

    def le(self, x, y) -> bool:
        return x == y or x in self._below[y]

    def comparable(self, x, y) -> bool:
        return self.le(x, y) or self.le(y, x)

    def below(self, x) -> frozenset:
        return self._below[x]

    def above(self, x) -> frozenset:
        return self._above[x]

    def color(self, x) -> str:
        return self.coloring[x]

    def colored(self, a) -> list[str]:
        """Elements of color ``a`` in declaration order."""
        return [x for x in self.elements if self.coloring[x] == a]

    def minimal_elements(self, subset=None) -> list[str]:
        subset = set(self.elements) if subset is None else set(subset)
        return [x for x in self.elements if x in subset and not (self._below[x] & subset)]

    def maximal_elements(self, subset=None) -> list[str]:
        subset = set(self.elements) if subset is None else set(subset)
        return [x for x in self.elements if x in subset and not (self._above[x] & subset)]

    def interval(self, x, y) -> list[str]:
        """Open interval ``(x, y)``."""
        return [z for z in self.elements if self.lt(x, z) and self.lt(z, y)]

    @property
    def top(self) -> Optional[str]:
        maxima = self.maximal_elements()
        return maxima[0] if len(maxima) == 1 else None

    def dual(self) -> "ColoredPoset":
        """Order dual: every cover reversed, colors kept."""
        return ColoredPoset(self.elements, [(y, x) for x, y in self.covers],
                            self.coloring, self.diagram)

    # -- ideals ---------------------------------------------------------

    def is_ideal(self, members) -> bool:
        members = set(members)
        if not members <= set(self.elements):
            return False
        return all(self._below[y] <= members for y in members)

    def ideal(self, members) -> Ideal:
        members = frozenset(members)
        if not self.is_ideal(members):
            raise InputError(f"{sorted(members)} is not an order ideal")
        return members

    def ideal_name(self, ideal) -> str:
        if not ideal:
            return EMPTY_NAME
        return "".join(x for x in self.elements if x in ideal)

    def parse_ideal(self, text: str) -> Ideal:
        """Inverse of :meth:`ideal_name`; also accepts ``0`` for the empty ideal
        and whitespace/comma separated names."""
        text = text.strip()
        if text in ("", "0", EMPTY_NAME):
            return frozenset()
        if any(sep in text for sep in " ,"):
            tokens = [t for t in text.replace(",", " ").split() if t]
        else:
            tokens = self._tokenize(text)
            if tokens is None:
                raise InputError(f"cannot split {text!r} into element names")
        unknown = [t for t in tokens if t not in self.position]
        if unknown:
            raise InputError(f"unknown elements {unknown} in {text!r}")
        return self.ideal(tokens)

    def _tokenize(self, text):
        names = sorted(self.elements, key=len, reverse=True)

        def split(rest):
            if not rest:
                return []
            for name in names:
                if rest.startswith(name):
                    tail = split(rest[len(name):])
                    if tail is not None:
                        return [name] + tail
            return None

        return split(text)

    def enumerate_ideals(self, extension=None) -> list[Ideal]:
        """All order ideals, each once, sorted by the gravity order of ``extension``."""
        from .mvector import ideal_key

        if "ideals" not in self._cache:
            found = {frozenset()}
            frontier = [frozenset()]
            while frontier:
                nxt = []
                for ideal in frontier:
                    for x in self.minimal_elements(set(self.elements) - ideal):
                        bigger = ideal | {x}
                        if bigger not in found:
                            found.add(bigger)
                            nxt.append(bigger)
                frontier = nxt
            self._cache["ideals"] = found
        ext = self.default_extension() if extension is None else tuple(extension)
        pos = {x: i for i, x in enumerate(ext)}
        return sorted(self._cache["ideals"], key=lambda i: ideal_key(i, pos))

    # -- linear extensions ------------------------------------------------

    def is_extension(self, seq) -> bool:
        seq = tuple(seq)
        if len(seq) != len(self.elements) or set(seq) != set(self.elements):
            return False
        pos = {x: i for i, x in enumerate(seq)}
        return all(pos[x] < pos[y] for x, y in self.covers)

    def linear_extensions(self) -> Iterator[tuple[str, ...]]:
        """All linear extensions, lexicographic in declaration order."""
        n = len(self.elements)
        indeg = {x: len(self.lower[x]) for x in self.elements}
        chosen: list[str] = []

        def rec():
            if len(chosen) == n:
                yield tuple(chosen)
                return
            for x in self.elements:
                if indeg[x] == 0 and x not in placed:
                    placed.add(x)
                    chosen.append(x)
                    for y in self.upper[x]:
                        indeg[y] -= 1
                    yield from rec()
                    for y in self.upper[x]:
                        indeg[y] += 1
                    chosen.pop()
                    placed.discard(x)

        placed: set[str] = set()
        yield from rec()

    def default_extension(self) -> tuple[str, ...]:
        """Declaration order if order preserving, else the lexicographically least extension."""
        if "default_extension" not in self._cache:
            if self.is_extension(self.elements):
                ext = self.elements
            else:
                ext = next(self.linear_extensions())
            self._cache["default_extension"] = ext
        return self._cache["default_extension"]

    def check_extension(self, extension) -> tuple[str, ...]:
        if extension is None:
            return self.default_extension()
        extension = tuple(extension)
        if not self.is_extension(extension):
            raise InputError(f"{extension} is not a linear extension of the poset")
        return extension

    # -- axioms -------------------------------------------------------------

    def check_axiom(self, axiom: str) -> "AxiomReport":
        return check_axiom(self, axiom)

    def classify(self) -> "Classification":
        return classify(self)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    holds: bool
    witness: Optional[tuple[str, ...]] = None

    def __str__(self):
        if self.holds:
            return f"{self.axiom} holds"
        return f"{self.axiom} fails witness: {' '.join(self.witness)}"


@dataclass(frozen=True)
class Classification:
    label: str
    reports: dict = field(default_factory=dict)

    @property
    def is_d_complete(self):
        return self.label in ("d-complete", "minuscule")

    @property
    def is_minuscule(self):
        return self.label == "minuscule"


def _pairs(P):
    return combinations(P.elements, 2)


def _ordered_covers(P):
    return sorted(P.covers, key=lambda c: (P.position[c[0]], P.position[c[1]]))


def _consecutive(P, a):
    for x, y in _pairs(P):
        for lo, hi in ((x, y), (y, x)):
            if P.color(lo) == P.color(hi) == a and P.lt(lo, hi):
                if not any(P.color(z) == a for z in P.interval(lo, hi)):
                    yield lo, hi


def _witness_ec(P):
    for x, y in _pairs(P):
        if P.color(x) == P.color(y) and not P.comparable(x, y):
            return (x, y)


def _witness_nd(P):
    for x, y in _ordered_covers(P):
        if P.color(x) == P.color(y):
            return (x, y)


def _witness_na(P):
    for x, y in _ordered_covers(P):
        if not P.diagram.adjacent(P.color(x), P.color(y)):
            return (x, y)


def _witness_ac(P):
    for x, y in _pairs(P):
        if P.diagram.adjacent(P.color(x), P.color(y)) and not P.comparable(x, y):
            return (x, y)


def _witness_ice2(P):
    found = []
    for a in P.diagram.colors:
        for lo, hi in _consecutive(P, a):
            census = [z for z in P.interval(lo, hi) if P.diagram.adjacent(P.color(z), a)]
            if len(census) != 2:
                found.append((lo, hi))
    if found:
        return min(found, key=lambda w: tuple(P.position[e] for e in w))


def _frontier_witness(P, upward):
    for x in P.elements:
        a = P.color(x)
        same = set(P.colored(a))
        beyond = P.above(x) if upward else P.below(x)
        if beyond & same:
            continue
        census = [z for z in P.elements if z in beyond and P.diagram.adjacent(P.color(z), a)]
        if len(census) > 1:
            return (x, census[0], census[1])


_WITNESS = {
    "EC": _witness_ec,
    "ND": _witness_nd,
    "NA": _witness_na,
    "AC": _witness_ac,
    "ICE2": _witness_ice2,
    "UCB1": lambda P: _frontier_witness(P, True),
    "LCB1": lambda P: _frontier_witness(P, False),
}


def check_axiom(poset: ColoredPoset, axiom: str) -> AxiomReport:
    """Check one coloring axiom; on failure return the first witness in element order."""
    if axiom not in _WITNESS:
        raise InputError(f"unknown axiom {axiom!r}; expected one of {', '.join(AXIOMS)}")
    key = ("axiom", axiom)
    if key not in poset._cache:
        witness = _WITNESS[axiom](poset)
        poset._cache[key] = AxiomReport(axiom, witness is None, witness)
    return poset._cache[key]


def violates(poset: ColoredPoset, axiom: str, witness) -> bool:
    """Replay a failure witness: True iff it really breaks ``axiom``."""
    P = poset
    adj = P.diagram.adjacent
    if axiom in ("EC", "AC"):
        x, y = witness
        related = P.color(x) == P.color(y) if axiom == "EC" else adj(P.color(x), P.color(y))
        return related and not P.comparable(x, y)
    if axiom in ("ND", "NA"):
        x, y = witness
        if (x, y) not in P.covers:
            return False
        if axiom == "ND":
            return P.color(x) == P.color(y)
        return not adj(P.color(x), P.color(y))
    if axiom == "ICE2":
        lo, hi = witness
        a = P.color(lo)
        if P.color(hi) != a or not P.lt(lo, hi):
            return False
        inside = P.interval(lo, hi)
        if any(P.color(z) == a for z in inside):
            return False
        return sum(adj(P.color(z), a) for z in inside) != 2
    if axiom in ("UCB1", "LCB1"):
        x, z1, z2 = witness
        a = P.color(x)
        beyond = P.above(x) if axiom == "UCB1" else P.below(x)
        if beyond & set(P.colored(a)):
            return False
        return (z1 != z2 and z1 in beyond and z2 in beyond
                and adj(P.color(z1), a) and adj(P.color(z2), a))
    raise InputError(f"unknown axiom {axiom!r}")


def classify(poset: ColoredPoset) -> Classification:
    """Strongest of ``minuscule`` > ``d-complete`` > ``ec-nd-only`` > ``general``."""
    reports = {ax: check_axiom(poset, ax) for ax in AXIOMS}
    ok = {ax: r.holds for ax, r in reports.items()}
    if all(ok[ax] for ax in D_COMPLETE_AXIOMS):
        label = "minuscule" if ok["LCB1"] else "d-complete"
    elif ok["EC"] and ok["ND"]:
        label = "ec-nd-only"
    else:
        label = "general"
    return Classification(label, reports)


def enumerate_ideals(poset: ColoredPoset, extension=None) -> list[Ideal]:
    return poset.enumerate_ideals(extension)


def linear_extensions(poset: ColoredPoset) -> Iterator[tuple[str, ...]]:
    return poset.linear_extensions()


def dual(poset: ColoredPoset) -> ColoredPoset:
    return poset.dual()
