"""Simply laced Dynkin diagrams and their generalized Cartan matrices."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .errors import InputError


@dataclass(frozen=True)
class DynkinDiagram:
    """A finite simple graph whose nodes ("colors") carry a fixed total order.

    The declared order of ``colors`` indexes the Cartan matrix and ranks colors
    against each other in the total word order.
    """

    colors: tuple[str, ...]
    edges: frozenset[frozenset[str]] = field(default_factory=frozenset)

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if len(set(colors)) != len(colors):
            raise InputError(f"duplicate colors in {colors}")
        if not colors:
            raise InputError("diagram must have at least one color")
        edges = set()
        for e in self.edges:
            pair = frozenset(e)
            if len(pair) != 2:
                raise InputError(f"self-loop or malformed edge {tuple(e)}")
            unknown = pair - set(colors)
            if unknown:
                raise InputError(f"edge {tuple(e)} uses unknown colors {sorted(unknown)}")
            edges.add(pair)
        object.__setattr__(self, "edges", frozenset(edges))
        if not self._connected():
            warnings.warn("Dynkin diagram is disconnected", stacklevel=3)

    @classmethod
    def path(cls, colors):
        """Type A diagram with the colors joined in the given order."""
        colors = tuple(colors)
        return cls(colors, frozenset(frozenset(p) for p in zip(colors, colors[1:])))

    @property
    def index(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.colors)}

    def adjacent(self, a: str, b: str) -> bool:
        for c in (a, b):
            if c not in self.colors:
                raise InputError(f"unknown color {c!r}")
        return a != b and frozenset((a, b)) in self.edges

    def neighbors(self, a: str) -> list[str]:
        return [b for b in self.colors if self.adjacent(a, b)]

    def gcm(self) -> tuple[tuple[int, ...], ...]:
        return gcm(self)

    def _connected(self):
        seen = {self.colors[0]}
        stack = [self.colors[0]]
        while stack:
            a = stack.pop()
            for e in self.edges:
                if a in e:
                    (b,) = e - {a}
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
        return len(seen) == len(self.colors)


def adjacent(diagram: DynkinDiagram, a: str, b: str) -> bool:
    return diagram.adjacent(a, b)


def gcm(diagram: DynkinDiagram) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix theta indexed by the diagram's color order.

    2 on the diagonal, -1 for adjacent colors, 0 for distant ones.
    """
    n = len(diagram.colors)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
            elif diagram.adjacent(diagram.colors[i], diagram.colors[j]):
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)
