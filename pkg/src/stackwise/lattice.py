"""The split lattice FI(P) and single-split color raising / lowering."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ECViolation, InputError
from .poset import ColoredPoset, Ideal

MAX_NODES = 10**6


def raise_all(poset: ColoredPoset, ideal: Ideal, color: str) -> list[Ideal]:
    """Every term of X_a on a split: one per minimal element of color ``a`` in P - I."""
    key = ("raise", ideal, color)
    cache = poset._cache
    if key not in cache:
        rest = set(poset.elements) - ideal
        cache[key] = [ideal | {x} for x in poset.minimal_elements(rest) if poset.color(x) == color]
    return cache[key]


def lower_all(poset: ColoredPoset, ideal: Ideal, color: str) -> list[Ideal]:
    """Every term of Y_a on a split: one per maximal element of color ``a`` in I."""
    key = ("lower", ideal, color)
    cache = poset._cache
    if key not in cache:
        cache[key] = [ideal - {x} for x in poset.maximal_elements(ideal) if poset.color(x) == color]
    return cache[key]


def _single(terms, what, ideal, color, poset):
    if len(terms) > 1:
        raise ECViolation(f"EC violated: {what} {poset.ideal_name(ideal)} by {color} "
                          f"has {len(terms)} terms")
    return terms[0] if terms else None


def raise_ideal(poset: ColoredPoset, ideal: Ideal, color: str) -> Optional[Ideal]:
    """X_a on one split; ``None`` stands for the zero vector."""
    _check_color(poset, color)
    return _single(raise_all(poset, ideal, color), "raising", ideal, color, poset)


def lower_ideal(poset: ColoredPoset, ideal: Ideal, color: str) -> Optional[Ideal]:
    """Y_a on one split; ``None`` stands for the zero vector."""
    _check_color(poset, color)
    return _single(lower_all(poset, ideal, color), "lowering", ideal, color, poset)


def _check_color(poset, color):
    if color not in poset.diagram.colors:
        raise InputError(f"unknown color {color!r}")


@dataclass(frozen=True)
class SplitLattice:
    poset: ColoredPoset
    splits: tuple  # ideals in gravity order
    edges: tuple   # (I, I', color) with I' = I plus one element of that color

    def __len__(self):
        return len(self.splits)

    @property
    def bottom(self):
        return frozenset()

    @property
    def top(self):
        return frozenset(self.poset.elements)

    def up(self, ideal):
        return [(j, c) for i, j, c in self.edges if i == ideal]

    def render(self) -> list[str]:
        name = self.poset.ideal_name
        lines = [name(i) for i in self.splits]
        lines += [f"{name(i)} -{c}-> {name(j)}" for i, j, c in self.edges]
        return lines


def build_lattice(poset: ColoredPoset, extension=None, max_nodes: int = MAX_NODES) -> SplitLattice:
    splits = poset.enumerate_ideals(extension)
    if len(splits) > max_nodes:
        raise InputError(f"lattice has {len(splits)} splits, above the limit {max_nodes}; "
                         "use raise_ideal/lower_ideal directly")
    edges = []
    for ideal in splits:
        for x in poset.minimal_elements(set(poset.elements) - ideal):
            edges.append((ideal, ideal | {x}, poset.color(x)))
    return SplitLattice(poset, tuple(splits), tuple(edges))
