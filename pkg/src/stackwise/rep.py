"""Lie-algebra layer: mu-diagonal operators, relation checks, weights and the downward basis."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .basis import StackwiseBasis, build_basis
from .errors import InconsistentMu, InputError
from .lattice import lower_all, raise_all
from .mvector import MVector, act_color, word_vector
from .poset import ColoredPoset, Ideal
from .words import stackwise_word

MAX_DIMENSION = 10**4


@dataclass(frozen=True)
class MuTable:
    poset: ColoredPoset
    colors: tuple[str, ...]
    values: dict  # ideal -> tuple of mu_i, indexed like ``colors``

    def __getitem__(self, ideal) -> tuple[int, ...]:
        return self.values[frozenset(ideal)]

    def mu(self, ideal, color) -> int:
        return self[ideal][self.colors.index(color)]

    def render(self) -> list[str]:
        width = max(len(self.poset.ideal_name(i)) for i in self.values)
        return [f"{self.poset.ideal_name(i):>{width}}: {', '.join(map(str, row))}"
                for i, row in self.values.items()]


def mu_table(poset: ColoredPoset) -> MuTable:
    """Numbers Game descent: mu(P) is the unit vector of the top color and each
    cover removing a color a_k subtracts row k of the Cartan matrix.

    Every upper cover of an ideal must predict the same row; otherwise
    :class:`InconsistentMu` is raised with the two disagreeing covers.
    """
    top = poset.top
    if top is None:
        raise InputError("mu-diagonal operators need a unique maximal element")
    colors = poset.diagram.colors
    theta = poset.diagram.gcm()
    idx = poset.diagram.index
    ideals = sorted(poset.enumerate_ideals(), key=len, reverse=True)
    full = frozenset(poset.elements)
    values = {full: tuple(int(c == poset.color(top)) for c in colors)}
    for ideal in ideals[1:]:
        row = None
        first = None
        for x in poset.minimal_elements(set(poset.elements) - ideal):
            upper = ideal | {x}
            k = idx[poset.color(x)]
            cand = tuple(u - t for u, t in zip(values[upper], theta[k]))
            if row is None:
                row, first = cand, x
            elif cand != row:
                raise InconsistentMu(
                    f"mu at {poset.ideal_name(ideal)} differs via {first} ({row}) and {x} ({cand})")
        values[ideal] = row
    order = poset.enumerate_ideals()
    return MuTable(poset, colors, {i: values[i] for i in order})


def weight(ideal, mu: MuTable) -> tuple[int, ...]:
    """Fundamental-weight coordinates of a split vector."""
    return mu[ideal]


def multiset_weight(ideals, mu: MuTable) -> tuple[int, ...]:
    rows = [mu[i] for i in ideals]
    return tuple(sum(col) for col in zip(*rows))


def highest_weight(poset: ColoredPoset) -> tuple[int, ...]:
    return weight(frozenset(poset.elements), mu_table(poset))


# -- matrices on the split basis ------------------------------------------------

@dataclass(frozen=True)
class RelationReport:
    relation: str  # XX, YY, HH, HX, HY, XY, X-square, eigen-range, min-iff-raise
    params: tuple
    holds: bool
    witness: Optional[tuple] = None  # (split, lhs, rhs)

    def render(self) -> str:
        head = f"{self.relation} {' '.join(self.params)}: {'holds' if self.holds else 'FAILS'}"
        if self.witness:
            split, lhs, rhs = self.witness
            head += f" at {split}: got {lhs}, expected {rhs}"
        return head


class SplitOperators:
    """Integer matrices of X_i, Y_i, H_i on the split basis (columns are inputs)."""

    def __init__(self, poset: ColoredPoset, mu: Optional[MuTable] = None, allow_large: bool = False):
        self.poset = poset
        self.ideals = poset.enumerate_ideals()
        n = len(self.ideals)
        if n > MAX_DIMENSION and not allow_large:
            raise InputError(f"{n} splits exceed the relation-check limit {MAX_DIMENSION}")
        self.mu = mu or mu_table(poset)
        self.index = {i: k for k, i in enumerate(self.ideals)}
        self.colors = poset.diagram.colors
        self.theta = poset.diagram.gcm()
        self.X, self.Y, self.H = {}, {}, {}
        for a in self.colors:
            X = np.zeros((n, n), dtype=np.int64)
            Y = np.zeros((n, n), dtype=np.int64)
            for col, ideal in enumerate(self.ideals):
                for img in raise_all(poset, ideal, a):
                    X[self.index[img], col] += 1
                for img in lower_all(poset, ideal, a):
                    Y[self.index[img], col] += 1
            self.X[a], self.Y[a] = X, Y
            k = self.colors.index(a)
            self.H[a] = np.diag([self.mu[i][k] for i in self.ideals]).astype(np.int64)

    def _report(self, relation, params, lhs, rhs) -> RelationReport:
        diff = np.argwhere(lhs != rhs)
        if not diff.size:
            return RelationReport(relation, params, True)
        row, col = diff[0]
        name = self.poset.ideal_name
        split = name(self.ideals[col])
        fmt = lambda M: {name(self.ideals[r]): int(M[r, col]) for r in np.flatnonzero(M[:, col])}
        return RelationReport(relation, params, False, (split, fmt(lhs), fmt(rhs)))

    def serre(self, ops, tag) -> list[RelationReport]:
        reports = []
        zero = np.zeros_like(ops[self.colors[0]])
        for i in self.colors:
            for j in self.colors:
                if i == j:
                    continue
                inner = ops[i] @ ops[j] - ops[j] @ ops[i]
                lhs = ops[i] @ inner - inner @ ops[i] if self.poset.diagram.adjacent(i, j) else inner
                reports.append(self._report(tag, (i, j), lhs, zero))
        return reports

    def bracket_with_h(self, ops, sign, tag) -> list[RelationReport]:
        reports = []
        for j in self.colors:
            for i in self.colors:
                t = self.theta[self.colors.index(i)][self.colors.index(j)]
                lhs = self.H[j] @ ops[i] - ops[i] @ self.H[j]
                reports.append(self._report(tag, (j, i), lhs, sign * t * ops[i]))
        return reports

    def hh(self) -> list[RelationReport]:
        reports = []
        for i in self.colors:
            for j in self.colors:
                lhs = self.H[i] @ self.H[j] - self.H[j] @ self.H[i]
                reports.append(self._report("HH", (i, j), lhs, np.zeros_like(lhs)))
        return reports

    def xy(self) -> list[RelationReport]:
        reports = []
        for i in self.colors:
            for j in self.colors:
                lhs = self.X[i] @ self.Y[j] - self.Y[j] @ self.X[i]
                rhs = self.H[i] if i == j else np.zeros_like(lhs)
                reports.append(self._report("XY", (i, j), lhs, rhs))
        return reports

    def x_square(self) -> list[RelationReport]:
        return [self._report("X-square", (a,), self.X[a] @ self.X[a], np.zeros_like(self.X[a]))
                for a in self.colors]

    def eigen_range(self, allowed) -> list[RelationReport]:
        reports = []
        for k, a in enumerate(self.colors):
            bad = [i for i in self.ideals if not allowed(self.mu[i][k])]
            witness = None
            if bad:
                witness = (self.poset.ideal_name(bad[0]), f"mu_{a} = {self.mu[bad[0]][k]}", "allowed range")
            reports.append(RelationReport("eigen-range", (a,), not bad, witness))
        return reports

    def min_iff_raise(self) -> list[RelationReport]:
        reports = []
        for k, a in enumerate(self.colors):
            witness = None
            for col, ideal in enumerate(self.ideals):
                raises = bool(self.X[a][:, col].any())
                if (self.mu[ideal][k] == -1) != raises:
                    witness = (self.poset.ideal_name(ideal), f"mu_{a} = {self.mu[ideal][k]}",
                               "raisable" if raises else "not raisable")
                    break
            reports.append(RelationReport("min-iff-raise", (a,), witness is None, witness))
        return reports


def verify_borel(poset: ColoredPoset, mu: Optional[MuTable] = None,
                 allow_large: bool = False) -> list[RelationReport]:
    """Serre relations for X, HH, HX and the upper-minuscule conditions."""
    ops = SplitOperators(poset, mu, allow_large)
    return (ops.serre(ops.X, "XX") + ops.hh() + ops.bracket_with_h(ops.X, 1, "HX")
            + ops.x_square() + ops.eigen_range(lambda v: v >= -1) + ops.min_iff_raise())


def verify_kacmoody(poset: ColoredPoset, mu: Optional[MuTable] = None,
                    allow_large: bool = False) -> list[RelationReport]:
    """All Borel checks plus YY, HY, XY, with eigenvalues restricted to {-1, 0, 1}."""
    ops = SplitOperators(poset, mu, allow_large)
    return (ops.serre(ops.X, "XX") + ops.serre(ops.Y, "YY") + ops.hh()
            + ops.bracket_with_h(ops.X, 1, "HX") + ops.bracket_with_h(ops.Y, -1, "HY") + ops.xy()
            + ops.x_square() + ops.eigen_range(lambda v: v in (-1, 0, 1)) + ops.min_iff_raise())


def failures(reports) -> list[RelationReport]:
    return [r for r in reports if not r.holds]


# -- symmetric powers -----------------------------------------------------------

def sym_power_action(v: MVector, generator, mu: Optional[MuTable] = None) -> MVector:
    """Slotwise action of ("X" | "Y" | "H", color) on an m-vector."""
    kind, color = generator
    if kind == "X":
        return act_color(v, color)
    if kind == "Y":
        return act_color(v, color, down=True)
    if kind != "H":
        raise InputError(f"unknown generator {kind!r}")
    mu = mu or mu_table(v.poset)
    if color not in mu.colors:
        raise InputError(f"unknown color {color!r}")
    k = mu.colors.index(color)
    return v.like({key: c * sum(mu[i][k] for i in key) for key, c in v.terms.items()})


# -- downward basis and counting --------------------------------------------------

def count_multichains(poset: ColoredPoset, m: int) -> int:
    """Number of m-flags I_1 ⊇ ... ⊇ I_m, i.e. P-partitions bounded by m."""
    if m < 0:
        raise InputError("m must be nonnegative")
    ideals = poset.enumerate_ideals()
    counts = {i: 1 for i in ideals}
    for _ in range(m - 1):
        counts = {i: sum(c for j, c in counts.items() if j <= i) for i in ideals}
    return sum(counts.values()) if m else 1


@dataclass
class SeshadriBasis:
    """Downward stackwise vectors: Y-words acting on {P, ..., P}.

    ``dual_basis`` is the upward basis of the order dual under the reversed
    extension; filters of the poset are its ideals.
    """
    poset: ColoredPoset
    m: int
    extension: tuple
    dual_basis: StackwiseBasis
    vectors: list  # (filter flag, downward MVector over the poset)

    def __len__(self):
        return len(self.vectors)


def complement_vector(v: MVector, target: ColoredPoset, extension) -> MVector:
    """Re-express a vector over the dual poset by complementing each ideal."""
    full = frozenset(target.elements)
    terms = {}
    for key, c in v.terms.items():
        terms[tuple(full - i for i in key)] = c
    return MVector(target, v.m, extension, terms, v.ordered)


def seshadri_basis(poset: ColoredPoset, m: int, extension=None) -> SeshadriBasis:
    if not poset.classify().is_minuscule:
        raise InputError("the downward basis is defined here for minuscule posets only")
    ext = poset.check_extension(extension)
    dual = poset.dual()
    dual_ext = tuple(reversed(ext))
    dual_basis = build_basis(dual, m, dual_ext)
    vectors = []
    for entry in dual_basis:
        word = stackwise_word(dual, entry.flag, dual_ext)
        direct = word_vector(poset, word, m, ext, down=True)
        via_dual = complement_vector(entry.vector, poset, ext)
        if direct != via_dual:
            raise InconsistentMu(f"downward vector for <{word}> disagrees with the dual construction")
        vectors.append((entry.flag, direct))
    return SeshadriBasis(poset, m, ext, dual_basis, vectors)

