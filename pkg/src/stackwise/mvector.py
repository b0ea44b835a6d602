"""m-vectors: exact rational combinations of m-multisets (or m-tuples) of ideals.

Gravity order
-------------
Ideals with more elements are *lower*; equal sizes compare lexicographically
on their members listed along the linear extension. m-multisets compare by
total size (larger is lower) and then lexicographically on their gravity-sorted
ideals. :func:`ideal_key` and :func:`multiset_key` turn both orders into sort keys.

Divided powers
--------------
``<a^k>`` acts as ``X_a^k / k!`` with slot positions held fixed. Spreading
``k`` raisings over the slots with ``j_s`` in slot ``s`` happens in
``k! / prod(j_s!)`` orders, so

    <a^k>.(I_1, ..., I_m) = sum over j_1 + ... + j_m = k of prod_s X_a^{j_s} I_s / j_s!

which is what :func:`act_divided` evaluates. Multisets are acted on through
their canonical tuple and re-sorted afterwards.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cmp_to_key
from math import factorial
from typing import Iterable, Optional, Sequence

from .errors import InputError, IntegralityViolation
from .lattice import lower_all, raise_all
from .poset import ColoredPoset, Ideal


# -- gravity orders -----------------------------------------------------------

def ideal_key(ideal, pos):
    return (-len(ideal), tuple(sorted(pos[x] for x in ideal)))


def multiset_key(ideals, pos):
    keys = sorted(ideal_key(i, pos) for i in ideals)
    return (-sum(len(i) for i in ideals), tuple(keys))


def _positions(extension, *ideals):
    pos = {x: i for i, x in enumerate(extension)}
    for ideal in ideals:
        missing = set(ideal) - set(pos)
        if missing:
            raise InputError(f"extension does not cover elements {sorted(missing)}")
    return pos


def _sign(a, b):
    return (a > b) - (a < b)


def gravity_cmp_ideals(I, J, extension) -> int:
    """-1 if I is below J in the gravity order, 0 if equal, 1 if above."""
    pos = _positions(extension, I, J)
    return _sign(ideal_key(I, pos), ideal_key(J, pos))


def gravity_cmp_multisets(A, B, extension) -> int:
    if len(A) != len(B):
        raise InputError(f"multisets have different sizes {len(A)} and {len(B)}")
    pos = _positions(extension, *A, *B)
    return _sign(multiset_key(A, pos), multiset_key(B, pos))


def gravity_sorted(ideals, extension):
    pos = {x: i for i, x in enumerate(extension)}
    return tuple(sorted(ideals, key=lambda i: ideal_key(i, pos)))


# -- P-partitions and flags -------------------------------------------------------

def is_flag(flag) -> bool:
    return all(a >= b for a, b in zip(flag, flag[1:]))


def flag_to_ppartition(poset: ColoredPoset, flag: Sequence[Ideal]) -> dict[str, int]:
    """psi(x) = number of ideals of the flag that contain x."""
    for ideal in flag:
        if not poset.is_ideal(ideal):
            raise InputError(f"{sorted(ideal)} is not an order ideal")
    if not is_flag(flag):
        raise InputError("ideals are not nested I_1 ⊇ I_2 ⊇ ... ⊇ I_m")
    return {x: sum(x in ideal for ideal in flag) for x in poset.elements}


def ppartition_to_flag(poset: ColoredPoset, psi, m: int) -> tuple[Ideal, ...]:
    """The m-flag whose k-th ideal holds every x with psi(x) >= k."""
    if m < 1:
        raise InputError("m must be at least 1")
    for x in poset.elements:
        v = psi.get(x, 0)
        if not 0 <= v <= m:
            raise InputError(f"psi({x}) = {v} outside [0, {m}]")
    for x, y in poset.covers:
        if psi.get(x, 0) < psi.get(y, 0):
            raise InputError(f"psi is not order reversing at {x} < {y}")
    return tuple(frozenset(x for x in poset.elements if psi.get(x, 0) >= k)
                 for k in range(1, m + 1))


def enumerate_flags(poset: ColoredPoset, m: int, extension=None) -> list[tuple[Ideal, ...]]:
    """All m-flags, sorted by the gravity order of their multisets."""
    ideals = poset.enumerate_ideals(extension)
    flags = [(i,) for i in ideals]
    for _ in range(m - 1):
        flags = [f + (j,) for f in flags for j in ideals if j <= f[-1]]
    pos = {x: i for i, x in enumerate(poset.check_extension(extension))}
    return sorted(flags, key=lambda f: multiset_key(f, pos))


# -- vectors -----------------------------------------------------------------

class MVector:
    """Sparse exact combination of m-multisets (default) or ordered m-tuples of ideals.

    Multiset keys are tuples of ideals sorted by the gravity order of
    ``extension``; vectors over different posets, extensions, ``m`` or variants
    never mix.
    """

    __slots__ = ("poset", "m", "extension", "ordered", "terms", "_pos")

    def __init__(self, poset: ColoredPoset, m: int, extension=None, terms=None, ordered=False):
        self.poset = poset
        self.m = m
        self.extension = poset.check_extension(extension)
        self.ordered = ordered
        self._pos = {x: i for i, x in enumerate(self.extension)}
        self.terms: dict[tuple, Fraction] = {}
        for key, coef in (terms or {}).items():
            self._add_term(key, coef)

    # construction helpers
    @classmethod
    def empty(cls, poset, m, extension=None, ordered=False):
        """The vector 1·{∅, ..., ∅}."""
        return cls(poset, m, extension, {(frozenset(),) * m: 1}, ordered)

    @classmethod
    def top(cls, poset, m, extension=None, ordered=False):
        """The vector 1·{P, ..., P}."""
        return cls(poset, m, extension, {(frozenset(poset.elements),) * m: 1}, ordered)

    def like(self, terms=None, ordered=None):
        return MVector(self.poset, self.m, self.extension, terms,
                       self.ordered if ordered is None else ordered)

    def canonical(self, ideals):
        ideals = tuple(frozenset(i) for i in ideals)
        if len(ideals) != self.m:
            raise InputError(f"expected {self.m} ideals, got {len(ideals)}")
        if self.ordered:
            return ideals
        return tuple(sorted(ideals, key=lambda i: ideal_key(i, self._pos)))

    def _add_term(self, key, coef):
        key = self.canonical(key)
        value = self.terms.get(key, 0) + Fraction(coef)
        if value:
            self.terms[key] = value
        else:
            self.terms.pop(key, None)

    # arithmetic
    def _compatible(self, other):
        if not isinstance(other, MVector):
            return False
        if (self.poset != other.poset or self.m != other.m or self.extension != other.extension
                or self.ordered != other.ordered):
            raise InputError("cannot combine m-vectors over different settings")
        return True

    def __add__(self, other):
        if not self._compatible(other):
            return NotImplemented
        out = self.like(self.terms)
        for k, c in other.terms.items():
            out._add_term(k, c)
        return out

    def __neg__(self):
        return self.like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, MVector):
            return NotImplemented
        return self.like({k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, MVector):
            return NotImplemented
        return (self.poset == other.poset and self.m == other.m and self.extension == other.extension
                and self.ordered == other.ordered and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, ideals):
        return self.terms.get(self.canonical(ideals), Fraction(0))

    # inspection
    def key(self, ideals):
        return multiset_key(ideals, self._pos)

    def items(self):
        """Terms ascending in the gravity order (ties of the tuple variant by slot order)."""
        def order(item):
            ideals = item[0]
            return (self.key(ideals), tuple(ideal_key(i, self._pos) for i in ideals))
        return sorted(self.terms.items(), key=order)

    def leading(self):
        """Gravity-least (ideals, coefficient) pair, or None for the zero vector."""
        items = self.items()
        return items[0] if items else None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def as_multisets(self) -> "MVector":
        """Forget slot positions: sort each tuple and merge coefficients."""
        return MVector(self.poset, self.m, self.extension, self.terms, ordered=False)

    def render(self) -> str:
        if not self.terms:
            return "0"
        name = self.poset.ideal_name
        open_, close = ("(", ")") if self.ordered else ("{", "}")
        parts = []
        for ideals, coef in self.items():
            body = open_ + "; ".join(name(i) for i in ideals) + close
            sign = "-" if coef < 0 else "+"
            parts.append((sign, f"{format_coefficient(abs(coef))}{body}"))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MVector({self.render()})"


def format_coefficient(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# -- actions ------------------------------------------------------------------

def _slot_power(poset, ideal, color, j, down):
    """X_a^j (or Y_a^j) on a single split, as {ideal: number of raising paths}."""
    key = ("power", ideal, color, j, down)
    cache = poset._cache
    if key not in cache:
        if j == 0:
            result = {ideal: 1}
        else:
            step = lower_all if down else raise_all
            result = defaultdict(int)
            for mid, cnt in _slot_power(poset, ideal, color, j - 1, down).items():
                for img in step(poset, mid, color):
                    result[img] += cnt
            result = dict(result)
        cache[key] = result
    return cache[key]


def _divided_on_tuple(poset, slots, color, k, down):
    key = ("divided", slots, color, k, down)
    cache = poset._cache
    if key in cache:
        return cache[key]
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    m = len(slots)

    def spread(s, remaining, acc, coef):
        if s == m:
            if remaining == 0:
                out[tuple(acc)] += coef
            return
        for j in range(remaining + 1):
            images = _slot_power(poset, slots[s], color, j, down)
            if not images:
                break
            weight = Fraction(1, factorial(j))
            for img, cnt in images.items():
                acc.append(img)
                spread(s + 1, remaining - j, acc, coef * cnt * weight)
                acc.pop()

    spread(0, k, [], Fraction(1))
    result = {t: c for t, c in out.items() if c}
    cache[key] = result
    return result


def _check_color(v, color):
    if color not in v.poset.diagram.colors:
        raise InputError(f"unknown color {color!r}")


def act_divided(v: MVector, color: str, k: int, down: bool = False) -> MVector:
    """<a^k>.v = X_a^k.v / k! (``down=True`` uses the lowering operator Y_a)."""
    if k < 0:
        raise InputError("divided power exponent must be nonnegative")
    _check_color(v, color)
    if k == 0:
        return v.like(v.terms)
    acc: dict[tuple, Fraction] = defaultdict(Fraction)
    for key, coef in v.terms.items():
        for img, c in _divided_on_tuple(v.poset, key, color, k, down).items():
            acc[v.canonical(img)] += coef * c
    return v.like({k_: c for k_, c in acc.items() if c})


def act_color(v: MVector, color: str, down: bool = False) -> MVector:
    """X_a.v raising one slot at a time (``down=True``: Y_a)."""
    return act_divided(v, color, 1, down)


def word_groups(word) -> tuple[tuple[str, int], ...]:
    if isinstance(word, str):
        from .words import Word
        word = Word.parse(word)
    groups = getattr(word, "groups", word)
    return tuple((c, int(k)) for c, k in groups)


def act_word(v: MVector, word, down: bool = False, trace: Optional[list] = None) -> MVector:
    """Apply ``<b_k^{n_k}, ..., b_1^{n_1}>`` right to left.

    ``trace``, if given, receives the vector after each group.
    """
    for color, k in reversed(word_groups(word)):
        v = act_divided(v, color, k, down)
        if trace is not None:
            trace.append(v)
    return v


def word_vector(poset: ColoredPoset, word, m: int, extension=None, ordered=False,
                down: bool = False, trace=None) -> MVector:
    """``<word>.{∅, ..., ∅}`` (or ``.{P, ..., P}`` with ``down=True``).

    Coefficients are asserted integral whenever the poset satisfies EC and ND.
    """
    start = (MVector.top if down else MVector.empty)(poset, m, extension, ordered)
    v = act_word(start, word, down, trace)
    if not v.is_integral() and poset.check_axiom("EC").holds and poset.check_axiom("ND").holds:
        raise IntegralityViolation(f"non-integral coefficients in {v.render()}")
    return v


def all_tuples(poset: ColoredPoset, m: int, extension=None) -> list[tuple[Ideal, ...]]:
    from itertools import product

    ideals = poset.enumerate_ideals(extension)
    return list(product(ideals, repeat=m))


def color_census(poset: ColoredPoset, ideals: Iterable[Ideal]) -> dict[str, int]:
    census: dict[str, int] = defaultdict(int)
    for ideal in ideals:
        for x in ideal:
            census[poset.color(x)] += 1
    return dict(census)


def compare_key(extension):
    """``functools`` key for sorting ideals by gravity under ``extension``."""
    return cmp_to_key(lambda a, b: gravity_cmp_ideals(a, b, extension))
