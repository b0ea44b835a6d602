"""Words of divided-power groups and the combinatorics built on them.

A :class:`Word` stores groups left to right as written, so the rightmost group
acts first. Adjacent groups of equal color are kept apart because
``<c, c>`` and ``<c^2>`` differ by a factor of 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .errors import InputError
from .lattice import raise_all
from .mvector import (MVector, flag_to_ppartition, ideal_key, enumerate_flags, ppartition_to_flag)
from .poset import ColoredPoset


@dataclass(frozen=True)
class Word:
    groups: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        cleaned = []
        for group in self.groups:
            try:
                color, k = group
            except (TypeError, ValueError):
                raise InputError(f"malformed word group {group!r}") from None
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise InputError(f"multiplicity of {color!r} must be a nonnegative integer")
            if k:
                cleaned.append((str(color), k))
        object.__setattr__(self, "groups", tuple(cleaned))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"d^1,b^1,c^4,a^3"`` or ``"d,c,d,b,c,a"``; empty text is the empty word."""
        groups = []
        text = text.strip()
        if not text:
            return cls()
        for token in text.split(","):
            token = token.strip()
            color, _, exp = token.partition("^")
            color = color.strip()
            if not color:
                raise InputError(f"empty color in word {text!r}")
            try:
                k = int(exp) if exp else 1
            except ValueError:
                raise InputError(f"bad multiplicity {exp!r} in word {text!r}") from None
            groups.append((color, k))
        return cls(tuple(groups))

    @classmethod
    def of_letters(cls, letters) -> "Word":
        return cls(tuple((c, 1) for c in letters))

    def flat(self) -> tuple[str, ...]:
        """Letters left to right, each group expanded."""
        return tuple(c for c, k in self.groups for _ in range(k))

    def __len__(self):
        return sum(k for _, k in self.groups)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.groups + other.groups)

    def census(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c, k in self.groups:
            out[c] = out.get(c, 0) + k
        return out

    def __str__(self):
        return ",".join(c if k == 1 else f"{c}^{k}" for c, k in self.groups)


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(tuple(w))


# -- growth by X^min ----------------------------------------------------------

@dataclass(frozen=True)
class Token:
    """One entry of a replaced sequence: a color that did not grow, or the element it added."""
    kind: str  # "color" or "element"
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class GrowthRecord:
    length: int                 # longest initial segment (from the right) that grows well
    total: int                  # flattened word length
    grown: tuple                # multiset after the successful steps
    replaced: tuple[Token, ...]  # aligned with the flattened word, left to right

    @property
    def grows_well(self) -> bool:
        return self.length == self.total

    def replaced_names(self) -> tuple[str, ...]:
        return tuple(t.name for t in self.replaced)


def grows_well(poset: ColoredPoset, word, m: int, extension=None) -> GrowthRecord:
    """Apply X^min letter by letter from the right on {∅, ..., ∅}.

    X^min raises the first slot, in gravity order, that accepts the letter.
    """
    word = as_word(word)
    ext = poset.check_extension(extension)
    pos = {x: i for i, x in enumerate(ext)}
    letters = word.flat()
    replaced = [Token("color", c) for c in letters]
    slots = [frozenset()] * m
    done = 0
    for idx in range(len(letters) - 1, -1, -1):
        color = letters[idx]
        for g, ideal in enumerate(slots):
            images = raise_all(poset, ideal, color)
            if images:
                new = min(images, key=lambda i: ideal_key(i, pos))
                (added,) = new - ideal
                slots[g] = new
                replaced[idx] = Token("element", added)
                break
        else:
            break
        slots.sort(key=lambda i: ideal_key(i, pos))
        done += 1
    return GrowthRecord(done, len(letters), tuple(slots), tuple(replaced))


def _token_key(poset, pos, token: Token):
    if token.kind == "color":
        return (0, poset.diagram.index[token.name])
    return (1, pos[token.name])


def word_cmp(poset: ColoredPoset, w1, w2, m: int, extension=None) -> int:
    """Total word order: shorter words first, then replaced sequences read from the right.

    Every color precedes every element; colors follow the diagram order and
    elements the extension.
    """
    w1, w2 = as_word(w1), as_word(w2)
    if len(w1) != len(w2):
        return -1 if len(w1) < len(w2) else 1
    ext = poset.check_extension(extension)
    pos = {x: i for i, x in enumerate(ext)}
    r1 = grows_well(poset, w1, m, ext).replaced
    r2 = grows_well(poset, w2, m, ext).replaced
    for t1, t2 in zip(reversed(r1), reversed(r2)):
        k1, k2 = _token_key(poset, pos, t1), _token_key(poset, pos, t2)
        if k1 != k2:
            return -1 if k1 < k2 else 1
    return 0


# -- stackwise words ----------------------------------------------------------

def stackwise_word(poset: ColoredPoset, flag, extension=None) -> Word:
    """Groups ``color(x)^psi(x)`` for x down the extension, zero groups dropped."""
    ext = poset.check_extension(extension)
    psi = flag_to_ppartition(poset, tuple(frozenset(i) for i in flag))
    return Word(tuple((poset.color(x), psi[x]) for x in reversed(ext)))


def _greedy_flag(poset, word, m, ext):
    seen: dict[str, int] = {}
    by_color = {a: [x for x in ext if poset.color(x) == a] for a in poset.diagram.colors}
    pos = {x: i for i, x in enumerate(ext)}
    psi: dict[str, int] = {}
    last = -1
    for color, k in reversed(word.groups):
        if color not in by_color:
            return None
        n = seen.get(color, 0)
        if n >= len(by_color[color]) or k > m:
            return None
        x = by_color[color][n]
        seen[color] = n + 1
        if pos[x] <= last:
            return None
        last = pos[x]
        psi[x] = k
    if not poset.is_ideal(frozenset(psi)):
        return None
    if any(psi.get(x, 0) < psi.get(y, 0) for x, y in poset.covers):
        return None
    return ppartition_to_flag(poset, psi, m)


def is_stackwise(poset: ColoredPoset, word, m: int, extension=None):
    """The m-flag whose stackwise word is ``word``, or None."""
    word = as_word(word)
    ext = poset.check_extension(extension)
    if not word.groups:
        return (frozenset(),) * m
    flag = _greedy_flag(poset, word, m, ext)
    if flag is not None and stackwise_word(poset, flag, ext) == word:
        return flag
    if poset.check_axiom("EC").holds:
        return None
    # without EC the color-to-element matching is ambiguous; search all flags
    for flag in enumerate_flags(poset, m, ext):
        if stackwise_word(poset, flag, ext) == word:
            return flag
    return None


def is_augmented(poset: ColoredPoset, word, m: int, extension=None) -> bool:
    word = as_word(word)
    if not word.groups:
        return False
    return is_stackwise(poset, Word(word.groups[1:]), m, extension) is not None


# -- augmented word cases---------------------------------------------------------

@dataclass(frozen=True)
class AugmentedCase:
    """Predicted outcome of an augmented stackwise word acting on {∅, ..., ∅}.

    ``flag``/``coefficient`` give the single-flag expansion for cases b, d-i
    and d-ii; ``vector`` is the closed form stated for case b.
    """
    case: str
    coefficient: int = 0
    flag: Optional[tuple] = None
    vector: Optional[MVector] = field(default=None, compare=False)

    @property
    def vanishes(self) -> bool:
        return self.case in ("a", "c")


def classify_augmented(poset: ColoredPoset, word, m: int, extension=None) -> AugmentedCase:
    word = as_word(word)
    ext = poset.check_extension(extension)
    if not is_augmented(poset, word, m, ext):
        raise InputError(f"word {word} is not in augmented stackwise form for m={m}")
    (c, q), rest = word.groups[0], Word(word.groups[1:])
    if not rest.groups:
        minimal = [z for z in poset.minimal_elements() if poset.color(z) == c]
        if not minimal or q > m:
            return AugmentedCase("a")
        z = minimal[0]
        flag = (frozenset({z}),) * q + (frozenset(),) * (m - q)
        vector = MVector(poset, m, ext, {flag: comb(m, q)})
        return AugmentedCase("b", 1, flag, vector)
    a_i, n_i = rest.groups[0]
    if c == a_i:
        if q + n_i > m:
            return AugmentedCase("c")
        glued = Word(((c, q + n_i),) + rest.groups[1:])
        flag = is_stackwise(poset, glued, m, ext)
        if flag is not None:
            return AugmentedCase("d-i", comb(q + n_i, q), flag)
        return AugmentedCase("e")
    flag = is_stackwise(poset, word, m, ext)
    if flag is not None:
        return AugmentedCase("d-ii", 1, flag)
    return AugmentedCase("e")


def augmented_words(poset: ColoredPoset, m: int, extension=None):
    """Every augmented stackwise word: each flag's word with a leading group c^q, q <= m."""
    ext = poset.check_extension(extension)
    for flag in enumerate_flags(poset, m, ext):
        base = stackwise_word(poset, flag, ext)
        for c in poset.diagram.colors:
            for q in range(1, m + 1):
                yield Word(((c, q),) + base.groups)
