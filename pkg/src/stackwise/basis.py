"""Stackwise vectors, the stackwise basis and integral expansion of words."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (InputError, IntegralityViolation, LinearDependence, MathematicalFailure,
                     SpanViolation)
from .mvector import (MVector, enumerate_flags, format_coefficient, is_flag, ppartition_to_flag,
                      word_vector)
from .poset import ColoredPoset
from .words import Word, as_word, augmented_words, classify_augmented, stackwise_word, word_cmp


def stackwise_vector(poset: ColoredPoset, flag, extension=None) -> MVector:
    """The stackwise word of ``flag`` applied to {∅, ..., ∅}."""
    flag = tuple(frozenset(i) for i in flag)
    ext = poset.check_extension(extension)
    return word_vector(poset, stackwise_word(poset, flag, ext), len(flag), ext)


@dataclass(frozen=True)
class BasisEntry:
    flag: tuple
    word: Word
    vector: MVector
    leading: int  # coefficient of the flag's own multiset


@dataclass
class StackwiseBasis:
    poset: ColoredPoset
    m: int
    extension: tuple
    entries: list[BasisEntry]
    _by_key: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for e in self.entries:
            self._by_key[e.vector.canonical(e.flag)] = e

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def lookup(self, ideals) -> Optional[BasisEntry]:
        key = self.entries[0].vector.canonical(ideals) if self.entries else tuple(ideals)
        return self._by_key.get(key)


@dataclass(frozen=True)
class DependenceWitness:
    """Two P-partitions whose stackwise vectors are proportional."""
    axiom: str
    pair: tuple
    extension: tuple
    psi1: dict
    psi2: dict
    word1: Word
    word2: Word
    vector1: MVector
    vector2: MVector
    ratio: Optional[Fraction]

    def render(self) -> str:
        fmt = lambda psi: " ".join(f"{x}:{psi[x]}" for x in self.extension)
        return "\n".join([
            f"{self.axiom} fails at {' '.join(self.pair)}; extension {' '.join(self.extension)}",
            f"psi1 = {fmt(self.psi1)}  word <{self.word1}>  vector {self.vector1.render()}",
            f"psi2 = {fmt(self.psi2)}  word <{self.word2}>  vector {self.vector2.render()}",
            f"vector1 = {format_coefficient(self.ratio)} * vector2",
        ])


def _proportion(v1: MVector, v2: MVector) -> Optional[Fraction]:
    if not v1 or not v2 or set(v1.terms) != set(v2.terms):
        return None
    key = next(iter(v2.terms))
    ratio = v1.terms[key] / v2.terms[key]
    return ratio if v1 == v2 * ratio else None


def dependence_witness(poset: ColoredPoset, m: int = 2) -> Optional[DependenceWitness]:
    """Exhibit linear dependence when EC or ND fails (None if both hold).

    For an EC pair x, y (or an ND cover x -> y) of color b, let F be the filter
    they generate and I its complement. Ordering I, then x, y, then the rest of
    F, the P-partitions with psi = m on I and (1, 1) or (2, 0) on (x, y) have
    words <b, b, ...> and <b^2, ...>, which differ by the gluing factor 2.
    """
    if m < 2:
        raise InputError("the dependence construction needs m >= 2")
    for axiom in ("EC", "ND"):
        report = poset.check_axiom(axiom)
        if not report.holds:
            break
    else:
        return None
    x, y = report.witness[:2]
    if axiom == "EC":
        F = poset.above(x) | poset.above(y) | {x, y}
    else:
        F = poset.above(x) | {x}
    base = poset.default_extension()
    ideal = [u for u in base if u not in F]
    rest = [u for u in base if u in F and u not in (x, y)]
    ext = tuple(ideal + [x, y] + rest)
    psi1 = {u: 0 for u in poset.elements}
    psi1.update({u: m for u in ideal})
    psi2 = dict(psi1)
    psi1[x], psi1[y] = 1, 1
    psi2[x], psi2[y] = 2, 0
    f1, f2 = ppartition_to_flag(poset, psi1, m), ppartition_to_flag(poset, psi2, m)
    w1, w2 = stackwise_word(poset, f1, ext), stackwise_word(poset, f2, ext)
    v1 = word_vector(poset, w1, m, ext)
    v2 = word_vector(poset, w2, m, ext)
    return DependenceWitness(axiom, (x, y), ext, psi1, psi2, w1, w2, v1, v2, _proportion(v1, v2))


def build_basis(poset: ColoredPoset, m: int, extension=None) -> StackwiseBasis:
    """One stackwise vector per m-flag, sorted by gravity; raises LinearDependence without EC+ND."""
    if m < 1:
        raise InputError("m must be at least 1")
    ext = poset.check_extension(extension)
    key = ("basis", m, ext)
    if key in poset._cache:
        return poset._cache[key]
    if m >= 2:
        witness = dependence_witness(poset, m)
        if witness is not None:
            raise LinearDependence(f"stackwise vectors are dependent: {witness.axiom} fails", witness)
    entries = []
    for flag in enumerate_flags(poset, m, ext):
        word = stackwise_word(poset, flag, ext)
        vector = word_vector(poset, word, m, ext)
        lead = vector.leading()
        if lead is None or lead[0] != vector.canonical(flag):
            raise MathematicalFailure(f"leading term of flag {_flag_name(poset, flag)} is not its own multiset")
        if lead[1].denominator != 1:
            raise IntegralityViolation(f"leading coefficient {lead[1]} is not an integer")
        entries.append(BasisEntry(flag, word, vector, int(lead[1])))
    basis = StackwiseBasis(poset, m, ext, entries)
    poset._cache[key] = basis
    return basis


def _flag_name(poset, flag) -> str:
    return ";".join(poset.ideal_name(i) for i in flag)


@dataclass
class Expansion:
    word: Word
    vector: MVector
    coefficients: dict  # flag -> Fraction, in gravity order of the flags
    residual: MVector

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients.values())

    def reconstruct(self, basis: StackwiseBasis) -> MVector:
        total = self.residual
        for flag, c in self.coefficients.items():
            total = total + basis.lookup(flag).vector * c
        return total

    def render(self) -> list[str]:
        poset = self.vector.poset
        return [f"{format_coefficient(c)} * [{_flag_name(poset, f)}]" for f, c in self.coefficients.items()]


def expand_word(poset: ColoredPoset, word, m: int, extension=None,
                basis: Optional[StackwiseBasis] = None) -> Expansion:
    """Write <word>.{∅, ..., ∅} in the stackwise basis by gravity-triangular elimination.

    On a d-complete poset every coefficient must be an integer; anything else
    raises :class:`IntegralityViolation`.
    """
    word = as_word(word)
    ext = poset.check_extension(extension)
    basis = basis or build_basis(poset, m, ext)
    vector = word_vector(poset, word, m, ext)
    residual = vector
    coefficients: dict = {}
    while residual:
        ideals, coef = residual.leading()
        entry = basis.lookup(ideals)
        if entry is None:
            kind = "a flag" if is_flag(ideals) else "not a chain"
            raise SpanViolation(
                f"leading term {{{_flag_name(poset, ideals)}}} of <{word}> is {kind} without a basis vector")
        c = coef / entry.leading
        coefficients[entry.flag] = c
        residual = residual - entry.vector * c
    pos_order = {e.flag: i for i, e in enumerate(basis.entries)}
    coefficients = dict(sorted(coefficients.items(), key=lambda fc: pos_order[fc[0]]))
    expansion = Expansion(word, vector, coefficients, residual)
    if not expansion.is_integral() and poset.classify().is_d_complete:
        raise IntegralityViolation(f"<{word}> has non-integral expansion: {expansion.render()}")
    return expansion


# -- certification --------------------------------------------------------------

@dataclass
class CertificationRun:
    m: int
    extension: tuple
    basis_size: int
    words_checked: int
    failures: list  # (word, message)


@dataclass
class CertificationReport:
    seed: int
    n_random: int
    max_len: int
    runs: list

    @property
    def certified(self) -> bool:
        return all(not r.failures for r in self.runs)

    def render(self) -> list[str]:
        lines = [f"seed {self.seed}, {self.n_random} random words per run, length <= {self.max_len}"]
        for r in self.runs:
            status = "ok" if not r.failures else f"{len(r.failures)} failures"
            lines.append(f"m={r.m} extension {' '.join(r.extension)}: basis {r.basis_size}, "
                         f"{r.words_checked} words, {status}")
            for word, msg in r.failures[:5]:
                lines.append(f"  <{word}>: {msg}")
        lines.append("certified" if self.certified else "NOT certified")
        return lines


def random_words(poset: ColoredPoset, n: int, max_len: int, rng: random.Random):
    colors = poset.diagram.colors
    for _ in range(n):
        length = rng.randint(1, max_len)
        yield Word.of_letters(rng.choice(colors) for _ in range(length))


def _check_expansion(poset, word, m, ext, basis):
    try:
        exp = expand_word(poset, word, m, ext, basis)
    except MathematicalFailure as err:
        return f"{type(err).__name__}: {err}"
    if exp.residual:
        return f"nonzero residual {exp.residual.render()}"
    if not exp.is_integral():
        return f"non-integral coefficients {exp.render()}"
    if exp.reconstruct(basis) != exp.vector:
        return "expansion does not reproduce the vector"
    return None


def certify_standard(poset: ColoredPoset, m_max: int, all_extensions: bool = False,
                     n_random: int = 500, max_len: int = 8, seed: int = 0,
                     extensions=None) -> CertificationReport:
    """Check independence (triangularity) and integral spanning for m <= m_max."""
    if extensions is None:
        extensions = list(poset.linear_extensions()) if all_extensions else [poset.default_extension()]
    runs = []
    for ext in extensions:
        ext = poset.check_extension(ext)
        for m in range(1, m_max + 1):
            rng = random.Random(f"{seed}:{m}:{' '.join(ext)}")
            try:
                basis = build_basis(poset, m, ext)
            except MathematicalFailure as err:
                runs.append(CertificationRun(m, ext, 0, 0, [("", f"{type(err).__name__}: {err}")]))
                continue
            failures, checked = [], 0
            words = list(augmented_words(poset, m, ext)) + list(random_words(poset, n_random, max_len, rng))
            for word in words:
                checked += 1
                msg = _check_expansion(poset, word, m, ext, basis)
                if msg:
                    failures.append((word, msg))
            runs.append(CertificationRun(m, ext, len(basis), checked, failures))
    return CertificationReport(seed, n_random, max_len, runs)


def case_consistency(poset: ColoredPoset, m: int, extension=None) -> list[tuple[Word, str]]:
    """Compare the predicted case of every augmented stackwise word with its expansion.

    Returns a list of mismatches (empty when everything agrees).
    """
    ext = poset.check_extension(extension)
    basis = build_basis(poset, m, ext)
    problems = []
    for word in augmented_words(poset, m, ext):
        case = classify_augmented(poset, word, m, ext)
        exp = expand_word(poset, word, m, ext, basis)
        if case.vanishes:
            if exp.vector:
                problems.append((word, f"case {case.case} predicts 0, got {exp.vector.render()}"))
        elif case.case in ("b", "d-i", "d-ii"):
            if exp.coefficients != {case.flag: Fraction(case.coefficient)}:
                problems.append((word, f"case {case.case} predicts {case.coefficient} * "
                                       f"[{_flag_name(poset, case.flag)}], got {exp.render()}"))
            if case.vector is not None and case.vector != exp.vector:
                problems.append((word, f"case b vector {case.vector.render()} != {exp.vector.render()}"))
        else:
            if not exp.is_integral():
                problems.append((word, "case e expansion is not integral"))
            for flag in exp.coefficients:
                fw = stackwise_word(poset, flag, ext)
                if len(fw) != len(word) or word_cmp(poset, fw, word, m, ext) >= 0:
                    problems.append((word, f"case e term <{fw}> is not below the word"))
    return problems
