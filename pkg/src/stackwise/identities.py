"""Exhaustive checks of the divided-power operator identities.

Each identity is a linear relation ``sum coef * <word> = 0`` between words.
It is checked by applying every word to every m-tuple of ideals (and to
every m-multiset). Word actions are built group by group, and the partial
products are memoized because the words in one identity share right-hand
segments.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from typing import Optional

from .errors import InputError
from .mvector import MVector, _divided_on_tuple
from .poset import ColoredPoset
from .words import Word

IDENTITY_TAGS = ("commute", "gluing", "alt-sum", "shift", "exchange",
                 "binom-a", "binom-b")
IDENTITY_AXIOMS = ("EC", "NA", "AC", "ICE2")


@dataclass
class IdentityCheck:
    identity: str
    params: dict
    status: str  # "holds", "fails" or "hypothesis-failed"
    counterexample: Optional[tuple] = None  # (input, lhs, rhs)
    exhaustive: bool = True
    inputs_checked: int = 0
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def render(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{self.identity} {params}: {self.status}"
        if self.status != "hypothesis-failed" and self.inputs_checked:
            line += f" ({self.inputs_checked} inputs{'' if self.exhaustive else ', sampled'})"
        if self.reason:
            line += f" [{self.reason}]"
        if self.counterexample:
            inp, lhs, rhs = self.counterexample
            line += f"\n  input {inp}: lhs {lhs.render()} != rhs {rhs.render()}"
        return line


def _w(*groups) -> Word:
    return Word(tuple(groups))


# -- operator evaluation --------------------------------------------------------

def _inputs(poset: ColoredPoset, m: int, ordered: bool):
    ideals = poset.enumerate_ideals()
    if ordered:
        return list(product(ideals, repeat=m))
    return list(combinations_with_replacement(ideals, m))


def _word_operator(poset, m, groups, ordered, inputs, memo):
    """{input: {output: coefficient}} for the word with ``groups`` on each input."""
    if groups in memo:
        return memo[groups]
    if not groups:
        op = {i: {i: Fraction(1)} for i in inputs}
    else:
        (color, k), rest = groups[0], groups[1:]
        inner = _word_operator(poset, m, rest, ordered, inputs, memo)
        canon = _canonizer(poset, m, ordered)
        op = {}
        for i, terms in inner.items():
            acc: dict = defaultdict(Fraction)
            for t, c in terms.items():
                for img, c2 in _divided_on_tuple(poset, t, color, k, False).items():
                    acc[canon(img)] += c * c2
            op[i] = {t: c for t, c in acc.items() if c}
    memo[groups] = op
    return op


def _canonizer(poset, m, ordered):
    if ordered:
        return tuple
    probe = MVector(poset, m)
    return probe.canonical


def check_relation(poset: ColoredPoset, m: int, relation, ordered: bool = True,
                   sample: Optional[int] = None, seed: int = 0, memo=None):
    """Test ``sum coef * <word> = 0`` on all inputs, or on ``sample`` random ones.

    ``relation`` is a list of ``(coefficient, Word)``. Returns ``(ok, counterexample,
    n_inputs)``; the counterexample's lhs collects positive terms and rhs the rest.
    """
    inputs = _inputs(poset, m, ordered)
    exhaustive = sample is None or sample >= len(inputs)
    if not exhaustive:
        inputs = random.Random(seed).sample(inputs, sample)
        memo = {}
    elif memo is None:
        memo = poset._cache.setdefault(("identity-memo", m, ordered), {})
    canon = _canonizer(poset, m, ordered)
    inputs = [canon(i) for i in inputs]
    ops = [(Fraction(c), _word_operator(poset, m, w.groups, ordered, inputs, memo)) for c, w in relation]
    for i in inputs:
        total: dict = defaultdict(Fraction)
        for c, op in ops:
            for t, v in op[i].items():
                total[t] += c * v
        if any(total.values()):
            lhs = MVector(poset, m, None, {}, ordered)
            rhs = MVector(poset, m, None, {}, ordered)
            for c, op in ops:
                side = op[i]
                vec = MVector(poset, m, None, {t: v * abs(c) for t, v in side.items()}, ordered)
                if c > 0:
                    lhs = lhs + vec
                else:
                    rhs = rhs + vec
            label = ";".join(poset.ideal_name(x) for x in i)
            return False, (label, lhs, rhs), len(inputs)
    return True, None, len(inputs)


def _run(poset, m, tag, params, relation, variants, sample, seed):
    checked = 0
    for ordered in variants:
        ok, cex, n = check_relation(poset, m, relation, ordered, sample, seed)
        checked += n
        if not ok:
            return IdentityCheck(tag, params, "fails", cex, sample is None, checked,
                                 "tuples" if ordered else "multisets")
    return IdentityCheck(tag, params, "holds", None, sample is None, checked)


def _skip(tag, params, reason):
    return IdentityCheck(tag, params, "hypothesis-failed", reason=reason)


def _check_colors(poset, *colors):
    for c in colors:
        if c not in poset.diagram.colors:
            raise InputError(f"unknown color {c!r}")


def _neighbor_colored(poset, b, c) -> bool:
    return any({poset.color(x), poset.color(y)} == {b, c} for x, y in poset.covers)


def _identity_hypotheses(poset, b, c) -> str:
    if b == c:
        return "b = c"
    failed = [a for a in IDENTITY_AXIOMS if not poset.check_axiom(a).holds]
    return f"poset fails {' '.join(failed)}" if failed else ""


def _nonneg(**values):
    for name, v in values.items():
        if v < 0:
            raise InputError(f"{name} must be nonnegative")


# -- the identities ---------------------------------------------------------------

VARIANTS = (True, False)


def verify_commute(poset, m, b, c, p, q, variants=VARIANTS, sample=None, seed=0) -> IdentityCheck:
    """<c^q, b^p> = <b^p, c^q> when no two neighbors carry the colors b and c."""
    _check_colors(poset, b, c)
    _nonneg(p=p, q=q)
    params = dict(m=m, b=b, c=c, p=p, q=q)
    if b == c:
        return _skip("commute", params, "b = c")
    if _neighbor_colored(poset, b, c):
        return _skip("commute", params, f"neighbors colored {b} and {c}")
    rel = [(1, _w((c, q), (b, p))), (-1, _w((b, p), (c, q)))]
    return _run(poset, m, "commute", params, rel, variants, sample, seed)


def verify_gluing(poset, m, c, p, q, variants=VARIANTS, sample=None, seed=0) -> IdentityCheck:
    """<c^q, c^p> = C(p+q, p) <c^(p+q)>."""
    _check_colors(poset, c)
    _nonneg(p=p, q=q)
    rel = [(1, _w((c, q), (c, p))), (-comb(p + q, p), _w((c, p + q)))]
    return _run(poset, m, "gluing", dict(m=m, c=c, p=p, q=q), rel, variants, sample, seed)


def verify_altsum(poset, m, b, c, p, q, variants=VARIANTS, sample=None, seed=0) -> IdentityCheck:
    """sum_k (-1)^k <c^(q-k), b^p, c^k> = 0 for q > p >= 0."""
    _check_colors(poset, b, c)
    _nonneg(p=p, q=q)
    params = dict(m=m, b=b, c=c, p=p, q=q)
    if not q > p:
        return _skip("alt-sum", params, "needs q > p")
    reason = _identity_hypotheses(poset, b, c)
    if reason:
        return _skip("alt-sum", params, reason)
    rel = [((-1) ** k, _w((c, q - k), (b, p), (c, k))) for k in range(q + 1)]
    return _run(poset, m, "alt-sum", params, rel, variants, sample, seed)


def verify_shift(poset, m, b, c, p, q, variants=VARIANTS, sample=None, seed=0) -> IdentityCheck:
    """<c^q, b^p> = sum_{k<q} (-1)^k <c^(q-1-k), b^p, c^(k+1)> for q > p >= 0."""
    _check_colors(poset, b, c)
    _nonneg(p=p, q=q)
    params = dict(m=m, b=b, c=c, p=p, q=q)
    if not q > p:
        return _skip("shift", params, "needs q > p")
    reason = _identity_hypotheses(poset, b, c)
    if reason:
        return _skip("shift", params, reason)
    rel = [(1, _w((c, q), (b, p)))]
    rel += [(-(-1) ** k, _w((c, q - 1 - k), (b, p), (c, k + 1))) for k in range(q)]
    return _run(poset, m, "shift", params, rel, variants, sample, seed)


def verify_exchange(poset, m, b, c, p, q, r, variants=VARIANTS, sample=None, seed=0) -> IdentityCheck:
    """<c^q, b^p, c^r> = sum_{k <= min(p,q)} C(q+r-p, q-k) <b^(p-k), c^(q+r), b^k> for r >= p."""
    _check_colors(poset, b, c)
    _nonneg(p=p, q=q, r=r)
    params = dict(m=m, b=b, c=c, p=p, q=q, r=r)
    if r < p:
        return _skip("exchange", params, "needs r >= p")
    reason = _identity_hypotheses(poset, b, c)
    if reason:
        return _skip("exchange", params, reason)
    rel = [(1, _w((c, q), (b, p), (c, r)))]
    rel += [(-comb(q + r - p, q - k), _w((b, p - k), (c, q + r), (b, k)))
            for k in range(min(p, q) + 1)]
    return _run(poset, m, "exchange", params, rel, variants, sample, seed)


def verify_binomial(p: int, q: int, r: int, k: Optional[int] = None) -> IdentityCheck:
    """The two binomial identities used for the exchange identity; (b) when ``k`` is given."""
    if min(p, q, r) < 1 or r < p:
        raise InputError("need p, q, r >= 1 and r >= p")
    n = q + r - p
    if k is None:
        lhs = comb(n, q) * (1 + n)
        rhs = (q + 1) * comb(n + 1, q + 1)
        tag, params = "binom-a", dict(p=p, q=q, r=r)
    else:
        if not 1 <= k <= q:
            raise InputError("need 1 <= k <= q")
        lhs = comb(n, q - k) * (1 + n + k) + comb(n, q - k + 1) * k
        rhs = (q + 1) * comb(n + 1, q + 1 - k)
        tag, params = "binom-b", dict(p=p, q=q, r=r, k=k)
    if lhs == rhs:
        return IdentityCheck(tag, params, "holds", inputs_checked=1)
    return IdentityCheck(tag, params, "fails", ((p, q, r, k), lhs, rhs), inputs_checked=1)


def identity_grid(poset: ColoredPoset, pmax: int = 3, qmax: int = 3, rmax: int = 3,
                  ms=(1, 2, 3), variants=VARIANTS, sample=None, seed=0,
                  include_skipped: bool = False) -> list[IdentityCheck]:
    """Every operator identity over all color pairs and parameter tuples in range."""
    colors = poset.diagram.colors
    checks = []
    pairs = [(b, c) for b in colors for c in colors if b != c]
    opts = dict(variants=variants, sample=sample, seed=seed)
    for m in ms:
        for c in colors:
            for p in range(pmax + 1):
                for q in range(qmax + 1):
                    checks.append(verify_gluing(poset, m, c, p, q, **opts))
        for b, c in pairs:
            for p in range(pmax + 1):
                for q in range(qmax + 1):
                    checks.append(verify_commute(poset, m, b, c, p, q, **opts))
                    checks.append(verify_altsum(poset, m, b, c, p, q, **opts))
                    checks.append(verify_shift(poset, m, b, c, p, q, **opts))
                    for r in range(rmax + 1):
                        checks.append(verify_exchange(poset, m, b, c, p, q, r, **opts))
    if not include_skipped:
        checks = [ch for ch in checks if ch.status != "hypothesis-failed"]
    return checks


def binomial_grid(pmax: int = 3, qmax: int = 3, rmax: int = 3) -> list[IdentityCheck]:
    checks = []
    for p in range(1, pmax + 1):
        for q in range(1, qmax + 1):
            for r in range(p, rmax + 1):
                checks.append(verify_binomial(p, q, r))
                for k in range(1, q + 1):
                    checks.append(verify_binomial(p, q, r, k))
    return checks
