"""Brute-force reference implementations used to cross-check the library.

Nothing here imports library algorithms; only the catalog poset objects are
read (elements, covers, colors, diagram edges).
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import chain, combinations, permutations, product
from math import factorial


def strictly_below(P):
    """x -> set of elements strictly below x, by transitive closure of covers."""
    below = {x: set() for x in P.elements}
    changed = True
    while changed:
        changed = False
        for x, y in P.covers:
            new = {x} | below[x]
            if not new <= below[y]:
                below[y] |= new
                changed = True
    return below


def all_ideals(P):
    below = strictly_below(P)
    els = list(P.elements)
    subsets = chain.from_iterable(combinations(els, r) for r in range(len(els) + 1))
    return [frozenset(s) for s in subsets if all(below[y] <= set(s) for y in s)]


def count_ppartitions(P, m):
    total = 0
    for values in product(range(m + 1), repeat=len(P.elements)):
        psi = dict(zip(P.elements, values))
        if all(psi[x] >= psi[y] for x, y in P.covers):
            total += 1
    return total


def count_linear_extensions(P):
    below = strictly_below(P)
    n = 0
    for perm in permutations(P.elements):
        pos = {x: i for i, x in enumerate(perm)}
        if all(pos[b] < pos[x] for x in perm for b in below[x]):
            n += 1
    return n


def raisable(P, ideal, color):
    """Elements of color `color` that can be added to `ideal` keeping it an ideal."""
    below = strictly_below(P)
    return [x for x in P.elements
            if x not in ideal and P.coloring[x] == color and below[x] <= ideal]


def gravity_key(ideal, extension):
    pos = {x: i for i, x in enumerate(extension)}
    return (-len(ideal), sorted(pos[x] for x in ideal))


def to_multiset(tup, extension):
    return tuple(sorted(tup, key=lambda i: gravity_key(i, extension)))


def naive_word(P, letters, m, extension, start=None):
    """Apply (color, k) groups right to left on m-tuples, each as k single raises
    followed by division by k!, then merge into gravity-sorted multisets."""
    vec = {start or (frozenset(),) * m: Fraction(1)}
    for color, k in reversed(letters):
        for _ in range(k):
            nxt = defaultdict(Fraction)
            for tup, c in vec.items():
                for s in range(m):
                    for x in raisable(P, tup[s], color):
                        new = list(tup)
                        new[s] = tup[s] | {x}
                        nxt[tuple(new)] += c
            vec = nxt
        vec = {t: c / factorial(k) for t, c in vec.items()}
    out = defaultdict(Fraction)
    for t, c in vec.items():
        out[to_multiset(t, extension)] += c
    return {t: c for t, c in out.items() if c}


def mu_by_deltas(P):
    """mu via mu_i(I) = mu_i(I') - 2 delta_ik + sum_{l ~ k} delta_il, any descent path."""
    colors = list(P.diagram.colors)
    adj = {a: {b for e in P.diagram.edges for b in e if a in e and b != a} for a in colors}
    below = strictly_below(P)
    maxima = [x for x in P.elements if not any(x in below[y] for y in P.elements)]
    (top,) = maxima
    full = frozenset(P.elements)
    mu = {full: [int(c == P.coloring[top]) for c in colors]}
    stack = [full]
    while stack:
        big = stack.pop()
        for x in big:
            if any(x in below[y] for y in big):
                continue  # not maximal in big
            small = big - {x}
            k = P.coloring[x]
            row = [mu[big][i] - 2 * (c == k) + (c in adj[k]) for i, c in enumerate(colors)]
            if small not in mu:
                mu[small] = row
                stack.append(small)
    return {i: tuple(r) for i, r in mu.items()}


def matrices(P):
    """Dict-based operators X_a, Y_a on the split basis; Y is read off X."""
    ideals = all_ideals(P)
    X = {a: {i: [i | {x} for x in raisable(P, i, a)] for i in ideals} for a in P.diagram.colors}
    Y = {a: {i: [j for j in ideals if i in X[a][j]] for i in ideals} for a in P.diagram.colors}
    return ideals, X, Y


def apply(op, vec):
    out = defaultdict(int)
    for i, c in vec.items():
        for j in op[i]:
            out[j] += c
    return {k: v for k, v in out.items() if v}
