from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from property_suites import POSETS, SUITES
from stackwise import DynkinDiagram, build_basis, catalog, gcm, grows_well, stackwise_word, word_cmp
from stackwise.mvector import MVector, enumerate_flags
from stackwise.words import Word


@pytest.mark.parametrize("suite", list(SUITES))
@pytest.mark.parametrize("poset", list(POSETS))
def test_property_suite(suite, poset):
    assert SUITES[suite](POSETS[poset]()) == []


@st.composite
def diagrams(draw):
    n = draw(st.integers(1, 6))
    colors = tuple(f"c{i}" for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    # a spanning path keeps the diagram connected
    edges = {frozenset((colors[i], colors[i + 1])) for i in range(n - 1)}
    edges |= {frozenset((colors[i], colors[j])) for i, j in chosen}
    return DynkinDiagram(colors, frozenset(edges))


@given(diagrams())
def test_random_gcm_invariants(D):
    G = gcm(D)
    n = len(D.colors)
    for i, j in product(range(n), repeat=2):
        if i == j:
            assert G[i][j] == 2
        else:
            assert G[i][j] == G[j][i] in (0, -1)
            assert (G[i][j] == -1) == D.adjacent(D.colors[i], D.colors[j])


FIG = catalog.dcomplete5()
EXT = FIG.default_extension()
words6 = st.lists(st.sampled_from("abcd"), min_size=6, max_size=6).map(Word.of_letters)


@settings(max_examples=60, deadline=None)
@given(words6, words6, words6)
def test_word_order_is_total(u, v, w):
    cmp = lambda x, y: word_cmp(FIG, x, y, 2, EXT)
    assert cmp(u, v) == -cmp(v, u)
    assert (cmp(u, v) == 0) == (grows_well(FIG, u, 2, EXT).replaced == grows_well(FIG, v, 2, EXT).replaced)
    if cmp(u, v) < 0 and cmp(v, w) < 0:
        assert cmp(u, w) < 0


@pytest.mark.parametrize("poset", list(POSETS))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_stackwise_words_grow_to_their_flag(poset, m):
    P = POSETS[poset]()
    ext = P.default_extension()
    for flag in enumerate_flags(P, m, ext):
        record = grows_well(P, stackwise_word(P, flag, ext), m, ext)
        assert record.grows_well
        assert record.grown == MVector(P, m, ext).canonical(flag)


@pytest.mark.parametrize("poset", list(POSETS))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_leading_term_is_the_flag(poset, m):
    P = POSETS[poset]()
    for entry in build_basis(P, m):
        assert entry.vector.leading()[0] == entry.vector.canonical(entry.flag)
