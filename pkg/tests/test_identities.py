from math import comb

import pytest

from stackwise import (catalog, verify_altsum, verify_binomial, verify_commute, verify_exchange,
                       verify_gluing, verify_shift)
from stackwise.errors import InputError
from stackwise.identities import binomial_grid, check_relation, identity_grid
from stackwise.words import Word


def test_commute_distant(fig):
    assert verify_commute(fig, 2, "a", "d", 1, 1).holds
    assert verify_commute(fig, 2, "a", "d", 0, 2).holds
    assert verify_commute(catalog.chain(3), 2, "a1", "a3", 2, 1).holds


def test_commute_hypothesis(fig):
    check = verify_commute(fig, 2, "b", "c", 1, 1)
    assert check.status == "hypothesis-failed"
    assert verify_commute(fig, 2, "b", "b", 1, 1).status == "hypothesis-failed"


def test_gluing(fig):
    assert verify_gluing(fig, 2, "c", 1, 1).holds
    assert verify_gluing(fig, 2, "c", 0, 3).holds
    assert verify_gluing(fig, 3, "c", 1, 2).holds


def test_altsum_and_shift(fig):
    assert verify_altsum(fig, 2, "b", "c", 1, 2).holds
    assert verify_altsum(fig, 2, "a", "d", 0, 1).holds
    assert verify_altsum(fig, 3, "b", "c", 0, 2).holds
    assert verify_altsum(fig, 2, "b", "c", 2, 2).status == "hypothesis-failed"
    assert verify_shift(fig, 2, "c", "c", 0, 1).status == "hypothesis-failed"
    assert verify_shift(fig, 2, "b", "c", 0, 1).holds
    assert verify_shift(fig, 2, "b", "c", 1, 2).holds
    assert verify_shift(fig, 3, "a", "d", 1, 3).holds


def test_exchange(fig):
    assert verify_exchange(fig, 2, "b", "c", 1, 0, 2).holds
    assert verify_exchange(fig, 2, "b", "c", 0, 2, 1).holds
    assert verify_exchange(fig, 2, "b", "c", 1, 1, 1).holds
    assert verify_exchange(fig, 2, "b", "c", 2, 1, 1).status == "hypothesis-failed"


def test_section5_axioms_required():
    P = catalog.ice2_failure()
    check = verify_exchange(P, 2, "b", "c", 1, 1, 1)
    assert check.status == "hypothesis-failed" and "ICE2" in check.reason


def test_false_relation_gives_replayable_counterexample(fig):
    ok, cex, n = check_relation(fig, 2, [(1, Word.parse("c,b")), (-1, Word.parse("b,c"))])
    assert not ok and n == 81
    label, lhs, rhs = cex
    assert lhs != rhs


def test_sampling_mode_is_labelled(fig):
    check = verify_exchange(fig, 3, "b", "c", 1, 1, 2, sample=50, seed=3)
    assert check.holds and not check.exhaustive
    assert "sampled" in check.render()


@pytest.mark.parametrize("p, q, r", [(1, 1, 1), (1, 2, 3), (2, 3, 3)])
def test_binomial_a(p, q, r):
    assert verify_binomial(p, q, r).holds


def test_binomial_values():
    # (b) p=q=r=1, k=1: C(1,0)*3 + C(1,1)*1 = 4 = 2*C(2,1)
    assert comb(1, 0) * 3 + comb(1, 1) * 1 == 4 == 2 * comb(2, 1)
    assert verify_binomial(1, 1, 1, 1).holds
    # (a) p=1, q=2, r=3: C(4,2)*5 = 30 = 3*C(5,3)
    assert comb(4, 2) * 5 == 30 == 3 * comb(5, 3)


def test_binomial_ranges():
    with pytest.raises(InputError):
        verify_binomial(2, 1, 1)
    with pytest.raises(InputError):
        verify_binomial(1, 1, 1, 2)
    assert all(c.holds for c in binomial_grid(4, 4, 5))


def test_grid_small():
    checks = identity_grid(catalog.chain(2), 2, 2, 2, ms=(1, 2))
    assert checks and all(c.holds for c in checks)
