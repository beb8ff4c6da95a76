import random

import pytest
from hypothesis import given, settings

from braidcentral.core import conjugate, word
from braidcentral.garside import nf_equal, normal_form
from braidcentral.sss import (BudgetExceeded, NoFactors, are_conjugate, cycling_step,
                              decycling_step, summit_representative, super_summit_set)

from conftest import braid_words, random_word


@given(braid_words(min_n=3, max_n=5, max_len=10))
@settings(max_examples=40, deadline=None)
def test_summit_conjugator(w):
    x = normal_form(w)
    y, c = summit_representative(x)
    assert nf_equal(conjugate(w, c), y.to_word())
    assert y.inf >= x.inf and y.sup <= x.sup


def test_cycling_conjugators():
    x = normal_form(word(4, 1, 2, -3, 2, 1, 3))
    y, c = cycling_step(x)
    assert nf_equal(conjugate(x.to_word(), c), y.to_word())
    y, c = decycling_step(x)
    assert nf_equal(conjugate(x.to_word(), c), y.to_word())


def test_no_factors():
    with pytest.raises(NoFactors):
        cycling_step(normal_form(word(3, 1, 2, 1)))


@pytest.mark.parametrize("w", [word(3, 1, -2), word(4, 1, 2, 3, -1), word(5, 1, 3, -2, 4)])
def test_sss_elements_are_conjugates(w):
    s = super_summit_set(w)
    assert len(s) >= 1
    for e in s:
        assert (e.nf.inf, e.nf.length) == (s.inf, s.length)
        assert nf_equal(conjugate(w, e.conjugator), e.nf.to_word())


def test_sss_of_generator():
    s = super_summit_set(word(3, 1))
    assert {e.nf for e in s} == {normal_form(word(3, 1)), normal_form(word(3, 2))}


def test_central_element_alone():
    s = super_summit_set(word(3, 1, 2, 1, 1, 2, 1))
    assert len(s) == 1 and s.inf == 2 and s.length == 0


def test_sss_is_class_invariant():
    w = word(4, 1, -2, 3, 3)
    c = word(4, 2, -1, 3)
    a = {e.nf for e in super_summit_set(w)}
    b = {e.nf for e in super_summit_set(conjugate(w, c))}
    assert a == b


def test_sss_cap():
    with pytest.raises(BudgetExceeded):
        super_summit_set(word(6, 1, -2, 3, -4, 5), cap=2)


def test_conjugacy_random():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(3, 5)
        w = random_word(rng, n, rng.randint(1, 8))
        c = random_word(rng, n, rng.randint(0, 6))
        v = conjugate(w, c)
        h = are_conjugate(w, v)
        assert h is not None and nf_equal(conjugate(w, h), v)


@pytest.mark.parametrize("a,b", [
    (word(3, 1, 2), word(3, 1, 1)),
    (word(3, 1, -2), word(3, 1, 1, -2, -2)),
    (word(4, 1, 3), word(4, 1, 2)),
])
def test_not_conjugate(a, b):
    assert are_conjugate(a, b) is None
