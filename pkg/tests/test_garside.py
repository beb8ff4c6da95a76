import random

import pytest
from hypothesis import given, settings

from braidcentral.bkl import (NotNonCrossing, bkl_delta_word, bkl_normal_form, blocks_of,
                              gamma_word, is_noncrossing, make_simple, rotate_simple)
from braidcentral.core import BraidWord, identity, invert, word
from braidcentral.garside import (classical, commutes, delta_word, is_identity,
                                  is_left_weighted, nf_equal, nf_inverse, nf_product,
                                  normal_form, shorter)

from conftest import braid_words, random_word


def test_braid_relations():
    assert nf_equal(word(3, 1, 2, 1), word(3, 2, 1, 2))
    assert nf_equal(word(4, 1, 3), word(4, 3, 1))
    assert not nf_equal(word(3, 1, 2), word(3, 2, 1))


@pytest.mark.parametrize("n", range(2, 7))
def test_delta_square_is_central(n):
    d2 = delta_word(n) ** 2
    for i in range(1, n):
        assert commutes(word(n, i), d2)
    nf = normal_form(d2)
    assert (nf.inf, nf.factors) == (2, ())


@given(braid_words(max_len=10), braid_words(max_len=10))
@settings(max_examples=60)
def test_product_and_inverse(a, b):
    if a.n != b.n:
        b = BraidWord(a.n, tuple(e for e in b.letters if abs(e) < a.n))
    assert nf_product(normal_form(a), normal_form(b)) == normal_form(a * b)
    assert nf_inverse(normal_form(a)) == normal_form(invert(a))
    assert is_identity(a * invert(a))


@given(braid_words(min_n=3, max_len=14))
@settings(max_examples=60)
def test_normal_form_is_left_weighted(w):
    nf = normal_form(w)
    s = classical(w.n)
    assert all(f != s.delta and f != s.identity for f in nf.factors)
    assert all(is_left_weighted(s, a, b) for a, b in zip(nf.factors, nf.factors[1:]))
    assert nf_equal(nf.to_word(), w)


@given(braid_words(min_n=3, max_len=14))
@settings(max_examples=60)
def test_shorter_keeps_element(w):
    s = shorter(w)
    assert nf_equal(s, w) and len(s) <= len(w)


def test_cancelling_insertions():
    rng = random.Random(5)
    for _ in range(50):
        w = random_word(rng, 5, 8)
        i = rng.randint(0, len(w))
        e = rng.choice((1, -1)) * rng.randint(1, 4)
        v = BraidWord(5, w.letters[:i] + (e, -e) + w.letters[i:])
        assert nf_equal(v, w)


# -- dual structure ---------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 9))
def test_dual_delta_powers(n):
    assert nf_equal(bkl_delta_word(n) ** n, delta_word(n) ** 2)
    assert nf_equal(gamma_word(n) ** (n - 1), delta_word(n) ** 2)


@given(braid_words(min_n=3, max_len=12))
@settings(max_examples=60)
def test_bkl_normal_form_same_element(w):
    nf = bkl_normal_form(w)
    assert nf_equal(nf.to_word(), w)
    assert nf.kind == "dual"


def test_bkl_delta_is_single_power():
    nf = bkl_normal_form(bkl_delta_word(5) ** 3)
    assert (nf.inf, nf.factors) == (3, ())


def test_noncrossing():
    assert is_noncrossing([[0, 2], [3, 4]])
    assert not is_noncrossing([[0, 2], [1, 3]])
    with pytest.raises(NotNonCrossing):
        make_simple(4, [[0, 2], [1, 3]])
    x = make_simple(6, [[0, 2, 5], [3, 4]])
    assert blocks_of(x) == [[0, 2, 5], [3, 4]]


@pytest.mark.parametrize("n,k", [(4, 1), (6, 2), (5, 5)])
def test_rotation_matches_delta_conjugation(n, k):
    # delta^k x delta^-k is the k-fold rotation of a dual simple
    x = make_simple(n, [[0, 1]])
    d = bkl_delta_word(n)
    rx = rotate_simple(x, k)
    from braidcentral.bkl import dual
    s = dual(n)
    assert nf_equal(d ** k * s.word(x) * d ** (-k), s.word(rx))


def test_identity_word():
    assert is_identity(identity(4))
