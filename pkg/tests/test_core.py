import pytest
from hypothesis import given

from braidcentral.core import (BraidError, BraidWord, ParseError, PermutationMovesStrand,
                               SizeMismatch, StrandMismatch, cable, exponent_sum,
                               forget_strand, format_word, free_reduce, invert,
                               parse_word, permutation_of, shift, word)
from braidcentral.garside import nf_equal

from conftest import braid_words


@pytest.mark.parametrize("text,n,letters", [
    ("B3: 1 2 1", 3, (1, 2, 1)),
    ("b4:1,-3, 2", 4, (1, -3, 2)),
    ("B5:", 5, ()),
    ("  B2: -1 -1", 2, (-1, -1)),
])
def test_parse(text, n, letters):
    w = parse_word(text)
    assert (w.n, w.letters) == (n, letters)


@pytest.mark.parametrize("text,col", [
    ("B3: 1 x", 6),
    ("B3: 1 3", 6),
    ("B3: 0", 4),
])
def test_parse_error_position(text, col):
    with pytest.raises(ParseError) as info:
        parse_word(text)
    assert info.value.position == col


def test_parse_needs_prefix():
    with pytest.raises(ParseError):
        parse_word("1 2 1")


@given(braid_words())
def test_format_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_bad_letter():
    with pytest.raises(BraidError):
        BraidWord(3, (3,))


def test_mismatch():
    with pytest.raises(StrandMismatch):
        word(3, 1) * word(4, 1)


@given(braid_words())
def test_free_reduce_and_inverse(w):
    r = free_reduce(w)
    assert nf_equal(r, w)
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))
    assert free_reduce(w * invert(w)).letters == ()
    assert exponent_sum(invert(w)) == -exponent_sum(w)


def test_permutation():
    # sigma_1 sigma_2: strand at 0 goes to 2
    assert permutation_of(word(3, 1, 2)) == (2, 0, 1)
    assert permutation_of(word(3, 1, -1)) == (0, 1, 2)


def test_shift_and_forget():
    assert shift(word(2, 1), 2, 4) == word(4, 3)
    with pytest.raises(SizeMismatch):
        shift(word(3, 1), 2, 4)
    assert forget_strand(word(4, 1, 1, 3, 3), 2) == word(3, 2, 2)
    with pytest.raises(PermutationMovesStrand):
        forget_strand(word(3, 1), 1)


def test_cable_simple():
    # one crossing of a pair of ribbons of sizes 2 and 1
    w = cable(word(2, 1), [2, 1])
    assert nf_equal(w, word(3, 2, 1))
    assert nf_equal(cable(word(2, 1), [1, 1], [word(1), word(1)]), word(2, 1))


def test_cable_interior_size_checked():
    with pytest.raises(SizeMismatch):
        cable(word(2, 1), [2, 1], [word(2, 1), word(1)])
