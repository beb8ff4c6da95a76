import random

import pytest
from hypothesis import given, settings, strategies as st

from braidcentral.core import BraidWord, word
from braidcentral.curves import (LaminationCoords, NotLaminar, RoundMulticurve, act,
                                 crossing, encode_round, format_system, interval_catalog,
                                 invariant_round_systems, is_invariant, nested,
                                 parse_system, round_image_map)
from braidcentral.garside import delta_word

from conftest import braid_words, random_word


def test_encode_shape():
    x = encode_round(RoundMulticurve.of(4, [(1, 2)]))
    assert len(x.coords) == 8
    assert x.coords[:4] == (0, 0, 0, 0)
    assert not x.is_empty()
    assert encode_round(RoundMulticurve.of(4, [])).is_empty()


def test_not_laminar():
    with pytest.raises(NotLaminar):
        encode_round(RoundMulticurve.of(5, [(1, 3), (2, 4)]))


@pytest.mark.parametrize("n", range(3, 7))
def test_sigma_fixes_its_circle(n):
    for i in range(1, n):
        c = RoundMulticurve.of(n, [(i, i + 1)])
        assert is_invariant(word(n, i), c)
        assert is_invariant(word(n, -i), c)


@pytest.mark.parametrize("n", range(3, 7))
def test_delta_square_fixes_everything(n):
    d2 = delta_word(n) ** 2
    for iv in interval_catalog(n):
        assert is_invariant(d2, RoundMulticurve.of(n, [iv]))


@given(braid_words(min_n=3, max_n=6, max_len=8), st.data())
@settings(max_examples=60)
def test_action_is_a_right_action(u, data):
    v = BraidWord(u.n, tuple(data.draw(st.lists(st.integers(1, u.n - 1), max_size=8))))
    x = encode_round(RoundMulticurve.of(u.n, [(1, 2)]))
    assert act(u * v, x) == act(v, act(u, x))


def test_inverse_undoes():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(3, 6)
        w = random_word(rng, n, 8)
        x = encode_round(RoundMulticurve.of(n, [(1, n - 1)]))
        y = act(w, x)
        assert act(BraidWord(n, tuple(-e for e in reversed(w.letters))), y) == x


def test_round_image_map():
    fmap = round_image_map(word(4, 2))
    assert fmap[(1, 2)] is None
    assert fmap[(2, 3)] == (2, 3)
    assert fmap[(1, 3)] == (1, 3)


def test_invariant_systems():
    systems = invariant_round_systems(word(4, 1, 3, 3))
    assert RoundMulticurve.of(4, [(1, 2), (3, 4)]) in systems


def test_interval_relations():
    assert nested((2, 3), (1, 4))
    assert crossing((1, 3), (2, 4))
    assert not crossing((1, 2), (3, 4))


def test_system_text_round_trip():
    c = RoundMulticurve.of(6, [(4, 5), (1, 3)])
    assert format_system(c) == "{[1,3],[4,5]}"
    assert parse_system(format_system(c), 6) == c


def test_coords_length_checked():
    with pytest.raises(ValueError):
        LaminationCoords(3, (0,) * 5)


def _laminar_families(n):
    cat = interval_catalog(n)
    out = []

    def grow(start, chosen):
        out.append(frozenset(chosen))
        for k in range(start, len(cat)):
            if all(not crossing(cat[k], c) for c in chosen):
                grow(k + 1, chosen + [cat[k]])

    grow(0, [])
    return out


@pytest.mark.parametrize("n", range(3, 7))
def test_encoding_is_injective(n):
    fams = _laminar_families(n)
    codes = {encode_round(RoundMulticurve(n, f)).coords for f in fams}
    assert len(codes) == len(fams)


def test_invariance_is_conjugation_covariant():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(4, 6)
        c = RoundMulticurve.of(n, [(1, 2)])
        w = word(n, 1, *([3] * rng.randint(0, 2)))
        u = random_word(rng, n, 5)
        x = encode_round(c)
        assert act(w, x) == x
        # u moves the system; the conjugate fixes the moved system
        y = act(u, x)
        v = BraidWord(n, tuple(-e for e in reversed(u.letters))) * w * u
        assert act(v, y) == y


# -- an independent implementation of the mapping class group action -------

curver = pytest.importorskip("curver")


def _curver_word(w: BraidWord) -> str:
    return ".".join(f"s_{e - 1}" if e > 0 else f"S_{-e - 1}" for e in w.letters)


@pytest.mark.parametrize("seed", range(4))
def test_invariance_matches_curver(seed):
    rng = random.Random(seed)
    for _ in range(25):
        n = rng.randint(3, 5)
        w = random_word(rng, n, rng.randint(1, 6))
        S = curver.load(0, n + 1)
        h = S(_curver_word(w)) if w.letters else S("")
        for i in range(1, n):
            c = S.arcs[f"s_{i - 1}"].boundary()
            ours = is_invariant(w, RoundMulticurve.of(n, [(i, i + 1)]))
            assert ours == (h(c) == c), (w, i)
