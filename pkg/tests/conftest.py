import random

from hypothesis import strategies as st

from braidcentral.core import BraidWord, cable, identity, permutation_of
from braidcentral.curves import RoundMulticurve


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return identity(n)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_positive(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


@st.composite
def braid_words(draw, min_n=2, max_n=6, max_len=12):
    n = draw(st.integers(min_n, max_n))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


def tube_sizes_for(rng: random.Random, tub: BraidWord, lo=1, hi=3) -> list[int]:
    """Tube sizes constant along the cycles of the tubular permutation, with
    at least one nontrivial tube."""
    from braidcentral.tubular import orbits_of_perm
    perm = permutation_of(tub)
    sizes = [0] * tub.n
    orbs = orbits_of_perm(perm)
    for o in orbs:
        s = rng.randint(lo, hi)
        for t in o:
            sizes[t] = s
    if max(sizes) < 2:
        for t in orbs[0]:
            sizes[t] = 2
    return sizes


def cabled(rng: random.Random, tub: BraidWord, max_inner=3):
    """A braid cabled from tub, with its round tube system."""
    sizes = tube_sizes_for(rng, tub)
    inner = [random_word(rng, s, rng.randint(0, max_inner)) for s in sizes]
    w = cable(tub, sizes, inner)
    outer, pos = [], 1
    for s in sizes:
        if s > 1:
            outer.append((pos, pos + s - 1))
        pos += s
    return w, RoundMulticurve(w.n, frozenset(outer))
