import random

import pytest

from braidcentral.bkl import bkl_delta_word, gamma_word
from braidcentral.centralizer import (MixedPartition, annular_lift, bound_p, centralizer_gens,
                                      kernel_part, kth_root_bounded, mixed_group_gens,
                                      pa_centralizer_gens, periodic_centralizer_gens,
                                      section_h, theta_lift, z0_gens)
from braidcentral.core import conjugate, identity, permutation_of, word
from braidcentral.garside import commutes, delta_word, nf_equal
from braidcentral.tubular import decompose_rounded, project_p, to_regular_form

from conftest import cabled

EXAMPLE = word(5, 3, 4, 2, 3, 1, 2, 2, 3, 4, 1, 2, 3)


@pytest.mark.parametrize("n,p", [(1, 0), (2, 1), (3, 2), (4, 3), (5, 5), (6, 6), (7, 9), (8, 10)])
def test_bound(n, p):
    assert bound_p(n) == p


def test_mixed_generators_contiguous():
    P = MixedPartition.of(6, [[1], [2, 3], [4, 5, 6]])
    gens = mixed_group_gens(P)
    expect = [word(6, 2), word(6, 4), word(6, 5), word(6, 1, 1),
              word(6, 1, 2, 3, 3, -2, -1), word(6, 3, 3)]
    assert len(gens) == len(expect)
    for g, e in zip(gens, expect):
        assert nf_equal(g, e)


@pytest.mark.parametrize("blocks", [[[1, 3], [2, 4]], [[1, 4], [2], [3, 5]], [[2, 5], [1, 3, 4]]])
def test_mixed_generators_preserve_blocks(blocks):
    n = sum(len(b) for b in blocks)
    P = MixedPartition.of(n, blocks)
    label = {x - 1: i for i, b in enumerate(blocks) for x in b}
    for g in mixed_group_gens(P):
        p = permutation_of(g)
        assert all(label[p[i]] == label[i] for i in range(n))


def test_mixed_partition_checked():
    with pytest.raises(ValueError):
        MixedPartition.of(3, [[1, 2]])


@pytest.mark.parametrize("kind,n,k", [("delta", 4, 2), ("delta", 6, 3), ("delta", 6, 4),
                                      ("gamma", 5, 2), ("gamma", 7, 3), ("delta", 5, 1)])
def test_periodic_gens_commute(kind, n, k):
    gs = periodic_centralizer_gens(kind, n, k)
    base = bkl_delta_word(n) if kind == "delta" else gamma_word(n)
    for g in gs.words:
        assert commutes(g, base ** k)
    assert len(gs) <= bound_p(n)


def test_annular_lift_relations():
    al = annular_lift("delta", 6, 2)
    assert al.d == 2
    # the lifted chord and loop commute with the periodic braid
    for g in list(al.chords) + [al.loop]:
        assert commutes(g, bkl_delta_word(6) ** 2)


def test_theta_lift_is_symmetric():
    from braidcentral.bkl import bkl_normal_form, is_rotation_symmetric
    t = theta_lift(6, 2, "sigma1")
    assert is_rotation_symmetric(bkl_normal_form(t), 2)


def test_kth_root():
    r = kth_root_bounded(delta_word(3) ** 2, 3)
    assert r is not None and nf_equal(r ** 3, delta_word(3) ** 2)
    v = word(3, 1, -2)
    r = kth_root_bounded(v * v, 2)
    assert r is not None and nf_equal(r * r, v * v)
    assert kth_root_bounded(word(3, 1), 2) is None


def test_pseudo_anosov_generators():
    gs = pa_centralizer_gens(word(3, 1, -2))
    assert len(gs) == 2
    assert all(commutes(g, word(3, 1, -2)) for g in gs.words)


@pytest.mark.parametrize("w,count", [
    (word(4, 1, 3, 3), 3),
    (EXAMPLE, 4),
    (word(6, 1, 3, 3, 5, 5, 5), 6),
    (word(5, 2, 4, 4), 5),
    (word(7, 2, 4, 4, 6, 6, 6), 9),
])
def test_known_counts(w, count):
    gs = centralizer_gens(w)
    assert len(gs) == count
    assert all(commutes(g, w) for g in gs.words)
    assert gs.complete


def test_lee_tags():
    gs = centralizer_gens(word(4, 1, 3, 3))
    assert sorted(gs.tags) == ["interior(1)", "interior(2)", "section"]


def test_conjugated_input():
    c = word(4, 2, -1, 3)
    w = conjugate(word(4, 1, 3, 3), c)
    gs = centralizer_gens(w)
    assert len(gs) == 3 and all(commutes(g, w) for g in gs.words)


@pytest.mark.parametrize("seed", range(8))
def test_sections_split_projection(seed):
    rng = random.Random(seed)
    m = rng.randint(2, 4)
    tub = rng.choice([delta_word(m) ** 2, bkl_delta_word(m) ** rng.randint(1, 2 * m)])
    w, system = cabled(rng, tub)
    rf = to_regular_form(decompose_rounded(w, system))
    for eta in z0_gens(rf).gens:
        h = section_h(rf, eta)
        assert commutes(h, rf.braid)
        assert nf_equal(project_p(rf.decomposition, h), eta)
        # a section has trivial kernel part
        assert all(nf_equal(g, identity(g.n)) for g in kernel_part(rf, h))


def test_as_dict_shape():
    d = centralizer_gens(word(4, 1, 3, 3)).as_dict()
    assert d["count"] == 3 and d["bound"] == 3 and d["complete"]
    assert {g["certificate"] for g in d["generators"]} == {"commutes"}
