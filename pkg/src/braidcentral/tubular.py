"""Tubular braids, interior braids and regular forms of reducible braids.

Tubes are the outermost round circles of a reduction system plus one
degenerate circle per remaining puncture.  A braid preserving the tubes is
written as ``cable(tubular, sizes, interiors)``: the tubular braid moves the
tubes as fat strands and the interior braids are appended at the end, one
per arrival position.

The tubular part of a tube-preserving braid is read off its left normal
form: when a braid carries round circles to round circles, each factor of
its left normal form does too, so every factor splits into a permutation
braid on the tubes and permutation braids inside them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (BraidError, BraidWord, cable, concat, conjugate,
                   free_reduce, identity, permutation_of)
from .curves import Interval, RoundMulticurve, interval_image, mirror_interval
from .garside import classical, commutes, nf_equal, normal_form
from .sss import DEFAULT_SSS_CAP, are_conjugate


class NotTubePreserving(BraidError):
    pass


class NotInvariant(BraidError):
    pass


class InconsistentPermutation(BraidError):
    pass


class NotInCentralizerOfInterior(BraidError):
    pass


class IndexOutOfRange(BraidError):
    pass


def tube_system(n: int, outer: Sequence[Interval]) -> tuple[Interval, ...]:
    """Outermost intervals completed by singletons, in left-to-right order."""
    covered = set()
    for a, b in outer:
        covered.update(range(a, b + 1))
    tubes = list(outer) + [(k, k) for k in range(1, n + 1) if k not in covered]
    tubes.sort()
    return tuple(tubes)


def _letters_of_perm(p: Sequence[int]) -> list[int]:
    if len(p) < 2:
        return []
    return classical(len(p)).letters(tuple(p))


def _simple_step(perm, tubes, interiors, tub_letters):
    """Push one positive simple element through the tube system."""
    images = []
    for iv in tubes:
        j = interval_image(perm, iv)
        if j is None:
            return None
        images.append(j)
    order = sorted(range(len(tubes)), key=lambda t: images[t])
    rank = [0] * len(tubes)
    for r, t in enumerate(order):
        rank[t] = r
    tub_letters.extend(_letters_of_perm(rank))
    new_int = [None] * len(tubes)
    for t, iv in enumerate(tubes):
        lo = images[t][0]
        local = [perm[k - 1] - (lo - 1) for k in range(iv[0], iv[1] + 1)]
        new_int[rank[t]] = interiors[t] + _letters_of_perm(local)
    return tuple(images[t] for t in order), new_int


def tubular_of(alpha: BraidWord, tubes: Sequence[Interval]):
    """Tubular braid, final tube system and arrival-indexed interiors of alpha.

    Raises NotTubePreserving when a normal-form factor breaks a tube.
    """
    n = alpha.n
    m = len(tubes)
    nf = normal_form(alpha)
    cur = tuple(tubes)
    interiors: list[list[int]] = [[] for _ in range(m)]
    tub: list[int] = []
    delta = classical(n).delta
    if nf.inf >= 0:
        for _ in range(nf.inf):
            cur, interiors = _simple_step(delta, cur, interiors, tub)
    else:
        for _ in range(-nf.inf):
            # D^-1: undo the half twist inside every tube, then reverse the tubes
            for t, iv in enumerate(cur):
                s = iv[1] - iv[0] + 1
                if s > 1:
                    hw = _letters_of_perm(tuple(range(s - 1, -1, -1)))
                    interiors[t] = interiors[t] + [-e for e in reversed(hw)]
            if m > 1:
                hw = _letters_of_perm(tuple(range(m - 1, -1, -1)))
                tub.extend(-e for e in reversed(hw))
            interiors = interiors[::-1]
            cur = tuple(sorted(mirror_interval(iv, n) for iv in cur))
    for f in nf.factors:
        step = _simple_step(f, cur, interiors, tub)
        if step is None:
            raise NotTubePreserving("a normal form factor does not keep the tubes round")
        cur, interiors = step
    words = [free_reduce(BraidWord(iv[1] - iv[0] + 1, tuple(lets)))
             for iv, lets in zip(cur, interiors)]
    return free_reduce(BraidWord(m, tuple(tub))), cur, words


@dataclass(frozen=True)
class TubularDecomposition:
    base: BraidWord
    tubes: tuple[Interval, ...]
    tubular: BraidWord
    interiors: tuple[BraidWord, ...]  # by arrival position
    orbits: tuple[tuple[int, ...], ...]  # tube start positions C_{i,1} .. C_{i,r_i}

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return len(self.tubes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.tubes)

    @property
    def perm(self) -> tuple[int, ...]:
        return permutation_of(self.tubular)

    def orbit_size(self, i: int) -> int:
        return self.sizes[self.orbits[i][0]]

    def interior(self, i: int, k: int) -> BraidWord:
        """Interior braid of the tube starting at C_{i,k} (0-based i and k)."""
        return self.interiors[self.perm[self.orbits[i][k]]]

    def system(self) -> RoundMulticurve:
        return RoundMulticurve(self.n, frozenset(t for t in self.tubes if t[0] < t[1]))

    def rebuild(self) -> BraidWord:
        return cable(self.tubular, self.sizes, self.interiors)

    def as_dict(self) -> dict:
        return {
            "system": [list(t) for t in self.tubes if t[0] < t[1]],
            "tubes": [list(t) for t in self.tubes],
            "orbits": [[p + 1 for p in o] for o in self.orbits],
            "tubular": list(self.tubular.letters),
            "interiors": [list(w.letters) for w in self.interiors],
        }


def orbits_of_perm(p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = set()
    out = []
    for s in range(len(p)):
        if s in seen:
            continue
        orb = [s]
        seen.add(s)
        j = p[s]
        while j != s:
            orb.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(orb))
    return tuple(out)


def decompose_rounded(x: BraidWord, system: RoundMulticurve) -> TubularDecomposition:
    tubes = tube_system(x.n, RoundMulticurve(x.n, system.intervals).outermost())
    try:
        tub, final, ints = tubular_of(x, tubes)
    except NotTubePreserving as exc:
        raise NotInvariant(str(exc)) from None
    if tuple(final) != tuple(tubes):
        raise NotInvariant("the braid does not preserve the round system")
    return TubularDecomposition(x, tuple(tubes), tub, tuple(ints), orbits_of_perm(permutation_of(tub)))


def decompose(w: BraidWord, system: RoundMulticurve,
              rounding_conjugator: BraidWord | None = None) -> TubularDecomposition:
    """Decompose c^-1 w c, which must preserve the round system."""
    x = w if rounding_conjugator is None else conjugate(w, rounding_conjugator)
    return decompose_rounded(x, system)


def with_interiors(d: TubularDecomposition, interiors: Sequence[BraidWord]) -> TubularDecomposition:
    """Same tubes and tubular braid, new arrival-indexed interiors."""
    ints = tuple(interiors)
    base = cable(d.tubular, d.sizes, ints)
    return TubularDecomposition(base, d.tubes, d.tubular, ints, d.orbits)


def fill_tubes(d: TubularDecomposition, fills: dict[int, BraidWord]) -> BraidWord:
    """Braid with trivial tubular part and the given braids in tubes (by position)."""
    ints = [fills.get(p, identity(s)) for p, s in enumerate(d.sizes)]
    return cable(identity(d.m), d.sizes, ints)


@dataclass(frozen=True)
class RegularForm:
    decomposition: TubularDecomposition
    nontrivial: tuple[BraidWord, ...]  # beta_[i], one per orbit
    conjugator: BraidWord  # from the original braid
    original: BraidWord = field(compare=False, default=None)  # type: ignore[assignment]

    @property
    def braid(self) -> BraidWord:
        return self.decomposition.base

    @property
    def t(self) -> int:
        return len(self.decomposition.orbits)

    def as_dict(self) -> dict:
        out = self.decomposition.as_dict()
        out["nontrivial"] = [list(w.letters) for w in self.nontrivial]
        out["conjugator"] = list(self.conjugator.letters)
        return out


def _orbit_fill(d: TubularDecomposition, i: int, words: Sequence[BraidWord]) -> dict[int, BraidWord]:
    return {p: w for p, w in zip(d.orbits[i], words)}


def to_regular_form(d: TubularDecomposition, conjugator: BraidWord | None = None,
                    cap: int = DEFAULT_SSS_CAP) -> RegularForm:
    """Transfuse interiors to the last tube of each orbit, then equalize conjugate ones."""
    n = d.n
    conj = identity(n) if conjugator is None else conjugator
    perm = d.perm
    fills: dict[int, BraidWord] = {}
    ints = list(d.interiors)
    for i, orb in enumerate(d.orbits):
        r = len(orb)
        bs = [d.interior(i, k) for k in range(r)]
        for k in range(r):
            fills[orb[k]] = free_reduce(concat(bs[k].n, bs[k:]))
        for k in range(r):
            ints[perm[orb[k]]] = identity(bs[k].n)
        ints[perm[orb[-1]]] = fills[orb[0]]
    alpha = fill_tubes(d, fills)
    conj = conj * alpha
    cur = with_interiors(d, ints)
    # equalize conjugate interior braids
    reps: list[int] = []
    for i in range(len(cur.orbits)):
        bi = cur.interior(i, len(cur.orbits[i]) - 1)
        for j in reps:
            bj = cur.interior(j, len(cur.orbits[j]) - 1)
            if bj.n != bi.n:
                continue
            h = are_conjugate(bi, bj, cap)
            if h is None:
                continue
            g = fill_tubes(cur, _orbit_fill(cur, i, [h] * len(cur.orbits[i])))
            conj = conj * g
            ints = list(cur.interiors)
            ints[cur.perm[cur.orbits[i][-1]]] = bj
            cur = with_interiors(cur, ints)
            break
        else:
            reps.append(i)
    nontriv = tuple(cur.interior(i, len(o) - 1) for i, o in enumerate(cur.orbits))
    return RegularForm(cur, nontriv, conj)


def regular_form_of(w: BraidWord, system: RoundMulticurve, rounding_conjugator: BraidWord,
                    cap: int = DEFAULT_SSS_CAP) -> RegularForm:
    d = decompose(w, system, rounding_conjugator)
    rf = to_regular_form(d, rounding_conjugator, cap)
    return RegularForm(rf.decomposition, rf.nontrivial, rf.conjugator, w)


def mu(rf: RegularForm, i: int, k: int) -> BraidWord:
    """Moves beta_[i] to the tube C_{i,k} by conjugation (0-based i, k < r_i - 1)."""
    d = rf.decomposition
    orb = d.orbits[i]
    if not 0 <= k < len(orb) - 1:
        raise IndexOutOfRange(f"k={k} outside 0..{len(orb) - 2}")
    return fill_tubes(d, {orb[j]: rf.nontrivial[i] for j in range(k + 1, len(orb))})


def g_embed(rf: RegularForm, i: int, gamma: BraidWord, check: bool = True) -> BraidWord:
    """gamma in every tube of orbit i, trivial elsewhere."""
    d = rf.decomposition
    if gamma.n != d.orbit_size(i):
        raise NotInCentralizerOfInterior(f"expected B{d.orbit_size(i)}, got B{gamma.n}")
    if check and not commutes(gamma, rf.nontrivial[i]):
        raise NotInCentralizerOfInterior("gamma does not commute with the interior braid")
    return fill_tubes(d, _orbit_fill(d, i, [gamma] * len(d.orbits[i])))


def is_consistent_perm(d: TubularDecomposition, p: Sequence[int]) -> bool:
    sizes = d.sizes
    return all(sizes[t] == sizes[p[t]] for t in range(len(p)))


def psi(d: TubularDecomposition, eta: BraidWord) -> BraidWord:
    """Cable of eta with trivial interiors."""
    if eta.n != d.m:
        raise InconsistentPermutation(f"expected a braid on {d.m} tubes")
    if not is_consistent_perm(d, permutation_of(eta)):
        raise InconsistentPermutation("eta moves a tube onto one of a different size")
    return cable(eta, d.sizes)


def project_p(d: TubularDecomposition, alpha: BraidWord) -> BraidWord:
    """Tubular braid of a braid preserving the tube system."""
    tub, final, _ = tubular_of(alpha, d.tubes)
    if tuple(final) != tuple(d.tubes):
        raise NotTubePreserving("the braid moves the tube system")
    return tub


def tube_interiors(d: TubularDecomposition, alpha: BraidWord) -> list[BraidWord]:
    """Arrival-indexed interiors of a tube-preserving braid."""
    _, final, ints = tubular_of(alpha, d.tubes)
    if tuple(final) != tuple(d.tubes):
        raise NotTubePreserving("the braid moves the tube system")
    return ints


def check_decomposition(d: TubularDecomposition) -> bool:
    return nf_equal(d.rebuild(), d.base)


def conjugation_moves(rf: RegularForm, w: BraidWord) -> bool:
    """Certificate: the conjugator takes w to the regular-form braid."""
    return nf_equal(conjugate(w, rf.conjugator), rf.braid)

