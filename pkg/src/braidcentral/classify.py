"""Nielsen-Thurston classification of braids.

Periodicity is read off the (n-1)st and nth powers.  Reducibility is
detected through round circles: some element of the super summit set of a
reducible braid carries its reduction circles round through every normal
form factor, so scanning the set with permutation data finds them.  Every
answer is certified before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .bkl import bkl_delta_word, gamma_word
from .core import BraidWord, conjugate, exponent_sum, identity
from .curves import (Interval, RoundMulticurve, crossing, interval_catalog, interval_image, is_invariant,
                     mirror_interval, nested, periodic_intervals,
                     round_image_map)
from .garside import NormalForm, nf_equal, normal_form, shorter
from .sss import DEFAULT_SSS_CAP, are_conjugate, super_summit_set
from .tubular import NotInvariant, decompose_rounded, fill_tubes, to_regular_form


class ConjugacySearchFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class Periodic:
    kind: str  # "delta" or "gamma"
    k: int
    conjugator: BraidWord
    tag: str = field(default="periodic", init=False)

    def representative(self, n: int) -> BraidWord:
        return periodic_representative(n, self.kind, self.k)


@dataclass(frozen=True)
class Reducible:
    reduction: RoundMulticurve
    rounding_conjugator: BraidWord
    crs_exact: bool
    rounded: BraidWord
    tag: str = field(default="reducible", init=False)


@dataclass(frozen=True)
class PseudoAnosov:
    tag: str = field(default="pseudo-anosov", init=False)


NTClass = Union[Periodic, Reducible, PseudoAnosov]


def periodic_representative(n: int, kind: str, k: int) -> BraidWord:
    if n < 2:
        return identity(n)
    base = bkl_delta_word(n) if kind == "delta" else gamma_word(n)
    return base ** k


def _delta_square_power(nf: NormalForm) -> int | None:
    if nf.factors or nf.inf % 2:
        return None
    return nf.inf // 2


def is_periodic(w: BraidWord) -> tuple[str, int] | None:
    n = w.n
    if n <= 2:
        # B_1 is trivial and B_2 is cyclic, generated by delta = sigma_1
        return ("delta", exponent_sum(w))
    k = _delta_square_power(normal_form(w ** n))
    if k is not None:
        return ("delta", k)
    k = _delta_square_power(normal_form(w ** (n - 1)))
    if k is not None:
        return ("gamma", k)
    return None


def periodic_certificate(w: BraidWord, kind: str, k: int,
                         cap: int = DEFAULT_SSS_CAP) -> BraidWord:
    """c with c^-1 w c equal to delta^k or gamma^k."""
    target = periodic_representative(w.n, kind, k)
    if w.n <= 2:
        return identity(w.n)
    c = are_conjugate(w, target, cap)
    if c is not None:
        c = shorter(c)
    if c is None or not nf_equal(conjugate(w, c), target):
        raise ConjugacySearchFailed(f"{w} is not conjugate to the {kind}^{k} representative")
    return c


# -- reduction curves -------------------------------------------------------

def nf_round_map(x: NormalForm) -> dict[Interval, Interval | None]:
    """Interval -> image interval when the circle stays round through every factor."""
    n = x.n
    out: dict[Interval, Interval | None] = {}
    for iv in interval_catalog(n):
        cur: Interval | None = mirror_interval(iv, n) if x.inf % 2 else iv
        for f in x.factors:
            cur = interval_image(f, cur)
            if cur is None:
                break
        out[iv] = cur
    return out


@dataclass(frozen=True)
class RoundScan:
    index: int
    periodic: frozenset[Interval]
    isolated: frozenset[Interval]  # periodic circles crossing no other periodic circle
    outer: tuple[Interval, ...]


def scan_element(fmap: dict[Interval, Interval | None], index: int, max_period: int) -> RoundScan:
    per = frozenset(periodic_intervals(fmap, max_period))
    iso = frozenset(i for i in per if not any(crossing(i, j) for j in per))
    outer = tuple(sorted(i for i in iso if not any(j != i and nested(i, j) for j in iso)))
    return RoundScan(index, per, iso, outer)


def _coverage(outer) -> int:
    return sum(b - a + 1 for a, b in outer)


@dataclass(frozen=True)
class ReductionCandidate:
    reduction: RoundMulticurve
    conjugator: BraidWord
    rounded: BraidWord
    scan: RoundScan


def _tubular_is_reducible(rounded: BraidWord, system: RoundMulticurve, cap: int) -> bool:
    try:
        d = decompose_rounded(rounded, system)
    except NotInvariant:
        return True
    tub = d.tubular
    if tub.n < 3 or is_periodic(tub) is not None:
        return False
    return bool(_candidates(tub, cap, tub.n, check_tubular=False))


def _candidates(w: BraidWord, cap: int, max_period: int,
                check_tubular: bool = True) -> list[ReductionCandidate]:
    sss = super_summit_set(w, cap)
    scans = []
    for idx, e in enumerate(sss.elements):
        sc = scan_element(nf_round_map(e.nf), idx, max_period)
        if sc.outer:
            scans.append(sc)
    scans.sort(key=lambda s: (-_coverage(s.outer), -len(s.outer), s.index))
    out = []
    # the input itself comes first when its own round circles are as good
    direct = scan_element(round_image_map(w), -1, max_period)
    if direct.outer and (not scans or _coverage(direct.outer) >= _coverage(scans[0].outer)):
        out.append(ReductionCandidate(RoundMulticurve(w.n, frozenset(direct.outer)),
                                      identity(w.n), w, direct))
        if not check_tubular:
            return out
    for sc in scans:
        e = sss.elements[sc.index]
        x = e.nf.to_word()
        system = RoundMulticurve(w.n, frozenset(sc.outer))
        if not is_invariant(x, system):
            continue
        out.append(ReductionCandidate(system, e.conjugator, x, sc))
        if not check_tubular:
            break
    return out


def find_reduction(w: BraidWord, cap: int = DEFAULT_SSS_CAP,
                   max_period: int | None = None) -> tuple[RoundMulticurve, BraidWord, bool] | None:
    """Outermost invariant round system of some super summit conjugate.

    Returns (system, conjugator, crs_exact) or None when no element of the
    super summit set carries invariant round circles.
    """
    J = w.n if max_period is None else max_period
    cands = _candidates(w, cap, J)
    if not cands:
        return None
    fallback = None
    for c in cands:
        if _tubular_is_reducible(c.rounded, c.reduction, cap):
            continue
        system, x, conj = c.reduction, c.rounded, c.conjugator
        # an inessential circle is replaced by the circles inside it, which
        # are round in a tube-preserving conjugate; each step drops a circle
        # from the outer level or moves inward, so n steps suffice
        for _ in range(w.n):
            rep = inessential_merge(x, system, cap)
            if rep is None:
                return system, shorter(conj), True
            system, x, g = rep
            conj = conj * g
        fallback = fallback or c
    chosen = fallback or cands[0]
    return chosen.reduction, shorter(chosen.conjugator), False


def _inner_system(b: BraidWord, cap: int):
    """(outermost inner circles, conjugator) when the outer piece of b is
    periodic, or None when it is pseudo-Anosov."""
    if b.n < 3 or is_periodic(b) is not None:
        return (), identity(b.n)
    c = classify(b, cap)
    if isinstance(c, PseudoAnosov):
        return None
    inner = decompose_rounded(c.rounded, c.reduction)
    if is_periodic(inner.tubular) is None:
        return None
    return tuple(c.reduction.outermost()), c.rounding_conjugator


def inessential_merge(x: BraidWord, system: RoundMulticurve, cap: int = DEFAULT_SSS_CAP):
    """Look for an inessential outermost circle of a round system invariant
    under x whose tubular braid is irreducible.

    A circle fails only when the pieces on both sides of it are periodic and
    stay periodic once merged, that is when no twist happens along it.  The
    result is None when every circle is essential, otherwise
    (merged system, conjugate of x, conjugator) with the merged system round
    and invariant for the conjugate.
    """
    rf = to_regular_form(decompose_rounded(x, system), cap=cap)
    d = rf.decomposition
    if is_periodic(d.tubular) is None:
        return None
    starts = [a for a, _ in d.tubes]
    for i, orb in enumerate(d.orbits):
        if d.orbit_size(i) < 2:
            continue
        inner = _inner_system(rf.nontrivial[i], cap)
        if inner is None:
            continue
        ivs, c = inner
        g = fill_tubes(d, {t: c for t in orb})
        y = shorter(conjugate(rf.braid, g))
        merged = [iv for t, iv in enumerate(d.tubes) if t not in orb and iv[0] < iv[1]]
        merged += [(starts[t] + a - 1, starts[t] + b - 1) for t in orb for a, b in ivs]
        msys = RoundMulticurve(x.n, frozenset(merged))
        if not merged or not is_invariant(y, msys):
            continue
        if is_periodic(decompose_rounded(y, msys).tubular) is not None:
            return msys, y, rf.conjugator * g
    return None


def all_orbits_essential(x: BraidWord, system: RoundMulticurve, cap: int = DEFAULT_SSS_CAP) -> bool:
    """Whether every outermost circle of an invariant round system with
    irreducible tubular braid is essential."""
    return inessential_merge(x, system, cap) is None


def crs_power_scan(w: BraidWord, reduction: RoundMulticurve,
                   J: int | None = None) -> tuple[RoundMulticurve, bool]:
    """Add the round circles invariant under some power w^j (j <= J) that
    cross no other power-invariant round circle."""
    J = w.n if J is None else J
    fmap = round_image_map(w)
    sc = scan_element(fmap, 0, J)
    merged = set(reduction.intervals) | set(sc.isolated)
    exact = set(reduction.intervals) <= set(sc.isolated)
    if any(crossing(a, b) for a in merged for b in merged):
        return reduction, False
    return RoundMulticurve(w.n, frozenset(merged)), exact


def classify(w: BraidWord, cap: int = DEFAULT_SSS_CAP) -> NTClass:
    return _classify(w, cap)


@lru_cache(maxsize=4096)
def _classify(w: BraidWord, cap: int) -> NTClass:
    per = is_periodic(w)
    if per is not None:
        kind, k = per
        c = periodic_certificate(w, kind, k, cap)
        return Periodic(kind, k, c)
    red = find_reduction(w, cap)
    if red is not None:
        system, conj, exact = red
        x = shorter(conjugate(w, conj))
        assert is_invariant(x, system), "reduction certificate failed"
        assert all(2 <= b - a + 1 <= w.n - 1 for a, b in system.intervals)
        return Reducible(system, conj, exact, x)
    return PseudoAnosov()


def class_as_dict(c: NTClass) -> dict:
    if isinstance(c, Periodic):
        return {"class": c.tag, "kind": c.kind, "k": c.k,
                "conjugator": list(c.conjugator.letters)}
    if isinstance(c, Reducible):
        return {"class": c.tag, "curves": [list(iv) for iv in c.reduction.sorted()],
                "rounding_conjugator": list(c.rounding_conjugator.letters),
                "crs_exact": c.crs_exact}
    return {"class": c.tag}

