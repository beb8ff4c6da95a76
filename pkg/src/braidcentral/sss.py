"""Cycling, decycling, super summit sets and conjugacy.

Conjugators follow one convention throughout: ``c`` conjugates ``x`` to
``y`` when ``c^-1 x c = y``.  Super summit sets are closed up by
conjugating with minimal simple elements, one per atom, which is enough
to reach every element of the set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import BraidWord, StrandMismatch, exponent_sum, free_reduce, invert
from .garside import (GarsideStructure, NormalForm, Perm, nf_from_tokens,
                      nf_inverse, normal_form)

DEFAULT_SSS_CAP = 10000


class NoFactors(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap {cap}")
        self.cap = cap


@dataclass(frozen=True)
class SSSElement:
    nf: NormalForm
    conjugator: BraidWord


@dataclass(frozen=True)
class SuperSummitSet:
    elements: tuple[SSSElement, ...]
    inf: int
    length: int
    kind: str = "classical"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def find(self, nf: NormalForm) -> SSSElement | None:
        for e in self.elements:
            if e.nf == nf:
                return e
        return None


def conjugate_by_simple(x: NormalForm, s: Perm) -> NormalForm:
    """Normal form of s^-1 x s."""
    st = x.structure
    toks = [(st.tau(s, x.inf % st.tau_order), -1)]
    toks += [(f, 1) for f in x.factors]
    toks.append((s, 1))
    return nf_from_tokens(st, x.inf, toks, x.kind)


def cycling_step(x: NormalForm) -> tuple[NormalForm, BraidWord]:
    if not x.factors:
        raise NoFactors("cycling needs at least one factor")
    st = x.structure
    z = st.tau(x.factors[0], (-x.inf) % st.tau_order)
    return conjugate_by_simple(x, z), st.word(z)


def decycling_step(x: NormalForm) -> tuple[NormalForm, BraidWord]:
    if not x.factors:
        raise NoFactors("decycling needs at least one factor")
    st = x.structure
    last = x.factors[-1]
    toks = [(st.tau(last, x.inf % st.tau_order), 1)] + [(f, 1) for f in x.factors[:-1]]
    y = nf_from_tokens(st, x.inf, toks, x.kind)
    return y, invert(st.word(last))


def cycling(x: NormalForm) -> NormalForm:
    return cycling_step(x)[0]


def decycling(x: NormalForm) -> NormalForm:
    return decycling_step(x)[0]


def _iterate(x: NormalForm, step) -> tuple[NormalForm, list[int]]:
    conj: list[int] = []
    seen = {x}
    while x.factors:
        y, z = step(x)
        conj.extend(z.letters)
        if y in seen:
            return y, conj
        seen.add(y)
        x = y
    return x, conj


def summit_representative(x: NormalForm) -> tuple[NormalForm, BraidWord]:
    """An element of the super summit set of x, with its conjugator."""
    y, c1 = _iterate(x, cycling_step)
    y, c2 = _iterate(y, decycling_step)
    return y, free_reduce(BraidWord(x.n, tuple(c1 + c2)))


def _remainder(st: GarsideStructure, factors, y: Perm) -> Perm:
    """Smallest simple w with y dividing (product of factors) * w."""
    for p in factors:
        y = st.quotient(p, st.join(p, y))
        if y == st.identity:
            break
    return y


def minimal_conjugator(x: NormalForm, xinv: NormalForm, u: Perm) -> Perm:
    """Smallest simple s above u keeping x^s inside the super summit set."""
    st = x.structure
    order = st.tau_order
    s = u
    while True:
        changed = False
        for z in (x, xinv):
            while True:
                y = st.tau(s, z.inf % order)
                w = _remainder(st, list(z.factors) + [s], y)
                if w == st.identity:
                    break
                s = st.mul(s, w)
                changed = True
        if not changed:
            return s


def _canon(e: SSSElement):
    return (e.nf.inf, e.nf.factors)


def super_summit_set(w: BraidWord, cap: int = DEFAULT_SSS_CAP,
                     kind: str = "classical") -> SuperSummitSet:
    x0, c0 = summit_representative(normal_form(w, kind))
    return sss_from_summit(x0, c0, cap)


def sss_from_summit(x0: NormalForm, c0: BraidWord, cap: int = DEFAULT_SSS_CAP) -> SuperSummitSet:
    st = x0.structure
    found: dict[NormalForm, BraidWord] = {x0: c0}
    if x0.factors:
        queue = deque([x0])
        atoms = st.atoms()
        while queue:
            x = queue.popleft()
            xinv = nf_inverse(x)
            done: set[Perm] = set()
            for u in atoms:
                s = minimal_conjugator(x, xinv, u)
                if s in done:
                    continue
                done.add(s)
                y = conjugate_by_simple(x, s)
                assert y.inf == x0.inf and y.length == x0.length
                if y not in found:
                    found[y] = free_reduce(found[x] * st.word(s))
                    if len(found) > cap:
                        raise BudgetExceeded("super summit set", cap)
                    queue.append(y)
    elems = sorted((SSSElement(k, v) for k, v in found.items()), key=_canon)
    return SuperSummitSet(tuple(elems), x0.inf, x0.length, x0.kind)


def are_conjugate(a: BraidWord, b: BraidWord, cap: int = DEFAULT_SSS_CAP) -> BraidWord | None:
    """A word c with c^-1 a c = b, or None when a and b are not conjugate."""
    if a.n != b.n:
        raise StrandMismatch(f"B{a.n} vs B{b.n}")
    if exponent_sum(a) != exponent_sum(b):
        return None
    yb, cb = summit_representative(normal_form(b))
    ya, ca = summit_representative(normal_form(a))
    if (ya.inf, ya.length) != (yb.inf, yb.length):
        return None
    if ya == yb:
        return free_reduce(ca * invert(cb))
    sss = sss_from_summit(ya, ca, cap)
    hit = sss.find(yb)
    if hit is None:
        return None
    return free_reduce(hit.conjugator * invert(cb))


def sss_as_dict(sss: SuperSummitSet) -> dict:
    return {
        "inf": sss.inf,
        "length": sss.length,
        "size": len(sss),
        "elements": [{"nf": e.nf.as_dict(), "conjugator": list(e.conjugator.letters)}
                     for e in sss.elements],
    }
