"""The dual (band generator) Garside structure.

Simple elements are non-crossing partitions of the punctures.  A block
b1 < b2 < ... < bk is the braid a(b2,b1) a(b3,b2) ... a(bk,b(k-1)), whose
permutation sends b1 to bk and every other bj to b(j-1).  The Garside
element is delta = sigma_1 ... sigma_(n-1), the single block {1..n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import BadStrandCount, BraidWord, perm_cycles
from .garside import (GarsideStructure, NormalForm, Perm, _STRUCTS,
                      normal_form)


class NotNonCrossing(ValueError):
    pass


def band_letters(t: int, s: int) -> list[int]:
    """Artin word of the band a(t,s), 1-based with s < t."""
    if not s < t:
        raise ValueError(f"band needs s < t, got ({t}, {s})")
    mid = list(range(s + 1, t))
    return [-j for j in reversed(mid)] + [s] + mid


def band_word(n: int, t: int, s: int) -> BraidWord:
    return BraidWord(n, tuple(band_letters(t, s)))


def blocks_of(x: Perm) -> list[list[int]]:
    """Non-singleton blocks of a dual simple, each sorted, 0-based."""
    return sorted(sorted(c) for c in perm_cycles(x) if len(c) > 1)


def perm_of_blocks(n: int, blocks: Iterable[Sequence[int]]) -> Perm:
    p = list(range(n))
    for b in blocks:
        b = sorted(b)
        if not b:
            continue
        p[b[0]] = b[-1]
        for j in range(1, len(b)):
            p[b[j]] = b[j - 1]
    return tuple(p)


def _crosses(a: Sequence[int], b: Sequence[int]) -> bool:
    """Disjoint blocks cross when b meets more than one gap between points of a."""
    sa = sorted(a)
    gaps = set()
    for v in b:
        g = sum(1 for x in sa if x < v)
        gaps.add(g % len(sa))
    return len(gaps) > 1


def is_noncrossing(blocks: Sequence[Sequence[int]]) -> bool:
    bl = [sorted(b) for b in blocks if len(b) > 1]
    for x in range(len(bl)):
        for y in range(x + 1, len(bl)):
            if _crosses(bl[x], bl[y]):
                return False
    return True


def make_simple(n: int, blocks: Iterable[Sequence[int]]) -> Perm:
    """Dual simple from 0-based blocks; checks the non-crossing condition."""
    bl = [sorted(b) for b in blocks]
    seen: set[int] = set()
    for b in bl:
        if seen & set(b) or any(not 0 <= v < n for v in b):
            raise NotNonCrossing(f"blocks {bl} are not a partition of range({n})")
        seen |= set(b)
    if not is_noncrossing(bl):
        raise NotNonCrossing(f"blocks {bl} cross")
    return perm_of_blocks(n, bl)


def _labels(x: Perm) -> list[int]:
    lab = [0] * len(x)
    for c in perm_cycles(x):
        m = min(c)
        for v in c:
            lab[v] = m
    return lab


def _merge_crossing(n: int, lab: list[int]) -> list[int]:
    groups: dict[int, list[int]] = {}
    for v, l in enumerate(lab):
        groups.setdefault(l, []).append(v)
    bl = list(groups.values())
    merged = True
    while merged:
        merged = False
        for x in range(len(bl)):
            for y in range(x + 1, len(bl)):
                if len(bl[x]) > 1 and len(bl[y]) > 1 and _crosses(bl[x], bl[y]):
                    bl[x] = sorted(bl[x] + bl[y])
                    del bl[y]
                    merged = True
                    break
            if merged:
                break
    out = [0] * n
    for b in bl:
        for v in b:
            out[v] = min(b)
    return out


class DualStructure(GarsideStructure):
    name = "dual"

    def _delta_perm(self):
        n = self.n
        return tuple((j - 1) % n for j in range(n))

    def atoms(self):
        n = self.n
        return [perm_of_blocks(n, [(s, t)]) for t in range(n) for s in range(t)]

    @property
    def tau_order(self):
        return self.n

    def tau(self, x, k=1):
        # D^-1 x D moves every block down by one
        n = self.n
        k %= n
        if k == 0:
            return x
        return tuple((x[(i + k) % n] - k) % n for i in range(n))

    def rotate(self, x: Perm, k: int) -> Perm:
        """Shift every block up by k (the conjugate delta^k x delta^-k)."""
        return self.tau(x, -k)

    def divides(self, a, b):
        la, lb = _labels(a), _labels(b)
        rep: dict[int, int] = {}
        for v in range(self.n):
            if rep.setdefault(la[v], lb[v]) != lb[v]:
                return False
        return True

    def meet(self, a: Perm, b: Perm) -> Perm:
        return _dual_meet(a, b)

    def join(self, a, b):
        return _dual_join(a, b)

    def letters(self, x):
        out: list[int] = []
        for b in blocks_of(x):
            for j in range(1, len(b)):
                out.extend(band_letters(b[j] + 1, b[j - 1] + 1))
        return out

    def normalize_pair(self, a, b):
        return _dual_pair(a, b)


@lru_cache(maxsize=1 << 16)
def _dual_meet(a: Perm, b: Perm) -> Perm:
    la, lb = _labels(a), _labels(b)
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(len(a)):
        groups.setdefault((la[v], lb[v]), []).append(v)
    return perm_of_blocks(len(a), groups.values())


@lru_cache(maxsize=1 << 18)
def _dual_join(a: Perm, b: Perm) -> Perm:
    n = len(a)
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x in (a, b):
        for c in perm_cycles(x):
            for v in c[1:]:
                parent[find(v)] = find(c[0])
    lab = _merge_crossing(n, [find(v) for v in range(n)])
    groups: dict[int, list[int]] = {}
    for v, l in enumerate(lab):
        groups.setdefault(l, []).append(v)
    return perm_of_blocks(n, groups.values())


@lru_cache(maxsize=1 << 18)
def _dual_pair(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    s = dual(len(a))
    m = _dual_meet(s.complement(a), b)
    if m == s.identity:
        return a, b
    return s.mul(a, m), s.quotient(m, b)


def dual(n: int) -> DualStructure:
    key = ("dual", n)
    if key not in _STRUCTS:
        if n < 1:
            raise BadStrandCount(f"n must be >= 1, got {n}")
        _STRUCTS[key] = DualStructure(n)
    return _STRUCTS[key]  # type: ignore[return-value]


def bkl_delta_word(n: int) -> BraidWord:
    if n < 2:
        raise BadStrandCount(f"delta needs n >= 2, got {n}")
    return BraidWord(n, tuple(range(1, n)))


def gamma_word(n: int) -> BraidWord:
    """sigma_1^2 sigma_2 ... sigma_(n-1); fixes the first puncture."""
    if n < 2:
        raise BadStrandCount(f"gamma needs n >= 2, got {n}")
    return BraidWord(n, (1,) + tuple(range(1, n)))


def bkl_normal_form(w: BraidWord) -> NormalForm:
    return normal_form(w, "dual")


def rotate_simple(x: Perm, k: int) -> Perm:
    return dual(len(x)).rotate(x, k)


def is_rotation_symmetric(nf: NormalForm, k: int) -> bool:
    s = dual(nf.n)
    return all(s.rotate(f, k) == f for f in nf.factors)


@dataclass(frozen=True)
class BKLSimple:
    """Readable wrapper: 1-based blocks of a dual simple."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_perm(cls, x: Perm) -> "BKLSimple":
        return cls(len(x), tuple(tuple(v + 1 for v in b) for b in blocks_of(x)))

    def perm(self) -> Perm:
        return make_simple(self.n, [[v - 1 for v in b] for b in self.blocks])
