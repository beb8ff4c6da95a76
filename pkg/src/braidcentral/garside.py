"""Garside structures on B_n and left-greedy normal forms.

Two structures share one normal-form routine: the classical one, whose
simple elements are permutation braids, and the dual one (in ``bkl``),
whose simple elements are non-crossing partitions.  In both cases a simple
element is stored as its permutation tuple.

``tau(x, k)`` is conjugation by the Garside element: tau(x) = D^-1 x D,
so that ``x D^q = D^q tau^q(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .core import (free_reduce, BadStrandCount, BraidWord, StrandMismatch, compose,
                   invert, perm_inverse)

Perm = tuple[int, ...]


class GarsideStructure:
    """Common interface; subclasses fill in the lattice operations."""

    name = "abstract"

    def __init__(self, n: int):
        if n < 1:
            raise BadStrandCount(f"n must be >= 1, got {n}")
        self.n = n
        self.identity: Perm = tuple(range(n))
        self.delta: Perm = self._delta_perm()
        self._delta_inv = perm_inverse(self.delta)

    # -- pieces provided by subclasses
    def _delta_perm(self) -> Perm:
        raise NotImplementedError

    def atoms(self) -> list[Perm]:
        raise NotImplementedError

    def atom_of_letter(self, i: int) -> Perm:
        """Simple element of the positive Artin generator sigma_i (1-based)."""
        p = list(range(self.n))
        p[i - 1], p[i] = p[i], p[i - 1]
        return tuple(p)

    def tau(self, x: Perm, k: int = 1) -> Perm:
        raise NotImplementedError

    @property
    def tau_order(self) -> int:
        raise NotImplementedError

    def divides(self, a: Perm, b: Perm) -> bool:
        """a left-divides b."""
        raise NotImplementedError

    def join(self, a: Perm, b: Perm) -> Perm:
        raise NotImplementedError

    def letters(self, x: Perm) -> list[int]:
        raise NotImplementedError

    def normalize_pair(self, a: Perm, b: Perm) -> tuple[Perm, Perm]:
        raise NotImplementedError

    # -- shared arithmetic
    def mul(self, a: Perm, b: Perm) -> Perm:
        """Product ab, assumed simple."""
        return compose(b, a)

    def quotient(self, a: Perm, b: Perm) -> Perm:
        """a^-1 b for a dividing b."""
        return compose(b, perm_inverse(a))

    def complement(self, a: Perm) -> Perm:
        """The simple c with a c = D."""
        return compose(self.delta, perm_inverse(a))

    def left_complement(self, a: Perm) -> Perm:
        """The simple c with c a = D."""
        return compose(perm_inverse(a), self.delta)

    def word(self, x: Perm) -> BraidWord:
        return BraidWord(self.n, tuple(self.letters(x)))

    def delta_word(self) -> BraidWord:
        return self.word(self.delta)


class ClassicalStructure(GarsideStructure):
    name = "classical"

    def _delta_perm(self):
        return tuple(range(self.n - 1, -1, -1))

    def atoms(self):
        return [self.atom_of_letter(i) for i in range(1, self.n)]

    @property
    def tau_order(self):
        return 2

    def tau(self, x, k=1):
        if k % 2 == 0:
            return x
        n = self.n
        return tuple(n - 1 - x[n - 1 - i] for i in range(n))

    def divides(self, a, b):
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                if a[i] > a[j] and b[i] < b[j]:
                    return False
        return True

    def join(self, a, b):
        return _classical_join(a, b)

    def letters(self, x):
        p = list(x)
        out = []
        n = self.n
        while True:
            for i in range(n - 1):
                if p[i] > p[i + 1]:
                    out.append(i + 1)
                    p[i], p[i + 1] = p[i + 1], p[i]
                    break
            else:
                return out

    def normalize_pair(self, a, b):
        return _classical_pair(a, b)


@lru_cache(maxsize=1 << 18)
def _classical_pair(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    a, b = list(a), list(b)
    n = len(a)
    ainv = [0] * n
    for i, j in enumerate(a):
        ainv[j] = i
    moved = True
    while moved:
        moved = False
        for i in range(n - 1):
            # sigma_i starts b and does not finish a
            if b[i] > b[i + 1] and ainv[i] < ainv[i + 1]:
                x, y = ainv[i], ainv[i + 1]
                a[x], a[y] = i + 1, i
                ainv[i], ainv[i + 1] = y, x
                b[i], b[i + 1] = b[i + 1], b[i]
                moved = True
    return tuple(a), tuple(b)


@lru_cache(maxsize=1 << 18)
def _classical_join(a: Perm, b: Perm) -> Perm:
    n = len(a)
    # inv[i] is a bitmask of the j > i whose strand crosses strand i
    inv = [0] * n
    for i in range(n):
        m = 0
        ai, bi = a[i], b[i]
        for j in range(i + 1, n):
            if ai > a[j] or bi > b[j]:
                m |= 1 << j
        inv[i] = m
    # transitive closure, processed right to left
    for i in range(n - 2, -1, -1):
        m = inv[i]
        acc = m
        rest = m
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            acc |= inv[j]
        inv[i] = acc
    out = [0] * n
    for i in range(n):
        before = bin(inv[i]).count("1")
        for j in range(i):
            if not inv[j] >> i & 1:
                before += 1
        out[i] = before
    assert len(set(out)) == n, "join is not a permutation"
    return tuple(out)


_STRUCTS: dict[tuple[str, int], GarsideStructure] = {}


def classical(n: int) -> ClassicalStructure:
    key = ("classical", n)
    if key not in _STRUCTS:
        _STRUCTS[key] = ClassicalStructure(n)
    return _STRUCTS[key]  # type: ignore[return-value]


@dataclass(frozen=True)
class NormalForm:
    """D^inf F_1 ... F_r in a given Garside structure."""

    n: int
    inf: int
    factors: tuple[Perm, ...]
    kind: str = field(default="classical", compare=True)

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def structure(self) -> GarsideStructure:
        return structure(self.kind, self.n)

    def key(self):
        return (self.inf, self.factors)

    def to_word(self) -> BraidWord:
        s = self.structure
        letters = list(s.letters(s.delta)) * abs(self.inf)
        if self.inf < 0:
            letters = list(invert(BraidWord(self.n, tuple(letters))).letters)
        for f in self.factors:
            letters.extend(s.letters(f))
        return BraidWord(self.n, tuple(letters))

    def is_delta_power(self) -> bool:
        return not self.factors

    def as_dict(self) -> dict:
        if self.kind == "classical":
            facs = [[v + 1 for v in f] for f in self.factors]
        else:
            from .bkl import blocks_of
            facs = [[[v + 1 for v in b] for b in blocks_of(f)] for f in self.factors]
        return {"n": self.n, "inf": self.inf, "factors": facs}


def structure(kind: str, n: int) -> GarsideStructure:
    if kind == "classical":
        return classical(n)
    from .bkl import dual
    return dual(n)


def left_weight(s: GarsideStructure, simples: Iterable[Perm]) -> tuple[int, list[Perm]]:
    """Left-greedy form of a product of simple elements: (number of D's, factors)."""
    facs: list[Perm] = []
    for x in simples:
        facs.append(x)
        j = len(facs) - 2
        while j >= 0:
            a, b = s.normalize_pair(facs[j], facs[j + 1])
            if a == facs[j] and b == facs[j + 1]:
                break
            facs[j], facs[j + 1] = a, b
            j -= 1
    d = 0
    while d < len(facs) and facs[d] == s.delta:
        d += 1
    facs = facs[d:]
    while facs and facs[-1] == s.identity:
        facs.pop()
    return d, facs


def nf_from_tokens(s: GarsideStructure, inf: int, tokens: Sequence[tuple[Perm, int]],
                   kind: str) -> NormalForm:
    """Normal form of D^inf t_1 ... t_k where each token is (simple, +1 or -1)."""
    # x^-1 = complement(x) D^-1; D powers are pushed to the far left
    total = sum(1 for _, sg in tokens if sg < 0)
    seen = 0
    pos: list[Perm] = []
    order = s.tau_order
    for x, sg in tokens:
        if sg > 0:
            y = x
        else:
            y = s.complement(x)
        # y has (total - seen) D^-1 to its right: y D^-t = D^-t tau^-t(y)
        pos.append(s.tau(y, (-(total - seen)) % order))
        if sg < 0:
            seen += 1
    d, facs = left_weight(s, pos)
    return NormalForm(s.n, inf - total + d, tuple(facs), kind)


def normal_form(w: BraidWord, kind: str = "classical") -> NormalForm:
    s = structure(kind, w.n)
    toks = [(s.atom_of_letter(abs(e)), 1 if e > 0 else -1) for e in w.letters]
    return nf_from_tokens(s, 0, toks, kind)


def nf_product(x: NormalForm, y: NormalForm) -> NormalForm:
    s = x.structure
    # D^a X D^b Y = D^(a+b) tau^b(X) Y
    toks = [(s.tau(f, y.inf % s.tau_order), 1) for f in x.factors]
    toks += [(f, 1) for f in y.factors]
    d, facs = left_weight(s, (t for t, _ in toks))
    return NormalForm(x.n, x.inf + y.inf + d, tuple(facs), x.kind)


def nf_inverse(x: NormalForm) -> NormalForm:
    s = x.structure
    # (D^p F_1..F_r)^-1 = F_r^-1 .. F_1^-1 D^-p
    toks = [(f, -1) for f in reversed(x.factors)]
    inner = nf_from_tokens(s, 0, toks, x.kind)
    return NormalForm(x.n, inner.inf - x.inf, tuple(s.tau(f, (-x.inf) % s.tau_order)
                                                      for f in inner.factors), x.kind)


def delta_word(n: int) -> BraidWord:
    if n < 2:
        raise BadStrandCount(f"half twist needs n >= 2, got {n}")
    letters = []
    for j in range(1, n):
        letters.extend(range(j, 0, -1))
    return BraidWord(n, tuple(letters))


def _check(a: BraidWord, b: BraidWord):
    if a.n != b.n:
        raise StrandMismatch(f"B{a.n} vs B{b.n}")


def nf_equal(a: BraidWord, b: BraidWord) -> bool:
    _check(a, b)
    return normal_form(a) == normal_form(b)


def shorter(w: BraidWord) -> BraidWord:
    """The shorter of the freely reduced word and the normal form word."""
    a = free_reduce(w)
    if len(a.letters) <= 2:
        return a
    b = normal_form(a).to_word()
    return b if len(b.letters) < len(a.letters) else a


def is_identity(w: BraidWord) -> bool:
    nf = normal_form(w)
    return nf.inf == 0 and not nf.factors


def commutes(a: BraidWord, b: BraidWord) -> bool:
    _check(a, b)
    return normal_form(a * b) == normal_form(b * a)


def is_left_weighted(s: GarsideStructure, a: Perm, b: Perm) -> bool:
    return s.normalize_pair(a, b) == (a, b)
