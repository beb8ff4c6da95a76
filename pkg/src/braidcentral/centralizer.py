"""Generating sets for centralizers of braids.

Periodic braids are handled through fixed representatives and annular
lifts.  Pseudo-Anosov braids get a root and a commuting periodic braid.  A
reducible braid is put in regular form; its centralizer is then generated by
the centralizers of the interior braids, embedded in their tubes, together
with lifts of generators of the group Z0 of tubular braids that commute with
the tubular braid and respect the interior classes.

Every generator returned is checked to commute with the input by normal
form comparison.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .bkl import (band_word, bkl_delta_word, gamma_word, is_rotation_symmetric)
from .classify import (ConjugacySearchFailed, Periodic, PseudoAnosov, Reducible,
                       classify, is_periodic, periodic_certificate)
from .core import (BraidError, BraidWord, cable, compose, concat, exponent_sum,
                   forget_strand, free_reduce, identity, invert, perm_inverse,
                   permutation_of, shift, word)
from .garside import (classical, commutes, delta_word, is_left_weighted,
                      nf_equal, normal_form, shorter)
from .sss import (DEFAULT_SSS_CAP, BudgetExceeded, are_conjugate,
                  super_summit_set)
from .tubular import (RegularForm, g_embed, is_consistent_perm, project_p,
                      regular_form_of, tube_interiors)

DEFAULT_ROOT_CAP = 200000
DEFAULT_BUDGET = 2000  # super summit set cap for the symmetric-factor scans
MAX_ROOT_DEGREE = 6
CHI_RANGE = 3

TAGS = ("section", "periodic-lift", "pa-root", "pa-periodic")


class NotApplicable(BraidError):
    pass


class NotConsistent(BraidError):
    pass


class CertificationError(RuntimeError):
    pass


def bound_p(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    k = n // 2
    return k * (k + 1) // 2 if n % 2 == 0 else k * (k + 3) // 2


@dataclass(frozen=True)
class Generator:
    word: BraidWord
    tag: str


@dataclass(frozen=True)
class GeneratorSet:
    target: BraidWord
    gens: tuple[Generator, ...]
    complete: bool = True
    notes: tuple[str, ...] = ()
    budget_exhausted: bool = False

    @property
    def bound(self) -> int:
        return bound_p(self.target.n)

    @property
    def words(self) -> list[BraidWord]:
        return [g.word for g in self.gens]

    @property
    def tags(self) -> list[str]:
        return [g.tag for g in self.gens]

    def __len__(self):
        return len(self.gens)

    def as_dict(self) -> dict:
        return {
            "n": self.target.n,
            "target": list(self.target.letters),
            "bound": self.bound,
            "count": len(self.gens),
            "complete": self.complete,
            "generators": [{"word": list(g.word.letters), "tag": g.tag, "certificate": "commutes"}
                           for g in self.gens],
            "notes": list(self.notes),
        }


def certify(gs: GeneratorSet) -> GeneratorSet:
    for g in gs.gens:
        if not commutes(g.word, gs.target):
            raise CertificationError(f"{g.word} ({g.tag}) does not commute with {gs.target}")
    if len(gs.gens) > gs.bound:
        raise CertificationError(f"{len(gs.gens)} generators exceed the bound {gs.bound}")
    return gs


def _transport(c: BraidWord, g: BraidWord) -> BraidWord:
    """c g c^-1: carries Z(c^-1 w c) to Z(w)."""
    return shorter(c * g * invert(c))


# -- mixed braid groups -----------------------------------------------------

@dataclass(frozen=True)
class MixedPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]  # 1-based

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if any(not b for b in self.blocks):
            raise ValueError("empty block")
        if seen != list(range(1, self.n + 1)):
            raise ValueError("blocks must partition 1..n")

    @classmethod
    def of(cls, n: int, blocks) -> "MixedPartition":
        bl = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        return cls(n, tuple(bl))

    @classmethod
    def by_key(cls, keys: Sequence) -> "MixedPartition":
        groups: dict = {}
        for i, k in enumerate(keys):
            groups.setdefault(k, []).append(i + 1)
        return cls.of(len(keys), groups.values())

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


def _contiguous_gens(n: int, sizes: Sequence[int]) -> list[BraidWord]:
    gens = []
    starts = []
    pos = 1
    for m in sizes:
        starts.append(pos)
        if m == 2:
            gens.append(word(n, pos))
        elif m == 3:
            gens += [word(n, pos), word(n, pos + 1)]
        elif m > 3:
            gens += [word(n, pos), word(n, *range(pos, pos + m - 1))]
        pos += m
    for i in range(len(sizes)):
        a = starts[i] + sizes[i] - 1
        for j in range(i + 1, len(sizes)):
            b = starts[j]
            up = list(range(a, b - 1))
            gens.append(word(n, *up, b - 1, b - 1, *[-x for x in reversed(up)]))
    return gens


def mixed_group_gens(P: MixedPartition) -> list[BraidWord]:
    """Generators of the braids whose permutation preserves every block."""
    n = P.n
    order = [x - 1 for b in P.blocks for x in b]
    target = [0] * n
    for new, old in enumerate(order):
        target[old] = new
    sort = classical(n).word(tuple(target))
    back = invert(sort)
    return [free_reduce(sort * g * back) for g in _contiguous_gens(n, P.sizes())]


# -- periodic braids --------------------------------------------------------

def _model(kind: str, n: int) -> BraidWord:
    return bkl_delta_word(n) if kind == "delta" else gamma_word(n)


def _rotating(kind: str, n: int) -> int:
    return n if kind == "delta" else n - 1


def _chord(kind: str, n: int, d: int, i: int) -> BraidWord:
    """Symmetric lift of the annular generator sigma_i (1 <= i < d)."""
    M = _rotating(kind, n)
    r = M // d
    if kind == "delta":
        return concat(n, [band_word(n, j * d + i + 1, j * d + i) for j in range(r)])
    base = _model(kind, n)
    out = identity(n)
    for j in range(r):
        c = base ** (j * d)
        out = out * (invert(c) * word(n, i + 1) * c)
    return shorter(out)


@dataclass(frozen=True)
class AnnularLift:
    kind: str
    n: int
    d: int
    chords: tuple[BraidWord, ...]
    loop: BraidWord  # image of sigma_d^2, the last point circling the centre

    def positions(self) -> list[int]:
        """0-based model position of each annular point."""
        off = 0 if self.kind == "delta" else 1
        return [i + off for i in range(self.d)]

    def lift(self, x: BraidWord) -> BraidWord:
        """Image of a braid on d+1 strands whose last strand is the centre."""
        if x.n != self.d + 1:
            raise ValueError(f"expected a braid on {self.d + 1} strands")
        out = []
        letters = x.letters
        i = 0
        while i < len(letters):
            e = letters[i]
            if abs(e) < self.d:
                g = self.chords[abs(e) - 1]
                out.append(g if e > 0 else invert(g))
                i += 1
            elif i + 1 < len(letters) and letters[i + 1] == e:
                out.append(self.loop if e > 0 else invert(self.loop))
                i += 2
            else:
                raise NotApplicable("the centre strand must stay put")
        return free_reduce(concat(self.n, out))


def annular_lift(kind: str, n: int, k: int) -> AnnularLift:
    M = _rotating(kind, n)
    d = math.gcd(M, k)
    if d == M:
        raise NotApplicable("the centralizer is the whole braid group")
    chords = tuple(_chord(kind, n, d, i) for i in range(1, d))
    loop = shorter(invert(concat(n, chords)) * _model(kind, n))
    return AnnularLift(kind, n, d, chords, loop)


def theta_lift(n: int, k: int, x, kind: str = "delta") -> BraidWord:
    """Symmetric lift to B_n of an annular braid on gcd(n, k) points.

    x is "delta", "sigma1" or a braid in sigma_1..sigma_(d-1) on d strands.
    """
    M = _rotating(kind, n)
    d = math.gcd(M, k)
    if d == M:
        raise NotApplicable(f"gcd({M}, {k}) = {M}: nothing to lift")
    if x == "delta":
        return _model(kind, n)
    if x == "sigma1":
        if d < 2:
            raise NotApplicable("sigma1 needs at least two annular points")
        x = word(d, 1)
    if not isinstance(x, BraidWord) or x.n != d:
        raise ValueError(f"expected a braid on {d} strands")
    al = annular_lift(kind, n, k)
    return al.lift(BraidWord(d + 1, x.letters))


def periodic_centralizer_gens(kind: str, n: int, k: int) -> GeneratorSet:
    target = _model(kind, n) ** k if n >= 2 else identity(n)
    if n <= 1:
        return GeneratorSet(target, ())
    if n == 2:
        return certify(GeneratorSet(target, (Generator(word(2, 1), "periodic-lift"),)))
    M = _rotating(kind, n)
    if k % M == 0:
        ws = [word(n, 1), bkl_delta_word(n)]
    elif math.gcd(M, k) == 1:
        ws = [_model(kind, n)]
    else:
        ws = [_model(kind, n), theta_lift(n, k, "sigma1", kind)]
    return certify(GeneratorSet(target, tuple(Generator(w, "periodic-lift") for w in ws)))


def periodic_gens_for(w: BraidWord, per: Periodic) -> GeneratorSet:
    base = periodic_centralizer_gens(per.kind, w.n, per.k)
    gens = tuple(Generator(_transport(per.conjugator, g.word), g.tag) for g in base.gens)
    return certify(GeneratorSet(w, gens))


# -- pseudo-Anosov braids ---------------------------------------------------

def _divisors_below(n: int) -> list[int]:
    return [k for k in range(1, n) if n % k == 0]


def _delta_symmetric_hit(w: BraidWord, cap: int):
    """(k, conjugator) with the smallest k such that some dual super summit
    element of w has all factors k-rotation symmetric."""
    n = w.n
    ks = _divisors_below(n)
    if not ks:
        return None
    sss = super_summit_set(w, cap, kind="dual")
    best = None
    for e in sss.elements:
        for k in ks:
            if best is not None and k >= best[0]:
                break
            if is_rotation_symmetric(e.nf, k):
                best = (k, e.conjugator, e.nf)
                break
    return best


def _loop_word(n: int) -> BraidWord:
    return word(n, *range(1, n), *range(n - 1, 0, -1))


def _gamma_hits(w: BraidWord, cap: int):
    n = w.n
    if n < 3:
        return None
    p = permutation_of(w)
    best = None
    for pos in range(n):
        if p[pos] != pos:
            continue
        small = forget_strand(w, pos + 1)
        hit = _delta_symmetric_hit(small, cap)
        if hit is None:
            continue
        k, _, nf = hit
        if best is not None and k >= best[0]:
            continue
        lifted = shift(nf.to_word(), 1, n)
        g = gamma_word(n) ** k
        loop = _loop_word(n)
        for j in sorted(range(-CHI_RANGE, CHI_RANGE + 1), key=abs):
            chi = lifted * loop ** j
            if not commutes(chi, g):
                continue
            c = are_conjugate(w, chi, cap)
            if c is not None:
                best = (k, c)
                break
    return best


def pa_commuting_periodic(w: BraidWord, budget: int = DEFAULT_BUDGET):
    """A periodic braid rho commuting with w, as (rho, kind, k), or None.

    The rotation types are tested through symmetric factors in the dual
    super summit set; the result generates the periodic part of Z(w) when a
    hit is found.
    """
    n = w.n
    found = []
    hit = _delta_symmetric_hit(w, budget)
    if hit is not None:
        k, c, _ = hit
        found.append((n // k, "delta", k, c))
    ghit = _gamma_hits(w, budget)
    if ghit is not None:
        k, c = ghit
        found.append(((n - 1) // k, "gamma", k, c))
    if not found:
        return None
    found.sort(key=lambda t: (-t[0], t[1]))
    _, kind, k, c = found[0]
    rho = _transport(c, _model(kind, n) ** k)
    if not commutes(rho, w):
        raise CertificationError("symmetric-factor test produced a non-commuting braid")
    return rho, kind, k


def _simples_by_length(n: int) -> dict[int, list]:
    st = classical(n)
    out: dict[int, list] = {}
    for p in itertools.permutations(range(n)):
        ln = len(st.letters(p))
        out.setdefault(ln, []).append(p)
    return out


def kth_root_bounded(w: BraidWord, k: int, cap: int = DEFAULT_ROOT_CAP) -> BraidWord | None:
    """A braid c with c^k = w, searched among normal forms of bounded length.

    None means no root exists in the searched range; BudgetExceeded means
    the search was cut short.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return w
    es = exponent_sum(w)
    if es % k:
        return None
    n = w.n
    if n == 1:
        return w
    target = normal_form(w)
    tperm = permutation_of(w)
    st = classical(n)
    N = n * (n - 1) // 2
    e = es // k
    L = -(-target.length // k) + 2
    p_hi = math.floor(target.inf / k)
    p_lo = math.ceil(target.sup / k) - L
    by_len = _simples_by_length(n)
    proper = [s for ln in range(1, N) for s in sorted(by_len.get(ln, []), key=st.letters)]
    nletters = {s: len(st.letters(s)) for s in proper}
    visited = 0

    def power_ok(p: int, factors: list) -> bool:
        c = _nf_word(n, p, factors)
        cp = permutation_of(c)
        q = tuple(range(n))
        for _ in range(k):
            q = compose(cp, q)
        if q != tperm:
            return False
        return normal_form(c ** k) == target

    def dfs(p: int, factors: list, remaining: int):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise BudgetExceeded("root search", cap)
        if remaining == 0:
            if power_ok(p, factors):
                return _nf_word(n, p, factors)
            return None
        slots = L - len(factors)
        if slots <= 0 or remaining > slots * (N - 1):
            return None
        for s in proper:
            ln = nletters[s]
            if ln > remaining:
                continue
            if factors and not is_left_weighted(st, factors[-1], s):
                continue
            r = dfs(p, factors + [s], remaining - ln)
            if r is not None:
                return r
        return None

    for p in range(p_hi, p_lo - 1, -1):
        rest = e - p * N
        if rest < 0 or rest > L * (N - 1):
            continue
        r = dfs(p, [], rest)
        if r is not None:
            return r
    return None


def _nf_word(n: int, p: int, factors) -> BraidWord:
    st = classical(n)
    return concat(n, [delta_word(n) ** p] + [st.word(f) for f in factors])


def _normalize_mod_center(a: BraidWord) -> BraidWord:
    # centre power chosen so that inf lands in {-1, 0}
    j = (normal_form(a).inf + 1) // 2
    if j == 0:
        return a
    return shorter(a * delta_word(a.n) ** (-2 * j))


def pa_centralizer_gens(w: BraidWord, budget: int = DEFAULT_BUDGET,
                        root_cap: int = DEFAULT_ROOT_CAP) -> GeneratorSet:
    n = w.n
    notes = []
    exhausted = False
    try:
        found = pa_commuting_periodic(w, budget)
    except BudgetExceeded as exc:
        found = None
        exhausted = True
        notes.append(f"periodic scan: {exc}")
    if found is None:
        rho, q = delta_word(n) ** 2, 1
    else:
        rho, kind, k = found
        q = _rotating(kind, n) // k
    alpha = None
    summit_len = normal_form(w).length
    kmax = max(2, min(MAX_ROOT_DEGREE, summit_len))
    for k in range(kmax, 1, -1):
        for j in range(q * k):
            x = w * rho ** j
            if exponent_sum(x) % k:
                continue
            try:
                r = kth_root_bounded(x, k, root_cap)
            except BudgetExceeded:
                exhausted = True
                note = f"root search: degree {k} inconclusive"
                if note not in notes:
                    notes.append(note)
                continue
            if r is not None:
                alpha = r
                break
        if alpha is not None:
            break
    if alpha is None:
        alpha = w
    alpha = _normalize_mod_center(alpha)
    gens = (Generator(alpha, "pa-root"), Generator(shorter(rho), "pa-periodic"))
    return certify(GeneratorSet(w, gens, complete=not notes, notes=tuple(notes),
                                budget_exhausted=exhausted))


# -- reducible braids -------------------------------------------------------

def _tube_orbit(rf: RegularForm) -> list[int]:
    d = rf.decomposition
    out = [0] * d.m
    for i, orb in enumerate(d.orbits):
        for t in orb:
            out[t] = i
    return out


def tube_classes(rf: RegularForm) -> list[tuple]:
    """Class key of every tube: its size and the interior braid of its orbit."""
    d = rf.decomposition
    orb = _tube_orbit(rf)
    return [(d.sizes[t], rf.nontrivial[orb[t]].letters) for t in range(d.m)]


def interior_classes(rf: RegularForm) -> list[list[int]]:
    """Orbits grouped by literal equality of their interior braids."""
    groups: dict = {}
    for i, b in enumerate(rf.nontrivial):
        groups.setdefault((b.n, b.letters), []).append(i)
    return sorted(groups.values())


def _consistent(classes, p) -> bool:
    return all(classes[t] == classes[p[t]] for t in range(len(p)))


def _perm_power(p, e: int):
    q = tuple(range(len(p)))
    for _ in range(e):
        q = compose(p, q)
    return q


def _lattice_basis(vectors) -> list[tuple[int, int]]:
    """Hermite basis of the sublattice of Z^2 spanned by the vectors."""
    rows = [list(v) for v in vectors if any(v)]
    basis = []
    for col in range(2):
        piv = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(piv) > 1:
            piv.sort(key=lambda r: abs(r[col]))
            top = piv[0]
            nxt = []
            for r in piv[1:]:
                q = r[col] // top[col]
                r = [r[0] - q * top[0], r[1] - q * top[1]]
                (nxt if r[col] != 0 else rest).append(r)
            piv = [top] + nxt
        if piv:
            top = piv[0]
            if top[col] < 0:
                top = [-top[0], -top[1]]
            basis.append(tuple(top))
        rows = [r for r in rest if any(r)]
    return basis


def _order(p) -> int:
    q = p
    e = 1
    ident = tuple(range(len(p)))
    while q != ident:
        q = compose(p, q)
        e += 1
    return e


@dataclass
class Z0Result:
    gens: list[BraidWord]
    kind: str  # "pure", "periodic", "pseudo-anosov" or "reducible"
    complete: bool = True
    notes: list[str] = field(default_factory=list)
    budget_exhausted: bool = False


def z0_gens(rf: RegularForm, cap: int = DEFAULT_SSS_CAP, budget: int = DEFAULT_BUDGET,
            root_cap: int = DEFAULT_ROOT_CAP) -> Z0Result:
    """Generators of the consistent part of the centralizer of the tubular braid."""
    d = rf.decomposition
    tub = d.tubular
    m = d.m
    classes = tube_classes(rf)
    per = is_periodic(tub)
    if per is not None:
        kind, k = per
        if all(p == i for i, p in enumerate(d.perm)):
            P = MixedPartition.by_key(classes)
            return Z0Result(mixed_group_gens(P), "pure")
        c = periodic_certificate(tub, kind, k, cap)
        al = annular_lift(kind, m, k)
        inv = perm_inverse(permutation_of(c))
        keys = [classes[inv[pos]] for pos in al.positions()] + [("centre",)]
        P = MixedPartition.by_key(keys)
        gens = [free_reduce(c * al.lift(y) * invert(c)) for y in mixed_group_gens(P)]
        return Z0Result(gens, "periodic")
    res = classify(tub, cap)
    if isinstance(res, PseudoAnosov):
        gs = pa_centralizer_gens(tub, budget, root_cap)
        a, r = gs.words
        pa, pr = permutation_of(a), permutation_of(r)
        oa, orr = _order(pa), _order(pr)
        vecs = [(oa, 0), (0, orr)]
        for i in range(oa):
            for j in range(orr):
                if _consistent(classes, compose(_perm_power(pa, i), _perm_power(pr, j))):
                    vecs.append((i, j))
        gens = [free_reduce(a ** i * r ** j) for i, j in _lattice_basis(vecs)]
        return Z0Result(gens, "pseudo-anosov", gs.complete, list(gs.notes), gs.budget_exhausted)
    # the round system found was not the whole canonical one
    sub = centralizer_gens(tub, cap, budget, root_cap)
    gens = []
    for g in sub.words:
        e = 1
        p = permutation_of(g)
        while not _consistent(classes, _perm_power(p, e)):
            e += 1
        gens.append(free_reduce(g ** e))
    return Z0Result(gens, "reducible", False,
                    ["tubular braid is reducible; Z0 generators are consistent powers only"],
                    sub.budget_exhausted)


def section_h(rf: RegularForm, eta: BraidWord) -> BraidWord:
    """A preimage of eta under p that commutes with the regular-form braid.

    Interior braids are propagated along each cycle of the tubular braid
    from a trivial one at the cycle's first tube.  For a pure tubular braid
    this is the trivial filling.
    """
    d = rf.decomposition
    if eta.n != d.m:
        raise NotConsistent(f"expected a braid on {d.m} tubes")
    pe = permutation_of(eta)
    classes = tube_classes(rf)
    if not _consistent(classes, pe) or not is_consistent_perm(d, pe):
        raise NotConsistent("eta does not respect the interior classes")
    if not commutes(eta, d.tubular):
        raise NotConsistent("eta does not commute with the tubular braid")
    pb = d.perm
    pe_inv = perm_inverse(pe)
    B = d.interiors
    A: list[BraidWord | None] = [None] * d.m
    for start in range(d.m):
        if A[start] is not None:
            continue
        A[start] = identity(d.sizes[start])
        q = start
        while pb[q] != start:
            nq = pb[q]
            A[nq] = free_reduce(invert(B[pe_inv[nq]]) * A[q] * B[nq])
            q = nq
    return cable(eta, d.sizes, A)


def kernel_part(rf: RegularForm, z: BraidWord) -> list[BraidWord]:
    """For z in Z(beta): the interior braids gamma_i with
    z = g_1(gamma_1) ... g_t(gamma_t) h(p(z))."""
    d = rf.decomposition
    eta = project_p(d, z)
    k = z * invert(section_h(rf, eta))
    ints = tube_interiors(d, k)
    out = []
    for orb in d.orbits:
        g = ints[orb[0]]
        if any(not nf_equal(ints[t], g) for t in orb):
            raise NotConsistent("kernel element is not constant along an orbit")
        out.append(g)
    return out


def _permutability(rf: RegularForm, etas: Sequence[BraidWord]) -> list[list[int]]:
    """Orbits of the tubular braid grouped by the permutation group of Z0."""
    d = rf.decomposition
    orbit_of = _tube_orbit(rf)
    parent = list(range(len(d.orbits)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eta in etas:
        p = permutation_of(eta)
        for t in range(d.m):
            a, b = find(orbit_of[t]), find(orbit_of[p[t]])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(len(d.orbits)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _reducible_gens(w: BraidWord, red: Reducible, cap: int, budget: int,
                    root_cap: int) -> GeneratorSet:
    rf = regular_form_of(w, red.reduction, red.rounding_conjugator, cap)
    notes: list[str] = []
    complete = red.crs_exact
    if not red.crs_exact:
        notes.append("reduction system not certified canonical")
    exhausted = False
    try:
        z0 = z0_gens(rf, cap, budget, root_cap)
        notes += z0.notes
        complete = complete and z0.complete
        exhausted = z0.budget_exhausted
        etas = z0.gens
        reps = [grp[0] for grp in _permutability(rf, etas)]
    except BudgetExceeded as exc:
        notes.append(f"Z0: {exc}; using every orbit")
        complete = False
        exhausted = True
        etas = []
        reps = list(range(rf.t))
    C = rf.conjugator
    gens: list[Generator] = []
    for i in reps:
        sub = centralizer_gens(rf.nontrivial[i], cap, budget, root_cap)
        complete = complete and sub.complete
        exhausted = exhausted or sub.budget_exhausted
        notes += [f"interior({i + 1}): {s}" for s in sub.notes]
        for g in sub.words:
            gens.append(Generator(_transport(C, g_embed(rf, i, g, check=False)), f"interior({i + 1})"))
    for eta in etas:
        gens.append(Generator(_transport(C, section_h(rf, eta)), "section"))
    return certify(GeneratorSet(w, tuple(gens), complete, tuple(notes), exhausted))


def centralizer_gens(w: BraidWord, cap: int = DEFAULT_SSS_CAP, budget: int = DEFAULT_BUDGET,
                     root_cap: int = DEFAULT_ROOT_CAP) -> GeneratorSet:
    """Certified generators of the centralizer of w."""
    if w.n == 1:
        return GeneratorSet(w, ())
    try:
        c = classify(w, cap)
    except (BudgetExceeded, ConjugacySearchFailed) as exc:
        return GeneratorSet(w, (), False, (f"classification: {exc}",), True)
    if isinstance(c, Periodic):
        return periodic_gens_for(w, c)
    if isinstance(c, PseudoAnosov):
        return pa_centralizer_gens(w, budget, root_cap)
    return _reducible_gens(w, c, cap, budget, root_cap)
