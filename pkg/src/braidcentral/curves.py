"""Braid action on multicurves through integer Dynnikov coordinates.

A multicurve in the disk with n punctures is recorded by the Dynnikov
coordinates of its image in a disk with n + 2 punctures, one extra puncture
added on each side.  Every generator of B_n then acts through the interior
update rule, so the boundary cases of the usual formulas never arise.  The
vector has 2n entries (a_1..a_n, b_1..b_n).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import BraidWord

Interval = tuple[int, int]

DEFAULT_ENUM_LIMIT = 12
DEFAULT_SYSTEM_CAP = 100000


class NotLaminar(ValueError):
    pass


class TooManySystems(RuntimeError):
    pass


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


@dataclass(frozen=True)
class RoundMulticurve:
    """Round circles given by 1-based closed puncture intervals."""

    n: int
    intervals: frozenset[Interval]

    @classmethod
    def of(cls, n: int, intervals: Iterable[Sequence[int]]) -> "RoundMulticurve":
        return cls(n, frozenset((int(a), int(b)) for a, b in intervals))

    def sorted(self) -> list[Interval]:
        return sorted(self.intervals)

    def essential(self) -> "RoundMulticurve":
        return RoundMulticurve(self.n, frozenset(i for i in self.intervals if is_essential(i, self.n)))

    def outermost(self) -> list[Interval]:
        return [i for i in self.sorted()
                if not any(j != i and nested(i, j) for j in self.intervals)]

    def __str__(self):
        return format_system(self)

    def __len__(self):
        return len(self.intervals)


def is_essential(iv: Interval, n: int) -> bool:
    a, b = iv
    return 1 <= a <= b <= n and 2 <= b - a + 1 <= n - 1


def nested(i: Interval, j: Interval) -> bool:
    """i inside j."""
    return j[0] <= i[0] and i[1] <= j[1]


def crossing(i: Interval, j: Interval) -> bool:
    """Overlapping without nesting: the round circles intersect."""
    if i[1] < j[0] or j[1] < i[0]:
        return False
    return not (nested(i, j) or nested(j, i))


def is_laminar(intervals: Iterable[Interval]) -> bool:
    iv = list(intervals)
    return not any(crossing(x, y) for x, y in itertools.combinations(iv, 2))


def format_system(c: RoundMulticurve) -> str:
    return "{" + ",".join(f"[{a},{b}]" for a, b in c.sorted()) + "}"


def parse_system(text: str, n: int) -> RoundMulticurve:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"curve system must look like {{[1,3],[4,5]}}, got {text!r}")
    pairs = re.findall(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]", body)
    return RoundMulticurve.of(n, [(int(a), int(b)) for a, b in pairs])


@dataclass(frozen=True)
class LaminationCoords:
    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != 2 * self.n:
            raise ValueError(f"expected {2 * self.n} coordinates, got {len(self.coords)}")

    def is_empty(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "LaminationCoords") -> "LaminationCoords":
        # valid for disjoint multicurves only
        return LaminationCoords(self.n, tuple(x + y for x, y in zip(self.coords, other.coords)))


def encode_round(c: RoundMulticurve) -> LaminationCoords:
    """Coordinates of disjoint round circles.

    Round circles are symmetric about the real axis, so every a-coordinate
    vanishes and b_i = (beta_i - beta_(i+1)) / 2, where beta_j counts the
    crossings with the vertical arc between punctures j and j+1 of the
    enlarged disk.
    """
    ivs = list(c.intervals)
    if not is_laminar(ivs):
        raise NotLaminar(f"{format_system(c)} is not laminar")
    for a, b in ivs:
        if not 1 <= a <= b <= c.n:
            raise ValueError(f"interval [{a},{b}] outside 1..{c.n}")
    n = c.n
    big = n + 2
    beta = [0] * big  # beta[j] for 1 <= j <= big-1
    for a, b in ivs:
        if a == b:
            continue
        # shifted by one in the enlarged disk
        for j in range(a + 1, b + 1):
            beta[j] += 2
    bcoords = tuple((beta[i] - beta[i + 1]) // 2 for i in range(1, big - 1))
    return LaminationCoords(n, (0,) * n + bcoords)


def _apply(a: list[int], b: list[int], e: int) -> None:
    # generator sigma_(|e|) of B_n is sigma_(|e|+1) in the enlarged disk; it
    # touches coordinate pairs |e|-1 and |e| (0-based)
    i = abs(e)
    p, q = i - 1, i
    x, y, z, t = a[p], b[p], a[q], b[q]
    if e > 0:
        c = x - _neg(y) - z + _pos(t)
        a[p] = x + _pos(y) + _pos(_pos(t) - c)
        b[p] = t - _pos(c)
        a[q] = z + _neg(t) + _neg(_neg(y) + c)
        b[q] = y + _pos(c)
    else:
        d = x + _neg(y) - z - _pos(t)
        a[p] = x - _pos(y) - _pos(_pos(t) + d)
        b[p] = t + _neg(d)
        a[q] = z - _neg(t) - _neg(_neg(y) - d)
        b[q] = y - _neg(d)


def act(w: BraidWord, x: LaminationCoords) -> LaminationCoords:
    """Image of the multicurve; letters act left to right, so act(uv) = act(v) o act(u)."""
    if w.n != x.n:
        raise ValueError(f"B{w.n} cannot act on a {x.n}-punctured disk")
    n = x.n
    a = list(x.coords[:n])
    b = list(x.coords[n:])
    for e in w.letters:
        _apply(a, b, e)
    return LaminationCoords(n, tuple(a) + tuple(b))


def is_invariant(w: BraidWord, c: RoundMulticurve) -> bool:
    x = encode_round(c)
    return act(w, x) == x


def interval_catalog(n: int) -> list[Interval]:
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if is_essential((a, b), n)]


def round_image_map(w: BraidWord) -> dict[Interval, Interval | None]:
    """Essential interval -> interval whose circle is its image, or None."""
    n = w.n
    cat = interval_catalog(n)
    table = {encode_round(RoundMulticurve(n, frozenset([iv]))): iv for iv in cat}
    return {iv: table.get(act(w, encode_round(RoundMulticurve(n, frozenset([iv]))))) for iv in cat}


def periodic_intervals(fmap: dict[Interval, Interval | None], max_period: int) -> dict[Interval, int]:
    """Intervals returning to themselves under the partial map within max_period steps."""
    out = {}
    for iv in fmap:
        cur = iv
        for j in range(1, max_period + 1):
            cur = fmap.get(cur)
            if cur is None:
                break
            if cur == iv:
                out[iv] = j
                break
    return out


def invariant_round_systems(w: BraidWord, limit: int = DEFAULT_ENUM_LIMIT,
                            cap: int = DEFAULT_SYSTEM_CAP) -> list[RoundMulticurve]:
    """All nonempty laminar families of essential intervals carried to themselves by w."""
    n = w.n
    if n > limit:
        raise TooManySystems(f"enumeration limited to n <= {limit}")
    fmap = round_image_map(w)
    # cycles of the partial map are the building blocks of invariant families
    cycles: list[frozenset[Interval]] = []
    seen: set[Interval] = set()
    for iv in sorted(fmap):
        if iv in seen:
            continue
        orbit = [iv]
        cur = fmap[iv]
        while cur is not None and cur != iv and cur not in orbit:
            orbit.append(cur)
            cur = fmap[cur]
        if cur == iv:
            seen.update(orbit)
            if is_laminar(orbit):
                cycles.append(frozenset(orbit))
    results: list[RoundMulticurve] = []

    def grow(start: int, chosen: frozenset[Interval]):
        for k in range(start, len(cycles)):
            cand = cycles[k]
            if all(not crossing(x, y) for x in cand for y in chosen):
                fam = chosen | cand
                results.append(RoundMulticurve(n, fam))
                if len(results) > cap:
                    raise TooManySystems(f"more than {cap} invariant systems")
                grow(k + 1, fam)

    grow(0, frozenset())
    results.sort(key=lambda c: (len(c), c.sorted()))
    return results


def interval_image(perm: Sequence[int], iv: Interval) -> Interval | None:
    """Image of a round circle under a simple element, if it stays round."""
    a, b = iv
    img = [perm[k - 1] for k in range(a, b + 1)]
    lo, hi = min(img), max(img)
    if hi - lo != b - a:
        return None
    return (lo + 1, hi + 1)


def mirror_interval(iv: Interval, n: int) -> Interval:
    return (n + 1 - iv[1], n + 1 - iv[0])


def lamination_as_dict(x: LaminationCoords) -> dict:
    return {"n": x.n, "coords": list(x.coords)}


def orbits_of(fmap: dict[Interval, Interval], family: Iterable[Interval]) -> list[list[Interval]]:
    fam = set(family)
    out = []
    seen: set[Interval] = set()
    for iv in sorted(fam):
        if iv in seen:
            continue
        orb = [iv]
        cur = fmap[iv]
        while cur != iv:
            orb.append(cur)
            cur = fmap[cur]
        seen.update(orb)
        out.append(orb)
    return out

