"""Braid words, permutations, strand forgetting and cabling.

Letters follow the usual signed convention: ``e > 0`` is sigma_e and
``e < 0`` is its inverse.  Words are read left to right, which is top to
bottom in a braid diagram.  Permutations are 0-based tuples ``p`` where
``p[i]`` is the final position of the strand starting at position ``i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    pass


class BadStrandCount(BraidError):
    pass


class StrandMismatch(BraidError):
    pass


class PermutationMovesStrand(BraidError):
    pass


class SizeMismatch(BraidError):
    pass


class ParseError(BraidError):
    def __init__(self, msg: str, position: int = 0):
        super().__init__(f"{msg} (at column {position})")
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BadStrandCount(f"strand count must be >= 1, got {self.n}")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0 or abs(e) >= self.n:
                raise BraidError(f"letter {e} invalid on {self.n} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise StrandMismatch(f"B{self.n} vs B{other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return invert(self) ** (-k)
        return BraidWord(self.n, self.letters * k)

    def __str__(self):
        return format_word(self)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def word(n: int, *letters: int) -> BraidWord:
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    body = " ".join(str(e) for e in w.letters)
    return f"B{w.n}: {body}".rstrip()


_WORD_RE = re.compile(r"\s*[Bb](\d+)\s*:")


def parse_word(text: str) -> BraidWord:
    """Parse ``Bn: e1 e2 ...``; commas are accepted as separators."""
    m = _WORD_RE.match(text)
    if not m:
        raise ParseError("expected 'Bn:' prefix", 0)
    n = int(m.group(1))
    letters = []
    pos = m.end()
    for tok in re.finditer(r"[^\s,]+", text[pos:]):
        try:
            e = int(tok.group())
        except ValueError:
            raise ParseError(f"bad letter {tok.group()!r}", pos + tok.start()) from None
        if e == 0 or abs(e) >= n:
            raise ParseError(f"letter {e} out of range for B{n}", pos + tok.start())
        letters.append(e)
    if n < 1:
        raise ParseError("strand count must be positive", m.start(1))
    return BraidWord(n, tuple(letters))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for e in w.letters:
        if out and out[-1] == -e:
            out.pop()
        else:
            out.append(e)
    return BraidWord(w.n, tuple(out))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-e for e in reversed(w.letters)))


def conjugate(w: BraidWord, c: BraidWord) -> BraidWord:
    """The word c^-1 w c."""
    return invert(c) * w * c


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def permutation_of(w: BraidWord) -> tuple[int, ...]:
    # track where each strand currently sits
    where = list(range(w.n))
    at = list(range(w.n))
    for e in w.letters:
        i = abs(e) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        where[a], where[b] = i + 1, i
    return tuple(where)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q, i.e. i -> p[q[i]]."""
    return tuple(p[i] for i in q)


def perm_inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_cycles(p: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(p)
    cycles = []
    for s in range(len(p)):
        if seen[s]:
            continue
        cyc = []
        i = s
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        cycles.append(cyc)
    return cycles


def shift(w: BraidWord, offset: int, n: int) -> BraidWord:
    """Embed w into B_n on strands offset+1 .. offset+w.n."""
    if offset < 0 or offset + w.n > n:
        raise SizeMismatch(f"cannot place B{w.n} at offset {offset} in B{n}")
    return BraidWord(n, tuple(e + offset if e > 0 else e - offset for e in w.letters))


def forget_strand(w: BraidWord, i: int) -> BraidWord:
    """Delete the strand starting (and ending) at 1-based position i."""
    if not 1 <= i <= w.n:
        raise BraidError(f"no strand {i} in B{w.n}")
    pos = i - 1
    out = []
    for e in w.letters:
        j = abs(e) - 1
        if j == pos:
            pos += 1
        elif j + 1 == pos:
            pos -= 1
        elif j > pos:
            out.append(e - 1 if e > 0 else e + 1)
        else:
            out.append(e)
    if pos != i - 1:
        raise PermutationMovesStrand(f"strand {i} ends at position {pos + 1}")
    return BraidWord(w.n - 1, tuple(out))


def _block_cross(offset: int, a: int, b: int) -> list[int]:
    """Positive crossing of a ribbon of a strands over its right neighbour of b strands."""
    out = []
    for k in range(a):
        start = offset + a - k
        out.extend(range(start, start + b))
    return out


def cable(tubular: BraidWord, sizes: Sequence[int],
          interiors: Sequence[BraidWord] | None = None) -> BraidWord:
    """Replace strand j of ``tubular`` by a ribbon of sizes[j] parallel strands.

    ``sizes`` is indexed by starting position.  ``interiors[j]`` is appended
    inside the ribbon that ends at position j.
    """
    m = tubular.n
    if len(sizes) != m:
        raise SizeMismatch(f"{len(sizes)} sizes for {m} tubes")
    if any(s < 1 for s in sizes):
        raise SizeMismatch("tube sizes must be positive")
    n = sum(sizes)
    cur = list(sizes)
    letters: list[int] = []
    for e in tubular.letters:
        i = abs(e) - 1
        o = sum(cur[:i])
        a, b = cur[i], cur[i + 1]
        if e > 0:
            letters.extend(_block_cross(o, a, b))
        else:
            letters.extend(-x for x in reversed(_block_cross(o, b, a)))
        cur[i], cur[i + 1] = b, a
    if interiors is not None:
        if len(interiors) != m:
            raise SizeMismatch(f"{len(interiors)} interiors for {m} tubes")
        o = 0
        for j, inner in enumerate(interiors):
            if inner.n != cur[j]:
                raise SizeMismatch(f"interior {j + 1} has {inner.n} strands, tube has {cur[j]}")
            letters.extend(shift(inner, o, n).letters)
            o += cur[j]
    return BraidWord(n, tuple(letters))


def final_sizes(tubular: BraidWord, sizes: Sequence[int]) -> list[int]:
    """Tube sizes indexed by arrival position."""
    p = permutation_of(tubular)
    out = [0] * len(sizes)
    for i, s in enumerate(sizes):
        out[p[i]] = s
    return out


def concat(n: int, words: Iterable[BraidWord]) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.n != n:
            raise StrandMismatch(f"B{w.n} in a B{n} product")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))
