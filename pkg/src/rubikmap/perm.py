"""Permutations on a fixed finite domain, and words over a generator list.

Points are 0-based internally.  All text formats (disjoint-cycle strings,
exported scripts, map files) use 1-based points; conversion happens only in
``Permutation.cycles`` / ``format_cycles`` / ``parse_cycles``.

Composition follows function application: ``(a * b)(x) == a(b(x))``, i.e. the
right factor acts first.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainMismatch, MalformedInput

_DTYPE = np.int32


def _as_images(images: Sequence[int] | np.ndarray) -> np.ndarray:
    arr = np.asarray(images, dtype=_DTYPE)
    if arr.ndim != 1:
        raise MalformedInput("images must be a flat sequence")
    n = arr.shape[0]
    seen = np.zeros(n, dtype=bool)
    if n and (arr.min() < 0 or arr.max() >= n):
        raise MalformedInput("images out of range for the domain")
    seen[arr] = True
    if not seen.all():
        raise MalformedInput("images is not a bijection")
    arr.setflags(write=False)
    return arr


class Permutation:
    """A bijection of {0, ..., n-1}, immutable and hashable."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int] | np.ndarray):
        self.images = _as_images(images)
        self._hash: int | None = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(n, dtype=_DTYPE))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]],
                    one_based: bool = True) -> "Permutation":
        """Build from disjoint cycles (1-based by default, matching text formats)."""
        img = np.arange(n, dtype=_DTYPE)
        offset = 1 if one_based else 0
        touched = set()
        for cyc in cycles:
            pts = [c - offset for c in cyc]
            for p in pts:
                if p < 0 or p >= n:
                    raise MalformedInput(f"cycle point {p + offset} outside domain 1..{n}")
                if p in touched:
                    raise MalformedInput(f"point {p + offset} appears in two cycles")
                touched.add(p)
            for a, b in zip(pts, pts[1:]):
                img[a] = b
            if pts:
                img[pts[-1]] = pts[0]
        return cls(img)

    @property
    def domain_size(self) -> int:
        return self.images.shape[0]

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.domain_size != other.domain_size:
            raise DomainMismatch(
                f"domains differ: {self.domain_size} vs {other.domain_size}")
        return Permutation(self.images[other.images])

    def __pow__(self, k: int) -> "Permutation":
        n = self.domain_size
        if k == 0:
            return Permutation.identity(n)
        base = self.images if k > 0 else self.inverse().images
        k = abs(k)
        result = np.arange(n, dtype=_DTYPE)
        acc = base
        while k:
            if k & 1:
                result = acc[result]
            k >>= 1
            if k:
                acc = acc[acc]
        return Permutation(result)

    def inverse(self) -> "Permutation":
        inv = np.empty(self.domain_size, dtype=_DTYPE)
        inv[self.images] = np.arange(self.domain_size, dtype=_DTYPE)
        return Permutation(inv)

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.domain_size, dtype=_DTYPE)).all())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return (self.domain_size == other.domain_size
                and bool((self.images == other.images).all()))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images.tobytes())
        return self._hash

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles as 1-based point tuples, ordered by minimal point."""
        img = self.images
        seen = np.zeros(self.domain_size, dtype=bool)
        out = []
        for start in range(self.domain_size):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            nxt = int(img[start])
            while nxt != start:
                seen[nxt] = True
                cyc.append(nxt)
                nxt = int(img[nxt])
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(p + 1 for p in cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted multiset of non-trivial cycle lengths."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def sign(self) -> int:
        """Signature: +1 for even permutations, -1 for odd."""
        s = 1
        for c in self.cycles():
            if len(c) % 2 == 0:
                s = -s
        return s

    def order(self) -> int:
        """Multiplicative order, the lcm of cycle lengths."""
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def moved_points(self) -> list[int]:
        return [int(p) for p in np.nonzero(self.images != np.arange(self.domain_size))[0]]

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, n={self.domain_size})"

    def __str__(self) -> str:
        return format_cycles(self)


def format_cycles(p: Permutation) -> str:
    """Disjoint-cycle string with 1-based points, e.g. ``(1,2,3)(4,5)``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)?\s*\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse a 1-based disjoint-cycle string on the domain 1..n."""
    stripped = text.strip()
    pos = 0
    cycles: list[list[int]] = []
    while pos < len(stripped):
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise MalformedInput(f"cannot parse cycle notation at: {stripped[pos:pos + 20]!r}")
        if m.group(1):
            cycles.append([int(x) for x in m.group(1).split(",")])
        pos = m.end()
        while pos < len(stripped) and stripped[pos] in " \t\n*":
            pos += 1
    return Permutation.from_cycles(n, cycles, one_based=True)


class Word:
    """A product of generators: sequence of (generator index, nonzero exponent).

    The first syllable is applied first: evaluating ``[(i, a), (j, b)]`` over
    generators ``g`` yields ``g[j]**b * g[i]**a`` under the composition
    convention of this module.  The empty word evaluates to the identity.
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables: Iterable[tuple[int, int]] = ()):
        merged: list[tuple[int, int]] = []
        for idx, exp in syllables:
            if exp == 0:
                continue
            if merged and merged[-1][0] == idx:
                combined = merged[-1][1] + exp
                if combined == 0:
                    merged.pop()
                else:
                    merged[-1] = (idx, combined)
            else:
                merged.append((int(idx), int(exp)))
        self.syllables: tuple[tuple[int, int], ...] = tuple(merged)

    def evaluate(self, generators: Sequence[Permutation]) -> Permutation:
        if not generators:
            raise MalformedInput("cannot evaluate a word without generators")
        n = generators[0].domain_size
        result = Permutation.identity(n)
        for idx, exp in self.syllables:
            if idx < 0 or idx >= len(generators):
                raise MalformedInput(f"word references generator {idx} of {len(generators)}")
            result = generators[idx] ** exp * result
        return result

    def inverse(self) -> "Word":
        return Word((idx, -exp) for idx, exp in reversed(self.syllables))

    def __add__(self, other: "Word") -> "Word":
        """Concatenation: self happens first, then other."""
        return Word(self.syllables + other.syllables)

    def __len__(self) -> int:
        return sum(abs(exp) for _, exp in self.syllables)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __repr__(self) -> str:
        return f"Word({list(self.syllables)!r})"
