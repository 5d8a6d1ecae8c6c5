"""Permutation-group engine: stabilizer chains, exact orders, membership,
factorization, action images and kernels, and a brute-force oracle.

The chain is built by the randomized (product-replacement) variant of the
Schreier-Sims procedure and then sealed by a deterministic pass that sifts
every Schreier generator of every level.  After sealing, order, membership
and the derived quantities are exact, not Monte-Carlo estimates.

Orders are plain Python integers, so arbitrarily large groups are exact.
Internally permutations are numpy index arrays; composition ``a . b``
(b first) is the fancy-indexing ``a[b]``.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapExceeded,
    DomainMismatch,
    IllDefinedProjection,
    MalformedInput,
    NotAMember,
)
from .perm import Permutation, Word

_DTYPE = np.int32


def _inv(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[a] = np.arange(a.shape[0], dtype=_DTYPE)
    return out


class _ProductReplacer:
    """The "rattle" random-element generator over a fixed generator list."""

    def __init__(self, gens: Sequence[np.ndarray], rng: random.Random, slots: int = 8):
        n = gens[0].shape[0]
        ident = np.arange(n, dtype=_DTYPE)
        self._pool = [ident.copy() for _ in range(slots)] + [g.copy() for g in gens]
        self._accu = ident.copy()
        self._rng = rng
        for _ in range(max(40, 6 * len(self._pool))):
            self._stir()

    def _stir(self) -> np.ndarray:
        rng = self._rng
        i = rng.randrange(1, len(self._pool))
        j = rng.randrange(1, len(self._pool))
        p = self._pool[i]
        if rng.getrandbits(1):
            p = _inv(p)
        self._pool[0] = self._pool[0][p]
        c = self._pool[0]
        if rng.getrandbits(1):
            c = _inv(c)
        self._pool[j] = self._pool[j][c]
        self._accu = self._accu[self._pool[j]]
        return self._accu

    def sample(self) -> np.ndarray:
        return self._stir()


@dataclass
class _Level:
    base: int
    gen_ids: list[int] = field(default_factory=list)
    # orbit point -> transversal index; u[k] maps base to the k-th point
    orbit: dict[int, int] = field(default_factory=dict)
    u: list[np.ndarray] = field(default_factory=list)
    uinv: list[np.ndarray] = field(default_factory=list)
    checked: set[tuple[int, int]] = field(default_factory=set)


class _Chain:
    """Mutable stabilizer chain; sealed (verified) before first exact query."""

    def __init__(self, n: int, priority: Sequence[int] | None = None,
                 forced_prefix: Sequence[int] = ()):
        self.n = n
        self.ident = np.arange(n, dtype=_DTYPE)
        self.gens: list[np.ndarray] = []
        self.stick: list[int] = []
        self.levels: list[_Level] = []
        self.priority = (np.asarray(priority, dtype=np.int64)
                         if priority is not None else None)
        for b in forced_prefix:
            self._new_level(b)

    def _new_level(self, base: int) -> _Level:
        lvl = _Level(base=base)
        lvl.orbit[base] = 0
        lvl.u.append(self.ident)
        lvl.uinv.append(self.ident)
        self.levels.append(lvl)
        return lvl

    def _pick_base(self, g: np.ndarray) -> int:
        moved = np.nonzero(g != self.ident)[0]
        if self.priority is None:
            return int(moved[0])
        return int(moved[np.argmin(self.priority[moved])])

    def sift(self, p: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        """Reduce p through the chain; returns (residue, level it stuck at).

        A residue equal to the identity with level == len(levels) means
        membership (exact once the chain is sealed).
        """
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            x = int(p[lvl.base])
            if x == lvl.base:
                continue
            k = lvl.orbit.get(x)
            if k is None:
                return p, i
            p = lvl.uinv[k][p]
        return p, len(self.levels)

    def add(self, p: np.ndarray) -> bool:
        """Sift p and record the residue as a strong generator if nontrivial."""
        residue, stuck = self.sift(p)
        if bool((residue == self.ident).all()):
            return False
        if stuck == len(self.levels):
            self._new_level(self._pick_base(residue))
        gid = len(self.gens)
        self.gens.append(residue)
        self.stick.append(stuck)
        for i in range(stuck + 1):
            self.levels[i].gen_ids.append(gid)
            self._extend_orbit(i, [gid])
        return True

    def _extend_orbit(self, i: int, new_gen_ids: Sequence[int]) -> None:
        lvl = self.levels[i]
        frontier: list[int] = []
        points = list(lvl.orbit.keys())
        for gid in new_gen_ids:
            g = self.gens[gid]
            for x in points:
                y = int(g[x])
                if y not in lvl.orbit:
                    self._orbit_push(lvl, y, g[lvl.u[lvl.orbit[x]]])
                    frontier.append(y)
        while frontier:
            x = frontier.pop()
            ux = lvl.u[lvl.orbit[x]]
            for gid in lvl.gen_ids:
                g = self.gens[gid]
                y = int(g[x])
                if y not in lvl.orbit:
                    self._orbit_push(lvl, y, g[ux])
                    frontier.append(y)

    @staticmethod
    def _orbit_push(lvl: _Level, y: int, uy: np.ndarray) -> None:
        lvl.orbit[y] = len(lvl.u)
        lvl.u.append(uy)
        lvl.uinv.append(_inv(uy))

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.orbit)
        return out

    def verify(self) -> None:
        """Deterministic pass: sift every Schreier generator of every level.

        Either confirms the chain (Schreier's lemma) or grows it with the
        found residues until it is confirmed.  Pairs that once sifted clean
        stay clean, so they are cached and never re-sifted.
        """
        i = len(self.levels) - 1
        while i >= 0:
            stuck = self._check_level(i)
            if stuck is None:
                i -= 1
            else:
                i = stuck

    def _check_level(self, i: int) -> int | None:
        lvl = self.levels[i]
        for x in list(lvl.orbit.keys()):
            ux = lvl.u[lvl.orbit[x]]
            for gid in list(lvl.gen_ids):
                if (x, gid) in lvl.checked:
                    continue
                g = self.gens[gid]
                k = lvl.orbit[int(g[x])]
                schreier = lvl.uinv[k][g[ux]]
                residue, stuck = self.sift(schreier, start=i + 1)
                if bool((residue == self.ident).all()):
                    lvl.checked.add((x, gid))
                    continue
                if stuck == len(self.levels):
                    self._new_level(self._pick_base(residue))
                gid2 = len(self.gens)
                self.gens.append(residue)
                self.stick.append(stuck)
                for j in range(stuck + 1):
                    self.levels[j].gen_ids.append(gid2)
                    self._extend_orbit(j, [gid2])
                return stuck
        return None


class Projection:
    """A point map from a group's domain onto a smaller action domain.

    ``point_map[x]`` is the target point of source point ``x``, or -1 when
    the source point is dropped.  A generator induces a permutation of the
    target iff the map is equivariant; otherwise the projection is rejected.
    """

    def __init__(self, point_map: Sequence[int], target_size: int, name: str = ""):
        pm = np.asarray(point_map, dtype=_DTYPE)
        if target_size <= 0:
            raise IllDefinedProjection("target domain is empty")
        kept = pm[pm >= 0]
        if kept.size == 0 or kept.max() >= target_size:
            raise IllDefinedProjection("point map does not land in the target domain")
        if not np.array_equal(np.unique(kept), np.arange(target_size, dtype=_DTYPE)):
            raise IllDefinedProjection("point map does not cover the target domain")
        pm.setflags(write=False)
        self.point_map = pm
        self.source_size = int(pm.shape[0])
        self.target_size = int(target_size)
        self.name = name

    @classmethod
    def identity(cls, n: int) -> "Projection":
        return cls(np.arange(n, dtype=_DTYPE), n, name="identity")

    def induce(self, p: Permutation) -> Permutation:
        if p.domain_size != self.source_size:
            raise DomainMismatch(
                f"permutation on {p.domain_size} points, projection from {self.source_size}")
        pm = self.point_map
        out = np.full(self.target_size, -1, dtype=_DTYPE)
        src = p.images
        for x in range(self.source_size):
            y = pm[x]
            if y < 0:
                continue
            z = pm[src[x]]
            if z < 0:
                raise IllDefinedProjection(
                    f"image of kept point {x} is a dropped point {int(src[x])}")
            if out[y] >= 0 and out[y] != z:
                raise IllDefinedProjection(
                    f"target point {int(y)} has two images under the induced map")
            out[y] = z
        return Permutation(out)

    def __repr__(self) -> str:
        return (f"Projection({self.name or 'unnamed'}: "
                f"{self.source_size} -> {self.target_size})")


class PermutationGroup:
    """A finite permutation group given by generators.

    Construction is lazy: the stabilizer chain is built and sealed on the
    first exact query.  Instances are immutable and safe to share once built;
    ``seed`` only affects internal randomness, never any result.
    """

    def __init__(self, generators: Sequence[Permutation], seed: int = 0,
                 _base_prefix: Sequence[int] = ()):
        gens = tuple(generators)
        if not gens:
            raise MalformedInput("a group needs at least one generator")
        n = gens[0].domain_size
        for g in gens:
            if g.domain_size != n:
                raise DomainMismatch("generators act on different domains")
        self.generators = gens
        self.domain_size = n
        self._seed = seed
        self._base_prefix = tuple(_base_prefix)
        self._chain: _Chain | None = None
        self._word_chain: _WordChain | None = None
        self._lock = threading.Lock()

    # --- chain construction ---

    def _ensure_chain(self) -> _Chain:
        if self._chain is not None:
            return self._chain
        with self._lock:
            if self._chain is not None:
                return self._chain
            self._chain = self._build_chain()
            return self._chain

    def _build_chain(self) -> _Chain:
        n = self.domain_size
        priority = None
        if self._base_prefix:
            priority = np.full(n, n, dtype=np.int64)
            for rank, b in enumerate(self._base_prefix):
                priority[b] = rank
        chain = _Chain(n, priority=priority, forced_prefix=self._base_prefix)
        raw = [g.images.astype(_DTYPE) for g in self.generators]
        live = [g for g in raw if not bool((g == chain.ident).all())]
        for g in live:
            chain.add(g)
        if live and chain.levels:
            rng = random.Random(self._seed)
            sampler = _ProductReplacer(live, rng)
            clean = 0
            while clean < 16:
                if chain.add(sampler.sample()):
                    clean = 0
                else:
                    clean += 1
        chain.verify()
        return chain

    # --- exact queries ---

    def order(self) -> int:
        """Exact group order (arbitrary precision)."""
        return self._ensure_chain().order()

    def base(self) -> list[int]:
        return [lvl.base for lvl in self._ensure_chain().levels]

    def contains(self, p: Permutation) -> bool:
        if p.domain_size != self.domain_size:
            raise DomainMismatch(
                f"permutation on {p.domain_size} points, group on {self.domain_size}")
        chain = self._ensure_chain()
        residue, _ = chain.sift(p.images.astype(_DTYPE))
        return bool((residue == chain.ident).all())

    def random_element(self, rng: random.Random | None = None) -> Permutation:
        """A uniformly random element, drawn through the chain transversals."""
        rng = rng or random.Random()
        chain = self._ensure_chain()
        out = chain.ident
        for lvl in chain.levels:
            out = out[lvl.u[rng.randrange(len(lvl.u))]]
        return Permutation(out)

    def is_abelian(self) -> bool:
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if gens[i] * gens[j] != gens[j] * gens[i]:
                    return False
        return True

    def has_exponent(self, k: int, samples: int = 20, seed: int = 7) -> bool:
        """Whether g**k is the identity for all generators and sampled elements."""
        if any(not (g ** k).is_identity() for g in self.generators):
            return False
        rng = random.Random(seed)
        return all((self.random_element(rng) ** k).is_identity()
                   for _ in range(samples))

    def factor(self, p: Permutation) -> Word:
        """A word in the original generators evaluating to p (not minimal)."""
        if p.domain_size != self.domain_size:
            raise DomainMismatch(
                f"permutation on {p.domain_size} points, group on {self.domain_size}")
        return self._ensure_word_chain().factor(p)

    def _ensure_word_chain(self) -> "_WordChain":
        if self._word_chain is not None:
            return self._word_chain
        chain = self._ensure_chain()
        with self._lock:
            if self._word_chain is None:
                self._word_chain = _WordChain(self.generators, chain, self._seed)
            return self._word_chain

    # --- derived groups ---

    def action_image(self, projection: Projection) -> "PermutationGroup":
        """The group induced on the projected domain."""
        induced = [projection.induce(g) for g in self.generators]
        return PermutationGroup(induced, seed=self._seed)

    def kernel(self, projection: Projection) -> "PermutationGroup":
        """The kernel of the action on the projected domain.

        Built from a chain over the combined source+target domain whose base
        exhausts the target points first; the tail of that chain is exactly
        the pointwise stabilizer of the target, i.e. the kernel.  The exact
        identity |G| = |image| * |kernel| is asserted before returning.
        """
        n, t = self.domain_size, projection.target_size
        ext_gens = []
        for g in self.generators:
            induced = projection.induce(g)
            ext = np.concatenate([g.images, induced.images + n]).astype(_DTYPE)
            ext_gens.append(Permutation(ext))
        ext_group = PermutationGroup(
            ext_gens, seed=self._seed, _base_prefix=tuple(range(n, n + t)))
        chain = ext_group._ensure_chain()
        kernel_gens = [Permutation(chain.gens[gid][:n])
                       for gid in range(len(chain.gens)) if chain.stick[gid] >= t]
        if not kernel_gens:
            kernel_gens = [Permutation.identity(n)]
        kernel = PermutationGroup(kernel_gens, seed=self._seed)
        image = self.action_image(projection)
        if image.order() * kernel.order() != self.order():
            raise MalformedInput(
                "engine self-check failed: |image| * |kernel| != |group|")
        return kernel

    def __repr__(self) -> str:
        built = "built" if self._chain is not None else "lazy"
        return (f"PermutationGroup({len(self.generators)} generators on "
                f"{self.domain_size} points, {built})")


def group_from_generators(gens: Iterable[Permutation], seed: int = 0) -> PermutationGroup:
    return PermutationGroup(list(gens), seed=seed)


def enumerate_all(group: PermutationGroup, cap: int) -> int:
    """Exact element count by breadth-first closure over the generators.

    Independent of the stabilizer chain; the oracle the chain is checked
    against.  Raises CapExceeded as soon as the closure passes ``cap``.
    """
    n = group.domain_size
    gens = [g.images for g in group.generators]
    ident = np.arange(n, dtype=_DTYPE)
    seen = {ident.tobytes()}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g[p]
                key = q.tobytes()
                if key not in seen:
                    seen.add(key)
                    if len(seen) > cap:
                        raise CapExceeded(f"more than {cap} elements")
                    nxt.append(q)
        frontier = nxt
    return len(seen)


class _WordChain:
    """Transversal tables with short explicit words, used for factorization.

    The base and the exact orbit of every level are taken from the sealed
    main chain, so completeness is a simple counting condition.  Slots are
    filled by sifting short products of the original generators (systematic
    short words first, then random ones), swapping a shorter word into a
    slot whenever one comes by and sifting the displaced entry further down;
    an orbit-closure pass composes existing entries to finish off stubborn
    slots.  Factored words are then sums of a few short table entries rather
    than the exponentially long words a naive strong-generator chain yields.
    """

    def __init__(self, generators: Sequence[Permutation], chain: _Chain, seed: int):
        self.n = generators[0].domain_size
        self.ident = np.arange(self.n, dtype=_DTYPE)
        self.orig = [g.images.astype(_DTYPE) for g in generators]
        self.bases = [lvl.base for lvl in chain.levels]
        self.targets = [len(lvl.orbit) for lvl in chain.levels]
        self.orbits = [set(lvl.orbit.keys()) for lvl in chain.levels]
        # table[i]: orbit point -> (perm fixing earlier bases, its word)
        self.table: list[dict[int, tuple[np.ndarray, Word]]] = [
            {b: (self.ident, Word())} for b in self.bases]
        self._fill(seed)

    def _filled(self) -> bool:
        return all(len(t) == tgt for t, tgt in zip(self.table, self.targets))

    def _fill(self, seed: int) -> None:
        rng = random.Random(seed ^ 0x5EED)
        n_gens = len(self.orig)
        syllables = [(i, e) for i in range(n_gens) for e in (1, -1)]
        # systematic short products, breadth-first by word length
        frontier: list[tuple[np.ndarray, Word]] = [(self.ident, Word())]
        for _ in range(3):
            if self._filled():
                break
            nxt = []
            for p, w in frontier:
                for i, e in syllables:
                    g = self.orig[i] if e > 0 else _inv(self.orig[i])
                    q, qw = g[p], w + Word([(i, e)])
                    if len(qw) > len(w):  # skip immediate cancellations
                        nxt.append((q, qw))
                        self._round(q, qw)
            frontier = nxt
            self._closure_fill()
        length = 12
        while not self._filled():
            for _ in range(200):
                word = Word((rng.randrange(n_gens), rng.choice((-1, 1)))
                            for _ in range(length))
                p = self.ident
                for i, e in word:
                    g = self.orig[i] if e > 0 else _inv(self.orig[i])
                    for _ in range(abs(e)):
                        p = g[p]
                self._round(p, word)
            self._closure_fill()
            length = min(length + 4, 80)

    def _round(self, p: np.ndarray, word: Word) -> None:
        """Sift one element down the table, filling or shortening slots."""
        for i, (b, orbit) in enumerate(zip(self.bases, self.orbits)):
            x = int(p[b])
            if x == b:
                continue
            if x not in orbit:  # cannot happen for true members; guards misuse
                return
            entry = self.table[i].get(x)
            if entry is None:
                self.table[i][x] = (p, word)
                return
            eperm, eword = entry
            if len(word) < len(eword):
                self.table[i][x] = (p, word)
                p, word = eperm, eword
                eperm, eword = self.table[i][x]
            p = _inv(eperm)[p]
            word = word + eword.inverse()
            if len(word) > 4000:  # keep slots short; a longer recruit helps nobody
                return

    def _closure_fill(self) -> None:
        """Compose entries of one level to reach its unfilled orbit points."""
        for i, orbit in enumerate(self.orbits):
            table = self.table[i]
            if len(table) == self.targets[i]:
                continue
            frontier = list(table.keys())
            while frontier and len(table) < self.targets[i]:
                x = frontier.pop()
                px, wx = table[x]
                for _, (g, gw) in list(table.items()):
                    y = int(g[x])
                    if y not in table:
                        table[y] = (g[px], wx + gw)
                        frontier.append(y)

    def factor(self, p: Permutation) -> Word:
        arr = p.images.astype(_DTYPE)
        parts: list[Word] = []
        for i, b in enumerate(self.bases):
            x = int(arr[b])
            if x == b:
                continue
            entry = self.table[i].get(x)
            if entry is None:
                raise NotAMember("permutation is not in the group")
            eperm, eword = entry
            arr = _inv(eperm)[arr]
            parts.append(eword)
        if not bool((arr == self.ident).all()):
            raise NotAMember("permutation is not in the group")
        out = Word()
        for w in reversed(parts):
            out = out + w
        return out
