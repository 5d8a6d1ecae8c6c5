"""Oriented 3-valent maps encoded as rotation systems over darts.

A map on ``n`` darts (0-based internally, 1-based in files and printed
cycles) is a pair of permutations:

* ``sigma`` -- vertex rotations; every cycle has length exactly 3,
* ``alpha`` -- edge pairing; a fixed-point-free involution.

Faces are the orbits of the derived permutation ``phi = sigma . alpha``
(``alpha`` applied first).  This convention is fixed once here; every face
boundary below is listed in ``phi`` order starting from its minimal dart.
Vertices, edges and faces are numbered by their minimal dart, which makes
every derived quantity invariant under dart relabeling.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import (
    Disconnected,
    IoError,
    MalformedInput,
    NotInvolution,
    NotTrivalent,
    ParameterOutOfRange,
)

MAP_FILE_KEYS = ("name", "darts", "sigma", "alpha")


@dataclass(frozen=True)
class Vertex:
    """A vertex: its canonical index and its 3 darts in rotation order.

    ``darts`` starts at the minimal dart of the sigma-orbit.
    """
    index: int
    darts: tuple[int, int, int]


@dataclass(frozen=True)
class Edge:
    index: int
    darts: tuple[int, int]


@dataclass(frozen=True)
class Face:
    """A face: canonical index and boundary darts in traversal order."""
    index: int
    darts: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)


def _orbits(images: Sequence[int]) -> list[tuple[int, ...]]:
    """Orbits of a permutation, sorted by minimal element, each starting there."""
    n = len(images)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        nxt = images[start]
        while nxt != start:
            seen[nxt] = True
            orbit.append(nxt)
            nxt = images[nxt]
        out.append(tuple(orbit))
    return out


class MapM:
    """An oriented 3-valent map.  Immutable after construction.

    Use :func:`from_rotation_system` or a builder; the constructor takes
    0-based image sequences and validates everything.
    """

    __slots__ = ("name", "n_darts", "sigma", "alpha", "phi",
                 "vertices", "edges", "faces",
                 "vertex_of", "edge_of", "face_of")

    def __init__(self, sigma: Sequence[int], alpha: Sequence[int], name: str = "map"):
        n = len(sigma)
        if len(alpha) != n:
            raise MalformedInput("sigma and alpha act on different dart counts")
        if n == 0 or n % 2 != 0:
            raise MalformedInput(f"dart count must be positive and even, got {n}")
        _check_bijection(sigma, "sigma")
        _check_bijection(alpha, "alpha")

        self.name = name
        self.n_darts = n
        self.sigma = tuple(sigma)
        self.alpha = tuple(alpha)
        self.phi = tuple(self.sigma[self.alpha[d]] for d in range(n))

        sigma_orbits = _orbits(self.sigma)
        for orb in sigma_orbits:
            if len(orb) != 3:
                raise NotTrivalent(
                    f"vertex rotation {tuple(d + 1 for d in orb)} has length {len(orb)}, not 3")
        for d in range(n):
            if self.alpha[d] == d:
                raise NotInvolution(f"alpha fixes dart {d + 1}")
            if self.alpha[self.alpha[d]] != d:
                raise NotInvolution("alpha is not an involution")

        self._check_connected()

        self.vertices = tuple(Vertex(i, orb) for i, orb in enumerate(sigma_orbits))
        self.edges = tuple(Edge(i, orb) for i, orb in enumerate(_orbits(self.alpha)))
        self.faces = tuple(Face(i, orb) for i, orb in enumerate(_orbits(self.phi)))

        self.vertex_of = _index_by_dart(n, self.vertices)
        self.edge_of = _index_by_dart(n, self.edges)
        self.face_of = _index_by_dart(n, self.faces)

        if 2 - (self.n_vertices - self.n_edges + self.n_faces) < 0:
            raise MalformedInput("negative Euler genus; rotation data is corrupt")

    def _check_connected(self) -> None:
        n = self.n_darts
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            d = stack.pop()
            for nxt in (self.sigma[d], self.alpha[d]):
                if not seen[nxt]:
                    seen[nxt] = True
                    count += 1
                    stack.append(nxt)
        if count != n:
            raise Disconnected(f"only {count} of {n} darts reachable")

    # --- counts and invariants ---

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def genus(self) -> int:
        chi = self.euler_characteristic()
        two_g = 2 - chi
        if two_g % 2 != 0 or two_g < 0:
            raise MalformedInput(f"Euler characteristic {chi} is not of the form 2-2g")
        return two_g // 2

    def face_sizes(self) -> tuple[int, ...]:
        """Multiset of face sizes, sorted ascending."""
        return tuple(sorted(f.size for f in self.faces))

    def all_faces_odd(self) -> bool:
        return all(f.size % 2 == 1 for f in self.faces)

    # --- structure ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MapM):
            return NotImplemented
        return (self.n_darts == other.n_darts
                and self.sigma == other.sigma
                and self.alpha == other.alpha)

    def __hash__(self) -> int:
        return hash((self.n_darts, self.sigma, self.alpha))

    def __repr__(self) -> str:
        return (f"MapM({self.name!r}: V={self.n_vertices}, E={self.n_edges}, "
                f"F={self.n_faces}, genus={self.genus()})")


def _check_bijection(images: Sequence[int], label: str) -> None:
    n = len(images)
    seen = [False] * n
    for x in images:
        if not isinstance(x, int) or x < 0 or x >= n:
            raise MalformedInput(f"{label} image {x} outside dart range")
        if seen[x]:
            raise MalformedInput(f"{label} repeats image {x + 1}")
        seen[x] = True


def _index_by_dart(n: int, items) -> tuple[int, ...]:
    out = [-1] * n
    for item in items:
        for d in item.darts:
            out[d] = item.index
    return tuple(out)


def from_rotation_system(sigma_cycles: Iterable[Sequence[int]],
                         alpha_pairs: Iterable[Sequence[int]],
                         name: str = "map") -> MapM:
    """Build a map from 1-based rotation cycles and edge pairs.

    Cycles and pairs together must cover each dart 1..n exactly once per
    permutation.
    """
    sigma_cycles = [tuple(c) for c in sigma_cycles]
    alpha_pairs = [tuple(p) for p in alpha_pairs]
    n = sum(len(c) for c in sigma_cycles)
    if sum(len(p) for p in alpha_pairs) != n:
        raise MalformedInput("sigma cycles and alpha pairs cover different dart counts")
    for c in sigma_cycles:
        if len(c) != 3:
            raise NotTrivalent(f"rotation cycle {c} has length {len(c)}, not 3")
    for p in alpha_pairs:
        if len(p) != 2:
            raise NotInvolution(f"edge pair {p} has length {len(p)}, not 2")
        if p[0] == p[1]:
            raise NotInvolution(f"edge pair {p} repeats a dart")
    sigma = _images_from_cycles(n, sigma_cycles, "sigma")
    alpha = _images_from_cycles(n, alpha_pairs, "alpha")
    return MapM(sigma, alpha, name=name)


def _images_from_cycles(n: int, cycles: Sequence[Sequence[int]], label: str) -> list[int]:
    images = [-1] * n
    seen = [False] * n
    for cyc in cycles:
        for x in cyc:
            if not isinstance(x, int) or x < 1 or x > n:
                raise MalformedInput(f"{label} dart {x} outside 1..{n}")
            if seen[x - 1]:
                raise MalformedInput(f"{label} repeats dart {x}")
            seen[x - 1] = True
        for a, b in zip(cyc, cyc[1:]):
            images[a - 1] = b - 1
        images[cyc[-1] - 1] = cyc[0] - 1
    if any(v < 0 for v in images):
        missing = [i + 1 for i, v in enumerate(images) if v < 0]
        raise MalformedInput(f"{label} misses darts {missing[:8]}")
    return images


def relabeled(m: MapM, images: Sequence[int], name: str | None = None) -> MapM:
    """The same map with dart ``d`` renamed to ``images[d]`` (a 0-based bijection)."""
    n = m.n_darts
    if sorted(images) != list(range(n)):
        raise MalformedInput("relabeling is not a bijection of the darts")
    sigma = [0] * n
    alpha = [0] * n
    for d in range(n):
        sigma[images[d]] = images[m.sigma[d]]
        alpha[images[d]] = images[m.alpha[d]]
    return MapM(sigma, alpha, name=name or m.name)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def from_face_cycles(face_cycles: Sequence[Sequence[int]], name: str = "map") -> MapM:
    """Build a map of a simple graph from consistently oriented face walks.

    Each face is a cyclic vertex sequence; every directed edge ``(u, v)``
    must appear in exactly one face.  Darts are the directed edges, numbered
    in order of appearance.
    """
    dart_id: dict[tuple[int, int], int] = {}
    darts: list[tuple[int, int]] = []
    for cyc in face_cycles:
        if len(cyc) < 2:
            raise MalformedInput(f"face walk {cyc} is too short")
        for i, u in enumerate(cyc):
            v = cyc[(i + 1) % len(cyc)]
            if u == v:
                raise MalformedInput(f"face walk {cyc} has a loop at {u}")
            if (u, v) in dart_id:
                raise MalformedInput(f"directed edge {(u, v)} appears in two faces")
            dart_id[(u, v)] = len(darts)
            darts.append((u, v))
    n = len(darts)
    alpha = [-1] * n
    for (u, v), d in dart_id.items():
        rev = dart_id.get((v, u))
        if rev is None:
            raise MalformedInput(f"edge {(u, v)} has no reverse; faces do not close up")
        alpha[d] = rev
    phi = [-1] * n
    for cyc in face_cycles:
        k = len(cyc)
        for i in range(k):
            d = dart_id[(cyc[i], cyc[(i + 1) % k])]
            phi[d] = dart_id[(cyc[(i + 1) % k], cyc[(i + 2) % k])]
    # phi = sigma . alpha and alpha is an involution, so sigma = phi . alpha
    sigma = [phi[alpha[d]] for d in range(n)]
    return MapM(sigma, alpha, name=name)


def theta() -> MapM:
    """Two vertices joined by three parallel edges, on the sphere.

    The three faces are digons.  The rotation at the second vertex runs
    opposite to the first; equal rotations would close up into the
    genus-1 embedding instead.
    """
    return from_rotation_system(
        [(1, 2, 3), (4, 6, 5)], [(1, 4), (2, 5), (3, 6)], name="theta")


def prism(n: int) -> MapM:
    """The n-gonal prism: two n-gon faces joined by a band of n squares."""
    if n < 3:
        raise ParameterOutOfRange(f"prism needs n >= 3, got {n}")
    top = list(range(n))
    bottom = list(range(2 * n - 1, n - 1, -1))
    squares = [((i + 1) % n, i, n + i, n + (i + 1) % n) for i in range(n)]
    return from_face_cycles([top, *squares, bottom], name=f"prism{n}")


def platonic(which: str) -> MapM:
    """One of the 3-valent platonic maps: tetrahedron, cube, dodecahedron."""
    if which == "tetrahedron":
        return from_face_cycles(
            [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)], name="tetrahedron")
    if which == "cube":
        m = prism(4)
        return MapM(m.sigma, m.alpha, name="cube")
    if which == "dodecahedron":
        def u(i):
            return 5 + i % 5

        def l(i):
            return 10 + i % 5

        def b(i):
            return 15 + i % 5

        faces: list[tuple[int, ...]] = [(0, 1, 2, 3, 4)]
        faces += [((i + 1) % 5, i, u(i), l(i), u(i + 1)) for i in range(5)]
        faces += [(b(i), b(i + 1), l(i + 1), u(i + 1), l(i)) for i in range(5)]
        faces.append((19, 18, 17, 16, 15))
        return from_face_cycles(faces, name="dodecahedron")
    raise ParameterOutOfRange(f"unknown platonic 3-valent map {which!r}")


def truncate(m: MapM) -> MapM:
    """Cut every vertex into a small triangle.

    Each dart ``d`` of ``m`` becomes a vertex carrying three darts: the stub
    of the surviving old edge (``3d``), and the two triangle darts toward the
    next (``3d+1``) and previous (``3d+2``) dart around the old vertex.  Old
    p-gonal faces become 2p-gons and every old vertex contributes a triangle.
    """
    n = m.n_darts
    sigma = [0] * (3 * n)
    alpha = [0] * (3 * n)
    for d in range(n):
        sigma[3 * d] = 3 * d + 1
        sigma[3 * d + 1] = 3 * d + 2
        sigma[3 * d + 2] = 3 * d
        alpha[3 * d] = 3 * m.alpha[d]
        alpha[3 * d + 1] = 3 * m.sigma[d] + 2
        alpha[3 * m.sigma[d] + 2] = 3 * d + 1
    return MapM(sigma, alpha, name=f"truncated_{m.name}")


def hex_torus(m: int, n: int) -> MapM:
    """An m-by-n honeycomb on the torus: all faces hexagonal, genus 1.

    Vertices come in two classes A(i,j) and B(i,j); A(i,j) is joined to
    B(i,j), B(i-1,j) and B(i,j-1), indices mod m and n.
    """
    if m < 2 or n < 2:
        raise ParameterOutOfRange(f"hex_torus needs m, n >= 2, got {m}, {n}")

    def cell(i: int, j: int) -> int:
        return (i % m) * n + (j % n)

    nd = 6 * m * n
    sigma = [0] * nd
    alpha = [0] * nd
    for i in range(m):
        for j in range(n):
            c = 6 * cell(i, j)
            # A(i,j) darts: c+0 -> B(i,j), c+1 -> B(i-1,j), c+2 -> B(i,j-1)
            sigma[c + 0] = c + 1
            sigma[c + 1] = c + 2
            sigma[c + 2] = c + 0
            # B(i,j) darts: c+3 -> A(i,j), c+4 -> A(i+1,j), c+5 -> A(i,j+1);
            # same spin as at A (counterclockwise in the plane honeycomb)
            sigma[c + 3] = c + 4
            sigma[c + 4] = c + 5
            sigma[c + 5] = c + 3
            alpha[c + 0] = c + 3
            alpha[c + 3] = c + 0
            alpha[c + 1] = 6 * cell(i - 1, j) + 4
            alpha[6 * cell(i - 1, j) + 4] = c + 1
            alpha[c + 2] = 6 * cell(i, j - 1) + 5
            alpha[6 * cell(i, j - 1) + 5] = c + 2
    return MapM(sigma, alpha, name=f"hex_torus_{m}x{n}")


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

_FIXED_CATALOG: dict[str, Callable[[], MapM]] = {
    "theta": theta,
    "tetrahedron": lambda: platonic("tetrahedron"),
    "cube": lambda: platonic("cube"),
    "dodecahedron": lambda: platonic("dodecahedron"),
    "truncated_tetrahedron": lambda: truncate(platonic("tetrahedron")),
    "truncated_cube": lambda: truncate(platonic("cube")),
}

_PRISM_RE = re.compile(r"^prism(\d+)$")
_HEX_RE = re.compile(r"^hex_torus_(\d+)x(\d+)$")


def catalog_map(name: str) -> MapM:
    """Resolve a catalog name (``cube``, ``prism7``, ``hex_torus_2x3``, ...)."""
    if name in _FIXED_CATALOG:
        return _FIXED_CATALOG[name]()
    mt = _PRISM_RE.match(name)
    if mt:
        return prism(int(mt.group(1)))
    mt = _HEX_RE.match(name)
    if mt:
        return hex_torus(int(mt.group(1)), int(mt.group(2)))
    raise ParameterOutOfRange(f"unknown catalog map {name!r}")


def suite_names() -> list[str]:
    """The default verification suite: plane maps first, then the torus grid."""
    return ([f"prism{k}" for k in range(3, 11)]
            + ["tetrahedron", "cube", "dodecahedron",
               "truncated_tetrahedron", "truncated_cube",
               "hex_torus_2x3"])


def catalog_names() -> list[str]:
    """All stock maps, including the digon-faced theta map."""
    return ["theta"] + suite_names()


# ---------------------------------------------------------------------------
# File format: JSON with exactly the keys name/darts/sigma/alpha (1-based)
# ---------------------------------------------------------------------------

def to_document(m: MapM) -> dict:
    return {
        "name": m.name,
        "darts": m.n_darts,
        "sigma": [[d + 1 for d in v.darts] for v in m.vertices],
        "alpha": [[d + 1 for d in e.darts] for e in m.edges],
    }


def from_document(doc: object) -> MapM:
    if not isinstance(doc, dict):
        raise MalformedInput("map document must be an object")
    unknown = set(doc) - set(MAP_FILE_KEYS)
    if unknown:
        raise MalformedInput(f"unknown map file keys: {sorted(unknown)}")
    missing = set(MAP_FILE_KEYS) - set(doc)
    if missing:
        raise MalformedInput(f"missing map file keys: {sorted(missing)}")
    name, darts = doc["name"], doc["darts"]
    if not isinstance(name, str):
        raise MalformedInput("name must be a string")
    if not isinstance(darts, int) or darts <= 0:
        raise MalformedInput("darts must be a positive integer")
    if darts % 2 != 0:
        raise MalformedInput(f"dart count {darts} is odd")
    for key in ("sigma", "alpha"):
        if not (isinstance(doc[key], list)
                and all(isinstance(c, list) and all(isinstance(x, int) for x in c)
                        for c in doc[key])):
            raise MalformedInput(f"{key} must be a list of integer lists")
    m = from_rotation_system(doc["sigma"], doc["alpha"], name=name)
    if m.n_darts != darts:
        raise MalformedInput(
            f"darts field says {darts} but cycles cover {m.n_darts}")
    return m


def save(m: MapM, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(to_document(m), fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise IoError(f"cannot write map file {path}: {exc}") from exc


def load(path: str) -> MapM:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read map file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"map file {path} is not valid JSON: {exc}") from exc
    return from_document(doc)
