"""The mod-3 twist invariant on corner permutations of an oriented map.

Each vertex carries three corners; the rotation ``r`` advances every such
triple one step in sigma (direct-orientation) order.  A corner permutation
is orientation-preserving exactly when it commutes with ``r``.  For those,
summing the per-vertex rotational offset against any reference selection of
corners gives a residue mod 3 that is selection-independent, additive, and
zero on the whole puzzle group, yet nonzero on a bare single-vertex twist:
the obstruction that keeps one twisted corner unsolvable.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DifferentVertices, NotOrientationPreserving
from .perm import Permutation
from .presentation import RubikPresentation


def rotation(p: RubikPresentation) -> Permutation:
    """Advance every corner one step around its vertex, in sigma order."""
    m = p.map
    img = np.empty(p.n_corners, dtype=np.int32)
    for d in range(m.n_darts):
        img[p.corner_rank[d]] = p.corner_rank[m.sigma[d]]
    return Permutation(img)


def corner_vertex(p: RubikPresentation, corner: int) -> int:
    return p.map.vertex_of[p.dart_of_rank[corner]]


def sh_pair(p: RubikPresentation, c: int, c_prime: int) -> int:
    """How many direct rotations carry corner ``c`` onto ``c_prime`` (0, 1 or 2)."""
    if corner_vertex(p, c) != corner_vertex(p, c_prime):
        raise DifferentVertices(
            f"corners {c} and {c_prime} sit at different vertices")
    r = rotation(p)
    x = c
    for k in range(3):
        if x == c_prime:
            return k
        x = r(x)
    raise AssertionError("rotation has order 3 on a triple")  # pragma: no cover


def is_ormap(p: RubikPresentation, f: Permutation) -> bool:
    """Whether ``f`` maps vertex triples to vertex triples preserving their
    cyclic order; equivalently, whether it commutes with the triple rotation."""
    r = rotation(p)
    if f.domain_size != r.domain_size:
        return False
    return f * r == r * f


def single_vertex_twist(p: RubikPresentation, vertex: int) -> Permutation:
    """The 3-cycle advancing the corners of one vertex, fixing everything else."""
    m = p.map
    img = np.arange(p.n_corners, dtype=np.int32)
    for d in m.vertices[vertex].darts:
        img[p.corner_rank[d]] = p.corner_rank[m.sigma[d]]
    return Permutation(img)


def canonical_selection(p: RubikPresentation) -> tuple[int, ...]:
    """One corner per vertex: the corner of the vertex's minimal dart."""
    return tuple(p.corner_rank[v.darts[0]] for v in p.map.vertices)


def sh(p: RubikPresentation, f: Permutation,
          selection: Sequence[int] | None = None) -> int:
    """The twist residue of an orientation-preserving corner permutation.

    Sums, over all vertices v, the rotational offset from the reference
    corner at the image vertex to the image of the reference corner at v.
    The result does not depend on the selection; the default picks the
    minimal-dart corner at every vertex.
    """
    if not is_ormap(p, f):
        raise NotOrientationPreserving(
            "permutation does not preserve oriented vertex triples")
    if selection is None:
        selection = canonical_selection(p)
    else:
        selection = tuple(selection)
        for v, c in enumerate(selection):
            if corner_vertex(p, c) != v:
                raise DifferentVertices(
                    f"selected corner {c} is not at vertex {v}")
    r = rotation(p)
    total = 0
    for v in range(p.map.n_vertices):
        image_corner = f(selection[v])
        image_vertex = corner_vertex(p, image_corner)
        reference = selection[image_vertex]
        x = reference
        for k in range(3):
            if x == image_corner:
                total += k
                break
            x = r(x)
    return total % 3


def corner_action(p: RubikPresentation, g: Permutation) -> Permutation:
    """Restrict a full-domain puzzle element to its corner action."""
    return p.corner_projection().induce(g)
