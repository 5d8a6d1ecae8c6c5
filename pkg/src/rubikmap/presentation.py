"""The puzzle group of a map: side movements acting on corners and side edges.

Every dart represents exactly one corner (its face paired with its vertex)
and one side edge (its face paired with its edge), so one face-major ranking
of the darts numbers both.  Points 0..3V-1 are corners, 3V..6V-1 side edges,
in canonical face order with each boundary walked from its minimal dart.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FaceNotInMap, IoError
from .maps import Face, MapM
from .groups import PermutationGroup, Projection
from .perm import Permutation, format_cycles


@dataclass(frozen=True)
class Corner:
    face: int
    vertex: int
    dart: int
    point: int


@dataclass(frozen=True)
class SideEdge:
    face: int
    edge: int
    dart: int
    point: int


class RubikPresentation:
    """Canonical numbering, side-movement generators and the action maps."""

    def __init__(self, m: MapM, seed: int = 0):
        self.map = m
        nd = m.n_darts
        rank = [-1] * nd
        dart_of_rank = []
        for face in m.faces:
            for d in face.darts:
                rank[d] = len(dart_of_rank)
                dart_of_rank.append(d)
        self.corner_rank = tuple(rank)
        self.dart_of_rank = tuple(dart_of_rank)
        self.n_corners = nd
        self.n_points = 2 * nd

        self.corners = tuple(
            Corner(m.face_of[d], m.vertex_of[d], d, rank[d]) for d in range(nd))
        self.side_edges = tuple(
            SideEdge(m.face_of[d], m.edge_of[d], d, nd + rank[d]) for d in range(nd))

        self.face_labels = tuple(f"F{f.index + 1}" for f in m.faces)
        self.generators = tuple(side_movement(m, f, rank) for f in m.faces)
        self.group = PermutationGroup(self.generators, seed=seed)

    # --- point maps of the action chain ---

    def corner_sideedge_projection(self) -> Projection:
        """The defining action; the identity point map."""
        return Projection.identity(self.n_points)

    def corner_edge_projection(self) -> Projection:
        """Forget which side of each edge a side-edge sticker sits on."""
        nd = self.n_corners
        pm = list(range(nd)) + [nd + self.map.edge_of[d] for d in self.dart_of_rank]
        return Projection(pm, nd + self.map.n_edges, name="corner+side-edge -> corner+edge")

    def corner_from_corner_edge_projection(self) -> Projection:
        nd = self.n_corners
        pm = list(range(nd)) + [-1] * self.map.n_edges
        return Projection(pm, nd, name="corner+edge -> corner")

    def vertex_from_corner_projection(self) -> Projection:
        pm = [self.map.vertex_of[d] for d in self.dart_of_rank]
        return Projection(pm, self.map.n_vertices, name="corner -> vertex")

    def corner_projection(self) -> Projection:
        """Corner restriction of the defining action."""
        pm = list(range(self.n_corners)) + [-1] * self.n_corners
        return Projection(pm, self.n_corners, name="corner+side-edge -> corner")

    def vertex_projection(self) -> Projection:
        pm = ([self.map.vertex_of[d] for d in self.dart_of_rank]
              + [-1] * self.n_corners)
        return Projection(pm, self.map.n_vertices, name="corner+side-edge -> vertex")

    def edge_projection(self) -> Projection:
        pm = [-1] * self.n_corners + [self.map.edge_of[d] for d in self.dart_of_rank]
        return Projection(pm, self.map.n_edges, name="corner+side-edge -> edge")

    # --- conveniences ---

    def face_index(self, label: str) -> int:
        try:
            return self.face_labels.index(label)
        except ValueError:
            raise FaceNotInMap(f"no face labeled {label!r}") from None

    def home_face(self, point: int) -> int:
        """The face a sticker position belongs to in the solved state."""
        return self.map.face_of[self.dart_of_rank[point % self.n_corners]]

    def __repr__(self) -> str:
        return (f"RubikPresentation({self.map.name}: {len(self.generators)} "
                f"generators on {self.n_points} points)")


def side_movement(m: MapM, face: Face | int, _rank=None) -> Permutation:
    """One forward step of the layer around ``face``.

    Corners advance along the boundary; the other two corners at each
    boundary vertex follow with their rotational offset (in sigma order)
    unchanged; the face's own side edges and the opposite-side stickers of
    its edges advance in step.  Everything else is fixed.
    """
    if isinstance(face, int):
        if not 0 <= face < m.n_faces:
            raise FaceNotInMap(f"face index {face} out of range for {m.name}")
        face = m.faces[face]
    elif face not in m.faces:
        raise FaceNotInMap(f"face {face} is not a face of {m.name}")
    if _rank is None:
        _rank = [-1] * m.n_darts
        pos = 0
        for f in m.faces:
            for d in f.darts:
                _rank[d] = pos
                pos += 1
    nd = m.n_darts
    img = np.arange(2 * nd, dtype=np.int32)
    boundary = face.darts
    p = len(boundary)
    for i, d in enumerate(boundary):
        d2 = boundary[(i + 1) % p]
        a, b = d, d2
        for _ in range(3):
            img[_rank[a]] = _rank[b]
            a, b = m.sigma[a], m.sigma[b]
        img[nd + _rank[d]] = nd + _rank[d2]
        img[nd + _rank[m.alpha[d]]] = nd + _rank[m.alpha[d2]]
    return Permutation(img)


def rubik_generators(m: MapM, seed: int = 0) -> RubikPresentation:
    """The full presentation: one side movement per face, canonical numbering."""
    return RubikPresentation(m, seed=seed)


GAP_SCRIPT_HEADER = "# side-movement generators, one per face in canonical order; 1-based points"


def export_script_text(p: RubikPresentation) -> str:
    """A GAP-compatible script declaring the group; byte-deterministic."""
    safe = "".join(ch if ch.isalnum() else "_" for ch in p.map.name)
    lines = [GAP_SCRIPT_HEADER,
             f"# map: {p.map.name} (V={p.map.n_vertices}, E={p.map.n_edges}, "
             f"F={p.map.n_faces})",
             f"Rubik_{safe} := Group(["]
    cycles = [format_cycles(g) for g in p.generators]
    lines.extend(c + ("," if i < len(cycles) - 1 else "")
                 for i, c in enumerate(cycles))
    lines.append("]);")
    return "\n".join(lines) + "\n"


def export_script(p: RubikPresentation, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(export_script_text(p))
    except OSError as exc:
        raise IoError(f"cannot write script {path}: {exc}") from exc
