"""Playable puzzle state over a presentation: stickers, history, solving.

A sticker sits at each corner and side-edge point and shows the label of its
home face.  Applying a move permutes positions: the sticker at x moves to
g(x).  The history word always reproduces the current state from solved, so
solving is factoring the cumulative position permutation and inverting.
"""

from __future__ import annotations

import random

from .errors import FaceNotInMap, MalformedInput, NotAMember
from .maps import MapM, from_document, to_document
from .perm import Permutation, Word
from .presentation import RubikPresentation, rubik_generators


class PuzzleState:
    def __init__(self, presentation: RubikPresentation):
        self.presentation = presentation
        self.solved_stickers = tuple(
            presentation.home_face(x) for x in range(presentation.n_points))
        self.stickers: list[int] = list(self.solved_stickers)
        self.history = Word()
        self._position = Permutation.identity(presentation.n_points)

    # --- state transitions ---

    def apply_move(self, face_index: int, exponent: int) -> None:
        gens = self.presentation.generators
        if not 0 <= face_index < len(gens):
            raise FaceNotInMap(f"face index {face_index} out of range")
        if exponent == 0:
            return
        g = gens[face_index] ** exponent
        self._apply(g)
        self.history = self.history + Word([(face_index, exponent)])

    def apply_word(self, word: Word) -> None:
        for face_index, exponent in word:
            self.apply_move(face_index, exponent)

    def _apply(self, g: Permutation) -> None:
        old = self.stickers
        new = list(old)
        for x, face in enumerate(old):
            new[g(x)] = face
        self.stickers = new
        self._position = g * self._position

    def scramble(self, seed: int | None = None, moves: int = 30) -> Word:
        """A seeded random move sequence; identical seeds scramble identically."""
        rng = random.Random(seed)
        faces = self.presentation.map.faces
        syllables = []
        for _ in range(moves):
            f = rng.randrange(len(faces))
            exponent = rng.randint(1, faces[f].size - 1)
            syllables.append((f, exponent))
        word = Word(syllables)
        self.apply_word(word)
        return word

    def reset(self) -> None:
        self.stickers = list(self.solved_stickers)
        self.history = Word()
        self._position = Permutation.identity(self.presentation.n_points)

    def solve(self) -> Word:
        """A word returning the current state to solved; state is untouched."""
        factored = self.presentation.group.factor(self._position)
        return factored.inverse()

    # --- queries ---

    def is_solved(self) -> bool:
        return self.stickers == list(self.solved_stickers)

    def state_permutation(self) -> Permutation:
        return self._position

    # --- serialization ---

    def to_doc(self) -> dict:
        labels = self.presentation.face_labels
        nd = self.presentation.n_corners
        return {
            "map": to_document(self.presentation.map),
            "history": [[labels[i], e] for i, e in self.history],
            "stickers": {
                "corners": [labels[f] for f in self.stickers[:nd]],
                "side_edges": [labels[f] for f in self.stickers[nd:]],
            },
        }

    @classmethod
    def from_doc(cls, doc: dict, presentation: RubikPresentation | None = None) -> "PuzzleState":
        if not isinstance(doc, dict) or {"map", "history", "stickers"} - set(doc):
            raise MalformedInput("state document needs keys map/history/stickers")
        m = from_document(doc["map"])
        if presentation is None or presentation.map != m:
            presentation = rubik_generators(m)
        state = cls(presentation)
        labels = presentation.face_labels
        for entry in doc["history"]:
            if (not isinstance(entry, list) or len(entry) != 2
                    or entry[0] not in labels or not isinstance(entry[1], int)):
                raise MalformedInput(f"bad history entry {entry!r}")
            state.apply_move(labels.index(entry[0]), entry[1])
        claimed = doc["stickers"]
        try:
            flat = ([labels.index(x) for x in claimed["corners"]]
                    + [labels.index(x) for x in claimed["side_edges"]])
        except (TypeError, KeyError, ValueError) as exc:
            raise MalformedInput(f"bad sticker block: {exc}") from exc
        if flat != state.stickers:
            raise NotAMember(
                "corrupt state: stickers do not match the replayed history")
        return state


def format_word(presentation: RubikPresentation, word: Word) -> str:
    """Human form of a move word: face labels with nontrivial exponents."""
    if not word:
        return "(empty)"
    parts = []
    for i, e in word:
        label = presentation.face_labels[i]
        parts.append(label if e == 1 else f"{label}^{e}")
    return " ".join(parts)


def word_to_json(presentation: RubikPresentation, word: Word) -> list[list]:
    return [[presentation.face_labels[i], e] for i, e in word]


def new_state(m: MapM, seed: int = 0) -> PuzzleState:
    return PuzzleState(rubik_generators(m, seed=seed))
