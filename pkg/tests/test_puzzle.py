import pytest

from rubikmap import maps
from rubikmap.errors import FaceNotInMap, MalformedInput, NotAMember
from rubikmap.puzzle import PuzzleState, format_word, new_state
from rubikmap.perm import Word


def test_solved_initially(presentation_of):
    state = PuzzleState(presentation_of("prism3"))
    assert state.is_solved()
    assert state.history == Word()
    assert state.solve() == Word()


def test_full_turn_restores(presentation_of):
    state = PuzzleState(presentation_of("prism3"))
    for face in state.presentation.map.faces:
        for _ in range(face.size):
            state.apply_move(face.index, 1)
        assert state.is_solved()


def test_sticker_multiset_invariant(presentation_of):
    state = PuzzleState(presentation_of("cube"))
    before = sorted(state.stickers)
    state.scramble(seed=5, moves=25)
    assert sorted(state.stickers) == before
    assert not state.is_solved()


def test_history_reproduces_state(presentation_of):
    state = PuzzleState(presentation_of("prism3"))
    state.scramble(seed=1, moves=12)
    state.apply_move(0, 2)
    replay = PuzzleState(state.presentation)
    replay.apply_word(state.history)
    assert replay.stickers == state.stickers


def test_scramble_deterministic(presentation_of):
    a = PuzzleState(presentation_of("prism3"))
    b = PuzzleState(presentation_of("prism3"))
    assert a.scramble(seed=42, moves=20) == b.scramble(seed=42, moves=20)
    assert a.stickers == b.stickers


def test_solve_round_trip(presentation_of):
    state = PuzzleState(presentation_of("cube"))
    state.scramble(seed=7, moves=30)
    solution = state.solve()
    assert not state.is_solved()  # solve leaves the state untouched
    state.apply_word(solution)
    assert state.is_solved()


def test_reset(presentation_of):
    state = PuzzleState(presentation_of("prism3"))
    state.scramble(seed=3, moves=9)
    state.reset()
    assert state.is_solved()
    assert state.history == Word()


def test_move_validation(presentation_of):
    state = PuzzleState(presentation_of("prism3"))
    with pytest.raises(FaceNotInMap):
        state.apply_move(99, 1)
    state.apply_move(0, 0)  # a zero-turn is a no-op
    assert state.is_solved()


def test_doc_round_trip(presentation_of):
    state = PuzzleState(presentation_of("prism3"))
    state.scramble(seed=11, moves=8)
    doc = state.to_doc()
    restored = PuzzleState.from_doc(doc, presentation=state.presentation)
    assert restored.stickers == state.stickers
    assert restored.history == state.history


def test_corrupt_state_detected(presentation_of):
    state = PuzzleState(presentation_of("prism3"))
    state.scramble(seed=11, moves=8)
    doc = state.to_doc()
    corners = doc["stickers"]["corners"]
    corners[0], corners[1] = corners[1], corners[0]
    if corners[0] != corners[1]:
        with pytest.raises(NotAMember):
            PuzzleState.from_doc(doc, presentation=state.presentation)


def test_malformed_doc():
    with pytest.raises(MalformedInput):
        PuzzleState.from_doc({"map": {}, "history": []})


def test_format_word(presentation_of):
    p = presentation_of("prism3")
    assert format_word(p, Word()) == "(empty)"
    assert format_word(p, Word([(0, 1), (2, -2)])) == "F1 F3^-2"


def test_new_state_builds_from_map():
    state = new_state(maps.theta())
    state.apply_move(0, 1)
    assert not state.is_solved()
    state.apply_move(0, 1)
    assert state.is_solved()
