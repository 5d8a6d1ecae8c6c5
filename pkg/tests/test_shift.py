import random

import pytest

from rubikmap import shift
from rubikmap.errors import DifferentVertices, NotOrientationPreserving
from rubikmap.perm import Permutation, Word

SMALL = ["theta", "prism3", "tetrahedron", "cube", "hex_torus_2x2"]


def test_sh_pair_values(presentation_of):
    p = presentation_of("prism3")
    v = p.map.vertices[0]
    c1, c2, c3 = (p.corner_rank[d] for d in v.darts)
    assert shift.sh_pair(p, c1, c1) == 0
    assert shift.sh_pair(p, c1, c2) == 1
    assert shift.sh_pair(p, c1, c3) == 2


def test_sh_pair_requires_same_vertex(presentation_of):
    p = presentation_of("prism3")
    c_at_v0 = p.corner_rank[p.map.vertices[0].darts[0]]
    c_at_v1 = p.corner_rank[p.map.vertices[1].darts[0]]
    with pytest.raises(DifferentVertices):
        shift.sh_pair(p, c_at_v0, c_at_v1)


def test_sh_pair_cocycle(presentation_of):
    p = presentation_of("cube")
    rng = random.Random(5)
    for _ in range(30):
        v = p.map.vertices[rng.randrange(p.map.n_vertices)]
        a, b, c = (p.corner_rank[rng.choice(v.darts)] for _ in range(3))
        assert shift.sh_pair(p, a, c) == (
            shift.sh_pair(p, a, b) + shift.sh_pair(p, b, c)) % 3


@pytest.mark.parametrize("name", SMALL)
def test_generators_are_orientation_preserving(name, presentation_of):
    p = presentation_of(name)
    assert shift.is_ormap(p, Permutation.identity(p.n_corners))
    for g in p.generators:
        assert shift.is_ormap(p, shift.corner_action(p, g))


def test_transposition_is_not_orientation_preserving(presentation_of):
    p = presentation_of("prism3")
    c1, c2 = (p.corner_rank[d] for d in p.map.vertices[0].darts[:2])
    swap = Permutation.from_cycles(p.n_corners, [(c1 + 1, c2 + 1)])
    assert not shift.is_ormap(p, swap)
    with pytest.raises(NotOrientationPreserving):
        shift.sh(p, swap)


@pytest.mark.parametrize("name", SMALL)
def test_shift_vanishes_on_generators_and_words(name, presentation_of):
    p = presentation_of(name)
    assert shift.sh(p, Permutation.identity(p.n_corners)) == 0
    rng = random.Random(23)
    for g in p.generators:
        assert shift.sh(p, shift.corner_action(p, g)) == 0
    for _ in range(25):
        w = Word((rng.randrange(len(p.generators)), rng.choice((-1, 1)))
                 for _ in range(10))
        assert shift.sh(p, shift.corner_action(p, w.evaluate(p.generators))) == 0


@pytest.mark.parametrize("name", SMALL)
def test_single_vertex_twist(name, presentation_of):
    p = presentation_of(name)
    tw = shift.single_vertex_twist(p, 0)
    assert (tw ** 3).is_identity()
    assert shift.is_ormap(p, tw)
    assert shift.sh(p, tw) == 1
    assert shift.sh(p, tw ** 2) == 2


def test_additivity(presentation_of):
    p = presentation_of("cube")
    rng = random.Random(9)
    pool = [shift.corner_action(p, g) for g in p.generators]
    pool += [shift.single_vertex_twist(p, v) for v in range(p.map.n_vertices)]
    for _ in range(25):
        f = rng.choice(pool) * rng.choice(pool)
        g = rng.choice(pool) * rng.choice(pool)
        assert shift.sh(p, f * g) == (shift.sh(p, f) + shift.sh(p, g)) % 3


def test_selection_independence(presentation_of):
    p = presentation_of("prism3")
    rng = random.Random(4)
    tw = shift.single_vertex_twist(p, 2)
    f = tw * shift.corner_action(p, p.generators[1])
    baseline = shift.sh(p, f)
    for _ in range(20):
        selection = [p.corner_rank[rng.choice(v.darts)] for v in p.map.vertices]
        assert shift.sh(p, f, selection) == baseline


def test_selection_validated(presentation_of):
    p = presentation_of("prism3")
    bad = [p.corner_rank[p.map.vertices[1].darts[0]]] * p.map.n_vertices
    with pytest.raises(DifferentVertices):
        shift.sh(p, Permutation.identity(p.n_corners), bad)


def test_twist_is_not_reachable(presentation_of):
    p = presentation_of("prism3")
    corner_group = p.group.action_image(p.corner_projection())
    assert not corner_group.contains(shift.single_vertex_twist(p, 0))
