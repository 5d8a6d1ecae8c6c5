"""Verify the structure of the puzzle group along its action chain.

For a map M the defining action on corners and side edges maps onto the
corner+edge action, then the corner action, then the vertex action.  The
three kernels H1, H2, H3 and the vertex image are computed exactly and
checked against the conjectured description:

  (i)   H1 is elementary abelian of order 2^(E-1),
  (ii)  H2 is the alternating group on the E edges,
  (iii) H3 is elementary abelian of order 3^(V-1) with zero twist residue,
  (iv)  the vertex image is alternating on V vertices when every face has
        odd size, symmetric otherwise,

together with the always-provable bounds (each kernel order divides its
conjectured value; vertex generators are even whenever all faces are odd).
Maps on positive-genus surfaces are verified the same way but flagged, since
the plane case is the conjecture's home ground.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded, OutOfConjectureScope, RubikMapError
from .maps import MapM
from .perm import Permutation
from .presentation import RubikPresentation, rubik_generators
from . import shift as shift_mod

REPORT_COLUMNS = ("name", "V", "E", "F", "all_odd", "order", "h1", "h2", "h3",
                  "vertex_image", "predicted", "pass", "seconds")


@dataclass(frozen=True)
class ChainOrders:
    group: int
    corner_edge: int
    corner: int
    vertex: int

    @property
    def h1(self) -> int:
        return self.group // self.corner_edge

    @property
    def h2(self) -> int:
        return self.corner_edge // self.corner

    @property
    def h3(self) -> int:
        return self.corner // self.vertex


@dataclass
class ConjectureReport:
    name: str
    vertices: int
    edges: int
    faces: int
    face_sizes: tuple[int, ...]
    all_odd: bool
    genus: int
    orders: ChainOrders | None = None
    clauses: dict[str, bool] = field(default_factory=dict)
    bounds_ok: bool = False
    predicted: int | None = None
    passed: bool = False
    seconds: float = 0.0
    error: str | None = None

    def row(self) -> dict:
        o = self.orders
        return {
            "name": self.name,
            "V": self.vertices,
            "E": self.edges,
            "F": self.faces,
            "all_odd": self.all_odd,
            "order": o.group if o else None,
            "h1": o.h1 if o else None,
            "h2": o.h2 if o else None,
            "h3": o.h3 if o else None,
            "vertex_image": o.vertex if o else None,
            "predicted": self.predicted,
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
        }


def predicted_order(m: MapM) -> int:
    """The conjectured group order 2^(E-1) * E!/2 * 3^(V-1) * (V! or V!/2)."""
    if any(f.size < 3 for f in m.faces):
        raise OutOfConjectureScope(
            f"{m.name} has a face of size < 3; the conjecture does not apply")
    v, e = m.n_vertices, m.n_edges
    vertex_part = math.factorial(v) // 2 if m.all_faces_odd() else math.factorial(v)
    return 2 ** (e - 1) * (math.factorial(e) // 2) * 3 ** (v - 1) * vertex_part


class _Budget:
    def __init__(self, seconds: float | None):
        self.seconds = seconds
        self.start = time.monotonic()

    def check(self, stage: str) -> None:
        if self.seconds is None:
            return
        elapsed = time.monotonic() - self.start
        if elapsed >= self.seconds:
            raise BudgetExceeded(
                f"budget of {self.seconds}s exhausted before {stage} "
                f"({elapsed:.1f}s elapsed)")


def _edge_part(g: Permutation, n_corners: int, n_edges: int) -> Permutation:
    return Permutation([int(g.images[n_corners + e]) - n_corners
                        for e in range(n_edges)])


def verify(m: MapM, seed: int = 0, budget_seconds: float | None = None,
           presentation: RubikPresentation | None = None) -> ConjectureReport:
    """Compute the full chain for one map and check every clause.

    Raises OutOfConjectureScope for maps with digon faces and BudgetExceeded
    when the time cap runs out; within the suite these are caught per map.
    """
    report = ConjectureReport(
        name=m.name, vertices=m.n_vertices, edges=m.n_edges, faces=m.n_faces,
        face_sizes=m.face_sizes(), all_odd=m.all_faces_odd(), genus=m.genus())
    budget = _Budget(budget_seconds)
    started = time.monotonic()

    budget.check("scope check")
    report.predicted = predicted_order(m)  # also enforces face sizes >= 3
    p = presentation or rubik_generators(m, seed=seed)
    group = p.group

    budget.check("order computation")
    order = group.order()

    pi1 = p.corner_edge_projection()
    pi2 = p.corner_from_corner_edge_projection()
    pi3 = p.vertex_from_corner_projection()

    budget.check("corner+edge action")
    g_ce = group.action_image(pi1)
    budget.check("corner action")
    g_c = g_ce.action_image(pi2)
    budget.check("vertex action")
    g_v = g_c.action_image(pi3)
    orders = ChainOrders(order, g_ce.order(), g_c.order(), g_v.order())

    if (order % orders.corner_edge or orders.corner_edge % orders.corner
            or orders.corner % orders.vertex):
        raise RubikMapError("chain orders do not divide; engine inconsistency")
    report.orders = orders

    budget.check("kernel H1")
    h1 = group.kernel(pi1)
    budget.check("kernel H2")
    h2 = g_ce.kernel(pi2)
    budget.check("kernel H3")
    h3 = g_c.kernel(pi3)
    if h1.order() != orders.h1 or h2.order() != orders.h2 or h3.order() != orders.h3:
        raise RubikMapError("kernel orders disagree with order quotients")

    v, e = m.n_vertices, m.n_edges
    n_corners = p.n_corners

    report.clauses["h1_elementary_2"] = (
        orders.h1 == 2 ** (e - 1) and h1.is_abelian() and h1.has_exponent(2))
    report.clauses["h2_alternating_edges"] = (
        orders.h2 == math.factorial(e) // 2
        and all(_edge_part(g, n_corners, e).sign() == 1 for g in h2.generators))
    rng = random.Random(seed + 1)
    h3_sample_ok = all(
        shift_mod.sh(p, h3.random_element(rng)) == 0 for _ in range(10))
    report.clauses["h3_elementary_3"] = (
        orders.h3 == 3 ** (v - 1) and h3.is_abelian() and h3.has_exponent(3)
        and h3_sample_ok)
    expected_vertex = math.factorial(v) // 2 if m.all_faces_odd() else math.factorial(v)
    report.clauses["vertex_image_full"] = orders.vertex == expected_vertex

    bounds = (2 ** (e - 1) % orders.h1 == 0
              and (math.factorial(e) // 2) % orders.h2 == 0
              and 3 ** (v - 1) % orders.h3 == 0)
    if m.all_faces_odd():
        bounds = bounds and all(g.sign() == 1 for g in g_v.generators)
    report.bounds_ok = bounds

    report.passed = bounds and all(report.clauses.values())
    if report.passed and order != report.predicted:
        raise RubikMapError("clauses passed but total order misses prediction")
    report.seconds = time.monotonic() - started
    return report


def run_suite(maps_to_check: list[MapM], seed: int = 0,
              budget_seconds: float | None = None) -> list[ConjectureReport]:
    """Verify a catalog of maps; per-map failures are recorded, never fatal."""
    reports = []
    for m in maps_to_check:
        try:
            reports.append(verify(m, seed=seed, budget_seconds=budget_seconds))
        except RubikMapError as exc:
            failed = ConjectureReport(
                name=m.name, vertices=m.n_vertices, edges=m.n_edges,
                faces=m.n_faces, face_sizes=m.face_sizes(),
                all_odd=m.all_faces_odd(), genus=m.genus(),
                error=f"{type(exc).__name__}: {exc}")
            reports.append(failed)
    return reports
