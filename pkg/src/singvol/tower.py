r"""Blowups of resolution models and the invariants they preserve.

A blowup inserts one new (-1)-vertex into a graph:

* free blowup at a smooth point of ``E_i``: the new vertex meets ``E_i``
  once and ``E_i``'s self-intersection drops by one;
* satellite blowup at a node ``E_i \cap E_j``: the new vertex meets both,
  the chosen edge record loses one unit of multiplicity (and disappears at
  zero), and both self-intersections drop by one.

Total-transform pullback adds a new coefficient (``d_i``, or ``d_i + d_j``
for a satellite) and leaves the old ones alone; pushforward drops it, so
``pushforward(pullback(D)) = D``. The canonical pullback transforms as
``B' = pullback(B) - E_new``, volumes are constant along a tower, and the
nef part of the envelope pulls back on the nose. ``invariance_report``
recomputes both sides of each of these from scratch at every level and
reports any mismatch as a structured counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Union

from .envelope import nef_envelope_trace, volume
from .errors import MalformedInputError
from .graph import Edge, ExcDivisor, ResolutionGraph, Vertex
from .lattice import QVector, rat_str


@dataclass(frozen=True)
class FreeBlowup:
    """Blow up a smooth point of the curve ``vertex``."""

    vertex: str


@dataclass(frozen=True)
class SatelliteBlowup:
    """Blow up a node of ``i`` and ``j``; ``edge`` picks among parallel
    edge records joining them (in edge-list order)."""

    i: str
    j: str
    edge: int = 0


BlowupStep = Union[FreeBlowup, SatelliteBlowup]


def fresh_vertex_id(graph: ResolutionGraph) -> str:
    used = set(graph.ids)
    n = 1
    while f"b{n}" in used:
        n += 1
    return f"b{n}"


def blow_up(
    graph: ResolutionGraph, step: BlowupStep, new_id: str | None = None
) -> ResolutionGraph:
    """Apply one blowup; the new vertex is appended last."""
    nid = new_id if new_id is not None else fresh_vertex_id(graph)
    if nid in graph.ids:
        raise MalformedInputError(f"new vertex id {nid!r} already in use")
    if isinstance(step, FreeBlowup):
        i = graph.index(step.vertex)
        vertices = tuple(
            replace(v, self_int=v.self_int - 1) if k == i else v
            for k, v in enumerate(graph.vertices)
        ) + (Vertex(nid, -1, 0),)
        edges = graph.edges + (Edge(step.vertex, nid, 1),)
        return ResolutionGraph(vertices, edges)
    if isinstance(step, SatelliteBlowup):
        if step.i == step.j:
            raise MalformedInputError("satellite blowup needs two distinct vertices")
        ij_edges = [k for k, e in enumerate(graph.edges) if e.joins(step.i, step.j)]
        if not ij_edges:
            raise MalformedInputError(
                f"no edge joins {step.i!r} and {step.j!r}", reason="missing-edge"
            )
        if not 0 <= step.edge < len(ij_edges):
            raise MalformedInputError(
                f"edge index {step.edge} out of range: {len(ij_edges)} edge(s) "
                f"join {step.i!r} and {step.j!r}"
            )
        consumed = ij_edges[step.edge]
        touched = {step.i, step.j}
        vertices = tuple(
            replace(v, self_int=v.self_int - 1) if v.id in touched else v
            for v in graph.vertices
        ) + (Vertex(nid, -1, 0),)
        edges = tuple(
            replace(e, mult=e.mult - 1) if k == consumed else e
            for k, e in enumerate(graph.edges)
            if not (k == consumed and e.mult == 1)
        ) + (Edge(step.i, nid, 1), Edge(step.j, nid, 1))
        return ResolutionGraph(vertices, edges)
    raise MalformedInputError(f"unknown blowup step {step!r}")


def pullback(
    graph: ResolutionGraph,
    step: BlowupStep,
    divisor: ExcDivisor,
    target: ResolutionGraph | None = None,
) -> ExcDivisor:
    """Total transform of an exceptional divisor under one blowup.

    Old coefficients are unchanged; the new vertex receives the
    multiplicity of the divisor at the blown-up point.
    """
    if divisor.graph != graph:
        raise MalformedInputError("divisor does not live on the blown-down graph")
    if target is None:
        target = blow_up(graph, step)
    if isinstance(step, FreeBlowup):
        new_coeff = divisor.coeff(step.vertex)
    elif isinstance(step, SatelliteBlowup):
        new_coeff = divisor.coeff(step.i) + divisor.coeff(step.j)
    else:
        raise MalformedInputError(f"unknown blowup step {step!r}")
    return ExcDivisor(target, QVector(tuple(divisor.coeffs) + (new_coeff,)))


def pushforward(divisor: ExcDivisor, parent: ResolutionGraph) -> ExcDivisor:
    """Forget the coefficients on vertices absent from ``parent``."""
    child = divisor.graph
    extra = set(child.ids) - set(parent.ids)
    if set(parent.ids) - set(child.ids):
        raise MalformedInputError("parent graph has vertices the child lacks")
    if not extra and parent.ids != child.ids:
        raise MalformedInputError("graphs share all vertices but disagree on order")
    return ExcDivisor(parent, QVector(divisor.coeff(i) for i in parent.ids))


class ModelTower:
    """A base graph with a finite sequence of blowup steps.

    ``models[t]`` is the graph after ``t`` steps; ``new_ids[t]`` names the
    vertex created by step ``t``. Construction applies every step, so a
    tower that exists is structurally valid at every level.
    """

    def __init__(self, base: ResolutionGraph, steps: tuple[BlowupStep, ...]) -> None:
        self.base = base
        self.steps = tuple(steps)
        models = [base]
        new_ids: list[str] = []
        for step in self.steps:
            nid = fresh_vertex_id(models[-1])
            models.append(blow_up(models[-1], step, nid))
            new_ids.append(nid)
        self.models = tuple(models)
        self.new_ids = tuple(new_ids)

    @property
    def top(self) -> ResolutionGraph:
        return self.models[-1]

    @cached_property
    def _volumes(self):
        return tuple(volume(g) for g in self.models)


@dataclass(frozen=True)
class InvarianceCheck:
    level: int
    name: str
    passed: bool
    lhs: dict | str
    rhs: dict | str

    def to_doc(self) -> dict:
        return {
            "level": self.level,
            "name": self.name,
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class InvarianceReport:
    ok: bool
    checks: tuple[InvarianceCheck, ...]

    def failures(self) -> tuple[InvarianceCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_doc(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [c.to_doc() for c in self.checks],
            "failures": [c.to_doc() for c in self.failures()],
        }


def invariance_report(tower: ModelTower) -> InvarianceReport:
    """Recompute every transformation law on every level of the tower.

    Checks per step: volume constancy, exact pullback of the nef part
    (with the one-sided inequality reported separately), the canonical
    transform ``B' = pullback(B) - E_new`` against an independent
    adjunction solve upstairs, the new-coefficient rule, nonnegativity of
    ``A' - pullback(A)``, pushforward/pullback round trip, and |det M|
    preservation. A final whole-tower check composes the canonical
    transform across all steps at once.
    """
    checks: list[InvarianceCheck] = []

    def record(level: int, name: str, passed: bool, lhs, rhs) -> None:
        checks.append(InvarianceCheck(level, name, passed, lhs, rhs))

    for t, step in enumerate(tower.steps):
        g, g2 = tower.models[t], tower.models[t + 1]
        nid = tower.new_ids[t]

        vol, vol2 = tower._volumes[t], tower._volumes[t + 1]
        record(t, "volume-constant", vol2.volume == vol.volume,
               rat_str(vol.volume), rat_str(vol2.volume))

        p_up = pullback(g, step, vol.decomposition.p, target=g2)
        p2 = vol2.decomposition.p
        record(t, "nef-part-pulls-back", p2.coeffs == p_up.coeffs,
               p2.to_doc(), p_up.to_doc())
        record(t, "nef-part-bounded-by-pullback", p2.leq(p_up),
               p2.to_doc(), p_up.to_doc())

        b = g.mumford_pullback_canonical()
        b2 = g2.mumford_pullback_canonical()
        e_new = g2.basis_divisor(nid)
        transformed = pullback(g, step, b, target=g2) - e_new
        record(t, "canonical-transform", b2.coeffs == transformed.coeffs,
               b2.to_doc(), transformed.to_doc())
        if isinstance(step, FreeBlowup):
            expected_new = b.coeff(step.vertex) - 1
        else:
            expected_new = b.coeff(step.i) + b.coeff(step.j) - 1
        record(t, "new-vertex-coefficient", b2.coeff(nid) == expected_new,
               rat_str(b2.coeff(nid)), rat_str(expected_new))

        a = g.log_discrepancy_divisor()
        a2 = g2.log_discrepancy_divisor()
        gap = a2 - pullback(g, step, a, target=g2)
        record(t, "discrepancy-gap-nonnegative", gap.coeffs.is_nonnegative(),
               gap.to_doc(), "0")

        roundtrip = pushforward(pullback(g, step, b, target=g2), g)
        record(t, "pushforward-pullback-identity", roundtrip.coeffs == b.coeffs,
               roundtrip.to_doc(), b.to_doc())

        det, det2 = g.intersection_form.det(), g2.intersection_form.det()
        record(t, "det-magnitude-preserved", abs(det) == abs(det2),
               rat_str(abs(det)), rat_str(abs(det2)))

    if tower.steps:
        running = tower.models[0].mumford_pullback_canonical()
        for t, step in enumerate(tower.steps):
            g2 = tower.models[t + 1]
            running = pullback(tower.models[t], step, running, target=g2) \
                - g2.basis_divisor(tower.new_ids[t])
        top_b = tower.top.mumford_pullback_canonical()
        record(len(tower.steps) - 1, "composed-canonical-transform",
               running.coeffs == top_b.coeffs, running.to_doc(), top_b.to_doc())

    return InvarianceReport(ok=all(c.passed for c in checks), checks=tuple(checks))


def envelope_pullback_check(tower: ModelTower, a: ExcDivisor) -> bool:
    """One-off check that the envelope of a given ``A`` pulls back exactly
    along the whole tower (used by the randomized suites)."""
    current = a
    dec = nef_envelope_trace(tower.models[0], current)
    p = dec.p
    for t, step in enumerate(tower.steps):
        g, g2 = tower.models[t], tower.models[t + 1]
        current = pullback(g, step, current, target=g2)
        p = pullback(g, step, p, target=g2)
    # The pulled-back A is generally not the log-discrepancy divisor of the
    # top model, but its envelope must still be the pulled-back nef part.
    top_dec = nef_envelope_trace(tower.top, current)
    return top_dec.p.coeffs == p.coeffs
