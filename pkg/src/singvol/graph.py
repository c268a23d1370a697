r"""Resolution dual graphs of normal surface singularities.

A graph records the exceptional curves of a resolution: each vertex is an
irreducible exceptional curve with its self-intersection and genus, each
edge an intersection point with multiplicity. The associated intersection
matrix must be negative definite (Mumford), and the graph connected; both
are enforced at construction, so every ``ResolutionGraph`` in existence is
a valid resolution dual graph.

The numerical pullback of the canonical class is the unique exceptional
divisor ``B`` with ``(K_Y + B) . E_j = 0`` for every vertex, i.e. the
solution of ``M b = -k`` where ``k_j = 2 genus_j - 2 - self_int_j`` by
adjunction. Log discrepancies are ``ell = 1 - b``; the singularity is log
canonical when every ``ell_j >= 0``, and the vertices with ``ell_j < 0``
are exactly the centers a log-canonical modification must keep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InternalConsistencyError, MalformedInputError
from .lattice import QVector, SymForm, rat_str


@dataclass(frozen=True)
class Vertex:
    """An exceptional curve: identifier, self-intersection, genus."""

    id: str
    self_int: int
    genus: int


@dataclass(frozen=True)
class Edge:
    """An intersection between two distinct curves with multiplicity >= 1."""

    i: str
    j: str
    mult: int

    def joins(self, a: str, b: str) -> bool:
        return {self.i, self.j} == {a, b}


@dataclass(frozen=True)
class ResolutionGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise MalformedInputError("graph needs at least one vertex")
        seen: set[str] = set()
        for v in self.vertices:
            if not isinstance(v.id, str) or not v.id:
                raise MalformedInputError(f"vertex id must be a nonempty string: {v.id!r}")
            if v.id in seen:
                raise MalformedInputError(f"duplicate vertex id {v.id!r}")
            seen.add(v.id)
            if not isinstance(v.self_int, int) or v.self_int > -1:
                raise MalformedInputError(
                    f"vertex {v.id!r}: self-intersection must be an integer <= -1"
                )
            if not isinstance(v.genus, int) or v.genus < 0:
                raise MalformedInputError(f"vertex {v.id!r}: genus must be an integer >= 0")
        for e in self.edges:
            if e.i not in seen or e.j not in seen:
                raise MalformedInputError(f"edge ({e.i!r}, {e.j!r}) references unknown vertex")
            if e.i == e.j:
                raise MalformedInputError(f"edge at {e.i!r} joins a vertex to itself")
            if not isinstance(e.mult, int) or e.mult < 1:
                raise MalformedInputError(
                    f"edge ({e.i!r}, {e.j!r}): multiplicity must be an integer >= 1"
                )
        self._check_connected()
        if not self.intersection_form.is_negative_definite():
            raise MalformedInputError(
                "intersection matrix is not negative definite",
                reason="not-negative-definite",
            )

    def _check_connected(self) -> None:
        ids = [v.id for v in self.vertices]
        adjacent: dict[str, set[str]] = {i: set() for i in ids}
        for e in self.edges:
            adjacent[e.i].add(e.j)
            adjacent[e.j].add(e.i)
        reached = {ids[0]}
        frontier = [ids[0]]
        while frontier:
            for nxt in adjacent[frontier.pop()]:
                if nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
        if len(reached) != len(ids):
            raise MalformedInputError("graph is not connected", reason="not-connected")

    @classmethod
    def make(cls, vertices, edges=()) -> "ResolutionGraph":
        """Build from plain tuples: ``(id, self_int, genus)`` and ``(i, j[, mult])``."""
        vs = tuple(Vertex(*v) for v in vertices)
        es = tuple(Edge(e[0], e[1], e[2] if len(e) > 2 else 1) for e in edges)
        return cls(vs, es)

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v.id: k for k, v in enumerate(self.vertices)}

    def index(self, vertex_id: str) -> int:
        try:
            return self._index[vertex_id]
        except KeyError:
            raise MalformedInputError(f"unknown vertex id {vertex_id!r}") from None

    def vertex(self, vertex_id: str) -> Vertex:
        return self.vertices[self.index(vertex_id)]

    @cached_property
    def intersection_form(self) -> SymForm:
        """Gram matrix: self-intersections on the diagonal, summed edge
        multiplicities off it."""
        n = len(self.vertices)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for k, v in enumerate(self.vertices):
            rows[k][k] = Fraction(v.self_int)
        for e in self.edges:
            a, b = self._index[e.i], self._index[e.j]
            rows[a][b] += e.mult
            rows[b][a] += e.mult
        return SymForm(rows)

    def divisor(self, coeffs) -> "ExcDivisor":
        return ExcDivisor(self, QVector(coeffs))

    def basis_divisor(self, vertex_id: str) -> "ExcDivisor":
        n = len(self.vertices)
        return ExcDivisor(self, QVector.unit(n, self.index(vertex_id)))

    def zero_divisor(self) -> "ExcDivisor":
        return ExcDivisor(self, QVector.zero(len(self.vertices)))

    def canonical_intersections(self) -> QVector:
        """``k_j = K . E_j = 2 genus_j - 2 - self_int_j`` (adjunction)."""
        return QVector(2 * v.genus - 2 - v.self_int for v in self.vertices)

    def mumford_pullback_canonical(self) -> "ExcDivisor":
        """The exceptional part ``B`` of the canonical pullback.

        Solves ``M b = -k`` so that ``(K_Y + B) . E_j = 0`` for every
        vertex. When the model is relatively minimal (all ``k_j >= 0``)
        the coefficients must come out nonnegative; a violation there
        would be a solver bug and raises, while models carrying
        (-1)-vertices may legitimately have negative entries.
        """
        k = self.canonical_intersections()
        b = self.intersection_form.solve(-k)
        if all(entry >= 0 for entry in k) and not b.is_nonnegative():
            raise InternalConsistencyError(
                "canonical pullback has a negative coefficient on a relatively "
                f"minimal model: b = {b!r}"
            )
        return ExcDivisor(self, b)

    def log_discrepancy_divisor(self) -> "ExcDivisor":
        """Coefficient vector ``ell = 1 - b``, one entry per vertex."""
        b = self.mumford_pullback_canonical().coeffs
        return ExcDivisor(self, QVector(1 - x for x in b))

    def is_log_canonical(self) -> bool:
        return self.log_discrepancy_divisor().coeffs.is_nonnegative()

    def lc_modification_support(self) -> frozenset[str]:
        """Vertices with negative log discrepancy."""
        ell = self.log_discrepancy_divisor().coeffs
        return frozenset(v.id for v, x in zip(self.vertices, ell) if x < 0)

    def discrepancy_report(self) -> "DiscrepancyReport":
        b = self.mumford_pullback_canonical()
        ell = ExcDivisor(self, QVector(1 - x for x in b.coeffs))
        is_lc = ell.coeffs.is_nonnegative()
        support = frozenset(v.id for v, x in zip(self.vertices, ell.coeffs) if x < 0)
        if is_lc != (not support):
            raise InternalConsistencyError("lc flag disagrees with its support")
        return DiscrepancyReport(b=b, ell=ell, is_lc=is_lc, lc_mod_support=support)

    def to_doc(self) -> dict:
        return {
            "vertices": [
                {"id": v.id, "self_int": v.self_int, "genus": v.genus}
                for v in self.vertices
            ],
            "edges": [{"i": e.i, "j": e.j, "mult": e.mult} for e in self.edges],
        }


@dataclass(frozen=True)
class ExcDivisor:
    """A rational divisor supported on the exceptional curves of one graph."""

    graph: ResolutionGraph
    coeffs: QVector

    def __post_init__(self) -> None:
        if len(self.coeffs) != len(self.graph.vertices):
            raise MalformedInputError(
                f"divisor has {len(self.coeffs)} coefficients for "
                f"{len(self.graph.vertices)} vertices"
            )

    def coeff(self, vertex_id: str) -> Fraction:
        return self.coeffs[self.graph.index(vertex_id)]

    def intersections(self) -> QVector:
        """All products ``D . E_j`` at once, i.e. ``M . coeffs``."""
        return self.graph.intersection_form.apply(self.coeffs)

    def intersect(self, vertex_id: str) -> Fraction:
        return self.intersections()[self.graph.index(vertex_id)]

    def self_intersection(self) -> Fraction:
        return self.graph.intersection_form.pair(self.coeffs, self.coeffs)

    def _check_same_graph(self, other: "ExcDivisor") -> None:
        if self.graph != other.graph:
            raise MalformedInputError("divisors live on different graphs")

    def __add__(self, other: "ExcDivisor") -> "ExcDivisor":
        self._check_same_graph(other)
        return ExcDivisor(self.graph, self.coeffs + other.coeffs)

    def __sub__(self, other: "ExcDivisor") -> "ExcDivisor":
        self._check_same_graph(other)
        return ExcDivisor(self.graph, self.coeffs - other.coeffs)

    def __neg__(self) -> "ExcDivisor":
        return ExcDivisor(self.graph, -self.coeffs)

    def scale(self, factor) -> "ExcDivisor":
        return ExcDivisor(self.graph, self.coeffs.scale(factor))

    def leq(self, other: "ExcDivisor") -> bool:
        self._check_same_graph(other)
        return self.coeffs.leq(other.coeffs)

    def to_doc(self) -> dict[str, str]:
        return {v.id: rat_str(c) for v, c in zip(self.graph.vertices, self.coeffs)}


@dataclass(frozen=True)
class DiscrepancyReport:
    """Canonical pullback ``B``, log discrepancies ``ell``, and the lc data."""

    b: ExcDivisor
    ell: ExcDivisor
    is_lc: bool
    lc_mod_support: frozenset[str]

    def to_doc(self) -> dict:
        return {
            "b": self.b.to_doc(),
            "ell": self.ell.to_doc(),
            "is_lc": self.is_lc,
            "lc_mod_support": sorted(self.lc_mod_support),
        }
