"""The covering-space machinery behind the homotopy-type classifier.

Every homomorphism f orients the underlying graph: each edge points toward
the endpoint whose residue is one larger mod k. Integer vectors indexed by
the vertices ("shift vectors", counting signed reconfiguration moves per
vertex) form the shift lattice of f: the vectors whose coordinates obey, for
every arc (u, v), the slack inequalities a_v <= a_u <= a_v + 1. Projecting a
shift vector a to the homomorphism u -> f(u) + 2*a_u realizes the lattice as
a cover of f's move-graph component; restricting to vectors that vanish on
frozen vertices (those on a directed cycle of the orientation, whose values
can never move) carves out the component of the origin, which is the
universal cover.

Walking that cover and deduplicating modulo the deck translations (adding
the deck period to every coordinate) enumerates the component of f exactly
once per homomorphism, and the classifier reads the homotopy type straight
off the orientation: a directed cycle pins the component to a point, an
acyclic orientation leaves one circular degree of freedom.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from homcycle.errors import BadKError, NotInDError, NotInEError
from homcycle.graphs import (
    Digraph,
    SimpleGraph,
    connected_components,
    induced_subgraph,
    is_sink,
    is_source,
    vertices_on_directed_cycles,
)
from homcycle.homs import CyclicHom

LatticePoint = tuple[int, ...]


def orient(f: CyclicHom) -> Digraph:
    """Direct each edge uv toward the endpoint with the larger residue:
    the arc is (u, v) when f(v) - f(u) = 1 mod k. Exactly one direction
    applies per edge since +1 != -1 mod k for k >= 3."""
    arcs = []
    for u, v in f.graph.edge_list():
        if (f.values[v] - f.values[u]) % f.k == 1:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Digraph(f.graph.vertex_count, arcs)


def in_shift_lattice(f: CyclicHom, point: LatticePoint) -> bool:
    """True iff the point satisfies every slack inequality
    a_v <= a_u <= a_v + 1 along the arcs of f's orientation."""
    if len(point) != f.graph.vertex_count:
        raise ValueError("point length must match the vertex count")
    for u, v in orient(f).arcs:
        if not point[v] <= point[u] <= point[v] + 1:
            return False
    return True


def project(f: CyclicHom, point: LatticePoint) -> CyclicHom:
    """The homomorphism u -> f(u) + 2*a_u obtained by performing the shifts.

    Along any arc (u, v) of the orientation the projected difference is +1
    when a_u = a_v and -1 when a_u = a_v + 1, so the result is again a
    homomorphism. Raises NotInDError outside the shift lattice.
    """
    if not in_shift_lattice(f, point):
        raise NotInDError(f"{point} violates a slack inequality")
    k = f.k
    return CyclicHom(
        f.graph, k, tuple((f.values[u] + 2 * point[u]) % k for u in range(len(point)))
    )


def lattice_moves(f: CyclicHom, point: LatticePoint) -> tuple[frozenset[int], frozenset[int]]:
    """Unit moves available at a lattice point: (up, down) vertex sets.

    up contains u when point + e_u stays in the shift lattice, down when
    point - e_u does. For k != 4 these are exactly the sources and sinks of
    the orientation of the projected homomorphism, and the two sets are
    disjoint.
    """
    if not in_shift_lattice(f, point):
        raise NotInDError(f"{point} violates a slack inequality")
    d = orient(f)
    up, down = _moves_against(d, point)
    return frozenset(up), frozenset(down)


def _moves_against(d: Digraph, point: LatticePoint) -> tuple[list[int], list[int]]:
    """Unit moves at ``point`` against the slack inequalities of ``d``,
    checking only the inequalities incident to the moved vertex. Returns
    ascending vertex lists."""
    up, down = [], []
    for u in range(len(point)):
        for delta, bucket in ((1, up), (-1, down)):
            t = point[u] + delta
            ok = all(point[x] <= t <= point[x] + 1 for x in d.out_neighbors(u)) and all(
                t <= point[x] <= t + 1 for x in d.in_neighbors(u)
            )
            if ok:
                bucket.append(u)
    return up, down


def negate_transport(f: CyclicHom, point: LatticePoint) -> tuple[CyclicHom, LatticePoint]:
    """Carry a lattice point over to the projected homomorphism's lattice.

    Returns (g, c) with g = project(f, point) and c = -point; c lies in g's
    shift lattice and project(g, c) recovers f.
    """
    g = project(f, point)
    return g, tuple(-x for x in point)


def frozen_vertices(f: CyclicHom) -> frozenset[int]:
    """Vertices on a directed cycle of f's orientation.

    For k != 4 and connected graphs with at least two vertices, every
    homomorphism reachable from f agrees with f on these vertices.
    """
    return vertices_on_directed_cycles(orient(f))


def deck_period(k: int) -> int:
    """Order of the shift-by-2 rotation of the k-cycle: k for odd k, k/2 for
    even k. This is the period of the deck translation acting on the shift
    lattice; it is at least 3 exactly because k = 4 is excluded."""
    if k < 3 or k == 4:
        raise BadKError(f"cycle length must be >= 3 and != 4, got {k}")
    return k if k % 2 == 1 else k // 2


def in_universal_cover(f: CyclicHom, point: LatticePoint) -> bool:
    """True iff the point is a universal-cover vertex: it satisfies the
    slack inequalities and vanishes on every frozen vertex."""
    return in_shift_lattice(f, point) and all(
        point[v] == 0 for v in frozen_vertices(f)
    )


@dataclass(frozen=True)
class QuotientClass:
    """A universal-cover vertex modulo deck translations.

    ``coords`` is the canonical representative: the unique translate whose
    base-vertex coordinate (vertex 0) lies in [0, period).
    """

    coords: LatticePoint
    period: int

    @classmethod
    def from_point(cls, point: LatticePoint, period: int) -> "QuotientClass":
        shift = point[0] - (point[0] % period)
        return cls(tuple(x - shift for x in point), period)


def enumerate_cover_quotient(f: CyclicHom) -> list[tuple[QuotientClass, CyclicHom]]:
    """Walk the universal cover from the origin, deduplicating modulo deck
    translations, and project each class to its homomorphism.

    The projected homomorphisms are pairwise distinct and are exactly the
    component of f in the move graph. Breadth-first from the origin, taking
    up moves then down moves in vertex order, so the output order is
    deterministic. Requires k != 4 and a connected graph with at least two
    vertices.
    """
    period = deck_period(f.k)
    g = f.graph
    if g.vertex_count < 2 or len(connected_components(g)) != 1:
        raise ValueError("the graph must be connected with at least two vertices")
    d = orient(f)
    start = QuotientClass.from_point((0,) * g.vertex_count, period).coords
    seen = {start}
    queue = deque([start])
    out: list[tuple[QuotientClass, CyclicHom]] = []
    while queue:
        coords = queue.popleft()
        out.append((QuotientClass(coords, period), project(f, coords)))
        up, down = _moves_against(d, coords)
        for u, delta in [(u, 1) for u in up] + [(u, -1) for u in down]:
            neighbor = coords[:u] + (coords[u] + delta,) + coords[u + 1:]
            canonical = QuotientClass.from_point(neighbor, period).coords
            if canonical not in seen:
                seen.add(canonical)
                queue.append(canonical)
    return out


def descend_to_origin(f: CyclicHom, point: LatticePoint) -> list[LatticePoint]:
    """A norm-decreasing path from a universal-cover vertex to the origin.

    Each step drops the 1-norm by exactly one: while some coordinate is
    positive, decrement the smallest positive-coordinate vertex that is a
    sink of the projected orientation; otherwise increment the smallest
    negative-coordinate vertex that is a source. Such a vertex always
    exists, since otherwise the positive (or negative) support would carry a
    directed cycle, forcing those coordinates to zero.
    """
    if not in_universal_cover(f, point):
        raise NotInEError(f"{point} is not a universal-cover vertex")
    current = tuple(point)
    zero = (0,) * len(current)
    path = [current]
    while current != zero:
        d = orient(project(f, current))
        if any(x > 0 for x in current):
            u = next(
                v for v, x in enumerate(current) if x > 0 and is_sink(d, v)
            )
            delta = -1
        else:
            u = next(
                v for v, x in enumerate(current) if x < 0 and is_source(d, v)
            )
            delta = 1
        current = current[:u] + (current[u] + delta,) + current[u + 1:]
        path.append(current)
    return path


@dataclass(frozen=True)
class HomotopyType:
    """Homotopy type of a move-graph component: a torus of some dimension.

    Dimension 0 is a point, dimension 1 a circle; higher dimensions only
    arise for disconnected graphs, where components multiply.
    """

    torus_dim: int

    @property
    def is_point(self) -> bool:
        return self.torus_dim == 0

    @property
    def is_circle(self) -> bool:
        return self.torus_dim == 1

    def __str__(self) -> str:
        if self.torus_dim == 0:
            return "point"
        if self.torus_dim == 1:
            return "circle"
        return f"{self.torus_dim}-torus"


POINT = HomotopyType(0)
CIRCLE = HomotopyType(1)


def classify_component(f: CyclicHom) -> HomotopyType:
    """Homotopy type of f's component, for a connected graph.

    A single vertex always gives a point (the component is a full simplex),
    and so does k = 4 (every component collapses). Otherwise the orientation
    decides: a directed cycle freezes the component to a point, an acyclic
    orientation leaves a circle.
    """
    g = f.graph
    if len(connected_components(g)) != 1:
        raise ValueError("classify_component needs a connected graph")
    if g.vertex_count == 1:
        return POINT
    if f.k == 4:
        return POINT
    return POINT if vertices_on_directed_cycles(orient(f)) else CIRCLE


def classify_full(g: SimpleGraph, k: int, f: CyclicHom) -> HomotopyType:
    """Homotopy type of f's component for a possibly disconnected graph.

    Components multiply across the connected pieces of g, so the answer is a
    torus whose dimension counts the pieces classified as circles. The empty
    graph gives a point (dimension 0).
    """
    if f.graph != g or f.k != k:
        raise ValueError("homomorphism is not defined on the given graph and k")
    dim = 0
    for part in connected_components(g):
        sub, originals = induced_subgraph(g, part)
        restricted = CyclicHom(sub, k, tuple(f.values[v] for v in originals))
        if classify_component(restricted).is_circle:
            dim += 1
    return HomotopyType(dim)


@dataclass(frozen=True)
class ComponentReport:
    """Classification record for one move-graph component.

    ``betti`` is filled when the homology oracle has run; ``frozen`` and
    ``period`` are None for k = 4, where neither notion applies.
    """

    representative: CyclicHom
    homotopy_type: HomotopyType
    frozen: frozenset[int] | None
    size: int
    period: int | None
    betti: tuple[int, int] | None = None

    @property
    def oracle_consistent(self) -> bool | None:
        """Whether the oracle's Betti numbers match the classification:
        b0 = 1 and b1 equal to the torus dimension. None before the oracle
        has run."""
        if self.betti is None:
            return None
        b0, b1 = self.betti
        return b0 == 1 and b1 == self.homotopy_type.torus_dim
