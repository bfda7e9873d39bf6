"""Brute-force homology oracle for move-graph components.

Builds the 2-skeleton of a component (its vertices, edges, and square
2-cells, which are the induced 4-cycles of the move graph) and computes the
Betti numbers b0 and b1 by exact integer elimination on the boundary
matrices. A component classified as a point must report (1, 0) and one
classified as a circle must report (1, 1); the oracle shares no code with
the classifier, so agreement is a genuine cross-check.

Rational coefficients suffice here because the first homology of these
components is free; exact fraction-free arithmetic avoids any floating
error. Triangles in the 1-skeleton would signal cells beyond squares (they
only arise from isolated vertices), so the oracle refuses such input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import NamedTuple

from homcycle.cover import ComponentReport, classify_component, deck_period, frozen_vertices
from homcycle.errors import CapExceededError, SimplexCellsPresentError
from homcycle.graphs import SimpleGraph, connected_components
from homcycle.homs import (
    DEFAULT_HOM_CAP,
    HomSkeleton,
    build_hom_skeleton,
    skeleton_components,
)

VERTEX_CAP = 50_000
SQUARE_CAP = 500_000


class BettiPair(NamedTuple):
    b0: int
    b1: int


@dataclass(frozen=True)
class TwoSkeleton:
    """Vertices, edges, and square cells of one induced piece of a move graph.

    Vertices are move-graph indices. Squares are stored as the canonical
    traversal of their 4-cycle: (v0, v1, v2, v3) with v0 the smallest vertex
    and v1 < v3 its two cycle-neighbors.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    squares: tuple[tuple[int, int, int, int], ...]


def _canonical_square(p: int, x: int, q: int, y: int) -> tuple[int, int, int, int]:
    """Canonical traversal of the 4-cycle p-x-q-y (p,q and x,y diagonal)."""
    if p <= min(x, q, y):
        return (p, min(x, y), q, max(x, y))
    if x <= min(q, y):
        return (x, min(p, q), y, max(p, q))
    if q <= y:
        return (q, min(x, y), p, max(x, y))
    return (y, min(p, q), x, max(p, q))


def build_two_skeleton(
    s: HomSkeleton,
    component: list[int] | tuple[int, ...],
    vertex_cap: int = VERTEX_CAP,
    square_cap: int = SQUARE_CAP,
) -> TwoSkeleton:
    """Extract the 2-skeleton induced on a set of move-graph vertices.

    Every square cell is an induced 4-cycle: four vertices spanning exactly
    the cycle's four edges. Raises SimplexCellsPresentError if a triangle is
    found (the input is then outside the oracle's scope) and
    CapExceededError past the desk-scale caps.
    """
    vertices = tuple(sorted(component))
    if len(vertices) > vertex_cap:
        raise CapExceededError(f"component has more than {vertex_cap} vertices")
    keep = set(vertices)
    neighbor_sets = {
        v: frozenset(w for w in s.adjacency[v] if w in keep) for v in vertices
    }
    edges = tuple(
        sorted((v, w) for v in vertices for w in neighbor_sets[v] if v < w)
    )
    for v in vertices:
        for a, b in combinations(sorted(neighbor_sets[v]), 2):
            if b in neighbor_sets[a]:
                raise SimplexCellsPresentError(
                    f"triangle on vertices {v}, {a}, {b}; cells beyond squares present"
                )
    wedges: dict[tuple[int, int], list[int]] = {}
    for mid in vertices:
        for p, q in combinations(sorted(neighbor_sets[mid]), 2):
            # p, q non-adjacent is already guaranteed: no triangles survive above
            wedges.setdefault((p, q), []).append(mid)
    squares: set[tuple[int, int, int, int]] = set()
    for (p, q), mids in wedges.items():
        for x, y in combinations(mids, 2):
            if y not in neighbor_sets[x]:
                squares.add(_canonical_square(p, x, q, y))
                if len(squares) > square_cap:
                    raise CapExceededError(
                        f"component has more than {square_cap} squares"
                    )
    return TwoSkeleton(vertices=vertices, edges=edges, squares=tuple(sorted(squares)))


def _exact_rank(rows: list[dict[int, int]]) -> int:
    """Rank of a sparse integer matrix by fraction-free elimination.

    Rows are column->value maps. Pivots favor short rows and unit entries;
    each update multiplies out the pivot and divides by the row gcd, so all
    arithmetic stays in the integers.
    """
    pending = [dict(row) for row in rows if row]
    rank = 0
    while pending:
        best = min(
            range(len(pending)), key=lambda i: (len(pending[i]), min(pending[i]))
        )
        pivot = pending.pop(best)
        rank += 1
        col = min(pivot, key=lambda c: (abs(pivot[c]), c))
        pval = pivot[col]
        reduced = []
        for row in pending:
            rval = row.pop(col, 0)
            if rval:
                updated = {c: v * pval for c, v in row.items()}
                for c, v in pivot.items():
                    if c == col:
                        continue
                    nv = updated.get(c, 0) - v * rval
                    if nv:
                        updated[c] = nv
                    elif c in updated:
                        del updated[c]
                if updated:
                    g = 0
                    for v in updated.values():
                        g = gcd(g, v)
                    if g > 1:
                        updated = {c: v // g for c, v in updated.items()}
                row = updated
            if row:
                reduced.append(row)
        pending = reduced
    return rank


def betti(t: TwoSkeleton) -> BettiPair:
    """Betti numbers (b0, b1) of the 2-skeleton by exact rank computation.

    b0 = #vertices - rank(boundary_1) and b1 = nullity(boundary_1) -
    rank(boundary_2), with boundary_1 sending each edge (oriented from the
    lower to the higher index) to head minus tail, and boundary_2 sending
    each square to the signed sum of its traversal edges.
    """
    vertex_index = {v: i for i, v in enumerate(t.vertices)}
    edge_index = {e: i for i, e in enumerate(t.edges)}
    d1_rows = [{vertex_index[u]: -1, vertex_index[v]: 1} for u, v in t.edges]
    rank1 = _exact_rank(d1_rows)
    d2_rows = []
    for v0, v1, v2, v3 in t.squares:
        row: dict[int, int] = {}
        for a, b in ((v0, v1), (v1, v2), (v2, v3), (v3, v0)):
            if a < b:
                row[edge_index[(a, b)]] = row.get(edge_index[(a, b)], 0) + 1
            else:
                row[edge_index[(b, a)]] = row.get(edge_index[(b, a)], 0) - 1
        d2_rows.append(row)
    rank2 = _exact_rank(d2_rows)
    b0 = len(t.vertices) - rank1
    b1 = len(t.edges) - rank1 - rank2
    return BettiPair(b0, b1)


def verify_classification(
    g: SimpleGraph,
    k: int,
    hom_cap: int = DEFAULT_HOM_CAP,
    vertex_cap: int = VERTEX_CAP,
    square_cap: int = SQUARE_CAP,
) -> list[ComponentReport]:
    """Classify every component of the move graph and cross-check each
    against the homology oracle.

    Requires a connected graph with at least two vertices. The returned
    reports carry the oracle's Betti pair; ``oracle_consistent`` is the
    pass/fail verdict (a point must see (1, 0), a circle (1, 1), and for
    k = 4 every component must see (1, 0)).
    """
    if g.vertex_count < 2 or len(connected_components(g)) != 1:
        raise ValueError("the oracle needs a connected graph with at least two vertices")
    skeleton = build_hom_skeleton(g, k, hom_cap)
    period = deck_period(k) if k != 4 else None
    reports = []
    for component in skeleton_components(skeleton):
        representative = skeleton.homs[component[0]]
        two = build_two_skeleton(skeleton, component, vertex_cap, square_cap)
        pair = betti(two)
        reports.append(
            ComponentReport(
                representative=representative,
                homotopy_type=classify_component(representative),
                frozen=frozen_vertices(representative) if k != 4 else None,
                size=len(component),
                period=period,
                betti=(pair.b0, pair.b1),
            )
        )
    return reports
