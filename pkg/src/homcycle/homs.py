"""Homomorphisms from a simple graph to the k-cycle, and the move graph on
them.

The vertices of the k-cycle are the residues 0..k-1, with x adjacent to y
exactly when y - x is +-1 mod k. A homomorphism assigns each graph vertex a
residue so that every edge lands on a cycle edge. Two homomorphisms are
adjacent (one reconfiguration move apart) when they differ at exactly one
vertex; the resulting graph is the 1-skeleton of the move complex.

For k != 4 every move has a sign: when f and g differ at u, all neighbors of
u share a single value c, and the change at u is c+1 <-> c-1. The ordered
pair (f, g) is positive when u moves from c-1 to c+1 and negative in the
other direction. Only for k = 4 can a vertex hop between the two residues
opposite it on the cycle while its neighbors disagree, which is why the sign
is undefined there.
"""

from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from homcycle.errors import (
    BadKError,
    CapExceededError,
    NotAHomomorphismError,
    TypeUndefinedError,
)
from homcycle.graphs import SimpleGraph, has_isolated_vertex

DEFAULT_HOM_CAP = 1_000_000


class EdgeType(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class CyclicHom:
    """A certified homomorphism from ``graph`` to the k-cycle.

    ``values[v]`` is the residue assigned to vertex v. Construction checks
    the +-1 rule on every edge, so instances are homomorphisms by
    construction.
    """

    graph: SimpleGraph
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.k < 3:
            raise BadKError(f"cycle length must be at least 3, got {self.k}")
        if len(self.values) != self.graph.vertex_count:
            raise ValueError(
                f"expected {self.graph.vertex_count} values, got {len(self.values)}"
            )
        if any(not (0 <= r < self.k) for r in self.values):
            raise ValueError("residues must already be reduced mod k")
        for u, v in self.graph.edge_list():
            if (self.values[v] - self.values[u]) % self.k not in (1, self.k - 1):
                raise NotAHomomorphismError((u, v))

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def with_value(self, v: int, residue: int) -> "CyclicHom":
        """New homomorphism with vertex v reassigned (revalidated)."""
        values = list(self.values)
        values[v] = residue % self.k
        return CyclicHom(self.graph, self.k, tuple(values))

    def label(self) -> str:
        """Residue string: digits concatenated for k <= 10, else comma-separated."""
        if self.k <= 10:
            return "".join(str(r) for r in self.values)
        return ",".join(str(r) for r in self.values)


def validate_hom(g: SimpleGraph, k: int, values: Iterable[int]) -> CyclicHom:
    """Certify a value assignment as a homomorphism to the k-cycle.

    Residues are reduced mod k before checking. Raises
    NotAHomomorphismError naming the first violating edge in sorted edge
    order.
    """
    if k < 3:
        raise BadKError(f"cycle length must be at least 3, got {k}")
    reduced = tuple(v % k for v in values)
    return CyclicHom(g, k, reduced)


def _dfs_order(g: SimpleGraph) -> list[int]:
    """A vertex order in which every non-root has an earlier neighbor.

    Depth-first from the smallest vertex of each component, visiting
    neighbors in increasing order, with an explicit stack.
    """
    seen = [False] * g.vertex_count
    order = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            for w in reversed(g.neighbors(v)):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return order


def enumerate_homs(g: SimpleGraph, k: int, cap: int = DEFAULT_HOM_CAP) -> list[CyclicHom]:
    """All homomorphisms g -> C_k, sorted lexicographically by residue vector.

    Backtracking over a depth-first vertex order: the root of each component
    ranges over all k residues, and every later vertex is constrained to the
    common +-1 neighborhood of its already-assigned neighbors (at most two
    candidates). Raises CapExceededError when more than ``cap`` results
    would be produced.
    """
    if k < 3:
        raise BadKError(f"cycle length must be at least 3, got {k}")
    n = g.vertex_count
    if n == 0:
        return [CyclicHom(g, k, ())]
    order = _dfs_order(g)
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    earlier = [
        [w for w in g.neighbors(v) if position[w] < i] for i, v in enumerate(order)
    ]

    assigned = [-1] * n
    results: list[tuple[int, ...]] = []

    def candidates(level: int) -> Iterator[int]:
        prev = earlier[level]
        if not prev:
            return iter(range(k))
        w0 = assigned[prev[0]]
        feasible = {(w0 + 1) % k, (w0 - 1) % k}
        for w in prev[1:]:
            wv = assigned[w]
            feasible &= {(wv + 1) % k, (wv - 1) % k}
        return iter(sorted(feasible))

    iters: list[Iterator[int]] = [iter(())] * n
    level = 0
    iters[0] = candidates(0)
    while level >= 0:
        v = order[level]
        value = next(iters[level], None)
        if value is None:
            assigned[v] = -1
            level -= 1
            continue
        assigned[v] = value
        if level == n - 1:
            if len(results) >= cap:
                raise CapExceededError(
                    f"more than {cap} homomorphisms; raise the cap to enumerate"
                )
            results.append(tuple(assigned))
        else:
            level += 1
            iters[level] = candidates(level)
    results.sort()
    return [CyclicHom(g, k, values) for values in results]


def _differing_vertex(f: CyclicHom, g: CyclicHom) -> int | None:
    """The unique vertex where f and g differ, or None if not exactly one."""
    found = None
    for v, (a, b) in enumerate(zip(f.values, g.values)):
        if a != b:
            if found is not None:
                return None
            found = v
    return found


def hom_adjacent(f: CyclicHom, g: CyclicHom) -> bool:
    """True iff f and g differ at exactly one vertex."""
    if f.graph != g.graph or f.k != g.k:
        raise ValueError("homomorphisms must share the same graph and k")
    return _differing_vertex(f, g) is not None


def pair_type(f: CyclicHom, g: CyclicHom) -> EdgeType:
    """Sign of the ordered move (f, g): positive iff the differing vertex
    jumps forward by 2 past the common neighbor value, negative iff
    backward. Undefined for k = 4 or when the graph has an isolated vertex.
    """
    if f.graph != g.graph or f.k != g.k:
        raise ValueError("homomorphisms must share the same graph and k")
    if f.k == 4:
        raise TypeUndefinedError("move signs are undefined for k = 4")
    if has_isolated_vertex(f.graph):
        raise TypeUndefinedError("move signs need a graph without isolated vertices")
    u = _differing_vertex(f, g)
    if u is None:
        raise ValueError("homomorphisms must differ at exactly one vertex")
    k = f.k
    fu = f.values[u]
    neighbors = f.graph.neighbors(u)
    positive = g.values[u] == (fu + 2) % k and all(
        f.values[v] == (fu + 1) % k for v in neighbors
    )
    negative = g.values[u] == (fu - 2) % k and all(
        f.values[v] == (fu - 1) % k for v in neighbors
    )
    if positive == negative:
        raise ValueError("pair is not an adjacent homomorphism pair")
    return EdgeType.POSITIVE if positive else EdgeType.NEGATIVE


@dataclass(frozen=True)
class HomSkeleton:
    """The move graph: all homomorphisms g -> C_k and single-vertex moves.

    ``homs`` is sorted lexicographically by residue vector; ``edges`` holds
    index pairs (i, j) with i < j; ``adjacency[i]`` lists the neighbors of
    hom i in increasing order.
    """

    graph: SimpleGraph
    k: int
    homs: tuple[CyclicHom, ...]
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    def index_of(self, f: CyclicHom) -> int:
        """Index of a homomorphism in the sorted vertex list."""
        lo, hi = 0, len(self.homs)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.homs[mid].values < f.values:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.homs) and self.homs[lo].values == f.values:
            return lo
        raise KeyError(f"homomorphism {f.label()} not found in skeleton")


def build_hom_skeleton(g: SimpleGraph, k: int, cap: int = DEFAULT_HOM_CAP) -> HomSkeleton:
    """Enumerate all homomorphisms and connect pairs at Hamming distance 1.

    Adjacency is found by bucketing on the residue vector with one
    coordinate masked, so the cost is linear in vertices x homomorphisms.
    """
    homs = enumerate_homs(g, k, cap)
    edges: set[tuple[int, int]] = set()
    for u in range(g.vertex_count):
        buckets: defaultdict[tuple[int, ...], list[int]] = defaultdict(list)
        for i, h in enumerate(homs):
            buckets[h.values[:u] + h.values[u + 1:]].append(i)
        for members in buckets.values():
            for i, j in combinations(members, 2):
                edges.add((i, j))
    sorted_edges = tuple(sorted(edges))
    adjacency: list[list[int]] = [[] for _ in homs]
    for i, j in sorted_edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    return HomSkeleton(
        graph=g,
        k=k,
        homs=tuple(homs),
        edges=sorted_edges,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def skeleton_components(s: HomSkeleton) -> list[list[int]]:
    """Connected components of the move graph, as sorted index lists ordered
    by smallest member."""
    seen = [False] * len(s.homs)
    parts = []
    for root in range(len(s.homs)):
        if seen[root]:
            continue
        seen[root] = True
        part = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in s.adjacency[i]:
                if not seen[j]:
                    seen[j] = True
                    part.append(j)
                    queue.append(j)
        parts.append(sorted(part))
    return parts
