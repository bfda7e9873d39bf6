"""Shared fixtures: small graphs, the exhaustive small-graph corpus, and
independent brute-force oracles used to pin expected values.

The oracles deliberately avoid the library's own algorithms: homomorphisms
by filtering all k^n assignments, adjacency by pairwise comparison, strongly
connected components by reachability closure.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

import pytest

from homcycle import Digraph, SimpleGraph, validate_hom
from homcycle.cover import _moves_against, orient
from homcycle.homs import build_hom_skeleton, skeleton_components

PENTAGON_EDGES = [
    (0, 1), (1, 4), (4, 7), (7, 9), (9, 10), (10, 8), (8, 5),
    (5, 2), (2, 0), (2, 3), (3, 4), (5, 6), (6, 7), (3, 6),
]
PENTAGON_HOM = (1, 0, 2, 3, 4, 3, 2, 3, 4, 4, 0)
PENTAGON_ARCS = {
    (0, 2), (1, 0), (2, 3), (2, 5), (3, 4), (4, 1), (5, 8),
    (6, 3), (6, 5), (6, 7), (7, 4), (7, 9), (8, 10), (9, 10),
}


@pytest.fixture
def p3():
    return SimpleGraph(3, [(0, 1), (1, 2)])


@pytest.fixture
def eleven_vertex_graph():
    """The 11-vertex graph whose orientation under PENTAGON_HOM carries a
    directed pentagon on vertices 0..4."""
    return SimpleGraph(11, PENTAGON_EDGES)


@pytest.fixture
def eleven_vertex_hom(eleven_vertex_graph):
    return validate_hom(eleven_vertex_graph, 5, PENTAGON_HOM)


# ---------------------------------------------------------------------------
# brute-force oracles


def brute_homs(g: SimpleGraph, k: int) -> list[tuple[int, ...]]:
    """All homomorphisms to the k-cycle by filtering every assignment."""
    edges = g.edge_list()
    out = []
    for values in itertools.product(range(k), repeat=g.vertex_count):
        if all((values[v] - values[u]) % k in (1, k - 1) for u, v in edges):
            out.append(values)
    return out


def brute_skeleton_edges(hom_values: list[tuple[int, ...]]) -> set[tuple[int, int]]:
    """Hamming-distance-1 pairs by quadratic comparison."""
    edges = set()
    for i, j in itertools.combinations(range(len(hom_values)), 2):
        diffs = sum(a != b for a, b in zip(hom_values[i], hom_values[j]))
        if diffs == 1:
            edges.add((i, j))
    return edges


def brute_scc(d: Digraph) -> list[list[int]]:
    """Strongly connected components from reachability closure."""
    n = d.vertex_count
    reach = []
    for v in range(n):
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in d.out_neighbors(x):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        reach.append(seen)
    components = []
    assigned = [False] * n
    for v in range(n):
        if assigned[v]:
            continue
        component = [w for w in range(n) if w in reach[v] and v in reach[w]]
        for w in component:
            assigned[w] = True
        components.append(sorted(component))
    return components


# ---------------------------------------------------------------------------
# the exhaustive small-graph corpus


def connected_graph_corpus(max_vertices: int = 6, max_edges: int = 9) -> list[SimpleGraph]:
    """One representative per isomorphism class of connected graphs with
    2..max_vertices vertices and at most max_edges edges.

    Edge subsets are bitmasks; each accepted representative marks its whole
    isomorphism orbit as seen, so every class is processed once.
    """
    graphs = []
    for n in range(2, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        slot = {pair: i for i, pair in enumerate(pairs)}
        tables = []
        for perm in itertools.permutations(range(n)):
            tables.append(
                [slot[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
            )
        seen = set()
        for mask in range(1 << len(pairs)):
            if mask.bit_count() > max_edges or mask in seen:
                continue
            bits = [i for i in range(len(pairs)) if mask >> i & 1]
            if not _mask_connected(n, [pairs[i] for i in bits]):
                continue
            for table in tables:
                image = 0
                for i in bits:
                    image |= 1 << table[i]
                seen.add(image)
            graphs.append(SimpleGraph(n, [pairs[i] for i in bits]))
    return graphs


def _mask_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            merged += 1
    return merged == n - 1


@pytest.fixture(scope="session")
def corpus():
    return connected_graph_corpus()


class SkeletonCache:
    """Memoized skeletons and components per (graph, k) instance."""

    def __init__(self):
        self._cache = {}

    def get(self, g: SimpleGraph, k: int):
        key = (g, k)
        if key not in self._cache:
            skeleton = build_hom_skeleton(g, k)
            self._cache[key] = (skeleton, skeleton_components(skeleton))
        return self._cache[key]


@pytest.fixture(scope="session")
def skeletons():
    return SkeletonCache()


# ---------------------------------------------------------------------------
# lattice-point samplers


def random_walk_point(f, rng: random.Random, steps: int, start_shift: int = 0):
    """A shift-lattice point reached by a random unit-move walk from a
    constant start vector."""
    d = orient(f)
    point = (start_shift,) * f.graph.vertex_count
    for _ in range(steps):
        up, down = _moves_against(d, point)
        moves = [(u, 1) for u in up] + [(u, -1) for u in down]
        if not moves:
            break
        u, delta = rng.choice(moves)
        point = point[:u] + (point[u] + delta,) + point[u + 1:]
    return point


def condensation_sample_point(f, rng: random.Random, spread: int = 2):
    """A shift-lattice point sampled directly from the inequality system.

    Vertices of one strongly connected component of the orientation share a
    value; components are assigned in reverse topological order, each drawn
    from the interval its outgoing arcs allow. Returns None when the random
    choices dead-end.
    """
    from homcycle.graphs import strongly_connected_components

    d = orient(f)
    components = strongly_connected_components(d)
    owner = {}
    for idx, component in enumerate(components):
        for v in component:
            owner[v] = idx
    out_of = [set() for _ in components]
    for u, v in d.arcs:
        if owner[u] != owner[v]:
            out_of[owner[u]].add(owner[v])
    # reverse topological order: repeatedly take components with no
    # unassigned out-neighbor
    values: dict[int, int] = {}
    remaining = set(range(len(components)))
    while remaining:
        ready = [i for i in remaining if all(j in values for j in out_of[i])]
        i = rng.choice(ready)
        lows = [values[j] for j in out_of[i]]
        highs = [values[j] + 1 for j in out_of[i]]
        lo = max(lows) if lows else -spread
        hi = min(highs) if highs else spread
        if lo > hi:
            return None
        values[i] = rng.randint(lo, hi)
        remaining.discard(i)
    return tuple(values[owner[v]] for v in range(f.graph.vertex_count))
