"""Finite simple graphs and digraphs, with the structural queries the rest of
the package relies on: connectivity, isolated vertices, sources and sinks,
directed-cycle detection, and strongly connected components.

Vertices are dense integers 0..n-1; string labels are mapped at the CLI
boundary. All values are immutable after construction and every query is a
pure function, so everything here is safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable


class SimpleGraph:
    """Undirected simple graph on vertices 0..vertex_count-1.

    Edges are unordered pairs of distinct vertices; duplicates collapse.
    Self-loops and out-of-range endpoints are rejected.
    """

    __slots__ = ("vertex_count", "edges", "_adjacency")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")
            normalized.add((u, v) if u < v else (v, u))
        self.vertex_count = vertex_count
        self.edges = frozenset(normalized)
        adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in normalized:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.vertex_count}, {self.edge_list()})"


class Digraph:
    """Directed graph on vertices 0..vertex_count-1 with no self-loops."""

    __slots__ = ("vertex_count", "arcs", "_out", "_in")

    def __init__(self, vertex_count: int, arcs: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        arc_set = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"arc ({u}, {v}) has an endpoint out of range")
            arc_set.add((u, v))
        self.vertex_count = vertex_count
        self.arcs = frozenset(arc_set)
        out: list[list[int]] = [[] for _ in range(vertex_count)]
        inc: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in arc_set:
            out[u].append(v)
            inc[v].append(u)
        self._out = tuple(tuple(sorted(ws)) for ws in out)
        self._in = tuple(tuple(sorted(ws)) for ws in inc)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def arc_list(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph({self.vertex_count}, {self.arc_list()})"


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Disjoint union, with h's vertices shifted past g's."""
    shift = g.vertex_count
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    return SimpleGraph(g.vertex_count + h.vertex_count, edges)


def connected_components(g: SimpleGraph) -> list[list[int]]:
    """Partition of the vertices into connected components.

    Each part is sorted; parts are ordered by smallest member. The empty
    graph yields the empty partition.
    """
    seen = [False] * g.vertex_count
    parts = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        part = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    queue.append(w)
        parts.append(sorted(part))
    return parts


def is_connected(g: SimpleGraph) -> bool:
    return len(connected_components(g)) == 1


def has_isolated_vertex(g: SimpleGraph) -> bool:
    return any(g.degree(v) == 0 for v in range(g.vertex_count))


def is_source(d: Digraph, u: int) -> bool:
    """True iff u has no incoming arc."""
    return not d.in_neighbors(u)


def is_sink(d: Digraph, u: int) -> bool:
    """True iff u has no outgoing arc."""
    return not d.out_neighbors(u)


def has_directed_cycle(d: Digraph) -> bool:
    """Directed-cycle test by Kahn's topological sort (iterative)."""
    n = d.vertex_count
    indegree = [len(d.in_neighbors(v)) for v in range(n)]
    queue = deque(v for v in range(n) if indegree[v] == 0)
    removed = 0
    while queue:
        v = queue.popleft()
        removed += 1
        for w in d.out_neighbors(v):
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    return removed < n


def strongly_connected_components(d: Digraph) -> list[list[int]]:
    """Tarjan's algorithm with an explicit stack (no recursion).

    Components are sorted internally and ordered by smallest member.
    """
    n = d.vertex_count
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            out = d.out_neighbors(v)
            descended = False
            while ptr < len(out):
                w = out[ptr]
                ptr += 1
                if index[w] == -1:
                    work[-1] = (v, ptr)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    components.sort(key=lambda part: part[0])
    return components


def vertices_on_directed_cycles(d: Digraph) -> frozenset[int]:
    """Vertices lying on at least one directed cycle.

    Since self-loops are impossible, these are exactly the vertices whose
    strongly connected component has two or more members.
    """
    on_cycle: set[int] = set()
    for component in strongly_connected_components(d):
        if len(component) >= 2:
            on_cycle.update(component)
    return frozenset(on_cycle)


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    """Induced subgraph on the given vertices, relabeled densely.

    Returns the subgraph together with the sorted list of original vertex
    ids; position i of the list is the original id of new vertex i.
    """
    keep = sorted(set(vertices))
    position = {v: i for i, v in enumerate(keep)}
    edges = [
        (position[u], position[v])
        for u, v in g.edges
        if u in position and v in position
    ]
    return SimpleGraph(len(keep), edges), keep
