"""Validated simple graphs and canonical path enumeration.

A path of length h is a sequence of h+1 distinct pairwise-adjacent vertices;
the two orientations describe the same path, so exactly one is emitted (the
one whose first endpoint index is <= its last). Reducing a path to its degree
sequence, read off in path order and normalised against reversal, buckets the
paths of each order into a census: a map from canonical degree sequence to
multiplicity. Summing an index function against the census is then equivalent
to summing it path by path.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceededError,
    DisconnectedError,
    DuplicateEdgeError,
    FormatError,
    SelfLoopError,
    VertexOutOfRangeError,
)

# Node-expansion cap shared by every exhaustive walk. Exceeding it raises;
# results are never silently truncated.
DEFAULT_BUDGET = 10**8


def canonical_class(degrees: Sequence[int]) -> tuple[int, ...]:
    """Return the lexicographically smaller of a degree sequence and its reverse."""
    seq = tuple(degrees)
    rev = seq[::-1]
    return seq if seq <= rev else rev


@dataclass(frozen=True)
class Graph:
    """A connected simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2


@dataclass(frozen=True)
class Census:
    """Multiplicities of canonical degree sequences over all paths of one order."""

    order: int
    entries: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        """Number of paths of this order."""
        return sum(self.entries.values())


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and return the graph.

    Raises VertexOutOfRangeError, SelfLoopError, DuplicateEdgeError or
    DisconnectedError, each naming the offending edge or vertex.
    """
    if vertex_count < 1:
        raise ValueError(f"vertex_count must be positive, got {vertex_count}")
    neighbor_sets: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < vertex_count:
                raise VertexOutOfRangeError(
                    f"edge ({u}, {v}): vertex {w} outside 0..{vertex_count - 1}"
                )
        if u == v:
            raise SelfLoopError(f"edge ({u}, {v}) is a self-loop")
        if v in neighbor_sets[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) appears more than once")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    # Degrees must be positive, so the one-vertex graph is out of domain.
    if vertex_count == 1:
        raise DisconnectedError(
            "vertex 0 is isolated; the smallest supported graph is a single edge"
        )
    seen = bytearray(vertex_count)
    seen[0] = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in neighbor_sets[v]:
            if not seen[w]:
                seen[w] = 1
                frontier.append(w)
    for v in range(vertex_count):
        if not seen[v]:
            raise DisconnectedError(f"vertex {v} is unreachable from vertex 0")

    return Graph(vertex_count, tuple(tuple(sorted(s)) for s in neighbor_sets))


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line is "n e"; the next e lines each hold one edge
    "u v" with 0-based endpoints. '#' starts a comment anywhere on a line.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        data = raw.split("#", 1)[0].strip()
        if data:
            rows.append((lineno, data.split()))

    if not rows:
        raise FormatError("edge list is empty")
    lineno, header = rows[0]
    if len(header) != 2:
        raise FormatError(f"line {lineno}: expected header 'n e', got {' '.join(header)!r}")
    try:
        vertex_count, edge_count = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header fields must be integers") from None
    if edge_count < 0 or vertex_count < 1:
        raise FormatError(f"line {lineno}: header values out of range")

    body = rows[1:]
    if len(body) != edge_count:
        raise FormatError(
            f"header declares {edge_count} edges but {len(body)} edge lines found"
        )
    edges = []
    for lineno, fields in body:
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {' '.join(fields)!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: endpoints must be integers") from None
    return build_graph(vertex_count, edges)


def load_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def enumerate_paths(
    graph: Graph, order: int, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[int, ...]]:
    """Yield every path of the given order once, as a vertex tuple.

    Orientation rule: the emitted tuple starts at the smaller endpoint.
    Order 0 paths are the single vertices.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    n = graph.vertex_count
    if order == 0:
        for v in range(n):
            yield (v,)
        return
    adj = graph.adjacency
    expansions = 0
    for start in range(n):
        expansions += 1
        if expansions > budget:
            raise BudgetExceededError(f"node-expansion budget {budget} exceeded")
        visited = bytearray(n)
        visited[start] = 1
        verts = [start]
        stack = [iter(adj[start])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                visited[verts.pop()] = 0
                continue
            if visited[w]:
                continue
            expansions += 1
            if expansions > budget:
                raise BudgetExceededError(f"node-expansion budget {budget} exceeded")
            visited[w] = 1
            verts.append(w)
            if len(verts) == order + 1:
                if start < w:
                    yield tuple(verts)
                visited[w] = 0
                verts.pop()
            else:
                stack.append(iter(adj[w]))


def census_series(
    graph: Graph, max_order: int, budget: int = DEFAULT_BUDGET
) -> list[Census]:
    """Censuses for every order 0..max_order from a single exhaustive walk.

    Costs the same node expansions as enumerating the deepest order alone,
    since a depth-limited walk visits every shorter path as a prefix anyway.
    """
    if max_order < 0:
        raise ValueError(f"max_order must be >= 0, got {max_order}")
    n = graph.vertex_count
    adj = graph.adjacency
    deg = [len(nbrs) for nbrs in adj]
    counts: list[dict[tuple[int, ...], int]] = [defaultdict(int) for _ in range(max_order + 1)]
    expansions = 0
    for start in range(n):
        expansions += 1
        if expansions > budget:
            raise BudgetExceededError(f"node-expansion budget {budget} exceeded")
        counts[0][(deg[start],)] += 1
        if max_order == 0:
            continue
        visited = bytearray(n)
        visited[start] = 1
        verts = [start]
        degs = [deg[start]]
        stack = [iter(adj[start])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                visited[verts.pop()] = 0
                degs.pop()
                continue
            if visited[w]:
                continue
            expansions += 1
            if expansions > budget:
                raise BudgetExceededError(f"node-expansion budget {budget} exceeded")
            visited[w] = 1
            verts.append(w)
            degs.append(deg[w])
            length = len(verts) - 1
            if start < w:
                seq = tuple(degs)
                rev = seq[::-1]
                counts[length][seq if seq <= rev else rev] += 1
            if length < max_order:
                stack.append(iter(adj[w]))
            else:
                visited[w] = 0
                verts.pop()
                degs.pop()
    return [Census(order=h, entries=dict(c)) for h, c in enumerate(counts)]


def path_census(graph: Graph, order: int, budget: int = DEFAULT_BUDGET) -> Census:
    """Census of canonical degree sequences over all paths of one order."""
    return census_series(graph, order, budget)[order]


def longest_path_length(graph: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Length of the longest simple path, by exhaustive search."""
    n = graph.vertex_count
    adj = graph.adjacency
    best = 0
    expansions = 0
    for start in range(n):
        expansions += 1
        if expansions > budget:
            raise BudgetExceededError(f"node-expansion budget {budget} exceeded")
        visited = bytearray(n)
        visited[start] = 1
        verts = [start]
        stack = [iter(adj[start])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                visited[verts.pop()] = 0
                continue
            if visited[w]:
                continue
            expansions += 1
            if expansions > budget:
                raise BudgetExceededError(f"node-expansion budget {budget} exceeded")
            visited[w] = 1
            verts.append(w)
            if len(verts) - 1 > best:
                best = len(verts) - 1
                if best == n - 1:
                    return best
            stack.append(iter(adj[w]))
    return best
