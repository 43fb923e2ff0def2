"""Maximum matching, minimum vertex cover and maximum independent set
for bipartite graphs.

The matching is found by the Hopcroft-Karp layered augmentation scheme;
the cover comes from the alternating-reachability construction that
realizes the matching/cover duality, and the independent set is its
complement.  Everything is deterministic: neighbors are scanned in
ascending id order and free vertices are processed in ascending id order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotIndependent, NotMaximum
from .graph import BipartiteGraph, VertexSet, as_members, is_independent

_INF = -1  # unvisited marker in the layered BFS


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges, stored as (u, v) pairs with u < v."""

    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def partner_map(self) -> dict[int, int]:
        partner: dict[int, int] = {}
        for u, v in self.pairs:
            partner[u] = v
            partner[v] = u
        return partner


def _pairing_arrays(graph: BipartiteGraph, matching: Matching) -> list[int]:
    """Validate a matching against the graph and return a partner array."""
    pair = [-1] * graph.n
    for u, v in matching.pairs:
        if not graph.has_edge(u, v):
            raise NotMaximum(f"pair ({u},{v}) is not an edge of the graph")
        if pair[u] != -1 or pair[v] != -1:
            raise NotMaximum(f"vertex reused by pair ({u},{v})")
        pair[u] = v
        pair[v] = u
    return pair


def _bfs_layers(graph: BipartiteGraph, left: list[int], pair: list[int],
                dist: list[int]) -> bool:
    """Layer the left side from its free vertices; True if an augmenting
    path exists (some free right vertex is reachable)."""
    queue = deque()
    for u in left:
        if pair[u] == -1:
            dist[u] = 0
            queue.append(u)
        else:
            dist[u] = _INF
    found = False
    while queue:
        u = queue.popleft()
        for v in graph.adj[u]:
            w = pair[v]
            if w == -1:
                found = True
            elif dist[w] == _INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return found


def _augment_from(graph: BipartiteGraph, root: int, pair: list[int],
                  dist: list[int]) -> bool:
    """Iterative DFS along the BFS layers; flips one augmenting path."""
    stack = [(root, iter(graph.adj[root]))]
    path: list[tuple[int, int]] = []  # (left, right) tentative pairs
    while stack:
        u, neighbors = stack[-1]
        advanced = False
        for v in neighbors:
            w = pair[v]
            if w == -1:
                path.append((u, v))
                for a, b in path:
                    pair[a] = b
                    pair[b] = a
                return True
            if dist[w] == dist[u] + 1:
                path.append((u, v))
                stack.append((w, iter(graph.adj[w])))
                advanced = True
                break
        if not advanced:
            dist[u] = _INF  # dead end; never revisit in this phase
            stack.pop()
            if path:
                path.pop()
    return False


def maximum_matching(graph: BipartiteGraph) -> Matching:
    """Maximum matching via repeated shortest augmenting-path phases.

    A final layering pass asserts that no augmenting path is left, so the
    returned matching is maximum by Berge's criterion.
    """
    left = [v for v in range(graph.n) if graph.side[v] == "L"]
    pair = [-1] * graph.n
    dist = [_INF] * graph.n
    while _bfs_layers(graph, left, pair, dist):
        for u in left:
            if pair[u] == -1:
                _augment_from(graph, u, pair, dist)
    assert not _bfs_layers(graph, left, pair, dist)
    pairs = frozenset(
        (u, pair[u]) if u < pair[u] else (pair[u], u)
        for u in left
        if pair[u] != -1
    )
    return Matching(pairs)


def _alternating_reachable(graph: BipartiteGraph, left: list[int],
                           pair: list[int]) -> tuple[set[int], bool]:
    """Vertices reachable from free left vertices by paths alternating
    non-matching / matching edges.  Also reports whether a free right
    vertex was reached (i.e. the matching is not maximum)."""
    reached = set()
    queue = deque()
    for u in left:
        if pair[u] == -1:
            reached.add(u)
            queue.append(u)
    augmenting = False
    while queue:
        u = queue.popleft()
        for v in graph.adj[u]:
            if v in reached or pair[u] == v:
                continue
            reached.add(v)
            w = pair[v]
            if w == -1:
                augmenting = True
            elif w not in reached:
                reached.add(w)
                queue.append(w)
    return reached, augmenting


def min_vertex_cover(graph: BipartiteGraph, matching: Matching) -> VertexSet:
    """Minimum vertex cover built from a maximum matching.

    Takes (L minus reachable) united with (R intersect reachable), where
    reachability alternates from the free left vertices.  Raises
    NotMaximum if the given matching still admits an augmenting path.
    """
    pair = _pairing_arrays(graph, matching)
    left = [v for v in range(graph.n) if graph.side[v] == "L"]
    reached, augmenting = _alternating_reachable(graph, left, pair)
    if augmenting:
        raise NotMaximum("an augmenting path exists for the given matching")
    cover = frozenset(
        v
        for v in range(graph.n)
        if (graph.side[v] == "L") != (v in reached)
    )
    assert len(cover) == matching.size
    assert all(u in cover or v in cover for u, v in graph.edges)
    return VertexSet(cover, tag="cover")


def max_independent_set(graph: BipartiteGraph) -> VertexSet:
    """A maximum independent set: the complement of a minimum vertex cover.

    Size equals n - |maximum matching|; independence is verified
    edge-by-edge before returning.
    """
    matching = maximum_matching(graph)
    cover = min_vertex_cover(graph, matching)
    members = frozenset(range(graph.n)) - cover.members
    for u, v in graph.edges:
        if u in members and v in members:
            raise NotIndependent((u, v))  # unreachable unless cover is wrong
    assert len(members) == graph.n - matching.size
    return VertexSet(members, tag="independent")


def independence_number(graph: BipartiteGraph) -> int:
    """alpha(G) = n - |maximum matching| (matching/cover duality)."""
    return graph.n - maximum_matching(graph).size


def check_independent(graph: BipartiteGraph, vertices) -> None:
    """Raise NotIndependent on the first adjacent pair inside the set."""
    members = as_members(vertices)
    for u, v in graph.edges:
        if u in members and v in members:
            raise NotIndependent((u, v))


__all__ = [
    "Matching",
    "maximum_matching",
    "min_vertex_cover",
    "max_independent_set",
    "independence_number",
    "check_independent",
    "is_independent",
]
