"""Bipartite incompatibility graphs: validation, components, generators, file format.

Vertices are jobs 0..n-1; an edge means the two jobs may not share a machine.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    DuplicateEdge,
    GraphSyntaxError,
    InvalidParams,
    NotBipartite,
    SelfLoop,
)

Edge = tuple[int, int]


class BipartiteGraph:
    """Immutable undirected bipartite graph on dense vertex ids 0..n-1.

    The bipartition is computed once at construction by breadth-first
    2-coloring and cached as a per-vertex "L"/"R" label.  Within each
    connected component the side named "L" is the larger one; on a tie,
    the side containing the component's smallest vertex id.  Isolated
    vertices are accepted (and labeled "L") but reported by
    :meth:`isolated_vertices` so callers can reject them.
    """

    __slots__ = ("n", "edges", "side", "adj")

    def __init__(self, n: int, edges):
        if n < 0:
            raise InvalidParams(f"vertex count must be non-negative, got n={n}")
        seen: set[Edge] = set()
        norm: list[Edge] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParams(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise SelfLoop(u)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdge(e)
            seen.add(e)
            norm.append(e)
        norm.sort()
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(norm)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.side: tuple[str, ...] = self._two_color()

    def _two_color(self) -> tuple[str, ...]:
        color = [-1] * self.n
        parent = [-1] * self.n
        side = [""] * self.n
        for root in range(self.n):
            if color[root] != -1:
                continue
            color[root] = 0
            comp = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        parent[v] = u
                        comp.append(v)
                        queue.append(v)
                    elif color[v] == color[u]:
                        raise NotBipartite(_odd_cycle(parent, u, v))
            zero = sum(1 for v in comp if color[v] == 0)
            # root has color 0 and the smallest id in its component, so
            # ties go to the root's side.
            big = 0 if zero >= len(comp) - zero else 1
            for v in comp:
                side[v] = "L" if color[v] == big else "R"
        return tuple(side)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.adj[v])

    def vertices_on_side(self, label: str) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.side[v] == label)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (for the exact search kernels)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"BipartiteGraph(n={self.n}, m={self.m})"


def _odd_cycle(parent: list[int], u: int, v: int) -> list[int]:
    """Reconstruct the odd cycle closed by the non-tree edge (u, v)."""
    path_u, path_v = [u], [v]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    # drop the common tail down to the lowest common ancestor
    while len(path_u) > 1 and len(path_v) > 1 and path_u[-2] == path_v[-2]:
        path_u.pop()
        path_v.pop()
    return path_u + path_v[-2::-1]


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices with a role label (independent / cover / class)."""

    members: frozenset[int]
    tag: str = ""

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v):
        return v in self.members


def as_members(vertices) -> frozenset[int]:
    """Accept a VertexSet or any iterable of vertex ids."""
    if isinstance(vertices, VertexSet):
        return vertices.members
    return frozenset(vertices)


def is_independent(graph: BipartiteGraph, vertices) -> bool:
    members = as_members(vertices)
    return all(not (u in members and v in members) for u, v in graph.edges)


def build_graph(n: int, edges) -> BipartiteGraph:
    """Validate and build an incompatibility graph.

    Raises SelfLoop, DuplicateEdge, InvalidParams (ids out of range, or
    n < 1) or NotBipartite (with the odd cycle as witness).  Degree
    bounds are not enforced here; the scheduling entry points check what
    they need.
    """
    if n < 1:
        raise InvalidParams(f"need at least one vertex, got n={n}")
    return BipartiteGraph(n, edges)


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph together with its map back to parent ids.

    ``vertices[i]`` is the parent id of local vertex ``i``.
    """

    graph: BipartiteGraph
    vertices: tuple[int, ...]

    def to_parent(self, local_vertices) -> frozenset[int]:
        return frozenset(self.vertices[v] for v in local_vertices)


def induced_subgraph(graph: BipartiteGraph, remove) -> Subgraph:
    """The graph minus a vertex set, with original-id mapping.

    Removing everything yields a Subgraph around an empty (n=0) graph.
    """
    gone = as_members(remove)
    if not gone <= set(range(graph.n)):
        raise InvalidParams("removal set contains unknown vertices")
    keep = [v for v in range(graph.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index
    ]
    return Subgraph(BipartiteGraph(len(keep), edges), tuple(keep))


def connected_components(graph: BipartiteGraph) -> list[Subgraph]:
    """Connected components in ascending order of their smallest vertex."""
    seen = [False] * graph.n
    comps: list[Subgraph] = []
    for root in range(graph.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in graph.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        index = {v: i for i, v in enumerate(comp)}
        edges = [
            (index[u], index[v])
            for u, v in graph.edges
            if u in index and v in index
        ]
        comps.append(Subgraph(BipartiteGraph(len(comp), edges), tuple(comp)))
    return comps


# ---------------------------------------------------------------------------
# named generator families


def _star_forest(stars: int, leaves: int) -> BipartiteGraph:
    if stars < 1 or leaves < 1:
        raise InvalidParams("star_forest needs stars >= 1 and leaves >= 1")
    edges = []
    for s in range(stars):
        center = s * (leaves + 1)
        edges.extend((center, center + i) for i in range(1, leaves + 1))
    return BipartiteGraph(stars * (leaves + 1), edges)


def _k33_with_pendants(pendants) -> BipartiteGraph:
    """K_{3,3} on vertices 0..5 (sides {0,1,2} / {3,4,5}) plus one pendant
    neighbor for each listed core vertex.  ``pendants`` is either a count
    (pendants on core vertices 0..count-1) or an iterable of core ids."""
    if isinstance(pendants, int):
        if not 0 <= pendants <= 6:
            raise InvalidParams("pendant count must be 0..6")
        chosen = tuple(range(pendants))
    else:
        chosen = tuple(sorted(set(pendants)))
        if any(not 0 <= v <= 5 for v in chosen):
            raise InvalidParams("pendant pattern must name core vertices 0..5")
    edges = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)]
    nxt = 6
    for core in chosen:
        edges.append((core, nxt))
        nxt += 1
    return BipartiteGraph(nxt, edges)


def _double_star(a: int, b: int) -> BipartiteGraph:
    if a < 0 or b < 0:
        raise InvalidParams("leaf counts must be non-negative")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(a))
    edges.extend((1, 2 + a + i) for i in range(b))
    return BipartiteGraph(2 + a + b, edges)


def _path(n: int) -> BipartiteGraph:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    return BipartiteGraph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> BipartiteGraph:
    if n < 4 or n % 2:
        raise InvalidParams("cycle must have even length >= 4")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return BipartiteGraph(n, edges)


def _random_bounded(n: int, max_deg: int, density: float, seed) -> BipartiteGraph:
    """Seeded random isolate-free bipartite graph with bounded degree.

    Sides are fixed to ceil(n/2) / floor(n/2).  A first pass gives every
    vertex one incident edge (always possible under the side/degree
    precondition); a second pass rejection-samples edges up to
    round(density * max feasible).  Same seed, same edge set.
    """
    if n < 2:
        raise InvalidParams("random_bounded needs n >= 2")
    if max_deg < 1:
        raise InvalidParams("max_deg must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise InvalidParams("density must be in [0, 1]")
    n_left = (n + 1) // 2
    n_right = n - n_left
    if n_right == 0 or n_left > n_right * max_deg or n_right > n_left * max_deg:
        raise InvalidParams(
            f"cannot avoid isolated vertices with n={n}, max_deg={max_deg}"
        )
    rng = random.Random(seed)
    deg = [0] * n
    chosen: set[Edge] = set()

    def take(u, v):
        deg[u] += 1
        deg[v] += 1
        chosen.add((u, v))

    for w in range(n):
        if deg[w]:
            continue
        on_left = w < n_left
        lo, hi = (n_left, n) if on_left else (0, n_left)
        partner = -1
        for _ in range(8):
            cand = rng.randrange(lo, hi)
            if deg[cand] < max_deg:
                partner = cand
                break
        if partner < 0:  # deterministic fallback; cannot fail (capacity argument)
            partner = next(v for v in range(lo, hi) if deg[v] < max_deg)
        take(w, partner) if on_left else take(partner, w)
    cap = min(n_left * max_deg, n_right * max_deg, n_left * n_right)
    target = max(len(chosen), round(density * cap))
    attempts = 0
    limit = 40 * target + 100
    while len(chosen) < target and attempts < limit:
        attempts += 1
        u = rng.randrange(n_left)
        v = rng.randrange(n_left, n)
        if deg[u] < max_deg and deg[v] < max_deg and (u, v) not in chosen:
            take(u, v)
    return BipartiteGraph(n, sorted(chosen))


_FAMILIES = {
    "star_forest": _star_forest,
    "k33_with_pendants": _k33_with_pendants,
    "double_star": _double_star,
    "path": _path,
    "cycle": _cycle,
    "random_bounded": _random_bounded,
}


def generate(kind: str, seed=None, **params) -> BipartiteGraph:
    """Build a graph from a named family.

    Families: star_forest(stars, leaves), k33_with_pendants(pendants),
    double_star(a, b), path(n), cycle(n), random_bounded(n, max_deg,
    density) which also requires ``seed``.
    """
    if kind not in _FAMILIES:
        raise InvalidParams(f"unknown family {kind!r}")
    if kind == "random_bounded":
        params["seed"] = seed
    try:
        return _FAMILIES[kind](**params)
    except TypeError as exc:
        raise InvalidParams(f"{kind}: {exc}") from None


# ---------------------------------------------------------------------------
# edge-list text format: "p <n> <m>" header, "e <u> <v>" lines, "c" comments


def serialize_graph(graph: BipartiteGraph) -> str:
    lines = [f"p {graph.n} {graph.m}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> BipartiteGraph:
    n = None
    declared = 0
    edges: list[Edge] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphSyntaxError(line_no, "second header line")
            if len(fields) != 3:
                raise GraphSyntaxError(line_no, "header must be 'p <n> <m>'")
            try:
                n, declared = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphSyntaxError(line_no, "header counts must be integers")
        elif fields[0] == "e":
            if n is None:
                raise GraphSyntaxError(line_no, "edge before header")
            if len(fields) != 3:
                raise GraphSyntaxError(line_no, "edge must be 'e <u> <v>'")
            try:
                edges.append((int(fields[1]), int(fields[2])))
            except ValueError:
                raise GraphSyntaxError(line_no, "edge endpoints must be integers")
        else:
            raise GraphSyntaxError(line_no, f"unknown record {fields[0]!r}")
    if n is None:
        raise GraphSyntaxError(0, "missing 'p' header")
    if len(edges) != declared:
        raise GraphSyntaxError(0, f"header declares {declared} edges, found {len(edges)}")
    return build_graph(n, edges)
