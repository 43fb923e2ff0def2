"""Equitable and semi-equitable colorings of bounded-degree bipartite graphs.

The constructive path starts from the bipartition, splits both sides into
class chunks, then rebalances by shifting vertices along chains of
conflict-free moves between classes.  Components where the chain search
stalls fall back to an exact search (small components only); complete
balanced bipartite components K_{q,q} with q odd are genuinely infeasible
for q classes and are surfaced as errors, or removed beforehand by the
one-vertex swap repair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    ClassCountMismatch,
    DegreeTooHigh,
    EquitableInfeasible,
    InternalExhaustion,
    InvalidParams,
    K33Component,
)
from .graph import BipartiteGraph, VertexSet, as_members, connected_components, induced_subgraph
from .matching import check_independent, independence_number

_EXACT_LIMIT = 24  # largest component handed to the exact fallback
_EXACT_NODE_CAP = 2_000_000


@dataclass(frozen=True)
class Coloring:
    """An ordered partition of vertices into (possibly empty) classes."""

    classes: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def size_type(self) -> tuple[int, ...]:
        """Class sizes in non-increasing order."""
        return tuple(sorted(self.sizes(), reverse=True))

    @property
    def n(self) -> int:
        return sum(self.sizes())


@dataclass(frozen=True)
class ColoringKind:
    kind: str  # "equitable" | "semi_equitable" | "arbitrary"
    oversized_index: int | None = None


def classify_coloring(coloring: Coloring) -> ColoringKind:
    """Classify by class sizes: balanced, balanced-after-one-removal,
    or neither."""
    sizes = coloring.sizes()
    if max(sizes) - min(sizes) <= 1:
        return ColoringKind("equitable")
    n, k = coloring.n, coloring.k
    regular = {n // k, -(-n // k)}
    for i, s in enumerate(sizes):
        if s in regular:
            continue
        rest = sizes[:i] + sizes[i + 1 :]
        if max(rest) - min(rest) <= 1:
            return ColoringKind("semi_equitable", oversized_index=i)
    return ColoringKind("arbitrary")


def assert_proper(graph: BipartiteGraph, coloring: Coloring) -> None:
    """Defect guard: classes partition V and contain no edge."""
    member = {}
    for i, cls in enumerate(coloring.classes):
        for v in cls:
            assert v not in member, f"vertex {v} in two classes"
            member[v] = i
    assert len(member) == graph.n, "classes do not cover all vertices"
    for u, v in graph.edges:
        assert member[u] != member[v], f"edge ({u},{v}) inside class {member[u]}"


# ---------------------------------------------------------------------------
# per-component constructive coloring


def _chunks(seq: list[int], parts: int) -> list[list[int]]:
    base, extra = divmod(len(seq), parts)
    out, at = [], 0
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        out.append(seq[at : at + size])
        at += size
    return out


def _movable_vertex(graph, cls: set[int], member: list[int], target: int):
    for v in sorted(cls):
        if all(member[u] != target for u in graph.adj[v]):
            return v
    return None


def _rebalance(graph: BipartiteGraph, classes: list[set[int]]) -> bool:
    """Equalize class sizes by chains of conflict-free single-vertex moves.

    Each round runs a breadth-first search over classes (edge c->d when
    some vertex of c has no neighbor in d) from every largest class to
    any class at least 2 below the maximum, then applies the chain
    target-end first so every certified move stays conflict-free.
    """
    k = len(classes)
    member = [0] * graph.n
    for i, cls in enumerate(classes):
        for v in cls:
            member[v] = i
    for _ in range(2 * graph.n + 10):
        sizes = [len(c) for c in classes]
        high = max(sizes)
        if high - min(sizes) <= 1:
            return True
        parent: dict[int, tuple[int, int] | None] = {
            i: None for i in range(k) if sizes[i] == high
        }
        queue = deque(sorted(parent))
        goal = None
        while queue and goal is None:
            c = queue.popleft()
            for d in range(k):
                if d in parent or d == c:
                    continue
                v = _movable_vertex(graph, classes[c], member, d)
                if v is None:
                    continue
                parent[d] = (c, v)
                if sizes[d] <= high - 2:
                    goal = d
                    break
                queue.append(d)
        if goal is None:
            return False
        chain = []
        c = goal
        while parent[c] is not None:
            frm, v = parent[c]
            chain.append((v, frm, c))
            c = frm
        for v, frm, to in chain:  # goal end first keeps certified moves valid
            classes[frm].discard(v)
            classes[to].add(v)
            member[v] = to
    return False


def _exact_component_coloring(graph: BipartiteGraph, k: int):
    """Complete backtracking search for a balanced k-coloring of a small
    component.  Returns class lists, or None when genuinely infeasible."""
    n = graph.n
    base, extra = divmod(n, k)
    caps = [base + (1 if i < extra else 0) for i in range(k)]
    order = sorted(range(n), key=lambda v: (-len(graph.adj[v]), v))
    member = [-1] * n
    nodes = 0

    def place(idx: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > _EXACT_NODE_CAP:
            raise InternalExhaustion("exact coloring fallback exceeded its node cap")
        if idx == n:
            return True
        v = order[idx]
        for c in range(k):
            if caps[c] == 0 or any(member[u] == c for u in graph.adj[v]):
                continue
            caps[c] -= 1
            member[v] = c
            if place(idx + 1):
                return True
            caps[c] += 1
            member[v] = -1
        return False

    if not place(0):
        return None
    classes: list[list[int]] = [[] for _ in range(k)]
    for v in range(n):
        classes[member[v]].append(v)
    return classes


def _color_component(graph: BipartiteGraph, k: int) -> list[list[int]]:
    left = [v for v in range(graph.n) if graph.side[v] == "L"]
    right = [v for v in range(graph.n) if graph.side[v] == "R"]
    if not right:
        splits = [k]
    else:
        ideal = max(1, min(k - 1, round(k * len(left) / graph.n)))
        splits = sorted({ideal, max(1, ideal - 1), min(k - 1, ideal + 1)})
    for a in splits:
        classes = [set(c) for c in _chunks(left, a) + _chunks(right, k - a)]
        if _rebalance(graph, classes):
            return [sorted(c) for c in classes]
    if graph.n <= _EXACT_LIMIT:
        exact = _exact_component_coloring(graph, k)
        if exact is None:
            raise InternalExhaustion(
                f"no balanced {k}-coloring exists for a {graph.n}-vertex component"
            )
        return exact
    raise InternalExhaustion(
        f"rebalancing stalled on a {graph.n}-vertex component (> exact fallback limit)"
    )


def _is_complete_balanced(graph: BipartiteGraph, q: int) -> bool:
    """Is this (connected) graph exactly K_{q,q}?"""
    return (
        graph.n == 2 * q
        and graph.m == q * q
        and all(len(a) == q for a in graph.adj)
    )


# ---------------------------------------------------------------------------
# public coloring operations


def equitable_k_coloring(graph: BipartiteGraph, k: int) -> Coloring:
    """Proper k-coloring with class sizes differing by at most one.

    Needs max degree <= k; when k is odd, components equal to K_{k,k}
    are impossible and reported via K33Component.
    """
    if k < 1:
        raise InvalidParams("need k >= 1 classes")
    for v in range(graph.n):
        if graph.degree(v) > k:
            raise DegreeTooHigh(v, graph.degree(v), k)
    comps = connected_components(graph)
    if k >= 3 and k % 2 == 1:
        for comp in comps:
            if _is_complete_balanced(comp.graph, k):
                raise K33Component(comp.vertices, k)
    parts = []
    for comp in comps:
        local = _color_component(comp.graph, k)
        parts.append(
            Coloring(tuple(comp.to_parent(cls) for cls in local))
        )
    merged = combine_equitable(parts, k)
    assert_proper(graph, merged)
    assert max(merged.sizes()) - min(merged.sizes()) <= 1
    return merged


def equitable_2_coloring(graph: BipartiteGraph) -> Coloring:
    """Balanced 2-coloring of a graph of maximum degree 2 (disjoint paths
    and even cycles, isolated vertices allowed)."""
    return equitable_k_coloring(graph, 2)


def equitable_3_coloring(graph: BipartiteGraph) -> Coloring:
    """Balanced 3-coloring of a graph of maximum degree 3.

    Raises K33Component (with the offending component) when some
    component is the complete balanced bipartite graph on 3+3 vertices,
    the one obstruction at this degree.
    """
    return equitable_k_coloring(graph, 3)


def equitable_4_coloring(graph: BipartiteGraph) -> Coloring:
    """Balanced 4-coloring of a graph of maximum degree 4 (always exists)."""
    return equitable_k_coloring(graph, 4)


def _exceptional_repair(graph: BipartiteGraph, members: frozenset[int], q: int) -> frozenset[int]:
    """Swap one vertex per K_{q,q} component of G - members into the set.

    Every vertex of such a component has q neighbors inside it, hence at
    most one outside, and at least one inside the (maximum) set -- so a
    swap candidate with a unique set-neighbor always exists on valid
    input.  Iterates until no K_{q,q} component remains.
    """
    for _ in range(graph.n // (2 * q) + 2):
        rest = induced_subgraph(graph, members)
        bad = None
        for comp in connected_components(rest.graph):
            if _is_complete_balanced(comp.graph, q):
                bad = sorted(rest.vertices[local] for local in comp.vertices)
                break
        if bad is None:
            return frozenset(members)
        for v in bad:
            inside = [u for u in graph.adj[v] if u in members]
            if len(inside) == 1:
                members = (members - {inside[0]}) | {v}
                break
        else:
            raise EquitableInfeasible(
                f"no swap vertex with a unique neighbor in the set for component {bad}"
            )
    raise InternalExhaustion("component swap repair did not converge")


def k33_repair(graph: BipartiteGraph, independent_set) -> VertexSet:
    """Adjust a maximum independent set so G minus it has no K_{3,3}
    component, swapping one component vertex for its unique neighbor in
    the set (size and independence are preserved).

    The input must be independent and maximum; anything else raises
    NotIndependent / NotMaximum.
    """
    for v in range(graph.n):
        if graph.degree(v) > 4:
            raise DegreeTooHigh(v, graph.degree(v), 4)
    members = as_members(independent_set)
    check_independent(graph, members)
    if len(members) != independence_number(graph):
        from .errors import NotMaximum

        raise NotMaximum(
            f"set has {len(members)} vertices, maximum is {independence_number(graph)}"
        )
    repaired = _exceptional_repair(graph, members, 3)
    return VertexSet(repaired, tag="independent")


def combine_equitable(parts: list[Coloring], k: int) -> Coloring:
    """Merge per-component balanced colorings into one balanced coloring.

    Components are processed largest first; within a component its
    classes, largest first, go to the globally smallest slots.  With
    per-part spreads <= 1 the merged spread stays <= 1.
    """
    slots: list[set[int]] = [set() for _ in range(k)]
    seen: set[int] = set()
    order = sorted(range(len(parts)), key=lambda i: (-parts[i].n, i))
    for i in order:
        part = parts[i]
        if part.k != k:
            raise ClassCountMismatch(k, part.k)
        sizes = part.sizes()
        if sizes and max(sizes) - min(sizes) > 1:
            raise InvalidParams(f"input coloring {i} is not equitable: sizes {sizes}")
        if any(v in seen for cls in part.classes for v in cls):
            raise InvalidParams("input colorings overlap")
        seen.update(v for cls in part.classes for v in cls)
        by_size = sorted(range(k), key=lambda j: (-len(part.classes[j]), j))
        by_load = sorted(range(k), key=lambda j: (len(slots[j]), j))
        for cls_idx, slot_idx in zip(by_size, by_load):
            slots[slot_idx].update(part.classes[cls_idx])
    return Coloring(tuple(frozenset(s) for s in slots))


__all__ = [
    "Coloring",
    "ColoringKind",
    "classify_coloring",
    "assert_proper",
    "equitable_2_coloring",
    "equitable_3_coloring",
    "equitable_4_coloring",
    "equitable_k_coloring",
    "k33_repair",
    "combine_equitable",
]
