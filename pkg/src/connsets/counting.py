"""Exact counts of connected induced vertex subsets.

The brute-force oracle is the ground truth of the whole package: it walks
every nonempty vertex subset of a component as a single bitmask and tests
connectivity by frontier expansion from the lowest set bit.  Everything
else (closed forms, the identification algebra, the divide-and-conquer
counter) is validated against it.

Counts of disconnected graphs are defined as the sum over components, the
convention that makes the vertex-deletion identities total.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import ContractViolationError, ResourceCapError
from .graphs import Graph, bits, components, delete_vertices, is_connected, subgraph

DEFAULT_ORACLE_CAP = 24


@dataclass(frozen=True)
class CountResult:
    """A total count, the method that produced it, and its wall time."""

    total: int
    method: str  # "oracle" | "decomposition" | "closed_form"
    elapsed: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class RootedCount:
    """Number of connected sets through a designated vertex."""

    at: int
    value: int


def _check_cap(g: Graph, cap: int | None) -> None:
    limit = DEFAULT_ORACLE_CAP if cap is None else cap
    if g.n > limit:
        raise ResourceCapError(
            f"exact enumeration over {g.n} vertices exceeds the cap of {limit}; "
            "raise the cap explicitly to proceed"
        )


def _connected_subsets(adj: tuple[int, ...], domain: int, required: int = 0) -> int:
    """Count nonempty connected subsets of ``domain`` containing ``required``.

    Enumerates the free vertices as the low bits of a counter so each
    subset costs one pass of adjacency-mask expansion.
    """
    free = list(bits(domain & ~required))
    k = len(free)
    count = 0
    for m in range(1 << k):
        s = required
        mm = m
        while mm:
            low = mm & -mm
            s |= 1 << free[low.bit_length() - 1]
            mm ^= low
        if s == 0:
            continue
        start = s & -s
        reach = start
        frontier = start
        while frontier:
            grow = 0
            rest = frontier
            while rest:
                low = rest & -rest
                grow |= adj[low.bit_length() - 1]
                rest ^= low
            frontier = grow & s & ~reach
            reach |= frontier
        if reach == s:
            count += 1
    return count


def oracle_count(g: Graph, cap: int | None = None) -> CountResult:
    """Brute-force count of connected sets (component sum if disconnected)."""
    _check_cap(g, cap)
    t0 = time.perf_counter()
    total = sum(
        _connected_subsets(g.adj, comp) for comp in components(g, g.vertex_mask)
    )
    return CountResult(total, "oracle", time.perf_counter() - t0)


def oracle_count_rooted(g: Graph, v: int, cap: int | None = None) -> RootedCount:
    """Count of connected sets containing ``v``, by direct enumeration.

    Agrees with the deletion identity N(G) - N(G - v); the identity is
    exercised by the test suite.
    """
    if not 0 <= v < g.n:
        raise ContractViolationError(f"vertex {v} out of range for n={g.n}")
    _check_cap(g, cap)
    for comp in components(g, g.vertex_mask):
        if comp >> v & 1:
            return RootedCount(v, _connected_subsets(g.adj, comp, 1 << v))
    raise AssertionError("unreachable: every vertex lies in a component")


def oracle_count_pair(g: Graph, u: int, v: int, cap: int | None = None) -> int:
    """Count of connected sets containing both ``u`` and ``v``."""
    if u == v:
        raise ContractViolationError("pair count requires two distinct vertices")
    for w in (u, v):
        if not 0 <= w < g.n:
            raise ContractViolationError(f"vertex {w} out of range for n={g.n}")
    _check_cap(g, cap)
    for comp in components(g, g.vertex_mask):
        if comp >> u & 1:
            if not comp >> v & 1:
                return 0
            return _connected_subsets(g.adj, comp, 1 << u | 1 << v)
    raise AssertionError("unreachable")


def combine_identified(n1: int, r1: int, n2: int, r2: int) -> tuple[int, int]:
    """Counts after gluing two graphs at one shared vertex.

    Given totals and rooted counts at the glue points, returns the merged
    total and the merged rooted count at the identified vertex.
    """
    for name, total, rooted in (("first", n1, r1), ("second", n2, r2)):
        if rooted < 1 or total < rooted:
            raise ContractViolationError(
                f"{name} part needs 1 <= rooted <= total, got ({total}, {rooted})"
            )
    return n1 + n2 - 1 + (r1 - 1) * (r2 - 1), r1 * r2


def extend_pendant(n_h: int, r_neighbor: int) -> int:
    """Total count after attaching one new pendant vertex.

    ``n_h`` counts the host graph, ``r_neighbor`` counts through the
    attachment vertex.
    """
    if r_neighbor < 1 or n_h < r_neighbor:
        raise ContractViolationError(
            f"need 1 <= rooted <= total, got ({n_h}, {r_neighbor})"
        )
    return n_h + 1 + r_neighbor


def tree_rooted_count(t: Graph, v: int) -> RootedCount:
    """Rooted count in a tree by the product-over-children recursion."""
    if not 0 <= v < t.n:
        raise ContractViolationError(f"vertex {v} out of range for n={t.n}")
    if t.edge_count != t.n - 1 or not is_connected(t):
        raise ContractViolationError("tree recursion requires a tree input")

    def down(node: int, parent: int) -> int:
        value = 1
        for child in bits(t.adj[node] & ~(1 << parent if parent >= 0 else 0)):
            value *= 1 + down(child, node)
        return value

    return RootedCount(v, down(v, -1))


def _tree_total(t: Graph) -> int:
    """Count connected sets of a tree: sum over vertices of the number of
    connected sets whose closest-to-root vertex is that vertex."""
    down = [0] * t.n

    # Iterative post-order from root 0.
    order: list[tuple[int, int]] = []
    stack = [(0, -1)]
    while stack:
        node, parent = stack.pop()
        order.append((node, parent))
        for child in bits(t.adj[node]):
            if child != parent:
                stack.append((child, node))
    for node, parent in reversed(order):
        value = 1
        for child in bits(t.adj[node]):
            if child != parent:
                value *= 1 + down[child]
        down[node] = value
    return sum(down)


def _shape_formula(g: Graph) -> int | None:
    """Closed form when the graph is a path, cycle, or star."""
    n, e = g.n, g.edge_count
    degs = g.degrees()
    if e == n - 1 and max(degs) <= 2:
        return n * (n + 1) // 2
    if n >= 3 and e == n and all(d == 2 for d in degs):
        return n * n - n + 1
    if n >= 3 and e == n - 1 and max(degs) == n - 1:
        return (1 << (n - 1)) + n - 1
    return None


def _smart_total(g: Graph, cap: int | None) -> int:
    return sum(
        _smart_connected(subgraph(g, comp)[0], cap)
        for comp in components(g, g.vertex_mask)
    )


def _smart_connected(g: Graph, cap: int | None) -> int:
    formula = _shape_formula(g)
    if formula is not None:
        return formula
    if g.edge_count == g.n - 1:
        return _tree_total(g)
    split = _best_cut_split(g)
    if split is not None:
        u, parts = split
        total, rooted = 1, 1
        for part in parts:
            piece, index_map = subgraph(g, part | 1 << u)
            pu = index_map.index(u)
            part_total = _smart_connected(piece, cap)
            rest, _ = delete_vertices(piece, 1 << pu)
            part_rooted = part_total - _smart_total(rest, cap)
            total, rooted = combine_identified(total, rooted, part_total, part_rooted)
        return total
    return oracle_count(g, cap).total


def _best_cut_split(g: Graph) -> tuple[int, list[int]] | None:
    """Cut vertex whose removal leaves the largest smallest component,
    ties broken by lowest id; None when 2-connected."""
    best: tuple[int, int, list[int]] | None = None
    for v in range(g.n):
        rest = g.vertex_mask & ~(1 << v)
        parts = components(g, rest)
        if len(parts) < 2:
            continue
        smallest = min(p.bit_count() for p in parts)
        if best is None or smallest > best[0]:
            best = (smallest, v, parts)
    if best is None:
        return None
    return best[1], best[2]


def smart_count(g: Graph, cap: int | None = None) -> CountResult:
    """Exact count by closed forms and cut-vertex decomposition.

    Connected input only; falls back to the oracle on 2-connected blocks
    without a formula.  Always equals ``oracle_count`` where both run.
    """
    if not is_connected(g):
        raise ContractViolationError(
            "smart_count requires a connected graph; sum over components instead"
        )
    t0 = time.perf_counter()
    formula = _shape_formula(g)
    if formula is not None:
        return CountResult(formula, "closed_form", time.perf_counter() - t0)
    total = _smart_connected(g, cap)
    return CountResult(total, "decomposition", time.perf_counter() - t0)
