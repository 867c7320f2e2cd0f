"""Isomorph-free generation of small trees and bicyclic graphs, plus the
decomposition of a bicyclic graph into its pendant-free core and attached
trees.

Bicyclic graphs are generated constructively: every pendant-free bicyclic
core shape (two disjoint cycles joined by a path, two cycles sharing a
vertex, or a theta graph) of at most n vertices is built, all rooted
forests distributing the remaining vertices over the core are attached,
and the results are deduplicated by canonical certificate.  An
independent labelled-graph generator (see :mod:`connsets.crosscheck`)
validates this pipeline for small n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .canon import Certificate, canonical_certificate
from .errors import ContractViolationError, ResourceCapError
from .graphs import (
    Graph,
    bits,
    components,
    cut_vertices,
    is_connected,
    mask_of,
    pendant_vertices,
    subgraph,
)

DEFAULT_BICYCLIC_CAP = 11
DEFAULT_TREE_CAP = 10


# ---------------------------------------------------------------------------
# Rooted and free trees


def rooted_tree_level_sequences(size: int) -> Iterator[tuple[int, ...]]:
    """All canonical level sequences of rooted trees on ``size`` vertices.

    Successor computation on the lexicographically decreasing sequence of
    level sequences; each rooted tree shape appears exactly once.
    """
    if size < 1:
        raise ContractViolationError(f"rooted trees need size >= 1, got {size}")
    levels = list(range(1, size + 1))
    yield tuple(levels)
    if size <= 2:
        return
    while True:
        p = max((i for i in range(size) if levels[i] > 2), default=-1)
        if p < 0:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        for i in range(p, size):
            levels[i] = levels[i - (p - q)]
        yield tuple(levels)


def tree_edges_from_levels(levels: tuple[int, ...]) -> list[tuple[int, int]]:
    """Edges of the rooted tree a level sequence describes (root is 0)."""
    last_at_level: dict[int, int] = {levels[0]: 0}
    edges = []
    for v in range(1, len(levels)):
        lvl = levels[v]
        edges.append((last_at_level[lvl - 1], v))
        last_at_level[lvl] = v
    return edges


def enumerate_trees(n: int, cap: int = DEFAULT_TREE_CAP) -> list[Graph]:
    """All isomorphism classes of free trees on ``n`` vertices.

    Rooted shapes are generated by level sequence and collapsed to free
    trees by certificate; results are sorted by certificate.
    """
    if n < 1:
        raise ContractViolationError(f"trees need n >= 1, got {n}")
    if n > cap:
        raise ResourceCapError(f"tree enumeration capped at n <= {cap}, got {n}")
    seen: dict[Certificate, Graph] = {}
    for levels in rooted_tree_level_sequences(n):
        t = Graph.from_edges(n, tree_edges_from_levels(levels))
        seen.setdefault(canonical_certificate(t), t)
    return [seen[c] for c in sorted(seen)]


# ---------------------------------------------------------------------------
# Core extraction


@dataclass(frozen=True)
class CoreClassification:
    """A bicyclic graph decomposed into its pendant-free core plus the
    rooted trees hanging off the core vertices.

    ``core`` is reindexed; ``core_vertices`` maps new core ids to the ids
    in the parent graph.  ``attachments`` maps every parent-graph core
    vertex to the edge set (parent labels) of its hanging tree, empty for
    a trivial attachment.  ``kind`` is "I", "II" or "III" with the shape
    parameters (p, q, r), (p, q) or (a, b, c).
    """

    core: Graph
    core_vertices: tuple[int, ...]
    kind: str
    params: tuple[int, ...]
    attachments: dict[int, tuple[tuple[int, int], ...]]

    def reassembled_edges(self, g: Graph) -> list[tuple[int, int]]:
        """All edges of the parent graph, rebuilt from core + attachments."""
        core_old = set(self.core_vertices)
        edges = [
            tuple(sorted((self.core_vertices[u], self.core_vertices[v])))
            for u, v in self.core.edges()
        ]
        for root in sorted(core_old):
            edges.extend(tuple(sorted(e)) for e in self.attachments[root])
        return sorted(edges)


def _require_bicyclic(g: Graph) -> None:
    if not is_connected(g) or g.edge_count != g.n + 1:
        raise ContractViolationError(
            f"expected a bicyclic graph (connected, e = n + 1), "
            f"got n={g.n}, e={g.edge_count}"
        )


def _bridges(g: Graph, domain: int) -> list[tuple[int, int]]:
    """Bridge edges of the subgraph induced by ``domain`` (assumed connected)."""
    out = []
    verts = list(bits(domain))
    for v in verts:
        for u in bits(g.adj[v] & domain):
            if u <= v:
                continue
            # Temporarily drop edge (v, u) and test reachability.
            reach = 1 << v
            frontier = 1 << v
            while frontier:
                grow = 0
                rest = frontier
                while rest:
                    low = rest & -rest
                    w = low.bit_length() - 1
                    row = g.adj[w] & domain
                    if w == v:
                        row &= ~(1 << u)
                    elif w == u:
                        row &= ~(1 << v)
                    grow |= row
                    rest ^= low
                frontier = grow & domain & ~reach
                reach |= frontier
            if not reach >> u & 1:
                out.append((v, u))
    return out


def _classify_core(core: Graph) -> tuple[str, tuple[int, ...]]:
    """Type and shape parameters of a pendant-free bicyclic graph."""
    degs = core.degrees()
    cuts = cut_vertices(core)
    if cuts == 0:
        # Theta: two hubs of degree three joined by three disjoint paths.
        hubs = [v for v in range(core.n) if degs[v] == 3]
        assert len(hubs) == 2, "theta core must have exactly two branch vertices"
        h1, h2 = hubs
        rest = core.vertex_mask & ~(1 << h1) & ~(1 << h2)
        lengths = [comp.bit_count() + 2 for comp in components(core, rest)] if rest else []
        if core.has_edge(h1, h2):
            lengths.append(2)
        return "III", tuple(sorted(lengths))
    if max(degs) == 4:
        shared = degs.index(4)
        rest = core.vertex_mask & ~(1 << shared)
        sizes = sorted(comp.bit_count() + 1 for comp in components(core, rest))
        assert len(sizes) == 2
        return "II", tuple(sizes)
    bridges = _bridges(core, core.vertex_mask)
    drop = [0] * core.n
    for v, u in bridges:
        drop[v] |= 1 << u
        drop[u] |= 1 << v
    stripped = Graph(core.n, tuple(core.adj[v] & ~drop[v] for v in range(core.n)))
    cycle_sizes = sorted(
        comp.bit_count()
        for comp in components(stripped, stripped.vertex_mask)
        if comp.bit_count() > 1
    )
    assert len(cycle_sizes) == 2
    return "I", (cycle_sizes[0], cycle_sizes[1], len(bridges) + 1)


def pendant_free_core(g: Graph) -> tuple[int, dict[int, tuple[tuple[int, int], ...]]]:
    """Iteratively strip degree-one vertices from any connected graph
    that contains a cycle.

    Returns the mask of the surviving (pendant-free) core and, for every
    core vertex, the edges of the stripped tree hanging from it.
    """
    if not is_connected(g):
        raise ContractViolationError("core extraction requires a connected graph")
    if g.edge_count < g.n:
        raise ContractViolationError(
            "core extraction requires at least one cycle (trees strip to nothing)"
        )
    remaining = g.vertex_mask
    # parent_of[v]: the neighbour v was hanging from when stripped.
    parent_of: dict[int, int] = {}
    while True:
        pend = 0
        for v in bits(remaining):
            if (g.adj[v] & remaining).bit_count() == 1:
                pend |= 1 << v
        if pend == 0:
            break
        for v in bits(pend):
            parent_of[v] = (g.adj[v] & remaining).bit_length() - 1
        remaining &= ~pend

    # Walk each stripped vertex up to its core anchor.
    def anchor(v: int) -> int:
        while not remaining >> v & 1:
            v = parent_of[v]
        return v

    attachments: dict[int, list[tuple[int, int]]] = {v: [] for v in bits(remaining)}
    for v, parent in parent_of.items():
        attachments[anchor(v)].append((parent, v))
    return remaining, {
        root: tuple(sorted(edges)) for root, edges in attachments.items()
    }


def extract_core(g: Graph) -> CoreClassification:
    """Strip pendant vertices until none remain and classify the residue.

    The stripped vertices are recorded as rooted trees attached to the
    core vertices they hang from.
    """
    _require_bicyclic(g)
    remaining, attachments = pendant_free_core(g)
    core, core_vertices = subgraph(g, remaining)
    kind, params = _classify_core(core)
    return CoreClassification(core, core_vertices, kind, params, attachments)


# ---------------------------------------------------------------------------
# Bicyclic generation


def _core_graphs(n: int) -> Iterator[Graph]:
    """Every pendant-free bicyclic shape on at most ``n`` vertices."""
    from .families import FamilySpec, build

    # Two cycles sharing a vertex: p + q - 1 vertices.
    for p in range(3, n):
        for q in range(p, n + 2 - p):
            yield build(FamilySpec("typeII", (p, q)))
    # Two disjoint cycles joined by a path on r >= 2 vertices.
    for p in range(3, n):
        for q in range(p, n - p + 1):
            for r in range(2, n + 3 - p - q):
                yield build(FamilySpec("dumbbell", (p, q, r)))
    # Theta graphs: a + b + c - 4 vertices.
    for a in range(2, n):
        for b in range(max(a, 3), n):
            for c in range(b, n + 5 - a - b):
                yield build(FamilySpec("theta", (a, b, c)))


@lru_cache(maxsize=None)
def _rooted_trees(size: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    return tuple(
        tuple(tree_edges_from_levels(levels))
        for levels in rooted_tree_level_sequences(size)
    )


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _with_attachments(core: Graph, extra: int) -> Iterator[Graph]:
    """Attach every distribution of ``extra`` vertices as rooted trees."""
    m = core.n
    core_edges = core.edges()
    for sizes in _compositions(extra, m):
        offsets = []
        nxt = m
        for s in sizes:
            offsets.append(nxt)
            nxt += s
        choices = [_rooted_trees(s + 1) for s in sizes]
        for combo in itertools.product(*choices):
            edges = list(core_edges)
            for idx, tree in enumerate(combo):
                ids = [idx] + list(range(offsets[idx], offsets[idx] + sizes[idx]))
                edges.extend((ids[u], ids[v]) for u, v in tree)
            yield Graph.from_edges(m + extra, edges)


@lru_cache(maxsize=16)
def _enumerate_bicyclic_cached(n: int) -> tuple[Graph, ...]:
    seen: dict[Certificate, Graph] = {}
    for core in _core_graphs(n):
        for g in _with_attachments(core, n - core.n):
            seen.setdefault(canonical_certificate(g), g)
    return tuple(seen[c] for c in sorted(seen))


def enumerate_bicyclic(n: int, cap: int = DEFAULT_BICYCLIC_CAP) -> list[Graph]:
    """One representative per isomorphism class of n-vertex bicyclic
    graphs, in certificate order."""
    if n < 4:
        raise ContractViolationError(
            f"bicyclic graphs have at least four vertices, got n={n}"
        )
    if n > cap:
        raise ResourceCapError(
            f"bicyclic enumeration capped at n <= {cap}, got {n}; "
            "raise the cap explicitly to proceed"
        )
    return list(_enumerate_bicyclic_cached(n))
