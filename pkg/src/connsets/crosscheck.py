"""Independent labelled-graph generator used to cross-check enumeration.

This path deliberately shares nothing with the constructive generator in
:mod:`connsets.enumeration`: it walks every labelled graph on ``n``
vertices with ``n + 1`` edges (as bitmasks over the edge slots of the
complete graph), keeps the connected ones, and partitions them into
isomorphism classes by sweeping vertex-permutation orbits.  Orbits are
resolved with vectorised bit arithmetic, so the n = 8 sweep over the
6.9 million edge subsets stays in the seconds range.

Not exposed through the command line; it exists as a test oracle and as
the exhaustiveness guard of the verification harness.
"""

from __future__ import annotations

import bisect
import itertools
from functools import lru_cache

import numpy as np

from .canon import canonical_certificate
from .errors import ResourceCapError
from .graphs import Graph

MAX_CROSSCHECK_N = 8

_CHUNK = 1 << 19


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _connected_edge_masks(n: int, m: int) -> np.ndarray:
    """Edge masks of all connected labelled graphs on ``n`` vertices with
    exactly ``m`` edges, as a sorted uint64 array."""
    slots = _edge_slots(n)
    keep: list[np.ndarray] = []
    combos = itertools.combinations(range(len(slots)), m)
    while True:
        chunk = list(itertools.islice(combos, _CHUNK))
        if not chunk:
            break
        idx = np.array(chunk, dtype=np.int64)
        masks = np.zeros(len(chunk), dtype=np.uint64)
        for col in range(m):
            masks |= np.uint64(1) << idx[:, col].astype(np.uint64)
        # Per-vertex neighbour masks.
        adj = np.zeros((len(chunk), n), dtype=np.uint64)
        for e, (u, v) in enumerate(slots):
            present = (masks >> np.uint64(e)) & np.uint64(1)
            adj[:, u] |= present << np.uint64(v)
            adj[:, v] |= present << np.uint64(u)
        # Frontier expansion from vertex 0, n - 1 rounds.
        reach = np.ones(len(chunk), dtype=np.uint64)
        for _ in range(n - 1):
            grow = reach.copy()
            for v in range(n):
                sel = (reach >> np.uint64(v)) & np.uint64(1)
                grow |= adj[:, v] * sel
            reach = grow
        full = np.uint64((1 << n) - 1)
        keep.append(masks[reach == full])
    if not keep:
        return np.zeros(0, dtype=np.uint64)
    out = np.concatenate(keep)
    out.sort()
    return out


def _permutation_edge_maps(n: int) -> np.ndarray:
    """Row p, column e: the edge slot that permutation p sends slot e to."""
    slots = _edge_slots(n)
    slot_index = {uv: k for k, uv in enumerate(slots)}
    perms = list(itertools.permutations(range(n)))
    table = np.zeros((len(perms), len(slots)), dtype=np.int8)
    for p, perm in enumerate(perms):
        for e, (u, v) in enumerate(slots):
            a, b = perm[u], perm[v]
            table[p, e] = slot_index[(min(a, b), max(a, b))]
    return table


def _graph_from_mask(n: int, mask: int) -> Graph:
    slots = _edge_slots(n)
    return Graph.from_edges(n, [slots[e] for e in range(len(slots)) if mask >> e & 1])


@lru_cache(maxsize=None)
def labeled_bicyclic_classes(n: int) -> tuple[tuple[str, int], ...]:
    """Isomorphism classes of n-vertex bicyclic graphs from the labelled
    sweep: sorted (certificate text, labelled orbit size) pairs.

    The orbit sizes sum to the number of connected labelled graphs, which
    pins down that the orbit partition was exhaustive.
    """
    if not 4 <= n <= MAX_CROSSCHECK_N:
        raise ResourceCapError(
            f"labelled cross-check supports 4 <= n <= {MAX_CROSSCHECK_N}, got {n}"
        )
    masks = _connected_edge_masks(n, n + 1)
    perm_maps = _permutation_edge_maps(n)
    seen = np.zeros(len(masks), dtype=bool)
    classes: list[tuple[str, int]] = []
    cursor = 0
    while True:
        while cursor < len(masks) and seen[cursor]:
            cursor += 1
        if cursor == len(masks):
            break
        rep = int(masks[cursor])
        images = np.zeros(perm_maps.shape[0], dtype=np.uint64)
        for e in range(perm_maps.shape[1]):
            if rep >> e & 1:
                images |= np.uint64(1) << perm_maps[:, e].astype(np.uint64)
        orbit = np.unique(images)
        pos = np.searchsorted(masks, orbit)
        if not np.array_equal(masks[pos], orbit):
            raise AssertionError("orbit member missing from the labelled sweep")
        if seen[pos].any():
            raise AssertionError("orbit overlaps a previously swept class")
        seen[pos] = True
        cert = canonical_certificate(_graph_from_mask(n, rep))
        classes.append((cert.text, len(orbit)))
    total = sum(size for _, size in classes)
    if total != len(masks):
        raise AssertionError("orbit sizes do not cover the labelled sweep")
    return tuple(sorted(classes))


def labeled_bicyclic_certificates(n: int) -> tuple[str, ...]:
    return tuple(text for text, _ in labeled_bicyclic_classes(n))


def labeled_tree_certificates(n: int) -> tuple[str, ...]:
    """Certificates of all n-vertex trees, via the sequence-to-tree
    bijection on labelled trees.

    Independent of the level-sequence generator; used only in tests.
    """
    if n == 1:
        return (canonical_certificate(Graph.from_edges(1, [])).text,)
    if n == 2:
        return (canonical_certificate(Graph.from_edges(2, [(0, 1)])).text,)
    certs = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        work = list(seq)
        leaves = sorted(v for v in range(n) if degree[v] == 1)
        for v in work:
            leaf = leaves.pop(0)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                bisect.insort(leaves, v)
        edges.append((leaves[0], leaves[1]))
        certs.add(canonical_certificate(Graph.from_edges(n, edges)).text)
    return tuple(sorted(certs))
