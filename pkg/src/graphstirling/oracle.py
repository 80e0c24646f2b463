"""Brute-force ground truth for small graphs.

Everything in this module counts by direct enumeration of set
partitions in restricted-growth order, testing independence of each
block incrementally.  It shares no formulas with the closed-form
counting code, which is the point: the two routes must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import PartitionCountVector

__all__ = [
    "ExplicitGraph",
    "Lcg64",
    "MAX_ENUMERATION_VERTICES",
    "build_cycle",
    "build_empty",
    "build_path",
    "build_random_forest",
    "build_star_forest",
    "enumerate_partition_counts",
    "singleton_free_count",
]

MAX_ENUMERATION_VERTICES = 13


@dataclass(frozen=True)
class ExplicitGraph:
    """A simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            pair = (min(u, v), max(u, v))
            if pair in norm:
                raise ValueError(f"duplicate edge {pair}")
            norm.add(pair)
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks


def build_empty(n: int) -> ExplicitGraph:
    if n < 1:
        raise ValueError("need n >= 1")
    return ExplicitGraph(n)


def build_path(n: int) -> ExplicitGraph:
    if n < 1:
        raise ValueError("need n >= 1")
    return ExplicitGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def build_cycle(n: int) -> ExplicitGraph:
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    if n == 2:
        return ExplicitGraph(2, frozenset({(0, 1)}))
    edges = {(i, (i + 1) % n) for i in range(n)}
    return ExplicitGraph(n, frozenset(edges))


def build_star_forest(n: int, c: int) -> ExplicitGraph:
    """One star on n-c+1 vertices plus c-1 isolated vertices."""
    if not 1 <= c <= n:
        raise ValueError("need 1 <= c <= n")
    star = n - c + 1
    edges = frozenset((0, i) for i in range(1, star))
    return ExplicitGraph(n, edges)


class Lcg64:
    """64-bit linear congruential generator (Knuth's MMIX multiplier).

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64,
    and draws take the high 31 bits.  Fixed here so that random forests
    are reproducible across platforms and Python versions.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self.state = (seed ^ 0x9E3779B97F4A7C15) & self.MASK

    def next_below(self, bound: int) -> int:
        """Uniform-ish draw from 0..bound-1."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & self.MASK
        return (self.state >> 33) % bound


def build_random_forest(n: int, c: int, seed: int) -> ExplicitGraph:
    """A forest with c components on n vertices, deterministic per seed.

    Component sizes start at 1 and the n-c leftover vertices land in
    components chosen by the generator; each component is a random
    recursive tree (vertex j attaches to a uniformly drawn earlier
    vertex of its component).
    """
    if not 1 <= c <= n:
        raise ValueError("need 1 <= c <= n")
    rng = Lcg64(seed)
    sizes = [1] * c
    for _ in range(n - c):
        sizes[rng.next_below(c)] += 1
    edges = set()
    start = 0
    for size in sizes:
        for j in range(1, size):
            edges.add((start + rng.next_below(j), start + j))
        start += size
    return ExplicitGraph(n, frozenset(edges))


def enumerate_partition_counts(g: ExplicitGraph) -> PartitionCountVector:
    """Exhaustive counts of partitions into independent blocks.

    Guarded to 13 vertices; beyond that the walk over all set
    partitions stops being a reasonable oracle.
    """
    n = g.vertex_count
    if n > MAX_ENUMERATION_VERTICES:
        raise ValueError(f"enumeration limited to {MAX_ENUMERATION_VERTICES} vertices")
    adj = g.adjacency_masks()
    counts = [0] * (n + 1)
    blocks: list[int] = []

    def assign(v: int) -> None:
        if v == n:
            counts[len(blocks)] += 1
            return
        bit = 1 << v
        mask = adj[v]
        for i, bm in enumerate(blocks):
            if not (mask & bm):
                blocks[i] = bm | bit
                assign(v + 1)
                blocks[i] = bm
        blocks.append(bit)
        assign(v + 1)
        blocks.pop()

    assign(0)
    return PartitionCountVector(g, tuple(counts))


def singleton_free_count(n: int) -> int:
    """Partitions of an n-set with every block of size at least 2."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n > MAX_ENUMERATION_VERTICES:
        raise ValueError(f"enumeration limited to {MAX_ENUMERATION_VERTICES} elements")
    total = 0
    sizes: list[int] = []
    deficit = 0  # blocks still stuck at size 1

    def assign(v: int) -> None:
        nonlocal total, deficit
        if deficit > n - v:
            return  # not enough vertices left to fill every singleton
        if v == n:
            total += 1
            return
        for i in range(len(sizes)):
            if sizes[i] == 1:
                deficit -= 1
            sizes[i] += 1
            assign(v + 1)
            sizes[i] -= 1
            if sizes[i] == 1:
                deficit += 1
        sizes.append(1)
        deficit += 1
        assign(v + 1)
        deficit -= 1
        sizes.pop()

    assign(0)
    return total
