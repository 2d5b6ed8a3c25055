"""Small graph builders and reference computations shared across tests."""

from __future__ import annotations

import random

from kchi.decorated import RegionPartition
from kchi.graphs import Multigraph


def path(k: int) -> Multigraph:
    return Multigraph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Multigraph:
    return Multigraph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Multigraph:
    return Multigraph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star(s: int) -> Multigraph:
    return Multigraph(s + 1, [(0, i) for i in range(1, s + 1)])


def cocktail(k: int) -> Multigraph:
    """K_{2k} minus the perfect matching {2i, 2i+1}."""
    return Multigraph(
        2 * k,
        [(u, v) for u in range(2 * k) for v in range(u + 1, 2 * k) if u // 2 != v // 2],
    )


def random_simple(n: int, p: float, rng: random.Random) -> Multigraph:
    pairs = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Multigraph(n, pairs)


def random_multigraph(n: int, max_mult: int, p: float, rng: random.Random) -> Multigraph:
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                pairs.extend([(u, v)] * rng.randint(1, max_mult))
    return Multigraph(n, pairs)


def random_regions(g: Multigraph, palette: int, rng: random.Random) -> RegionPartition:
    """Random free/reserve/blocked split keeping |free| + |reserve| ≥ degree."""
    free, reserve, blocked = [], [], []
    for x in range(g.n):
        d = g.degree(x)
        cols = list(range(palette))
        rng.shuffle(cols)
        a = rng.randint(0, palette)
        b = rng.randint(max(0, d - a), palette - a) if a < d else rng.randint(0, palette - a)
        free.append(cols[:a])
        reserve.append(cols[a : a + b])
        blocked.append(cols[a + b :])
    return RegionPartition.from_sets(palette, free, reserve, blocked)


def brute_max_matching_size(n: int, pairs: list[tuple[int, int]]) -> int:
    """Reference maximum matching size by branch and bound."""
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i == len(pairs) or size + (len(pairs) - i) <= best:
            return
        u, v = pairs[i]
        if not used >> u & 1 and not used >> v & 1:
            rec(i + 1, used | 1 << u | 1 << v, size + 1)
        rec(i + 1, used, size)

    rec(0, 0, 0)
    return best
