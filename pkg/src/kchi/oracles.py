"""Exhaustive ground truth at small scale.

Everything here is deliberately brute force: these routines exist to be
obviously correct so that the clever code elsewhere can be tested against
them.  Each one refuses inputs beyond its intended scale instead of silently
degrading.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .errors import SizeGuardError
from .graphs import Multigraph


def brute_chi(g: Multigraph) -> int:
    """Exact chromatic number by branch-and-bound over colour classes."""
    if g.n > 12:
        raise SizeGuardError(f"brute_chi handles n <= 12, got {g.n}")
    if g.n == 0:
        return 0
    masks = [g.adjacency_mask(v) for v in range(g.n)]
    order = sorted(range(g.n), key=lambda v: -masks[v].bit_count())
    best = g.n
    classes: list[int] = []

    def place(i: int) -> None:
        nonlocal best
        if len(classes) >= best:
            return
        if i == g.n:
            best = len(classes)
            return
        v = order[i]
        bit = 1 << v
        for k, members in enumerate(classes):
            if not members & masks[v]:
                classes[k] = members | bit
                place(i + 1)
                classes[k] = members
        classes.append(bit)
        place(i + 1)
        classes.pop()

    place(0)
    return best


def brute_alpha(g: Multigraph) -> int:
    """Exact maximum independent set size by pruned subset search."""
    if g.n > 20:
        raise SizeGuardError(f"brute_alpha handles n <= 20, got {g.n}")
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        grow(cand & ~low & ~g.adjacency_mask(v), size + 1)
        grow(cand ^ low, size)

    grow((1 << g.n) - 1, 0)
    return best


def _simple_paths(g: Multigraph, u: int, w: int, banned: set[int]) -> Iterator[tuple[int, ...]]:
    """Simple u-w paths as edge-id tuples, shortest first, avoiding ``banned``.

    Iterative deepening keeps direct edges ahead of detours, which lets the
    backtracking in :func:`brute_immersion_exists` find cheap systems fast.
    """
    for limit in range(1, g.n):
        found_longer = False

        def walk(at: int, seen_v: int, trail: list[int]) -> Iterator[tuple[int, ...]]:
            nonlocal found_longer
            if at == w:
                yield tuple(trail)
                return
            if len(trail) == limit:
                found_longer = True
                return
            for e in g.incident(at):
                if e in banned or e in trail:
                    continue
                y = g.other_end(e, at)
                if seen_v >> y & 1:
                    continue
                trail.append(e)
                yield from walk(y, seen_v | 1 << y, trail)
                trail.pop()

        for path in walk(u, 1 << u, []):
            if len(path) == limit:
                yield path
        if not found_longer:
            return


def brute_immersion_exists(g: Multigraph, t: int) -> bool:
    """Whether some t vertices are joined by pairwise edge-disjoint paths.

    Decides existence exactly by enumerating corner sets and backtracking
    over edge-disjoint path systems, one path per corner pair.  The search
    prunes with necessary conditions only — a corner needs t-1 incident
    edges, every unsettled pair needs an unused edge per endpoint and a
    path's worth of unused edges inside its component — so the decision is
    unaffected; without them, dense near-misses take minutes instead of
    milliseconds.
    """
    if g.n > 8:
        raise SizeGuardError(f"brute_immersion_exists handles n <= 8, got {g.n}")
    if t > 5:
        raise SizeGuardError(f"brute_immersion_exists handles t <= 5, got {t}")
    if t <= 1:
        return g.n >= t

    candidates = [v for v in range(g.n) if g.degree(v) >= t - 1]
    if len(candidates) < t:
        return False

    def feasible(pairs: list[tuple[int, int]], used: set[int]) -> bool:
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        free_deg = list(g.degrees)
        for e in used:
            u, v = g.endpoints(e)
            free_deg[u] -= 1
            free_deg[v] -= 1
        for e in range(g.m):
            if e not in used:
                u, v = g.endpoints(e)
                parent[find(u)] = find(v)
        comp_edges = [0] * g.n
        for e in range(g.m):
            if e not in used:
                comp_edges[find(g.endpoints(e)[0])] += 1
        corner_load = [0] * g.n
        for u, w in pairs:
            root = find(u)
            if root != find(w):
                return False
            comp_edges[root] -= 1
            if comp_edges[root] < 0:
                return False
            corner_load[u] += 1
            corner_load[w] += 1
        return all(free_deg[v] >= k for v, k in enumerate(corner_load) if k)

    def settle(pairs: list[tuple[int, int]], used: set[int]) -> bool:
        if not pairs:
            return True
        if not feasible(pairs, used):
            return False
        u, w = pairs[0]
        for path in _simple_paths(g, u, w, used):
            if settle(pairs[1:], used | set(path)):
                return True
        return False

    def ranked_pairs(corners: tuple[int, ...]) -> list[tuple[int, int]]:
        # hardest first: no direct edge, then low combined degree
        return sorted(
            combinations(corners, 2),
            key=lambda p: (g.has_edge(*p), g.degree(p[0]) + g.degree(p[1])),
        )

    corner_sets = sorted(
        combinations(candidates, t), key=lambda cs: -sum(map(g.degree, cs))
    )
    return any(settle(ranked_pairs(cs), set()) for cs in corner_sets)
