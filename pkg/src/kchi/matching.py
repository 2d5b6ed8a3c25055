"""Maximum matching routines: general graphs (blossom) and bipartite (Kuhn).

Both operate on plain adjacency lists so callers can match auxiliary graphs
(complements, double covers) without building Multigraph instances.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


def maximum_matching(n: int, adj: Sequence[Sequence[int]], mate: list[int] | None = None) -> list[int]:
    """Maximum matching in a general graph via Edmonds' blossom algorithm.

    ``adj[v]`` lists the neighbours of ``v`` (a simple-graph view; parallel
    entries are harmless).  Returns the mate array, with ``-1`` for exposed
    vertices.  An initial matching may be supplied to warm-start.
    """
    if mate is None:
        mate = [-1] * n
        for v in range(n):
            if mate[v] == -1:
                for u in adj[v]:
                    if mate[u] == -1 and u != v:
                        mate[v] = u
                        mate[u] = v
                        break
    else:
        mate = list(mate)

    parent = [-1] * n
    base = list(range(n))

    def find_lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def augment_from(root: int) -> bool:
        nonlocal parent, base
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        queue = deque([root])
        in_queue[root] = True
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # odd cycle: contract the blossom
                    cur = find_lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # augmenting path found; flip it
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = nxt
                        return True
                    in_queue[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            augment_from(v)
    return mate


def matching_size(mate: Sequence[int]) -> int:
    return sum(1 for v, u in enumerate(mate) if u > v)


def bipartite_maximum_matching(
    n_left: int,
    n_right: int,
    adj: Sequence[Sequence[int]],
    mate_left: list[int] | None = None,
    mate_right: list[int] | None = None,
) -> tuple[list[int], list[int]]:
    """Maximum matching in a bipartite graph (Kuhn's augmenting paths).

    ``adj[u]`` lists right-side neighbours of left vertex ``u``.  Existing
    partial matchings warm-start the search; they are not mutated.
    """
    mate_l = [-1] * n_left if mate_left is None else list(mate_left)
    mate_r = [-1] * n_right if mate_right is None else list(mate_right)

    def try_augment(u: int, seen: list[bool]) -> bool:
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                if mate_r[w] == -1 or try_augment(mate_r[w], seen):
                    mate_l[u] = w
                    mate_r[w] = u
                    return True
        return False

    for u in range(n_left):
        if mate_l[u] == -1 and adj[u]:
            try_augment(u, [False] * n_right)
    return mate_l, mate_r
