"""Loopless multigraph with dense integer vertex and edge identities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphError


@dataclass(frozen=True)
class Component:
    """One connected component of a spanning subgraph G[F]."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    min_degree: int
    max_degree: int

    @property
    def trivial(self) -> bool:
        return not self.edge_ids

    @property
    def regular(self) -> bool:
        return self.min_degree == self.max_degree

    @property
    def cycle_parity(self) -> str | None:
        """``"odd"``/``"even"`` when the component is a single cycle, else None.

        A 2-regular connected component is a cycle whose length equals its
        edge count; a pair of parallel edges counts as an (even) 2-cycle.
        """
        if self.regular and self.min_degree == 2:
            return "odd" if len(self.edge_ids) % 2 else "even"
        return None


class Multigraph:
    """Immutable loopless multigraph.

    Vertices are ``0..n-1``.  Edge identities are ``0..m-1`` in insertion
    order and are the currency of every certificate in this package:
    parallel edges are distinguishable only by identity.

    ``origin`` is an optional per-edge back-reference into a parent graph
    (used by :meth:`doubled` so that factor certificates can be translated
    back to the original edge identities).
    """

    __slots__ = ("n", "edges", "origin", "_inc", "_mask", "_deg", "_pair_ids")

    def __init__(
        self,
        n: int,
        pairs: Iterable[tuple[int, int]],
        origin: tuple[int, ...] | None = None,
    ):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        edges = []
        for k, (u, v) in enumerate(pairs):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {k}: endpoint out of range in ({u}, {v})")
            if u == v:
                raise GraphError(f"edge {k}: loop ({u}, {v})")
            edges.append((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(edges)
        self.origin = origin

        inc: list[list[int]] = [[] for _ in range(n)]
        mask = [0] * n
        pair_ids: dict[tuple[int, int], list[int]] = {}
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
            mask[u] |= 1 << v
            mask[v] |= 1 << u
            pair_ids.setdefault((u, v), []).append(e)
        self._inc = tuple(map(tuple, inc))
        self._mask = tuple(mask)
        self._deg = tuple(map(len, inc))
        self._pair_ids = {p: tuple(ids) for p, ids in pair_ids.items()}

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._deg[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def max_degree(self) -> int:
        return max(self._deg, default=0)

    @property
    def is_simple(self) -> bool:
        return all(len(ids) == 1 for ids in self._pair_ids.values())

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def incident(self, v: int) -> tuple[int, ...]:
        return self._inc[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._mask[u] >> v & 1)

    def multiplicity(self, u: int, v: int) -> int:
        return len(self._pair_ids.get((u, v) if u < v else (v, u), ()))

    def edge_ids_between(self, u: int, v: int) -> tuple[int, ...]:
        return self._pair_ids.get((u, v) if u < v else (v, u), ())

    def neighbours(self, v: int) -> Iterator[int]:
        mask = self._mask[v]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def adjacency_mask(self, v: int) -> int:
        return self._mask[v]

    def support_pairs(self) -> Iterator[tuple[int, int]]:
        """Distinct adjacent vertex pairs (u < v), ignoring multiplicity."""
        return iter(self._pair_ids)

    def __eq__(self, other: object) -> bool:
        """Structural equality: same vertex count and edge multiset.

        Edge identity order is deliberately ignored; certificates compare
        edges by identity against a fixed host graph, never across graphs.
        """
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.edges))))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"

    # -- derived graphs ---------------------------------------------------

    def doubled(self) -> "Multigraph":
        """The multigraph with every edge duplicated.

        Edge ``e`` of this graph yields edges ``2e`` and ``2e + 1``; the
        ``origin`` attribute of the result records that mapping.
        """
        pairs = []
        origin = []
        for e, (u, v) in enumerate(self.edges):
            pairs.append((u, v))
            pairs.append((u, v))
            origin.append(e)
            origin.append(e)
        return Multigraph(self.n, pairs, origin=tuple(origin))

    def complement(self) -> "Multigraph":
        if not self.is_simple:
            raise GraphError("complement is defined for simple graphs only")
        pairs = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self._mask[u] >> v & 1
        ]
        return Multigraph(self.n, pairs)

    def induced(self, vertices: Iterable[int]) -> tuple["Multigraph", dict[int, int], tuple[int, ...]]:
        """Induced subgraph plus its translation maps.

        Returns ``(sub, vmap, emap)`` where ``vmap`` maps old vertex
        indices to new ones and ``emap[new_edge] = old_edge``.
        """
        keep = sorted(set(vertices))
        vmap = {v: i for i, v in enumerate(keep)}
        pairs = []
        emap = []
        for e, (u, v) in enumerate(self.edges):
            if u in vmap and v in vmap:
                pairs.append((vmap[u], vmap[v]))
                emap.append(e)
        return Multigraph(len(keep), pairs), vmap, tuple(emap)

    def without_vertex(self, v: int) -> tuple["Multigraph", dict[int, int], tuple[int, ...]]:
        return self.induced(u for u in range(self.n) if u != v)


def build(n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Construct a multigraph, validating endpoints and rejecting loops."""
    return Multigraph(n, pairs)


def alpha_at_most_2(g: Multigraph) -> bool:
    """True iff the graph has no independent set of three vertices."""
    full = (1 << g.n) - 1
    for u in range(g.n):
        # candidates above u and non-adjacent to u
        cand = full & ~g._mask[u] & ~((2 << u) - 1)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if full & ~g._mask[u] & ~g._mask[v] & ~((2 << v) - 1):
                return False
    return True


def components_of(g: Multigraph, edge_set: Iterable[int]) -> list[Component]:
    """Connected components of the spanning subgraph G[F].

    Every vertex of ``g`` appears in exactly one component; vertices missed
    by ``edge_set`` form trivial components.  Components are listed by their
    smallest vertex.
    """
    f = set(edge_set)
    for e in f:
        if not 0 <= e < g.m:
            raise GraphError(f"unknown edge identity {e}")
    inc = [[] for _ in range(g.n)]
    for e in f:
        u, v = g.edges[e]
        inc[u].append(e)
        inc[v].append(e)

    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        verts = [start]
        edges: set[int] = set()
        stack = [start]
        while stack:
            x = stack.pop()
            for e in inc[x]:
                edges.add(e)
                y = g.other_end(e, x)
                if not seen[y]:
                    seen[y] = True
                    verts.append(y)
                    stack.append(y)
        degs = [len(inc[x]) for x in verts]
        out.append(
            Component(
                vertices=tuple(sorted(verts)),
                edge_ids=tuple(sorted(edges)),
                min_degree=min(degs),
                max_degree=max(degs),
            )
        )
    return out
