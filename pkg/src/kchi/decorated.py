"""Cycle-matching colourings decorated with reserve and relief edges.

Each vertex partitions the palette into *free*, *reserve* and *blocked*
colours, with enough free + reserve colours to cover its degree.  The
colouring produced here refines the Δ-colour induction so that every
monochromatic odd cycle of a colour c lies entirely on vertices for which
c is free.  Odd cycles through unhelpful vertices are repaired in one of
three ways, in priority order:

* a vertex x with c in reserve donates one cycle edge to the *reserved*
  set F, tagged (x, c) — the α-certificate;
* a blocked vertex of degree below the remaining palette size is simply
  left unspanned this step;
* otherwise two consecutive free vertices u, v followed by a blocked
  vertex w yield the *relief* pair uv, vw in F′, tagged c — the
  β-certificate.

In every case the rest of the cycle is perfectly matched and stays in the
colour class.  Vertices left isolated by a step are recorded in
``uncovered_at`` (the marking); the covering priority keeps marked
vertices non-adjacent in the graph still alive at marking time, retrying
with perturbed tie-breaks in the rare configurations that force a clash.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateError, PremiseError
from .factor import _FactorSolver
from .graphs import Multigraph, components_of
from .reporting import ValidityReport


@dataclass(frozen=True)
class RegionPartition:
    """Per-vertex partition of the palette into free/reserve/blocked sets."""

    palette: int
    free: tuple[frozenset[int], ...]
    reserve: tuple[frozenset[int], ...]
    blocked: tuple[frozenset[int], ...]

    def __post_init__(self):
        colours = frozenset(range(self.palette))
        if not len(self.free) == len(self.reserve) == len(self.blocked):
            raise PremiseError("regions must list one triple per vertex")
        for x, (l, m, r) in enumerate(zip(self.free, self.reserve, self.blocked)):
            if l | m | r != colours or len(l) + len(m) + len(r) != self.palette:
                raise PremiseError(f"vertex {x}: free/reserve/blocked do not partition the palette")

    @classmethod
    def from_sets(cls, palette, free, reserve, blocked) -> "RegionPartition":
        return cls(
            palette,
            tuple(map(frozenset, free)),
            tuple(map(frozenset, reserve)),
            tuple(map(frozenset, blocked)),
        )

    @classmethod
    def all_free(cls, palette: int, n: int) -> "RegionPartition":
        colours = frozenset(range(palette))
        empty = frozenset()
        return cls(palette, (colours,) * n, (empty,) * n, (empty,) * n)

    def premise_holds(self, g: Multigraph) -> bool:
        return all(
            len(self.free[x]) + len(self.reserve[x]) >= g.degree(x) for x in range(g.n)
        )


@dataclass(frozen=True)
class DecoratedColouring:
    """Output of :func:`critical_colouring`.

    ``reserved`` maps F-edges to their (vertex, colour) tag, ``relief``
    maps F′-edges to their colour, ``colour_of`` is the colouring of the
    remaining edges, and ``uncovered_at[c]`` lists the vertices left
    unspanned when colour c was processed.
    """

    reserved: dict[int, tuple[int, int]]
    relief: dict[int, int]
    colour_of: dict[int, int]
    uncovered_at: dict[int, frozenset[int]]

    def step_of(self, e: int) -> int:
        """The step (= colour index) at which edge ``e`` left the graph."""
        if e in self.reserved:
            return self.reserved[e][1]
        if e in self.relief:
            return self.relief[e]
        return self.colour_of[e]


_TIEBREAK_SALTS = 8


class _MarkingClash(Exception):
    """Internal: a step was forced to mark a neighbour of an older mark."""


def critical_colouring(g: Multigraph, palette: int, regions: RegionPartition) -> DecoratedColouring:
    """Decorated cycle-matching colouring with the odd-cycle guarantee.

    Requires ``|free_x| + |reserve_x| ≥ d(x)`` for every vertex x.
    Colours are processed in ascending order; all choices are deterministic
    (lowest qualifying vertex, scan order along the canonical cycle).

    The covering priority almost always keeps marked vertices pairwise
    non-adjacent, but rare configurations force a clash.  Those are retried
    with perturbed tie-breaks; if every attempt clashes, a
    :class:`CertificateError` is raised instead of returning a colouring
    whose marking audit would fail.
    """
    if palette != regions.palette:
        raise PremiseError(f"palette {palette} does not match regions ({regions.palette})")
    for x in range(g.n):
        slack = len(regions.free[x]) + len(regions.reserve[x])
        if slack < g.degree(x):
            raise PremiseError(
                f"vertex {x}: free + reserve colours ({slack}) below degree {g.degree(x)}"
            )

    clash = None
    for salt in range(_TIEBREAK_SALTS):
        try:
            return _colouring_attempt(g, palette, regions, salt)
        except _MarkingClash as exc:
            clash = exc
    raise CertificateError(
        "marking independence lost on every tie-break",
        dump={"n": g.n, "edges": list(g.edges), "last_clash": str(clash)},
    )


def _colouring_attempt(
    g: Multigraph, palette: int, regions: RegionPartition, salt: int
) -> DecoratedColouring:
    solver = _FactorSolver(
        g.n, {(u, v): g.multiplicity(u, v) for u, v in g.support_pairs()}
    )
    taken: dict[tuple[int, int], int] = {}
    reserved: dict[int, tuple[int, int]] = {}
    relief: dict[int, int] = {}
    colour_of: dict[int, int] = {}
    uncovered_at: dict[int, frozenset[int]] = {}

    def consume(u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        idx = taken.get(key, 0)
        taken[key] = idx + 1
        solver.remove_copy(u, v)
        return g.edge_ids_between(u, v)[idx]

    def jitter(v: int) -> int:
        return v if salt == 0 else (v * 2654435761 + salt) % (1 << 32)

    marked: set[int] = set()

    for c in range(palette):
        # Leaving a neighbour of an already-marked vertex uncovered would
        # break the marking invariant, so such vertices are covered first;
        # after that, covering high-degree vertices keeps future marks on
        # vertices that are nearly gone and cannot cause trouble later.
        def keep_covered(v: int, near=frozenset(marked)) -> tuple[int, int, int]:
            threatened = any(u in near for u in solver.adj[v])
            return (0 if threatened else 1, -solver.weighted_degree(v), jitter(v))

        res = solver.solve(t_priority=keep_covered)
        for x in res.uncovered:
            if any(u in marked for u in solver.adj[x]):
                raise _MarkingClash(f"step {c}: vertex {x} forced beside a mark")
        uncovered_at[c] = res.uncovered
        marked |= res.uncovered
        remaining_palette = palette - c
        deg_now = [solver.weighted_degree(v) for v in range(g.n)]

        for u, v in res.two_cycles:
            colour_of[consume(u, v)] = c

        for cyc in res.odd_cycles:
            _repair_cycle(
                cyc, c, remaining_palette, regions, deg_now,
                consume, reserved, relief, colour_of,
            )

    if solver.count:
        raise CertificateError(
            "edges left over after the palette was exhausted",
            dump={"n": g.n, "edges": list(g.edges), "left": sorted(solver.count)},
        )
    return DecoratedColouring(reserved, relief, colour_of, uncovered_at)


def _repair_cycle(cyc, c, remaining, regions, deg_now, consume, reserved, relief, colour_of):
    """Dispatch one odd cycle of the current step.

    A cycle on all-free vertices is kept whole; otherwise one vertex is
    sacrificed (reserve donation, small blocked vertex, or a relief pair
    around a blocked vertex) and the rest perfectly matched.  ``consume``
    removes one live copy of the pair and returns its edge id.
    """
    free, reserve, blocked = regions.free, regions.reserve, regions.blocked
    k = len(cyc)

    def match_from(start: int, count: int) -> None:
        for t in range(0, count, 2):
            a, b = cyc[(start + t) % k], cyc[(start + t + 1) % k]
            colour_of[consume(a, b)] = c

    if all(c in free[x] for x in cyc):
        for i in range(k):
            colour_of[consume(cyc[i], cyc[(i + 1) % k])] = c
        return

    m_pos = [i for i in range(k) if c in reserve[cyc[i]]]
    if m_pos:
        i = min(m_pos, key=lambda p: cyc[p])
        e = consume(cyc[i], cyc[(i + 1) % k])
        reserved[e] = (cyc[i], c)
        match_from(i + 1, k - 1)
        return

    r_small = [
        i for i in range(k) if c in blocked[cyc[i]] and deg_now[cyc[i]] < remaining
    ]
    if r_small:
        i = min(r_small, key=lambda p: cyc[p])
        match_from(i + 1, k - 1)
        return

    for j in range(k):
        w, u, v = cyc[j], cyc[(j - 2) % k], cyc[(j - 1) % k]
        if c in blocked[w] and c in free[u] and c in free[v]:
            relief[consume(u, v)] = c
            relief[consume(v, w)] = c
            match_from(j + 1, k - 3)
            return
    raise CertificateError(
        "odd cycle admits no repair", dump={"cycle": list(cyc), "colour": c}
    )


def validate_decorated(g: Multigraph, regions: RegionPartition, dec: DecoratedColouring) -> ValidityReport:
    """Exhaustively check every clause the decorated colouring promises."""
    failures: list[str] = []
    palette = regions.palette
    free, reserve, blocked = regions.free, regions.reserve, regions.blocked

    all_ids = set(range(g.m))
    domains = [set(dec.reserved), set(dec.relief), set(dec.colour_of)]
    if domains[0] & domains[1] or domains[0] & domains[2] or domains[1] & domains[2]:
        failures.append("reserved/relief/coloured edge sets overlap")
    missing = all_ids - domains[0] - domains[1] - domains[2]
    if missing:
        failures.append(f"edges assigned nowhere: {sorted(missing)[:8]}")
    for name, dom in zip(("reserved", "relief", "coloured"), domains):
        if dom - all_ids:
            failures.append(f"{name} refers to unknown edges {sorted(dom - all_ids)[:8]}")
    if failures:
        return ValidityReport.from_failures(failures)

    by_colour: dict[int, list[int]] = {}
    for e, c in dec.colour_of.items():
        by_colour.setdefault(c, []).append(e)

    def isolated_in_class(x: int, c: int) -> bool:
        return all(x not in g.endpoints(e) for e in by_colour.get(c, ()))

    # α: injective, endpoint, reserve colour, isolation
    seen_tags: set[tuple[int, int]] = set()
    for e, (x, c) in sorted(dec.reserved.items()):
        if (x, c) in seen_tags:
            failures.append(f"α not injective: tag ({x}, {c}) repeated")
        seen_tags.add((x, c))
        if x not in g.endpoints(e):
            failures.append(f"α tag vertex {x} is not an endpoint of edge {e}")
        if not 0 <= c < palette:
            failures.append(f"α colour {c} outside the palette")
            continue
        if c not in reserve[x]:
            failures.append(f"α uses colour {c} not in reserve of vertex {x}")
        if not isolated_in_class(x, c):
            failures.append(f"α vertex {x} not isolated in colour class {c}")

    # β: per colour, vertex-disjoint cherries with the free/free/blocked pattern
    relief_by_colour: dict[int, list[int]] = {}
    for e, c in dec.relief.items():
        if not 0 <= c < palette:
            failures.append(f"β colour {c} outside the palette")
            continue
        relief_by_colour.setdefault(c, []).append(e)
    for c, ids in sorted(relief_by_colour.items()):
        for comp in components_of(g, ids):
            if comp.trivial:
                continue
            if len(comp.edge_ids) != 2 or len(comp.vertices) != 3 or comp.max_degree != 2:
                failures.append(f"β colour {c}: component {comp.vertices} is not a length-2 path")
                continue
            mid = next(x for x in comp.vertices if sum(x in g.endpoints(e) for e in comp.edge_ids) == 2)
            ends = [x for x in comp.vertices if x != mid]
            if c not in free[mid]:
                failures.append(f"β colour {c}: middle vertex {mid} lacks it as free")
            pattern_ok = any(
                c in free[a] and c in blocked[b] for a, b in (ends, ends[::-1])
            )
            if not pattern_ok:
                failures.append(f"β colour {c}: endpoints {ends} lack the free/blocked pattern")
            for x in comp.vertices:
                if not isolated_in_class(x, c):
                    failures.append(f"β vertex {x} not isolated in colour class {c}")

    # f: strict cycle-matching classes; odd cycles confined to free vertices
    for c, ids in sorted(by_colour.items()):
        if not 0 <= c < palette:
            failures.append(f"f colour {c} outside the palette")
            continue
        for comp in components_of(g, ids):
            if comp.trivial:
                continue
            if comp.regular and comp.max_degree == 1:
                continue
            if comp.cycle_parity == "odd":
                for x in comp.vertices:
                    if c not in free[x]:
                        failures.append(
                            f"odd cycle of colour {c} visits vertex {x} without it free"
                        )
            else:
                failures.append(
                    f"colour {c}: component {comp.vertices} is neither an edge nor an odd cycle"
                )

    failures.extend(_step_audit(g, regions, dec))
    return ValidityReport.from_failures(failures, details={"classes": len(by_colour)})


def _step_audit(g: Multigraph, regions: RegionPartition, dec: DecoratedColouring) -> list[str]:
    """Replay the induction and check the three per-step invariants:

    * vertices marked at a step are pairwise non-adjacent in the graph
      still alive at the later marking step (within a step: at that step);
    * every vertex whose current degree equals the remaining palette size
      is spanned by the edges consumed in that step;
    * after each step, unmarked vertices keep degree ≤ remaining
      free + reserve colours.
    """
    bad: list[str] = []
    palette = regions.palette
    step_of = [dec.step_of(e) for e in range(g.m)]

    marks_of: dict[int, list[int]] = {}
    for c, verts in dec.uncovered_at.items():
        if not 0 <= c < palette:
            bad.append(f"marking recorded for unknown colour {c}")
            continue
        for x in verts:
            marks_of.setdefault(x, []).append(c)

    for e, (u, v) in enumerate(g.edges):
        for i in marks_of.get(u, ()):
            for j in marks_of.get(v, ()):
                if step_of[e] >= max(i, j):
                    bad.append(
                        f"marked vertices {u} (step {i}) and {v} (step {j}) "
                        f"joined by edge {e} still alive then"
                    )

    deg = list(g.degrees)
    marked: set[int] = set()
    for c in range(palette):
        consumed = [e for e in range(g.m) if step_of[e] == c]
        touched = set()
        for e in consumed:
            u, v = g.endpoints(e)
            touched.add(u)
            touched.add(v)
        for x in range(g.n):
            if deg[x] == palette - c and x not in touched:
                bad.append(f"step {c}: vertex {x} has full degree but is unspanned")
        marked |= dec.uncovered_at.get(c, frozenset())
        for e in consumed:
            u, v = g.endpoints(e)
            deg[u] -= 1
            deg[v] -= 1
        for x in range(g.n):
            if x in marked:
                continue
            slack = sum(1 for q in regions.free[x] if q > c) + sum(
                1 for q in regions.reserve[x] if q > c
            )
            if deg[x] > slack:
                bad.append(
                    f"after step {c}: unmarked vertex {x} has degree {deg[x]} "
                    f"above its remaining free+reserve {slack}"
                )
    return bad
