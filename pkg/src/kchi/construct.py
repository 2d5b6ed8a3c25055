"""Recursive construction of a K_χ immersion in a graph with no independent triple.

The recursion follows the colouring's shape.  With no singleton classes, any
vertex can be deleted without lowering the chromatic number.  With singletons
but no attached pair class, every singleton is universal and extends a
recursive immersion by direct edges.  Otherwise the detached pair classes are
immersed recursively, the singletons and attached classes get a faithful
immersion, and the two corner sets are joined: singletons reach the far
corners by direct edges, and each attached class's corner reaches a far
corner y either directly (when the edge exists) or along a short bridge
through non-corner vertices.

Bridges are rationed through an auxiliary digraph whose arcs encode the
available length-2 detours between a class's inner half and its corner.  Two
opposite arcs would reuse the same inner-inner edge, so the double arcs form
a conflict graph that is handed to the decorated cycle-matching colouring;
its reserve/relief certificates say which arc of each conflicting pair to
drop, reroute or share, after which every remaining corner pair takes its
lowest free arc.  All of this is per construction step; the final immersion
is always replayed through ``verify_immersion`` before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decorated import (
    DecoratedColouring,
    RegionPartition,
    critical_colouring,
    validate_decorated,
)
from .errors import CertificateError, PremiseError
from .graphs import Multigraph, alpha_at_most_2, components_of
from .immersion import (
    Immersion,
    PairColouring,
    _as_path,
    _edge_count,
    _grouped_by_owner,
    _optimal_colouring,
    _take_edge,
    _with_split,
    audit_refined,
    chi_alpha2,
    corner_labels,
    faithful_immersion,
    refine_split,
    run_colouring_audits,
    verify_immersion,
)


@dataclass(frozen=True)
class BridgeArc:
    """One outgoing detour option of an attached class.

    ``head`` is ("x", j) for a detour through another attached class's inner
    half, or ("y", k) for one through a non-corner vertex of a detached
    class; ``mid`` is that middle vertex.  The bridge itself is the length-2
    path inner → mid → corner at the tail class.
    """

    tail: int
    head: tuple[str, int]
    mid: int


@dataclass(frozen=True)
class BridgeDigraph:
    """Detour options of one owner's attached classes, with far-corner types.

    For each attached class (node ``i``, split into ``inner[i]`` and
    ``corner[i]``) and each far corner y exactly one of three things holds:

    * ``bridged``:   y–corner missing, y–inner present — needs a bridge;
    * ``droppable``: y–corner present, y–inner missing — direct edge, and
      the arc budget has one arc of slack here;
    * ``settled``:   both edges present — direct edge, no interaction.
    """

    owner: int
    x_nodes: tuple[tuple[int, int], ...]
    y_nodes: tuple[tuple[int, int], ...]
    y_corners: tuple[int, ...]
    inner: tuple[int, ...]
    corner: tuple[int, ...]
    arcs: tuple[BridgeArc, ...]
    bridged: tuple[frozenset[int], ...]
    droppable: tuple[frozenset[int], ...]
    settled: tuple[frozenset[int], ...]

    def out_arcs(self, i: int) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.arcs) if a.tail == i)


def build_bridge_digraph(
    g: Multigraph, col: PairColouring, v: int, y_corners: tuple[int, ...]
) -> BridgeDigraph:
    """Assemble the detour digraph of owner ``v`` against the far corners."""
    if v not in col.singletons:
        raise PremiseError(f"owner {v} is not a singleton class")
    labels = corner_labels(g, col)
    x_nodes = tuple(sorted(cls for cls in col.attached if col.owner[cls] == v))
    y_nodes = tuple(sorted(col.detached))
    inner = tuple(cls[0] if cls[1] == labels[cls] else cls[1] for cls in x_nodes)
    corner = tuple(labels[cls] for cls in x_nodes)
    corner_set = set(y_corners)

    bridged, droppable, settled = [], [], []
    for i in range(len(x_nodes)):
        b, d, s = set(), set(), set()
        for y in y_corners:
            at_corner = g.has_edge(corner[i], y)
            at_inner = g.has_edge(inner[i], y)
            if at_corner and at_inner:
                s.add(y)
            elif at_corner:
                d.add(y)
            elif at_inner:
                b.add(y)
            else:
                raise CertificateError(
                    "far corner sees neither half of an attached class",
                    dump={"corner": y, "class": x_nodes[i]},
                )
        bridged.append(frozenset(b))
        droppable.append(frozenset(d))
        settled.append(frozenset(s))

    arcs = []
    for i, cls in enumerate(x_nodes):
        for j, other in enumerate(x_nodes):
            if j != i and _edge_count(g, corner[i], other) == 2:
                arcs.append(BridgeArc(i, ("x", j), inner[j]))
        for k, far in enumerate(y_nodes):
            mids = [
                y for y in far if y not in corner_set and _edge_count(g, y, cls) == 2
            ]
            if mids:
                arcs.append(BridgeArc(i, ("y", k), min(mids)))

    return BridgeDigraph(
        owner=v,
        x_nodes=x_nodes,
        y_nodes=y_nodes,
        y_corners=tuple(sorted(y_corners)),
        inner=inner,
        corner=corner,
        arcs=tuple(arcs),
        bridged=tuple(bridged),
        droppable=tuple(droppable),
        settled=tuple(settled),
    )


def audit_out_degree(d: BridgeDigraph) -> list[str]:
    """Each node must offer at least one arc per bridged or droppable corner."""
    bad = []
    for i, cls in enumerate(d.x_nodes):
        need = len(d.bridged[i]) + len(d.droppable[i])
        have = len(d.out_arcs(i))
        if have < need:
            bad.append(f"class {cls} offers {have} arcs for {need} corners")
    return bad


def restrict_out_degree(d: BridgeDigraph) -> BridgeDigraph:
    """Trim every node to exactly as many arcs as it has non-settled corners.

    Arcs whose reverse also exists are kept last so that as few conflicting
    pairs as possible survive; any selection would be correct.
    """
    arc_set = {(a.tail, a.head) for a in d.arcs}

    def mutual(a: BridgeArc) -> bool:
        return a.head[0] == "x" and (a.head[1], ("x", a.tail)) in arc_set

    keep: list[int] = []
    for i in range(len(d.x_nodes)):
        budget = len(d.bridged[i]) + len(d.droppable[i])
        mine = sorted(d.out_arcs(i), key=lambda k: (mutual(d.arcs[k]), k))
        if len(mine) < budget:
            raise CertificateError(
                "arc budget below the out-degree guarantee",
                dump={"class": d.x_nodes[i], "arcs": len(mine), "budget": budget},
            )
        keep.extend(sorted(mine[:budget]))
    arcs = tuple(d.arcs[k] for k in sorted(keep))
    return BridgeDigraph(
        d.owner, d.x_nodes, d.y_nodes, d.y_corners, d.inner, d.corner,
        arcs, d.bridged, d.droppable, d.settled,
    )


def mutual_graph(d: BridgeDigraph) -> Multigraph:
    """The conflict graph: one edge per pair of opposite arcs."""
    arc_set = {(a.tail, a.head) for a in d.arcs}
    pairs = sorted(
        {
            (min(a.tail, a.head[1]), max(a.tail, a.head[1]))
            for a in d.arcs
            if a.head[0] == "x" and (a.head[1], ("x", a.tail)) in arc_set
        }
    )
    return Multigraph(len(d.x_nodes), pairs)


def decorated_regions(d: BridgeDigraph) -> RegionPartition:
    """Far-corner types as palette regions for the conflict-graph colouring."""
    y_index = {y: q for q, y in enumerate(d.y_corners)}

    def indices(sets):
        return [{y_index[y] for y in s} for s in sets]

    return RegionPartition.from_sets(
        len(d.y_corners),
        indices(d.bridged),
        indices(d.droppable),
        indices(d.settled),
    )


def _cycle_order(h: Multigraph, comp) -> list[int]:
    """Vertices of a cycle component in traversal order from its minimum."""
    around: dict[int, list[int]] = {}
    for e in comp.edge_ids:
        u, w = h.endpoints(e)
        around.setdefault(u, []).append(w)
        around.setdefault(w, []).append(u)
    start = comp.vertices[0]
    order = [start]
    prev, at = -1, start
    while True:
        step = min(w for w in around[at] if w != prev)
        if step == start:
            return order
        order.append(step)
        prev, at = at, step


def assign_bridges(
    d: BridgeDigraph, dec: DecoratedColouring
) -> dict[tuple[int, int], tuple[int, ...]]:
    """Translate the conflict-graph certificates into one route per (class, corner).

    ``dec`` must come from ``critical_colouring`` on ``mutual_graph(d)`` with
    ``decorated_regions(d)``; ``d`` must already be restricted.  Returns a
    vertex route from every bridged far corner to its class corner such that
    each arc carries at most one route, opposite arcs never both use the
    inner-inner edge, and reserve tags drop the arcs they name.
    """
    h = mutual_graph(d)
    y_of = d.y_corners
    arc_at = {(a.tail, a.head): k for k, a in enumerate(d.arcs)}
    state = ["free"] * len(d.arcs)
    detour: dict[int, int] = {}
    routes: dict[tuple[int, int], tuple[int, ...]] = {}
    inner, corner = d.inner, d.corner

    def x_arc(i: int, j: int) -> int:
        try:
            return arc_at[(i, ("x", j))]
        except KeyError:
            raise CertificateError(
                "certificate names an absent arc", dump={"tail": i, "head": j}
            ) from None

    def claim(i: int, y: int, route: tuple[int, ...], arc: int) -> None:
        if (i, y) in routes or state[arc] != "free":
            raise CertificateError(
                "route or arc claimed twice",
                dump={"node": i, "corner": y, "arc": d.arcs[arc]},
            )
        state[arc] = "used"
        routes[(i, y)] = route

    def drop(arc: int) -> None:
        if state[arc] != "free":
            raise CertificateError("dropped arc already consumed", dump={"arc": d.arcs[arc]})
        state[arc] = "dropped"

    # reserve tags: the named class sheds its arc, its corner edge suffices
    for e, (i, c) in sorted(dec.reserved.items()):
        u, w = h.endpoints(e)
        drop(x_arc(i, w if i == u else u))

    # relief cherries: two rerouted bridges around the middle class
    relief_by: dict[int, list[int]] = {}
    for e, c in dec.relief.items():
        relief_by.setdefault(c, []).append(e)
    for c, ids in sorted(relief_by.items()):
        y = y_of[c]
        for comp in components_of(h, ids):
            if comp.trivial:
                continue
            mid = next(
                x for x in comp.vertices
                if sum(x in h.endpoints(e) for e in comp.edge_ids) == 2
            )
            ends = [x for x in comp.vertices if x != mid]
            far = next(x for x in ends if y in d.settled[x])
            near = next(x for x in ends if y in d.bridged[x])
            claim(near, y, (y, inner[mid], corner[near]), x_arc(near, mid))
            claim(mid, y, (y, inner[far], corner[mid]), x_arc(mid, far))

    # plain colour classes: kept odd cycles and isolated matched edges
    colour_by: dict[int, list[int]] = {}
    for e, c in dec.colour_of.items():
        colour_by.setdefault(c, []).append(e)
    for c, ids in sorted(colour_by.items()):
        y = y_of[c]
        for comp in components_of(h, ids):
            if comp.trivial:
                continue
            if comp.cycle_parity == "odd":
                order = _cycle_order(h, comp)
                for t, a in enumerate(order):
                    b = order[(t + 1) % len(order)]
                    if y not in d.bridged[b]:
                        raise CertificateError(
                            "cycle visits a class that does not need a bridge",
                            dump={"node": b, "corner": y},
                        )
                    claim(b, y, (y, inner[a], corner[b]), x_arc(b, a))
                continue
            if len(comp.edge_ids) != 1:
                raise CertificateError(
                    "colour class component is neither an edge nor an odd cycle",
                    dump={"vertices": comp.vertices, "colour": c},
                )
            i, j = h.endpoints(comp.edge_ids[0])
            if y in d.droppable[i]:
                drop(x_arc(i, j))
            if y in d.droppable[j]:
                drop(x_arc(j, i))
            if y in d.bridged[i] and y in d.bridged[j]:
                claim(i, y, (y, inner[j], corner[i]), x_arc(i, j))
                claim(j, y, (y, inner[i], corner[j]), x_arc(j, i))
            elif y in d.bridged[i] and y in d.settled[j]:
                claim(i, y, (y, inner[j], corner[i]), x_arc(i, j))
            elif y in d.bridged[j] and y in d.settled[i]:
                claim(j, y, (y, inner[i], corner[j]), x_arc(j, i))
            elif y in d.settled[i] and y in d.settled[j]:
                a, b = (i, j) if i < j else (j, i)
                detour[x_arc(a, b)] = y

    # everything still uncovered takes its lowest free arc with the naive route
    for i in range(len(d.x_nodes)):
        waiting = sorted(y for y in d.bridged[i] if (i, y) not in routes)
        free = [k for k in d.out_arcs(i) if state[k] == "free"]
        if len(waiting) > len(free):
            raise CertificateError(
                "not enough free arcs for the remaining corners",
                dump={"class": d.x_nodes[i], "waiting": waiting, "free": len(free)},
            )
        for y, k in zip(waiting, free):
            a = d.arcs[k]
            if k in detour:
                claim(i, y, (y, inner[i], detour[k], a.mid, corner[i]), k)
            else:
                claim(i, y, (y, inner[i], a.mid, corner[i]), k)

    return routes


def construct_immersion(g: Multigraph) -> Immersion:
    """Build and verify a weak immersion of the complete graph on χ(G) corners.

    Raises a certified counterexample dump if any internal contract breaks;
    the returned immersion always passes ``verify_immersion``.
    """
    chi, _ = chi_alpha2(g)  # also rejects graphs with an independent triple
    used: set[int] = set()
    imm = _immerse(g, tuple(range(g.n)), used)
    if len(imm.corners) != chi:
        raise CertificateError(
            "corner count differs from the chromatic number",
            dump={"corners": imm.corners, "chi": chi},
        )
    report = verify_immersion(g, imm, chi)
    if not report.ok:
        raise CertificateError(
            "constructed immersion failed replay",
            dump={"failures": report.failures[:6], "n": g.n, "edges": list(g.edges)},
        )
    return imm


def _immerse(g: Multigraph, verts: tuple[int, ...], used: set[int]) -> Immersion:
    if len(verts) <= 1:
        return Immersion(verts, {})
    col = _optimal_colouring(g, verts)
    chi = len(col.classes)

    if chi == len(verts):  # complete graph: the identity immersion
        paths = {}
        for u, w in combinations(verts, 2):
            paths[(u, w)] = (_take_edge(g, u, w, used),)
        return Immersion(verts, paths)

    bad = run_colouring_audits(g, col)
    if bad:
        raise CertificateError(
            "structural audit failed on an optimal colouring",
            dump={"failures": bad[:6], "verts": verts},
        )

    if not col.singletons:
        # all classes are pairs; deleting one vertex keeps the count
        sub = _immerse(g, verts[1:], used)
        if len(sub.corners) != chi:
            raise CertificateError(
                "vertex deletion changed the chromatic number",
                dump={"dropped": verts[0], "chi": chi, "got": len(sub.corners)},
            )
        return sub

    col = refine_split(g, col)
    bad = audit_refined(g, col)
    if bad:
        raise CertificateError(
            "counting inequality still violated after refinement",
            dump={"failures": bad[:6]},
        )

    if not col.attached:
        # every singleton is universal in G[verts] and extends directly
        for u in col.singletons:
            if any(w != u and not g.has_edge(u, w) for w in verts):
                raise CertificateError(
                    "detached singleton misses a vertex", dump={"singleton": u}
                )
        stripped = tuple(w for w in verts if w not in set(col.singletons))
        sub = _immerse(g, stripped, used)
        if len(sub.corners) != chi - len(col.singletons):
            raise CertificateError(
                "stripping the singletons changed the remainder's count",
                dump={"chi": chi, "singles": col.singletons, "got": len(sub.corners)},
            )
        paths = dict(sub.paths)
        for t, u in enumerate(col.singletons):
            for w in col.singletons[t + 1 :] + sub.corners:
                key, ids = _as_path(g, (u, w), used)
                paths[key] = ids
        return Immersion(tuple(sorted(col.singletons + sub.corners)), paths)

    # general shape: immerse the detached side, the attached side, then join
    y_union = tuple(sorted(v for cls in col.detached for v in cls))
    imm_y = _immerse(g, y_union, used)
    if len(imm_y.corners) != len(col.detached):
        raise CertificateError(
            "detached side used an unexpected corner count",
            dump={"classes": col.detached, "corners": imm_y.corners},
        )

    x_classes = [cls for cls in col.classes if len(cls) == 1 or cls in set(col.attached)]
    imm_x = faithful_immersion(g, _with_split(g, x_classes))
    for seq in imm_x.paths.values():
        for e in seq:
            if e in used:
                raise CertificateError(
                    "faithful side touched an edge already spent", dump={"edge": e}
                )
            used.add(e)

    paths = dict(imm_x.paths)
    y_corners = imm_y.corners

    def put(key: tuple[int, int], ids: tuple[int, ...]) -> None:
        if key in paths:
            raise CertificateError("two paths for one corner pair", dump={"pair": key})
        paths[key] = ids

    for key, ids in imm_y.paths.items():
        put(key, ids)
    for a in col.singletons:
        for y in y_corners:
            key, ids = _as_path(g, (a, y), used)
            put(key, ids)

    labels = corner_labels(g, col)
    for v in sorted(_grouped_by_owner(col)):
        d_full = build_bridge_digraph(g, col, v, y_corners)
        bad = audit_out_degree(d_full)
        if bad:
            raise CertificateError(
                "bridge digraph below its degree guarantee",
                dump={"owner": v, "failures": bad[:6]},
            )
        d = restrict_out_degree(d_full)
        h = mutual_graph(d)
        regions = decorated_regions(d)
        dec = critical_colouring(h, len(d.y_corners), regions)
        rep = validate_decorated(h, regions, dec)
        if not rep.ok:
            raise CertificateError(
                "conflict-graph colouring failed its own validator",
                dump={"owner": v, "failures": rep.failures[:6]},
            )
        routes = assign_bridges(d, dec)
        for i in range(len(d.x_nodes)):
            for y in d.y_corners:
                if y in d.bridged[i]:
                    key, ids = _as_path(g, routes[(i, y)], used)
                else:
                    key, ids = _as_path(g, (d.corner[i], y), used)
                put(key, ids)

    corners = tuple(sorted(imm_x.corners + y_corners))
    if len(corners) != chi:
        raise CertificateError(
            "merged corner count mismatch", dump={"corners": corners, "chi": chi}
        )
    return Immersion(corners, paths)
