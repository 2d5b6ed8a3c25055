"""Optimal colourings and faithful immersions of graphs without independent triples.

When no three vertices are pairwise non-adjacent, every optimal colouring
consists of classes of size one or two (pairs are non-edges), so the
chromatic number is ``n`` minus a maximum matching of the complement.  This
module computes such colourings, classifies their pair classes by how the
singleton classes attach to them, and realizes the central building block of
the immersion constructor: a K_χ immersion whose paths never leave the two
classes they connect, available whenever every pair class has a singleton
attached by exactly one edge.

``verify_immersion`` replays any immersion certificate against the host
graph and is completely independent of the construction code.  The audit
helpers check the structural facts the constructor relies on (shared
attachment vertices, the singleton clique, adjacency of inner halves, the
four-class K₄, and the counting inequality enforced by ``refine_split``);
they return failure strings instead of raising so tests can point them at
adversarial inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CertificateError, PremiseError
from .graphs import Multigraph, alpha_at_most_2
from .matching import matching_size, maximum_matching
from .reporting import ValidityReport


@dataclass(frozen=True)
class PairColouring:
    """A proper colouring with classes of size at most two, plus its split.

    ``singletons`` lists the vertices forming size-1 classes.  A pair class
    is *attached* when some singleton meets it in exactly one edge; ``owner``
    maps each attached class to the lowest such singleton.  The remaining
    pair classes are *detached*.
    """

    classes: tuple[tuple[int, ...], ...]
    singletons: tuple[int, ...]
    attached: tuple[tuple[int, int], ...]
    detached: tuple[tuple[int, int], ...]
    owner: dict[tuple[int, int], int] = field(compare=False)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.attached + self.detached))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for cls in self.classes for v in cls))


@dataclass(frozen=True)
class Immersion:
    """A complete-graph immersion: corners plus one edge-id path per pair.

    Paths are keyed by the sorted corner pair and stored as edge-identity
    sequences walking from the lower corner to the higher one.  When
    ``faithful_to`` is set, every path is confined to the union of its two
    corners' colour classes.
    """

    corners: tuple[int, ...]
    paths: dict[tuple[int, int], tuple[int, ...]]
    faithful_to: PairColouring | None = None


def _edge_count(g: Multigraph, v: int, cls: tuple[int, ...]) -> int:
    return sum(1 for a in cls if g.has_edge(v, a))


def _check_colouring(g: Multigraph, classes) -> tuple[int, ...]:
    """Validate shape: disjoint independent classes of size one or two."""
    seen: set[int] = set()
    for cls in classes:
        if not 1 <= len(cls) <= 2 or len(set(cls)) != len(cls):
            raise PremiseError(f"class {tuple(cls)} does not have one or two distinct vertices")
        for v in cls:
            if not 0 <= v < g.n:
                raise PremiseError(f"class vertex {v} outside the graph")
            if v in seen:
                raise PremiseError(f"vertex {v} appears in two classes")
            seen.add(v)
        if len(cls) == 2 and g.has_edge(cls[0], cls[1]):
            raise PremiseError(f"class {tuple(cls)} spans an edge")
    return tuple(sorted(seen))


def _with_split(g: Multigraph, classes) -> PairColouring:
    """Attach the singleton/pair/attached/detached split to raw classes."""
    norm = tuple(sorted(tuple(sorted(cls)) for cls in classes))
    singles = tuple(cls[0] for cls in norm if len(cls) == 1)
    pairs = [cls for cls in norm if len(cls) == 2]
    owner: dict[tuple[int, int], int] = {}
    for cls in pairs:
        for v in singles:
            if _edge_count(g, v, cls) == 1:
                owner[cls] = v
                break
    return PairColouring(
        classes=norm,
        singletons=singles,
        attached=tuple(cls for cls in pairs if cls in owner),
        detached=tuple(cls for cls in pairs if cls not in owner),
        owner=owner,
    )


def _non_adjacency(g: Multigraph, verts: tuple[int, ...]) -> list[list[int]]:
    """Adjacency lists of the complement of G[verts], in local indices."""
    adj: list[list[int]] = [[] for _ in verts]
    for i, u in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if not g.has_edge(u, verts[j]):
                adj[i].append(j)
                adj[j].append(i)
    return adj


def _optimal_colouring(g: Multigraph, verts: tuple[int, ...]) -> PairColouring:
    """Optimal colouring of G[verts]: matched complement edges plus singletons."""
    mate = maximum_matching(len(verts), _non_adjacency(g, verts))
    classes = [
        (verts[i], verts[j]) for i, j in enumerate(mate) if j > i
    ] + [(verts[i],) for i, j in enumerate(mate) if j == -1]
    col = _with_split(g, classes)
    _check_colouring(g, col.classes)
    return col


def _is_optimal(g: Multigraph, verts: tuple[int, ...], k: int) -> bool:
    return k == len(verts) - matching_size(maximum_matching(len(verts), _non_adjacency(g, verts)))


def chi_alpha2(g: Multigraph) -> tuple[int, PairColouring]:
    """Chromatic number and an optimal size-≤2-class colouring.

    Only defined when the graph has no independent triple; the complement is
    then triangle-free and its maximum matching pairs up as many classes as
    possible.
    """
    if not alpha_at_most_2(g):
        raise PremiseError("graph has three pairwise non-adjacent vertices")
    col = _optimal_colouring(g, tuple(range(g.n)))
    return len(col.classes), col


def corner_labels(g: Multigraph, col: PairColouring) -> dict[tuple[int, int], int]:
    """For each attached class, the vertex every attaching singleton leans on.

    A singleton meeting a pair class in exactly one edge determines a
    distinguished *corner* half of the class; all such singletons name the
    same vertex in any optimal colouring.  Disagreement means the input was
    not an optimal colouring and is reported as a broken certificate.
    """
    labels: dict[tuple[int, int], int] = {}
    for cls in col.attached:
        named = {
            next(a for a in cls if g.has_edge(v, a))
            for v in col.singletons
            if _edge_count(g, v, cls) == 1
        }
        if len(named) != 1:
            raise CertificateError(
                "attaching singletons disagree on the corner half",
                dump={"class": cls, "named": sorted(named)},
            )
        labels[cls] = named.pop()
    return labels


def _take_edge(g: Multigraph, u: int, w: int, used: set[int]) -> int:
    """Reserve one untouched edge identity between u and w."""
    for e in g.edge_ids_between(u, w):
        if e not in used:
            used.add(e)
            return e
    raise CertificateError(
        "no unused edge left between path vertices",
        dump={"pair": (u, w), "copies": g.multiplicity(u, w)},
    )


def _as_path(g: Multigraph, route: tuple[int, ...], used: set[int]) -> tuple[tuple[int, int], tuple[int, ...]]:
    """Realize a vertex route as (sorted endpoint pair, edge-id sequence)."""
    ids = tuple(_take_edge(g, route[t], route[t + 1], used) for t in range(len(route) - 1))
    if route[0] > route[-1]:
        return (route[-1], route[0]), ids[::-1]
    return (route[0], route[-1]), ids


# -- the split refinement ---------------------------------------------------


def _grouped_by_owner(col: PairColouring) -> dict[int, list[tuple[int, int]]]:
    groups: dict[int, list[tuple[int, int]]] = {}
    for cls in col.attached:
        groups.setdefault(col.owner[cls], []).append(cls)
    return groups


def _count_gap(g: Multigraph, col: PairColouring, labels, v: int, cls: tuple[int, int]) -> tuple[int, int]:
    """LHS and RHS of the counting inequality for one attached class."""
    c = labels[cls]
    lhs = sum(1 for y_cls in col.detached if _edge_count(g, c, y_cls) == 1)
    rhs = sum(
        1
        for other in _grouped_by_owner(col)[v]
        if other != cls and _edge_count(g, c, other) == 2
    )
    return lhs, rhs


def refine_split(g: Multigraph, col: PairColouring) -> PairColouring:
    """Rework the colouring until the counting inequality holds everywhere.

    For every owner v and every attached class X of v, the number of
    detached classes meeting X's corner in exactly one edge must not exceed
    the number of v's other attached classes meeting it in two.  A violation
    is repaired by making the corner a singleton and pairing v with the
    inner half — a proper colouring of the same size with strictly more
    attached classes, so at most one swap per pair class occurs.
    """
    verts = _check_colouring(g, col.classes)
    if not _is_optimal(g, verts, len(col.classes)):
        raise PremiseError("refine_split needs an optimal colouring")
    for _ in range(len(col.pairs) + 1):
        labels = corner_labels(g, col)
        swap = None
        for v in sorted(_grouped_by_owner(col)):
            for cls in sorted(_grouped_by_owner(col)[v]):
                lhs, rhs = _count_gap(g, col, labels, v, cls)
                if lhs > rhs:
                    swap = (v, cls)
                    break
            if swap:
                break
        if swap is None:
            return col
        v, cls = swap
        corner = labels[cls]
        inner = cls[0] if cls[1] == corner else cls[1]
        retained = [c for c in col.classes if c != (v,) and c != cls]
        next_col = _with_split(g, retained + [(corner,), tuple(sorted((v, inner)))])
        if len(next_col.attached) <= len(col.attached):
            raise CertificateError(
                "swap failed to enlarge the attached family",
                dump={"owner": v, "class": cls, "before": col.attached, "after": next_col.attached},
            )
        col = next_col
    raise CertificateError("split refinement did not stabilise", dump={"classes": col.classes})


# -- faithful immersion -----------------------------------------------------


def faithful_immersion(g: Multigraph, col: PairColouring) -> Immersion:
    """K_χ immersion whose paths stay inside the classes they connect.

    Requires every pair class to be attached.  Corners are the singletons
    together with each class's corner half; paths are direct edges except
    between two corner halves that are non-adjacent, which are joined by the
    length-3 route through the inner halves.
    """
    verts = _check_colouring(g, col.classes)
    if not _is_optimal(g, verts, len(col.classes)):
        raise PremiseError("faithful immersion needs an optimal colouring")
    if col.detached:
        raise PremiseError(
            f"pair class {col.detached[0]} has no singleton attached by exactly one edge"
        )
    labels = corner_labels(g, col)
    inner = {cls: cls[0] if cls[1] == labels[cls] else cls[1] for cls in col.attached}
    corners = tuple(sorted(list(col.singletons) + [labels[cls] for cls in col.attached]))

    used: set[int] = set()
    paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def connect(route: tuple[int, ...]) -> None:
        for t in range(len(route) - 1):
            if not g.has_edge(route[t], route[t + 1]):
                raise CertificateError(
                    "required edge missing from the host graph",
                    dump={"route": route, "gap": (route[t], route[t + 1])},
                )
        key, ids = _as_path(g, route, used)
        paths[key] = ids

    for u, w in combinations(col.singletons, 2):
        connect((u, w))
    for a in col.singletons:
        for cls in col.attached:
            connect((a, labels[cls]))
    for cls_a, cls_b in combinations(col.attached, 2):
        ca, cb = labels[cls_a], labels[cls_b]
        if g.has_edge(ca, cb):
            connect((ca, cb))
        else:
            connect((ca, inner[cls_b], inner[cls_a], cb))

    return Immersion(corners, paths, faithful_to=col)


# -- independent verifier ---------------------------------------------------


def verify_immersion(
    g: Multigraph, imm: Immersion, t: int, faithful_wrt: PairColouring | None = None
) -> ValidityReport:
    """Replay an immersion certificate clause by clause.

    Accepts iff the corner set has exactly ``t`` distinct vertices, there is
    exactly one path per unordered corner pair, every path is a walk whose
    consecutive edges chain between its corners, and no edge identity is
    used twice.  A colouring in ``faithful_wrt`` (defaulting to the
    immersion's own ``faithful_to`` annotation) additionally restricts every
    path to the union of its corners' classes, at most one corner per class.
    """
    failures: list[str] = []
    corners = imm.corners
    if len(corners) != t:
        failures.append(f"corner count {len(corners)} differs from target {t}")
    if len(set(corners)) != len(corners):
        failures.append("corners are not distinct")
    if any(not 0 <= u < g.n for u in corners):
        failures.append("corner outside the graph")
        return ValidityReport.from_failures(failures)

    wanted = {tuple(sorted(p)) for p in combinations(set(corners), 2)}
    got = set(imm.paths)
    for key in sorted(wanted - got):
        failures.append(f"missing path for corner pair {key}")
    for key in sorted(got - wanted):
        failures.append(f"path for non-corner pair {key}")

    tally: dict[int, int] = {}
    for key in sorted(got & wanted):
        seq = imm.paths[key]
        if not seq:
            failures.append(f"empty path for pair {key}")
            continue
        at = key[0]
        ok = True
        for e in seq:
            if not 0 <= e < g.m:
                failures.append(f"path for pair {key} uses unknown edge {e}")
                ok = False
                break
            u, w = g.endpoints(e)
            if at == u:
                at = w
            elif at == w:
                at = u
            else:
                failures.append(f"path for pair {key}: edge {e} does not continue the walk")
                ok = False
                break
            tally[e] = tally.get(e, 0) + 1
        if ok and at != key[1]:
            failures.append(f"path for pair {key} stops at {at}, not at its endpoint {key[1]}")

    reused = sorted(e for e, k in tally.items() if k > 1)
    if reused:
        failures.append(f"edge reuse: identities {reused[:8]} appear in several paths")

    col = faithful_wrt if faithful_wrt is not None else imm.faithful_to
    if col is not None:
        home: dict[int, tuple[int, ...]] = {}
        for cls in col.classes:
            for v in cls:
                home[v] = cls
        for cls in col.classes:
            inside = [u for u in set(corners) if u in cls]
            if len(inside) > 1:
                failures.append(f"class {cls} contains two corners {sorted(inside)}")
        for key in sorted(got & wanted):
            if key[0] not in home or key[1] not in home:
                failures.append(f"corner pair {key} not covered by the colouring")
                continue
            allowed = set(home[key[0]]) | set(home[key[1]])
            for e in imm.paths[key]:
                if not 0 <= e < g.m:
                    continue
                u, w = g.endpoints(e)
                if u not in allowed or w not in allowed:
                    failures.append(
                        f"path for pair {key} leaves its classes at edge {e}"
                    )
                    break

    return ValidityReport.from_failures(failures, details={"paths": len(imm.paths)})


# -- structural audits ------------------------------------------------------
#
# Each audit checks a fact that holds for every optimal colouring of a graph
# without independent triples; the construction trusts these facts, the
# tests point the audits at everything the pipeline produces.


def audit_shared_attachment(g: Multigraph, col: PairColouring) -> list[str]:
    """All singletons attaching to a pair class by one edge name one vertex."""
    bad = []
    for cls in col.pairs:
        named = {
            next(a for a in cls if g.has_edge(v, a))
            for v in col.singletons
            if _edge_count(g, v, cls) == 1
        }
        if len(named) > 1:
            bad.append(f"attachers of class {cls} split between {sorted(named)}")
    return bad


def audit_singleton_clique(g: Multigraph, col: PairColouring) -> list[str]:
    """Any two singleton classes are adjacent (they would merge otherwise)."""
    return [
        f"singletons {u} and {w} are non-adjacent"
        for u, w in combinations(col.singletons, 2)
        if not g.has_edge(u, w)
    ]


def audit_inner_adjacency(g: Multigraph, col: PairColouring) -> list[str]:
    """Inner halves of classes attached to a common singleton are adjacent."""
    bad = []
    for v in col.singletons:
        inners = [
            next(a for a in cls if not g.has_edge(v, a))
            for cls in col.pairs
            if _edge_count(g, v, cls) == 1
        ]
        bad.extend(
            f"inner halves {p} and {q} at singleton {v} are non-adjacent"
            for p, q in combinations(inners, 2)
            if not g.has_edge(p, q)
        )
    return bad


def audit_double_nonedge(g: Multigraph, col: PairColouring) -> list[str]:
    """Two singleton non-edges into distinct pair classes force a K₄.

    If u misses one half of class A and v ≠ u misses one half of class B ≠ A,
    then u, v and the two other halves are pairwise adjacent.
    """
    bad = []
    for cls_a, cls_b in combinations(col.pairs, 2):
        for u, v in combinations(col.singletons, 2):
            for uu, vv in ((u, v), (v, u)):
                for a1 in cls_a:
                    if g.has_edge(uu, a1):
                        continue
                    for b1 in cls_b:
                        if g.has_edge(vv, b1):
                            continue
                        a2 = cls_a[0] if a1 == cls_a[1] else cls_a[1]
                        b2 = cls_b[0] if b1 == cls_b[1] else cls_b[1]
                        four = (uu, vv, a2, b2)
                        for x, y in combinations(four, 2):
                            if not g.has_edge(x, y):
                                bad.append(
                                    f"quadruple {four} from classes {cls_a}, {cls_b} "
                                    f"misses edge {x}-{y}"
                                )
    return bad


def audit_refined(g: Multigraph, col: PairColouring) -> list[str]:
    """The counting inequality of refine_split holds for every attached class."""
    labels = corner_labels(g, col)
    bad = []
    for v, group in sorted(_grouped_by_owner(col).items()):
        for cls in sorted(group):
            lhs, rhs = _count_gap(g, col, labels, v, cls)
            if lhs > rhs:
                bad.append(
                    f"class {cls} of owner {v}: {lhs} singly-met detached classes "
                    f"but only {rhs} doubly-met companions"
                )
    return bad


def run_colouring_audits(g: Multigraph, col: PairColouring) -> list[str]:
    """Every structural audit that applies to a bare optimal colouring."""
    return (
        audit_shared_attachment(g, col)
        + audit_singleton_clique(g, col)
        + audit_inner_adjacency(g, col)
        + audit_double_nonedge(g, col)
    )
