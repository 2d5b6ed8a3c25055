"""Maximum 2-bounded subgraphs of even-multiplicity multigraphs.

Given a multigraph in which every edge has even multiplicity (typically the
doubled copy of some base graph), this module computes

* the deficiency ``def(S, T) = f(T) - f(S) + q(S, T) - d_{G-S}(T)`` for
  ``f ≡ 2``,
* a containment-minimal pair ``(S, T)`` maximizing the deficiency, and
* a degree-≤2 subgraph ``H`` of maximum degree sum whose components are
  2-cycles (pairs of parallel edges) and odd cycles, structured so that
  ``H[S ∪ T]`` consists of 2-cycles plus ``|T| - |S|`` isolated vertices of
  ``T`` and every maximum-degree vertex is covered.

The scalable algorithm avoids a general degree-constrained-subgraph solver:
a maximum matching of the bipartite double cover of the support graph gives
a half-integral optimum, the pair ``(S, T)`` falls out of alternating
reachability, and the structure inside ``S ∪ T`` is rebuilt by bipartite
matching.  A 3^n brute-force oracle guards all of it at small scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import CertificateError, PremiseError, SizeGuardError
from .graphs import Multigraph
from .matching import bipartite_maximum_matching

FTable = Sequence[int]
FSpec = FTable | Mapping[int, int] | Callable[[int], int]


def _as_table(f: FSpec, n: int) -> list[int]:
    if callable(f):
        return [f(v) for v in range(n)]
    if isinstance(f, Mapping):
        return [f[v] for v in range(n)]
    table = list(f)
    if len(table) != n:
        raise PremiseError(f"degree bound table has length {len(table)}, expected {n}")
    return table


@dataclass(frozen=True)
class DeficiencyPair:
    """A disjoint vertex pair (S, T) with its deficiency value.

    When ``minimal`` is set (and the host graph is even-multiplicity with
    f ≡ 2), the pair additionally satisfies: T independent, N(T) = S,
    value = 2|T| - 2|S|, and |N(X) ∩ T| > |X| for every nonempty X ⊆ S.
    """

    s: frozenset[int]
    t: frozenset[int]
    value: int
    minimal: bool = False


@dataclass(frozen=True)
class TwoCycle:
    u: int
    v: int
    edges: tuple[int, int]


@dataclass(frozen=True)
class FactorSubgraph:
    """Disjoint union of 2-cycles and odd cycles, given by edge identities."""

    two_cycles: tuple[TwoCycle, ...]
    odd_cycles: tuple[tuple[int, ...], ...]

    def all_edge_ids(self) -> Iterator[int]:
        for tc in self.two_cycles:
            yield from tc.edges
        for cyc in self.odd_cycles:
            yield from cyc

    def degree_sum(self) -> int:
        return 4 * len(self.two_cycles) + 2 * sum(map(len, self.odd_cycles))


def deficiency(g: Multigraph, f: FSpec, s_set: Iterable[int], t_set: Iterable[int]) -> int:
    """Evaluate def(S, T) = f(T) - f(S) + q(S, T) - d_{G-S}(T) directly.

    ``q(S, T)`` counts the components C of G - (S ∪ T) for which
    f(V(C)) + |E(C, T)| is odd; all edge counts respect multiplicity.
    """
    s = frozenset(s_set)
    t = frozenset(t_set)
    if s & t:
        raise PremiseError(f"S and T overlap in {sorted(s & t)}")
    table = _as_table(f, g.n)

    d_gs_t = 0
    for x in t:
        for e in g.incident(x):
            if g.other_end(e, x) not in s:
                d_gs_t += 1

    # components of G - (S ∪ T), with edge counts into T
    removed = s | t
    seen = [False] * g.n
    q = 0
    for start in range(g.n):
        if seen[start] or start in removed:
            continue
        comp_f = 0
        edges_to_t = 0
        stack = [start]
        seen[start] = True
        while stack:
            x = stack.pop()
            comp_f += table[x]
            for e in g.incident(x):
                y = g.other_end(e, x)
                if y in t:
                    edges_to_t += 1
                elif y not in s and not seen[y]:
                    seen[y] = True
                    stack.append(y)
        if (comp_f + edges_to_t) % 2:
            q += 1

    return sum(table[x] for x in t) - sum(table[x] for x in s) + q - d_gs_t


# ---------------------------------------------------------------------------
# scalable solver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _SupportFactor:
    """Solver output in support-graph terms (vertex pairs, not edge ids)."""

    s: frozenset[int]
    t: frozenset[int]
    two_cycles: tuple[tuple[int, int], ...]
    odd_cycles: tuple[tuple[int, ...], ...]  # vertex cycles, canonical rotation
    uncovered: frozenset[int]


class _FactorSolver:
    """Incremental max-2-bounded-subgraph solver on a support graph.

    ``count[(u, v)]`` is the number of *doubling pairs* available on the
    pair u-v (the doubled host graph has twice that many parallel edges).
    The bipartite double-cover matching is kept across :meth:`solve` calls
    so that the colouring induction, which repeatedly extracts an edge set
    and deletes it, pays only for re-augmentation.
    """

    def __init__(self, n: int, pair_counts: Mapping[tuple[int, int], int]):
        self.n = n
        self.count: dict[tuple[int, int], int] = {}
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for (u, v), c in pair_counts.items():
            if c <= 0:
                continue
            key = (u, v) if u < v else (v, u)
            self.count[key] = self.count.get(key, 0) + c
            self.adj[u].add(v)
            self.adj[v].add(u)
        self.mate_l = [-1] * n
        self.mate_r = [-1] * n

    def weighted_degree(self, v: int) -> int:
        return sum(self.count[(v, u) if v < u else (u, v)] for u in self.adj[v])

    def remove_copy(self, u: int, v: int) -> None:
        """Delete one doubling pair from u-v, updating the cached matching."""
        key = (u, v) if u < v else (v, u)
        left = self.count[key] - 1
        if left:
            self.count[key] = left
            return
        del self.count[key]
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        if self.mate_l[u] == v:
            self.mate_l[u] = -1
            self.mate_r[v] = -1
        if self.mate_l[v] == u:
            self.mate_l[v] = -1
            self.mate_r[u] = -1

    def _fail(self, stage: str, message: str) -> CertificateError:
        return CertificateError(
            f"{stage}: {message}",
            dump={
                "stage": stage,
                "n": self.n,
                "pair_counts": sorted(self.count.items()),
            },
        )

    def solve(self, t_priority=None) -> _SupportFactor:
        n = self.n
        adj_sorted = [sorted(a) for a in self.adj]
        self.mate_l, self.mate_r = bipartite_maximum_matching(
            n, n, adj_sorted, self.mate_l, self.mate_r
        )
        mate_l, mate_r = self.mate_l, self.mate_r

        # alternating reachability from exposed left copies; the König cover
        # of the double cover translates to (S, T) via per-vertex cover counts
        z_l = [False] * n
        z_r = [False] * n
        stack = [v for v in range(n) if mate_l[v] == -1]
        for v in stack:
            z_l[v] = True
        while stack:
            u = stack.pop()
            for w in adj_sorted[u]:
                if w != mate_l[u] and not z_r[w]:
                    z_r[w] = True
                    p = mate_r[w]
                    if p == -1:
                        raise self._fail("extract", "augmenting path past a maximum matching")
                    if not z_l[p]:
                        z_l[p] = True
                        stack.append(p)

        s = {v for v in range(n) if not z_l[v] and z_r[v]}
        t = {v for v in range(n) if z_l[v] and not z_r[v]}

        if s:
            self._shrink_to_minimal(s, t, adj_sorted)

        return self._build_structure(s, t, adj_sorted, t_priority)

    def _shrink_to_minimal(self, s: set[int], t: set[int], adj_sorted) -> None:
        """Drop the maximal tight subset of S (with its T-neighbourhood).

        On entry (S, T) maximizes the deficiency with T independent and
        N(T) = S, which forces |N(X) ∩ T| ≥ |X| for all X ⊆ S; removing the
        single maximal tight set makes the inequality strict everywhere.
        """
        s_list = sorted(s)
        t_list = sorted(t)
        t_pos = {v: i for i, v in enumerate(t_list)}
        s_adj = [[t_pos[w] for w in adj_sorted[v] if w in t] for v in s_list]
        ml, mr = bipartite_maximum_matching(len(s_list), len(t_list), s_adj)
        if -1 in ml:
            raise self._fail("shrink", "S not matchable into T at a deficiency maximizer")

        t_adj: list[list[int]] = [[] for _ in t_list]
        for i, row in enumerate(s_adj):
            for j in row:
                t_adj[j].append(i)
        reach_s = [False] * len(s_list)
        reach_t = [False] * len(t_list)
        stack = [j for j in range(len(t_list)) if mr[j] == -1]
        for j in stack:
            reach_t[j] = True
        while stack:
            j = stack.pop()
            for i in t_adj[j]:
                if ml[i] != j and not reach_s[i]:
                    reach_s[i] = True
                    j2 = ml[i]
                    if not reach_t[j2]:
                        reach_t[j2] = True
                        stack.append(j2)

        for i, v in enumerate(s_list):
            if not reach_s[i]:
                s.discard(v)
                t.discard(t_list[ml[i]])

    def _build_structure(self, s: set[int], t: set[int], adj_sorted, t_priority=None) -> _SupportFactor:
        n = self.n
        mate_l = self.mate_l
        inside = s | t

        two: list[tuple[int, int]] = []
        inside_pairs: list[tuple[int, int]] = []
        half_adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.count:
            m = (mate_l[u] == v) + (mate_l[v] == u)
            if m == 0:
                continue
            if (u in inside) != (v in inside):
                raise self._fail("structure", f"component crosses the S∪T boundary at {u}-{v}")
            if m == 2:
                (inside_pairs if u in inside else two).append((u, v))
            else:
                half_adj[u].append(v)
                half_adj[v].append(u)

        # half-integral components: paths live inside S∪T (both endpoints in
        # T), cycles inside are even and get rebuilt, cycles outside are kept
        # as odd cycles or split into alternating 2-cycles.
        seen = [False] * n
        odd_cycles: list[tuple[int, ...]] = []
        for v0 in range(n):
            if seen[v0] or len(half_adj[v0]) != 1:
                continue
            walk = [v0]
            seen[v0] = True
            prev, cur = v0, half_adj[v0][0]
            while True:
                walk.append(cur)
                seen[cur] = True
                nxts = [w for w in half_adj[cur] if w != prev]
                if not nxts:
                    break
                prev, cur = cur, nxts[0]
            if walk[0] not in t or walk[-1] not in t:
                raise self._fail("structure", f"open component endpoint outside T: {walk}")
        for v0 in range(n):
            if seen[v0] or not half_adj[v0]:
                continue
            cycle = [v0]
            seen[v0] = True
            prev, cur = v0, min(half_adj[v0])
            while cur != v0:
                cycle.append(cur)
                seen[cur] = True
                a, b = half_adj[cur]
                prev, cur = cur, (b if a == prev else a)
            if cycle[0] in inside:
                if len(cycle) % 2:
                    raise self._fail("structure", f"odd cycle through S∪T: {cycle}")
                continue  # rebuilt below via the S-T matching
            if len(cycle) % 2:
                odd_cycles.append(tuple(cycle))
            else:
                for i in range(0, len(cycle), 2):
                    a, b = cycle[i], cycle[i + 1]
                    two.append((a, b) if a < b else (b, a))

        # rebuild H[S ∪ T]: 2-cycles matching S into T.  The T-vertex sets an
        # S-saturating matching can cover are the bases of a transversal
        # matroid, so covering T greedily in priority order is optimal.
        # Vertices at the current maximum degree come first regardless (they
        # must end up spanned); callers may promote others via t_priority.
        covered_t: set[int] = set()
        if s:
            s_list = sorted(s)
            t_list = sorted(t)
            s_pos = {v: i for i, v in enumerate(s_list)}
            t_adj = [[s_pos[w] for w in adj_sorted[v] if w in s] for v in t_list]
            delta = max(map(self.weighted_degree, range(n)), default=0)
            mandatory = [self.weighted_degree(v) == delta for v in t_list]
            if t_priority is None:
                order = sorted(range(len(t_list)), key=lambda j: (not mandatory[j], j))
            else:
                order = sorted(
                    range(len(t_list)),
                    key=lambda j: (not mandatory[j], t_priority(t_list[j]), j),
                )
            mate_t = [-1] * len(t_list)
            mate_s = [-1] * len(s_list)

            def try_cover(j: int, seen: set[int]) -> bool:
                for i in t_adj[j]:
                    if i in seen:
                        continue
                    seen.add(i)
                    if mate_s[i] == -1 or try_cover(mate_s[i], seen):
                        mate_s[i] = j
                        mate_t[j] = i
                        return True
                return False

            for j in order:
                try_cover(j, set())
            # a T-to-S matching has size at most |S| and an S-saturating one
            # exists, so the greedy maximum saturates S automatically
            if -1 in mate_s:
                raise self._fail("rebuild", "S not saturated while rebuilding H[S∪T]")
            for j, i in enumerate(mate_t):
                if i == -1:
                    if mandatory[j]:
                        raise self._fail(
                            "rebuild",
                            f"maximum-degree vertex {t_list[j]} of T left uncovered",
                        )
                    continue
                a, b = s_list[i], t_list[j]
                two.append((a, b) if a < b else (b, a))
                covered_t.add(t_list[j])

        return _SupportFactor(
            s=frozenset(s),
            t=frozenset(t),
            two_cycles=tuple(sorted(two)),
            odd_cycles=tuple(sorted(odd_cycles)),
            uncovered=frozenset(t - covered_t),
        )


def _halved_counts(g: Multigraph) -> dict[tuple[int, int], int]:
    counts = {}
    for u, v in g.support_pairs():
        mult = g.multiplicity(u, v)
        if mult % 2:
            raise PremiseError(f"edge {u}-{v} has odd multiplicity {mult}")
        counts[(u, v)] = mult // 2
    return counts


def max_deficiency_pair(g: Multigraph) -> DeficiencyPair:
    """Containment-minimal maximizer of def(S, T) with f ≡ 2.

    Requires every edge of ``g`` to have even multiplicity.
    """
    solver = _FactorSolver(g.n, _halved_counts(g))
    res = solver.solve()
    return DeficiencyPair(
        s=res.s, t=res.t, value=2 * (len(res.t) - len(res.s)), minimal=True
    )


def max_f_bounded_subgraph(g: Multigraph) -> tuple[FactorSubgraph, DeficiencyPair]:
    """Maximum-degree-sum subgraph with degrees ≤ 2, plus its witness pair.

    The subgraph consists of 2-cycles and odd cycles, attains degree sum
    ``2 n - def(S, T)``, and covers every maximum-degree vertex.
    """
    solver = _FactorSolver(g.n, _halved_counts(g))
    res = solver.solve()
    pair = DeficiencyPair(
        s=res.s, t=res.t, value=2 * (len(res.t) - len(res.s)), minimal=True
    )

    two = []
    for u, v in res.two_cycles:
        ids = g.edge_ids_between(u, v)
        two.append(TwoCycle(u, v, (ids[0], ids[1])))
    cycles = []
    for cyc in res.odd_cycles:
        k = len(cyc)
        cycles.append(
            tuple(g.edge_ids_between(cyc[i], cyc[(i + 1) % k])[0] for i in range(k))
        )
    return FactorSubgraph(tuple(two), tuple(cycles)), pair


# ---------------------------------------------------------------------------
# brute force
# ---------------------------------------------------------------------------

_BRUTE_LIMIT = 14


def brute_force_deficiency(g: Multigraph, f: FSpec) -> DeficiencyPair:
    """Exact deficiency maximizer by exhaustive enumeration (n ≤ 14).

    Ties are broken toward the containment-minimal pair: smallest
    |S| + |T| first, then lexicographically smallest (sorted S, sorted T).
    When all degree bounds and all edge multiplicities are even the parity
    term q vanishes and a vectorized enumeration over S alone is exact;
    otherwise all 3^n disjoint pairs are scanned.
    """
    n = g.n
    if n > _BRUTE_LIMIT:
        raise SizeGuardError(f"brute_force_deficiency limited to n ≤ {_BRUTE_LIMIT}, got {n}")
    table = _as_table(f, g.n)

    even = all(x % 2 == 0 for x in table) and all(
        g.multiplicity(u, v) % 2 == 0 for u, v in g.support_pairs()
    )
    if even:
        return _brute_even(g, table)
    return _brute_general(g, table)


def _pair_from_masks(s_mask: int, t_mask: int, value: int) -> DeficiencyPair:
    s = frozenset(v for v in range(s_mask.bit_length()) if s_mask >> v & 1)
    t = frozenset(v for v in range(t_mask.bit_length()) if t_mask >> v & 1)
    return DeficiencyPair(s=s, t=t, value=value, minimal=True)


def _brute_even(g: Multigraph, table: list[int]) -> DeficiencyPair:
    n = g.n
    if n == 0:
        return DeficiencyPair(frozenset(), frozenset(), 0, minimal=True)
    mult = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        mult[u, v] += 1
        mult[v, u] += 1
    fv = np.array(table, dtype=np.int64)
    deg = np.array(g.degrees, dtype=np.int64)

    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1  # (2^n, n)
    # gain of placing t in T, given S: f(t) - deg(t) + (edges from t into S)
    gain = fv - deg + bits @ mult
    usable = (gain > 0) & (bits == 0)
    value = np.where(usable, gain, 0).sum(axis=1) - bits @ fv
    best = int(value.max())

    best_key = None
    best_pair = None
    for idx in np.nonzero(value == best)[0]:
        s_mask = int(idx)
        t_mask = 0
        for v in range(n):
            if usable[idx, v]:
                t_mask |= 1 << v
        size = s_mask.bit_count() + t_mask.bit_count()
        pair = _pair_from_masks(s_mask, t_mask, best)
        key = (size, sorted(pair.s), sorted(pair.t))
        if best_key is None or key < best_key:
            best_key = key
            best_pair = pair
    assert best_pair is not None
    return best_pair


def _brute_general(g: Multigraph, table: list[int]) -> DeficiencyPair:
    n = g.n
    if n == 0:
        return DeficiencyPair(frozenset(), frozenset(), 0, minimal=True)
    mult = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        mult[u][v] += 1
        mult[v][u] += 1
    deg = g.degrees

    best = None  # (value, -(size), lex...) — tracked via explicit compare
    best_key = None
    for w_mask in range(1 << n):
        outside = [v for v in range(n) if not w_mask >> v & 1]
        w_verts = [v for v in range(n) if w_mask >> v & 1]

        # components of G - W: parity of f(V(C)) and mask of W-vertices
        # joined to C by an odd number of edges
        seen = 0
        comps: list[tuple[int, int]] = []
        for start in outside:
            if seen >> start & 1:
                continue
            stack = [start]
            seen |= 1 << start
            f_par = 0
            cnt = [0] * n
            while stack:
                x = stack.pop()
                f_par ^= table[x] & 1
                for e in g.incident(x):
                    y = g.other_end(e, x)
                    if w_mask >> y & 1:
                        cnt[y] += 1
                    elif not seen >> y & 1:
                        seen |= 1 << y
                        stack.append(y)
            odd_mask = 0
            for v in w_verts:
                if cnt[v] % 2:
                    odd_mask |= 1 << v
            comps.append((f_par, odd_mask))

        t_mask = w_mask
        while True:  # enumerate T ⊆ W, S = W \ T
            s_mask = w_mask ^ t_mask
            t_verts = [v for v in w_verts if t_mask >> v & 1]
            q = 0
            for f_par, odd_mask in comps:
                if f_par ^ (bin(odd_mask & t_mask).count("1") & 1):
                    q += 1
            d = 0
            fsum = 0
            for v in t_verts:
                fsum += table[v]
                d += deg[v]
                for u in range(n):
                    if s_mask >> u & 1:
                        d -= mult[v][u]
            for v in w_verts:
                if s_mask >> v & 1:
                    fsum -= table[v]
            value = fsum + q - d
            if best is None or value > best:
                best = value
                best_key = None
            if value == best:
                size = bin(w_mask).count("1")
                key = (
                    size,
                    sorted(v for v in w_verts if s_mask >> v & 1),
                    sorted(t_verts),
                )
                if best_key is None or key < best_key:
                    best_key = key
                    best_masks = (s_mask, t_mask)
            if t_mask == 0:
                break
            t_mask = (t_mask - 1) & w_mask

    assert best is not None
    return _pair_from_masks(best_masks[0], best_masks[1], best)


# ---------------------------------------------------------------------------
# structural validation
# ---------------------------------------------------------------------------


def check_factor_properties(
    g: Multigraph, h: FactorSubgraph, pair: DeficiencyPair
) -> list[str]:
    """Return violations of the six structural properties of (H, S, T).

    Checked against the even-multiplicity host ``g`` with f ≡ 2:

    1. H is a disjoint union of 2-cycles and odd cycles;
    2. def value = 2|T| - 2|S| and degree-sum(H) = 2n - value;
    3. T is independent and N(T) = S;
    4. H[S ∪ T] is a set of 2-cycles plus |T| - |S| isolated vertices, all
       in T;
    5. every nonempty X ⊆ S satisfies |N(X) ∩ T| > |X|;
    6. every maximum-degree vertex has degree 2 in H.
    """
    bad: list[str] = []
    s, t = pair.s, pair.t
    if s & t:
        bad.append(f"S and T overlap: {sorted(s & t)}")

    deg_h = [0] * g.n
    used: set[int] = set()
    for e in h.all_edge_ids():
        if e in used:
            bad.append(f"edge {e} used twice in H")
        used.add(e)
        u, v = g.endpoints(e)
        deg_h[u] += 1
        deg_h[v] += 1

    comp_vertices: list[set[int]] = []
    cycle_sets: list[tuple[tuple[int, ...], set[int]]] = []
    for tc in h.two_cycles:
        e1, e2 = tc.edges
        pair_uv = tuple(sorted((tc.u, tc.v)))
        if g.endpoints(e1) != pair_uv or g.endpoints(e2) != pair_uv or e1 == e2:
            bad.append(f"2-cycle {tc} is not two parallel edges")
        comp_vertices.append({tc.u, tc.v})
    for cyc in h.odd_cycles:
        if len(cyc) % 2 == 0 or len(cyc) < 3:
            bad.append(f"cycle {cyc} is not odd of length ≥ 3")
            continue
        verts = []
        ok = True
        for i, e in enumerate(cyc):
            u1, v1 = g.endpoints(e)
            u2, v2 = g.endpoints(cyc[(i + 1) % len(cyc)])
            shared = {u1, v1} & {u2, v2}
            if len(shared) != 1:
                ok = False
                break
            verts.append(next(iter(shared)))
        if not ok or len(set(verts)) != len(cyc):
            bad.append(f"cycle {cyc} does not trace a simple closed walk")
            continue
        comp_vertices.append(set(verts))
        cycle_sets.append((cyc, set(verts)))
    all_covered: set[int] = set()
    for cv in comp_vertices:
        if cv & all_covered:
            bad.append(f"components share vertices: {sorted(cv & all_covered)}")
        all_covered |= cv

    expect = 2 * len(t) - 2 * len(s)
    if pair.value != expect:
        bad.append(f"value {pair.value} ≠ 2|T| - 2|S| = {expect}")
    if h.degree_sum() != 2 * g.n - pair.value:
        bad.append(f"degree-sum {h.degree_sum()} ≠ 2n - def = {2 * g.n - pair.value}")

    for x in t:
        for y in g.neighbours(x):
            if y in t:
                bad.append(f"T not independent: edge {x}-{y}")
            elif y not in s:
                bad.append(f"N(T) ⊄ S: neighbour {y} of {x}")
    for x in s:
        if not any(y in t for y in g.neighbours(x)):
            bad.append(f"S vertex {x} has no neighbour in T")

    inside = s | t
    isolated_inside = {v for v in inside if deg_h[v] == 0}
    if not isolated_inside <= t:
        bad.append(f"isolated vertices outside T: {sorted(isolated_inside - t)}")
    if len(isolated_inside) != len(t) - len(s):
        bad.append(
            f"{len(isolated_inside)} isolated vertices in S∪T, expected {len(t) - len(s)}"
        )
    for tc in h.two_cycles:
        ends = {tc.u, tc.v}
        if ends & inside and not (len(ends & s) == 1 and len(ends & t) == 1):
            bad.append(f"2-cycle {tc.u}-{tc.v} does not pair S with T")
    for cyc, cv in cycle_sets:
        if cv & inside:
            bad.append(f"odd cycle {cyc} meets S ∪ T")

    s_list = sorted(s)
    if len(s_list) <= 20:
        for x_mask in range(1, 1 << len(s_list)):
            xs = [s_list[i] for i in range(len(s_list)) if x_mask >> i & 1]
            nbhd = {y for x in xs for y in g.neighbours(x) if y in t}
            if len(nbhd) <= len(xs):
                bad.append(f"no strict expansion: X = {xs}, |N(X) ∩ T| = {len(nbhd)}")
                break

    delta = g.max_degree()
    for v in range(g.n):
        if g.degree(v) == delta and deg_h[v] != 2 and delta > 0:
            bad.append(f"maximum-degree vertex {v} has H-degree {deg_h[v]}")

    return bad
