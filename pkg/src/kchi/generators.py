"""Seeded instance generation and text/JSON serialization.

Generation is pure given its parameters: the same ``(n, density, seed)``
always yields the same graph, bit-exact through :func:`emit_edge_list`.

Text formats
------------
Edge list: a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u, v < n`` and ``u != v``.  ``#`` starts a comment, blank lines are
ignored.  :func:`emit_edge_list` canonicalizes (edges sorted, one space,
trailing newline), so ``emit(parse(x)) == emit(parse(emit(parse(x))))``.

DOT output is emit-only, for eyeballing instances with graphviz.

Certificate JSON: an immersion certificate serializes as an object with

* ``"kind"``: the string ``"immersion"``;
* ``"t"``: number of corners;
* ``"corners"``: sorted corner vertices;
* ``"paths"``: a list of ``{"pair": [u, w], "edges": [...]}`` objects, one
  per corner pair, edges given by identity in walk order from ``u`` to ``w``;
* ``"classes"``: optionally, the colour classes the paths are confined to
  (each a list of one or two vertices).

Keys are emitted sorted so serialization is deterministic.
"""

from __future__ import annotations

import json
import random
import re

from .errors import CertificateError, GraphError
from .graphs import Multigraph, alpha_at_most_2
from .immersion import (
    Immersion,
    _with_split,
    chi_alpha2,
    faithful_immersion,
    refine_split,
    verify_immersion,
)

__all__ = [
    "gen_alpha2",
    "gen_multigraph",
    "gen_family",
    "parse_edge_list",
    "emit_edge_list",
    "emit_dot",
    "emit_certificate",
    "parse_certificate",
]


# -- graph generation --------------------------------------------------------


def gen_alpha2(n: int, density: float, seed: int) -> Multigraph:
    """Seeded random graph with no independent triple.

    Grows a triangle-free graph by greedy insertion — every vertex pair is
    attempted with probability ``density``, in seeded random order, and kept
    unless it closes a triangle — then returns its complement.  ``density``
    0 gives the complete graph.
    """
    if n < 1:
        raise GraphError(f"need at least one vertex, got {n}")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    mask = [0] * n
    for u, v in pairs:
        if rng.random() >= density:
            continue
        if mask[u] & mask[v]:
            continue  # a common neighbour would close a triangle
        mask[u] |= 1 << v
        mask[v] |= 1 << u
    g = Multigraph(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not mask[u] >> v & 1
        ],
    )
    assert alpha_at_most_2(g)
    return g


def gen_multigraph(n: int, density: float, seed: int, max_mult: int = 3) -> Multigraph:
    """Seeded random multigraph: each pair present with probability
    ``density``, carrying 1..max_mult parallel edges."""
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.extend([(u, v)] * rng.randint(1, max_mult))
    return Multigraph(n, edges)


def _complete(n):
    return Multigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _faithful_instance(k: int, seed: int) -> Multigraph:
    """A host whose optimal colouring meets the faithful-immersion premise.

    k pair classes {2i, 2i+1} over a complete core, one designated singleton
    adjacent to exactly the upper half of every class, extra singletons
    adjacent to everything.  The seed varies the singleton count and knocks
    out a triangle-free set of upper-upper edges, which forces some corner
    pairs onto the length-3 detour through the lower halves.
    """
    if k < 1:
        raise GraphError(f"need at least one pair class, got {k}")
    rng = random.Random(seed)
    extras = rng.randint(0, 2)
    n = 2 * k + 1 + extras
    removed = [0] * n
    for i in range(k):
        for j in range(i + 1, k):
            ci, cj = 2 * i + 1, 2 * j + 1
            if rng.random() < 0.4 and not removed[ci] & removed[cj]:
                removed[ci] |= 1 << cj
                removed[cj] |= 1 << ci

    edges = []
    for u in range(2 * k):
        for v in range(u + 1, 2 * k):
            if u // 2 == v // 2 or removed[u] >> v & 1:
                continue
            edges.append((u, v))
    attacher = 2 * k
    edges.extend((2 * i + 1, attacher) for i in range(k))
    for t in range(attacher + 1, n):
        edges.extend((u, t) for u in range(t))
    return Multigraph(n, edges)


_SIMPLE_FAMILIES = {
    "cycle": lambda n: Multigraph(n, [(i, (i + 1) % n) for i in range(n)]),
    "complete": _complete,
    "star": lambda s: Multigraph(s + 1, [(0, i) for i in range(1, s + 1)]),
    "cocktail": lambda k: Multigraph(
        2 * k,
        [(u, v) for u in range(2 * k) for v in range(u + 1, 2 * k) if u // 2 != v // 2],
    ),
}


def gen_family(name: str, params) -> Multigraph:
    """Named instance families.

    cycle n | complete n | star s | cocktail k take a single integer.
    ``doubled`` wraps another family, duplicating every edge:
    ``gen_family("doubled", ("cycle", 5))``.  ``faithful`` takes ``k`` or
    ``(k, seed)`` and builds a host graph whose optimal colouring satisfies
    the faithful-immersion premise; the instance is validated end to end
    before it is returned.
    """
    args = params if isinstance(params, (tuple, list)) else (params,)
    if name in _SIMPLE_FAMILIES:
        (n,) = args
        if name == "cycle" and n < 3:
            raise GraphError(f"a cycle needs at least three vertices, got {n}")
        if n < (0 if name == "complete" else 1):
            raise GraphError(f"family {name!r} got size {n}")
        return _SIMPLE_FAMILIES[name](n)
    if name == "doubled":
        inner, *rest = args
        if isinstance(inner, str):
            return gen_family(inner, rest if len(rest) != 1 else rest[0]).doubled()
        return gen_family(inner[0], inner[1:] if len(inner) > 2 else inner[1]).doubled()
    if name == "faithful":
        k, seed = args if len(args) == 2 else (args[0], 0)
        g = _faithful_instance(k, seed)
        chi, col = chi_alpha2(g)
        col = refine_split(g, col)
        if col.detached:
            raise CertificateError(
                "generated instance has a detached class", dump={"k": k, "seed": seed}
            )
        rep = verify_immersion(g, faithful_immersion(g, col), chi, faithful_wrt=col)
        if not rep.ok:
            raise CertificateError(
                "generated instance failed its immersion check",
                dump={"k": k, "seed": seed, "failures": rep.failures},
            )
        return g
    raise GraphError(f"unknown family {name!r}")


# -- edge-list text ----------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def _rows(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if tokens:
            yield line_no, tokens


def _two_ints(line_no, tokens, what):
    if len(tokens) != 2:
        col = tokens[2][1] if len(tokens) > 2 else tokens[-1][1]
        raise GraphError(
            f"line {line_no}, column {col}: expected exactly two integers ({what})"
        )
    out = []
    for tok, col in tokens:
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise GraphError(
                f"line {line_no}, column {col}: expected an integer, got {tok!r}"
            )
        out.append(int(tok))
    return out


def parse_edge_list(text: str) -> Multigraph:
    """Parse 'n m' header plus m 'u v' lines into a multigraph."""
    rows = list(_rows(text))
    if not rows:
        raise GraphError("line 1, column 1: empty input, expected an 'n m' header")
    line_no, tokens = rows[0]
    n, m = _two_ints(line_no, tokens, "header 'n m'")
    if n < 0 or m < 0:
        raise GraphError(f"line {line_no}: negative count in header {n} {m}")
    if len(rows) - 1 != m:
        where = rows[m + 1][0] if len(rows) - 1 > m else rows[-1][0]
        raise GraphError(
            f"line {where}: header promises {m} edges, input has {len(rows) - 1}"
        )
    edges = []
    for line_no, tokens in rows[1:]:
        u, v = _two_ints(line_no, tokens, "edge 'u v'")
        for x, (_, col) in zip((u, v), tokens):
            if not 0 <= x < n:
                raise GraphError(
                    f"line {line_no}, column {col}: vertex {x} outside 0..{n - 1}"
                )
        if u == v:
            raise GraphError(f"line {line_no}: loop {u} {v} is not allowed")
        edges.append((u, v))
    return Multigraph(n, edges)


def emit_edge_list(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def emit_dot(g: Multigraph) -> str:
    lines = [f"  {v};" for v in range(g.n) if g.degree(v) == 0]
    lines += [f"  {u} -- {v};" for u, v in sorted(g.edges)]
    return "graph g {\n" + "\n".join(lines) + ("\n" if lines else "") + "}\n"


# -- certificate JSON --------------------------------------------------------


def emit_certificate(imm: Immersion) -> str:
    doc: dict = {
        "kind": "immersion",
        "t": len(imm.corners),
        "corners": list(imm.corners),
        "paths": [
            {"pair": list(pair), "edges": list(ids)}
            for pair, ids in sorted(imm.paths.items())
        ],
    }
    if imm.faithful_to is not None:
        doc["classes"] = [list(cls) for cls in imm.faithful_to.classes]
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_certificate(g: Multigraph, text: str) -> Immersion:
    """Rebuild an immersion certificate; the graph resolves colour classes."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"certificate is not valid JSON: {exc}") from None
    try:
        if doc["kind"] != "immersion":
            raise GraphError(f"unknown certificate kind {doc['kind']!r}")
        corners = tuple(doc["corners"])
        paths = {
            tuple(entry["pair"]): tuple(entry["edges"]) for entry in doc["paths"]
        }
        classes = doc.get("classes")
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed certificate: missing or bad field {exc}") from None
    col = _with_split(g, [tuple(cls) for cls in classes]) if classes else None
    return Immersion(corners, paths, faithful_to=col)
