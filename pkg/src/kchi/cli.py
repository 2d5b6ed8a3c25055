"""Batch front door: colour, immerse, verify, gen, oracle, stress.

All commands put one JSON document on stdout and a short human log on
stderr.  Exit code 0 means every verification in the run passed; 1 means a
certificate or colouring was rejected; 2 means the input or the premise was
bad, with a machine-readable ``{"error": ...}`` document on stdout.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import logging
import random
import sys

from .colouring import cycle_matching_colouring, validate_cm_colouring
from .construct import construct_immersion
from .errors import CertificateError, GraphError, PremiseError, SizeGuardError
from .factor import brute_force_deficiency
from .generators import (
    emit_certificate,
    emit_dot,
    emit_edge_list,
    gen_alpha2,
    gen_family,
    parse_certificate,
    parse_edge_list,
)
from .graphs import Multigraph, alpha_at_most_2
from .immersion import chi_alpha2, verify_immersion
from .oracles import brute_alpha, brute_chi, brute_immersion_exists

log = logging.getLogger("kchi")

_DOMAIN_ERRORS = (GraphError, SizeGuardError, PremiseError, CertificateError, OSError)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_graph(path: str) -> Multigraph:
    text = _read_text(path)
    if text.lstrip().startswith("{"):  # a gen --format json document
        doc = json.loads(text)
        return Multigraph(doc["n"], [tuple(e) for e in doc["edges"]])
    return parse_edge_list(text)


def _print_json(doc) -> None:
    print(json.dumps(doc, sort_keys=True, default=repr))


def _verdict(report) -> dict:
    return {
        "ok": report.ok,
        "first_violation": report.failures[0] if report.failures else None,
        "failures": list(report.failures),
    }


# -- subcommands -------------------------------------------------------------


def _cmd_colour(args) -> int:
    g = _read_graph(args.graph)
    colouring = cycle_matching_colouring(g, r=args.r)
    report = validate_cm_colouring(g, colouring, r=args.r)
    _print_json(
        {
            "kind": "cm-colouring",
            "r": args.r,
            "palette": colouring.palette,
            "max_degree": g.max_degree(),
            "classes": colouring.classes(),
            "verdict": _verdict(report),
        }
    )
    log.info(
        "%d colours for max degree %d — %s",
        colouring.palette,
        g.max_degree(),
        "valid" if report.ok else "REJECTED",
    )
    return 0 if report.ok else 1


def _cmd_immerse(args) -> int:
    g = _read_graph(args.graph)
    imm = construct_immersion(g)
    t, _ = chi_alpha2(g)
    report = verify_immersion(g, imm, t)
    doc = json.loads(emit_certificate(imm))
    doc["chi"] = t
    doc["verdict"] = _verdict(report)
    _print_json(doc)
    if report.ok:
        log.info("verified K%d certificate (%d paths)", t, len(imm.paths))
        return 0
    log.error("construction failed its own verifier: %s", report.failures[0])
    return 1


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    imm = parse_certificate(g, _read_text(args.certificate))
    if alpha_at_most_2(g):
        t, source = chi_alpha2(g)[0], "chromatic number"
    else:
        t, source = len(imm.corners), "certificate"
    report = verify_immersion(g, imm, t)
    _print_json({"kind": "verdict", "t": t, "t_source": source, **_verdict(report)})
    if report.ok:
        log.info("certificate accepted: K%d immersion", t)
        return 0
    log.error("certificate rejected: %s", report.failures[0])
    return 1


def _cmd_gen(args) -> int:
    if args.family:
        name = args.family[0]
        params = tuple(
            int(x) if x.lstrip("+-").isdigit() else x for x in args.family[1:]
        )
        g = gen_family(name, params if len(params) != 1 else params[0])
        origin: dict = {"family": name, "params": list(params)}
    else:
        if args.n is None:
            raise GraphError("gen needs a family or --n")
        g = gen_alpha2(args.n, args.density, args.seed)
        origin = {"n": args.n, "density": args.density, "seed": args.seed}
    if args.format == "dot":
        sys.stdout.write(emit_dot(g))
    else:
        _print_json(
            {
                "kind": "graph",
                "n": g.n,
                "m": g.m,
                "edges": [list(e) for e in g.edges],
                **origin,
            }
        )
    log.info("generated %s", g)
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    doc: dict = {"kind": "oracle", "oracle": args.value}
    if args.value == "chi":
        doc["value"] = brute_chi(g)
    elif args.value == "alpha":
        doc["value"] = brute_alpha(g)
    elif args.value == "chi-prime-r":
        from .colouring import brute_force_chi_prime_r

        doc["r"] = args.r
        doc["value"] = brute_force_chi_prime_r(g, args.r)
    elif args.value == "deficiency":
        pair = brute_force_deficiency(g, [2] * g.n)
        doc["value"] = pair.value
        doc["s"] = sorted(pair.s)
        doc["t"] = sorted(pair.t)
    else:  # immersion-exists
        t = brute_chi(g)
        doc["t"] = t
        doc["value"] = brute_immersion_exists(g, t)
    _print_json(doc)
    log.info("%s = %s", args.value, doc["value"])
    return 0


def _stress_case(task: tuple[int, int, int, float | None]):
    base_seed, i, n_cap, density = task
    rng = random.Random(base_seed * 1_000_003 + i)
    n = rng.randint(1, n_cap)
    d = density if density is not None else rng.random()
    g = gen_alpha2(n, d, rng.randrange(2**32))
    try:
        imm = construct_immersion(g)
        report = verify_immersion(g, imm, chi_alpha2(g)[0])
        failures = list(report.failures)
    except _DOMAIN_ERRORS as exc:
        failures = [f"{type(exc).__name__}: {exc}"]
    if not failures:
        return i, None
    return i, {"case": i, "n": g.n, "edge_list": emit_edge_list(g), "failures": failures}


def _cmd_stress(args) -> int:
    tasks = [(args.seed, i, args.n, args.density) for i in range(args.count)]
    if args.count < 32:
        results = map(_stress_case, tasks)
    else:
        pool = concurrent.futures.ProcessPoolExecutor()
        results = pool.map(_stress_case, tasks, chunksize=max(1, args.count // 64))
    dumps = [dump for _, dump in results if dump is not None]
    ok = args.count - len(dumps)
    _print_json(
        {
            "kind": "stress",
            "count": args.count,
            "ok": ok,
            "seed": args.seed,
            "n": args.n,
            "density": args.density,
            "verified": f"{ok}/{args.count}",
            "failures": dumps,
        }
    )
    log.info("%d/%d verified", ok, args.count)
    if dumps:
        log.error("first counterexample: seed %d case %d", args.seed, dumps[0]["case"])
    return 0 if ok == args.count else 1


# -- wiring ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _print_json({"error": {"type": "UsageError", "message": message}})
        self.print_usage(sys.stderr)
        raise SystemExit(2)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kchi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("graph", nargs="?", default="-",
                       help="edge-list file, or - for stdin (default)")

    p = sub.add_parser("colour", help="cycle-matching edge colouring within max degree")
    p.add_argument("--r", type=int, default=2, help="degree bound per colour class")
    graph_arg(p)
    p.set_defaults(func=_cmd_colour)

    p = sub.add_parser("immerse", help="build and verify a complete-graph immersion")
    graph_arg(p)
    p.set_defaults(func=_cmd_immerse)

    p = sub.add_parser("verify", help="replay an immersion certificate")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("certificate", help="certificate JSON file, or - for stdin")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit an instance")
    p.add_argument("family", nargs="*", help="family name and integer parameters")
    p.add_argument("--n", type=int, help="vertex count for seeded random instances")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="exhaustive ground truth on small inputs")
    p.add_argument("value", choices=["chi", "alpha", "chi-prime-r", "deficiency",
                                     "immersion-exists"])
    p.add_argument("--r", type=int, default=2)
    graph_arg(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("stress", help="seeded construct+verify campaign")
    p.add_argument("--n", type=int, default=40, help="vertex count cap")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=None,
                   help="fixed density (default: varies per case)")
    p.set_defaults(func=_cmd_stress)

    return parser


def main(argv=None) -> int:
    log.handlers.clear()
    log.addHandler(logging.StreamHandler(sys.stderr))
    log.setLevel(logging.INFO)
    log.propagate = False
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        dump = getattr(exc, "dump", None)
        if dump:
            doc["error"]["dump"] = dump
        _print_json(doc)
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
