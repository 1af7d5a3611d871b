"""Command-line interface.

Subcommands: poly (circuit polynomial of a graph file), product (construct
rooted products), verify (identity suites), spectrum (numeric roots).
Exit codes: 0 success, 2 input or validation problem, 3 enumeration cap
exceeded, 4 verification failure.  ROOTEDPOLY_CAP overrides the default cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify
from .graph import (DendrimerSpec, Graph, GraphFormatError, graph_from_json,
                    graph_to_json, rooted_product, restricted_rooted_product)
from .oracle import (DEFAULT_CAP, OracleCapExceeded, circuit_poly, mode_by_name,
                     specialize)
from .poly import Poly
from .spectra import dendrimer_spectrum, roots

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_VERIFY = 4


def _default_cap() -> int:
    value = os.environ.get("ROOTEDPOLY_CAP")
    if value is None:
        return DEFAULT_CAP
    try:
        cap = int(value)
        if cap < 1:
            raise ValueError
        return cap
    except ValueError:
        raise GraphFormatError(f"ROOTEDPOLY_CAP must be a positive integer, got {value!r}")


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise GraphFormatError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return graph_from_json(data)


def _poly_terms_json(p: Poly) -> list[dict]:
    out = []
    for mono, coeff in sorted(p.terms().items(), key=lambda kv: str(kv[0])):
        entry = {str(v): e for v, e in mono}
        if isinstance(coeff, Fraction):
            c = f"{coeff.numerator}/{coeff.denominator}"
        elif isinstance(coeff, int):
            c = str(coeff)
        else:
            c = f"{coeff:.12g}"
        out.append({"coeff": c, "monomial": entry})
    return out


def cmd_poly(args) -> int:
    g = _load_graph(args.graph)
    mode = mode_by_name(args.mode)
    cap = args.cap
    full = circuit_poly(g, cap)
    if args.full:
        result = specialize(full, mode, g, cap)
    else:
        result = specialize(full, mode.simple(), g, cap)
    if args.format == "json":
        print(json.dumps({"text": str(result), "terms": _poly_terms_json(result)}, indent=2))
    else:
        print(result)
    return EXIT_OK


def cmd_product(args) -> int:
    core = _load_graph(args.core)
    if args.restricted:
        if not (args.h1 and args.h2):
            raise GraphFormatError("--restricted needs --h1 and --h2")
        h1 = _load_graph(args.h1)
        h2 = _load_graph(args.h2)
        product, maps = restricted_rooted_product(core, h1, h2)
    else:
        if not args.gamma:
            raise GraphFormatError("need --gamma files or --restricted --h1/--h2")
        if len(args.gamma) != core.p:
            raise GraphFormatError(
                f"--gamma lists {len(args.gamma)} graphs but the core has {core.p} vertices")
        gamma = [_load_graph(f) for f in args.gamma]
        product, maps = rooted_product(core, gamma)
    doc = graph_to_json(product)
    provenance = [{"vertex": v, "origin": "core", "core_vertex": v} for v in range(1, core.p + 1)]
    for k, mapping in enumerate(maps, start=1):
        for member_vertex, product_vertex in sorted(mapping.items(), key=lambda kv: kv[1]):
            if product_vertex > core.p:
                provenance.append({"vertex": product_vertex, "origin": "attachment",
                                   "core_vertex": k, "member_vertex": member_vertex})
    doc["provenance"] = provenance
    text = json.dumps(doc, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = verify.run_suites(names, cap=args.cap, tol=args.tol)
    payload = {"suites": [r.to_dict() for r in reports],
               "status": "pass" if all(r.passed for r in reports) else "fail"}
    print(json.dumps(payload, indent=2))
    return EXIT_OK if payload["status"] == "pass" else EXIT_VERIFY


def _load_dendrimer_spec(path: str) -> DendrimerSpec:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise GraphFormatError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    for key in ("core", "unit", "attach_sites", "generations"):
        if key not in data:
            raise GraphFormatError(f"dendrimer spec missing field {key!r}")
    try:
        return DendrimerSpec(core=graph_from_json(data["core"]),
                             unit=graph_from_json(data["unit"]),
                             attach_sites=tuple(data["attach_sites"]),
                             generations=data["generations"])
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad dendrimer spec: {exc}") from exc


def _print_rootset(rs, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({
            "degree": rs.source_degree,
            "cluster_tol": rs.cluster_tol,
            "roots": [{"re": f"{v.real:.12g}", "im": f"{v.imag:.12g}",
                       "multiplicity": m, "residual": f"{r:.3g}"}
                      for (v, m), r in zip(rs.roots, rs.residuals)],
        }, indent=2))
        return
    print(f"{'real':>18} {'imag':>18} {'mult':>5} {'residual':>10}")
    for (v, m), r in zip(rs.roots, rs.residuals):
        print(f"{v.real:>18.12g} {v.imag:>18.12g} {m:>5} {r:>10.3g}")


def cmd_spectrum(args) -> int:
    mode = mode_by_name(args.mode)
    if args.dendrimer:
        spec = _load_dendrimer_spec(args.dendrimer)
        rs = dendrimer_spectrum(spec, mode, cap=args.cap, cluster_tol=args.tol)
    else:
        if not args.graph:
            raise GraphFormatError("need a graph file or --dendrimer spec")
        g = _load_graph(args.graph)
        poly = specialize(circuit_poly(g, args.cap), mode.simple(), g, args.cap)
        rs = roots(poly, cluster_tol=args.tol)
    _print_rootset(rs, args.format)
    return EXIT_OK


def build_parser(cap: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootedpoly",
        description="Circuit polynomials of weighted directed pseudographs and their rooted products")
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="circuit polynomial of a graph file")
    p_poly.add_argument("graph", help="graph JSON file")
    p_poly.add_argument("--mode", default="generic", help="weight mode name")
    group = p_poly.add_mutually_exclusive_group()
    group.add_argument("--simple", action="store_true", default=True,
                       help="collapse all vertex variables into x (default)")
    group.add_argument("--full", action="store_true",
                       help="keep the per-vertex variables")
    p_poly.add_argument("--cap", type=int, default=cap)
    p_poly.add_argument("--format", choices=("text", "json"), default="text")
    p_poly.set_defaults(func=cmd_poly)

    p_prod = sub.add_parser("product", help="construct a rooted product graph")
    p_prod.add_argument("core", help="core graph JSON file")
    p_prod.add_argument("--gamma", nargs="+", help="one attachment file per core vertex")
    p_prod.add_argument("--restricted", action="store_true",
                        help="attach --h1 on part 1 and --h2 on part 2 of a bipartitioned core")
    p_prod.add_argument("--h1")
    p_prod.add_argument("--h2")
    p_prod.add_argument("-o", "--output", help="write the product graph here")
    p_prod.set_defaults(func=cmd_product)

    p_ver = sub.add_parser("verify", help="run identity verification suites")
    p_ver.add_argument("--suite", choices=tuple(verify.SUITES) + ("all",), default="all")
    p_ver.add_argument("--cap", type=int, default=max(cap, verify.SUITE_CAP))
    p_ver.add_argument("--tol", type=float, default=1e-8)
    p_ver.set_defaults(func=cmd_verify)

    p_spec = sub.add_parser("spectrum", help="numeric roots of the simple polynomial")
    p_spec.add_argument("graph", nargs="?", help="graph JSON file")
    p_spec.add_argument("--dendrimer", help="dendrimer spec JSON file")
    p_spec.add_argument("--mode", default="characteristic-standard")
    p_spec.add_argument("--cap", type=int, default=cap)
    p_spec.add_argument("--tol", type=float, default=1e-7)
    p_spec.add_argument("--format", choices=("text", "json"), default="text")
    p_spec.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_cap())
        args = parser.parse_args(argv)
        return args.func(args)
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
