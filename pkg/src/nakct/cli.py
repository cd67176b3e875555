"""Command-line interface.

Every subcommand reads an algebra as JSON from a path (or standard input for
"-"), emits canonical JSON on stdout by default, and switches to a diagram
renderer with --render.  Exit codes: 0 success, 1 negative verdict, 2 input
error, 3 capacity exceeded; errors are one JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra as alg
from . import classify as cls
from . import modules as mod
from . import singularity as sing
from . import tilting
from .errors import GroundSetTooLarge, InvalidParameter, NakctError
from .render import RenderSpec, render_ar, render_resolution

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidParameter(f"cannot read JSON from {path}: {exc}")


def _load_algebra(path: str) -> alg.Algebra:
    return alg.from_json_dict(_read_json(path))


def _parse_module(algebra: alg.Algebra, text: str) -> mod.Indec:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise InvalidParameter(f"module must be 'i,j', got {text!r}")
    return mod.indec(algebra, i, j)


def _report_json(report: tilting.VerifyReport) -> dict:
    return {
        "verdict": report.verdict,
        "failures": [f.to_json_dict() for f in report.failures],
    }


def cmd_classify(args) -> int:
    algebra = _load_algebra(args.algebra)
    result = cls.classify_nz(algebra, args.n)
    _emit(cls.result_to_json_dict(result))
    return EXIT_OK if result.exists else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    algebra = _load_algebra(args.algebra)
    subs = tilting.enumerate_ct(algebra, args.n, args.mode, max_ground_set=args.max_ground_set)
    _emit({"subcategories": [tilting.members_to_json(s) for s in subs]})
    return EXIT_OK


def cmd_verify(args) -> int:
    algebra = _load_algebra(args.algebra)
    members = tilting.members_from_json(algebra, _read_json(args.subcat))
    report = tilting.verify_ct(algebra, members, args.n, args.mode)
    _emit(_report_json(report))
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def cmd_ext(args) -> int:
    algebra = _load_algebra(args.algebra)
    x = _parse_module(algebra, args.x)
    y = _parse_module(algebra, args.y)
    if args.k is not None:
        degrees = [args.k]
    else:
        degrees = list(range(1, args.max_k + 1))
    values = [
        {"k": k, "dim": mod.ext_dim(algebra, x, y, k)} for k in degrees
    ]
    _emit({"ext": values, "hom": mod.hom_dim(algebra, x, y)})
    return EXIT_OK


def cmd_ar_quiver(args) -> int:
    algebra = _load_algebra(args.algebra)
    highlight = circle = None
    if args.highlight:
        highlight = tilting.members_from_json(algebra, _read_json(args.highlight))
    if args.circle:
        circle = tilting.members_from_json(algebra, _read_json(args.circle))
    if args.render:
        spec = RenderSpec(args.render, highlight, circle)
        sys.stdout.write(render_ar(algebra, spec))
        return EXIT_OK
    quiver = mod.ar_quiver(algebra)
    _emit(
        {
            "nodes": [[v.i, v.j] for v in sorted(quiver.vertices)],
            "edges": [
                [[s.i, s.j], [t.i, t.j], tag] for s, t, tag in sorted(quiver.arrows)
            ],
        }
    )
    return EXIT_OK


def cmd_resolution_quiver(args) -> int:
    algebra = _load_algebra(args.algebra)
    quiver = sing.resolution_quiver(algebra)
    if args.render:
        sys.stdout.write(render_resolution(quiver, args.render))
        return EXIT_OK
    _emit({"successor": {str(i): j for i, j in quiver.successor}})
    return EXIT_OK


def cmd_singularity(args) -> int:
    algebra = _load_algebra(args.algebra)
    presentation = sing.gamma(algebra, args.n)
    fcat = sing.f_objects(algebra, args.n)
    record = sing.sing_ct(algebra, args.n)
    witness = sing.gorenstein_witness(algebra, args.n)
    quiver = sing.resolution_quiver(algebra)
    _emit(
        {
            "gamma": alg.to_json_dict(presentation.gamma),
            "gamma_projectives": [[p.i, p.j] for p in presentation.projectives_enum],
            "block_offsets": list(presentation.block_offsets),
            "pieces": [[p.start, p.end, p.loewy] for p in presentation.blocks.pieces],
            "distinguished": sorted(record.distinguished_simple_indices),
            "gamma_indices": sorted(record.gamma_indices),
            "count": record.count,
            "cyclic_simples": sorted(sing.cyclic_simples(algebra)),
            "f": fcat.to_json_dict(),
            "resolution": {str(i): j for i, j in quiver.successor},
            "gorenstein_witness": [witness.i, witness.j],
        }
    )
    return EXIT_OK


def cmd_glue(args) -> int:
    first = _load_algebra(args.first)
    second = _load_algebra(args.second)
    _emit(alg.to_json_dict(alg.glue(first, second)))
    return EXIT_OK


def cmd_self_glue(args) -> int:
    algebra = _load_algebra(args.algebra)
    _emit(alg.to_json_dict(alg.self_glue(algebra)))
    return EXIT_OK


def cmd_gldim(args) -> int:
    algebra = _load_algebra(args.algebra)
    value = mod.gldim(algebra)
    _emit({"gldim": "infinity" if value == mod.INFINITY else value})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakct",
        description="Exact computations over Nakayama algebras: AR quivers, "
        "Ext groups, cluster-tilting subcategories, singularity models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, help="decide nZ-cluster tilting existence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("algebra", nargs="?", default="-")

    p = add("enumerate", cmd_enumerate, help="brute-force all (n|nZ)-cluster tilting subcategories")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("n", "nZ"), default="nZ")
    p.add_argument("--max-ground-set", type=int, default=None)
    p.add_argument("algebra", nargs="?", default="-")

    p = add("verify", cmd_verify, help="verify a candidate subcategory")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("n", "nZ"), default="nZ")
    p.add_argument("--subcat", required=True, help="JSON file with {\"members\": [[i,j],...]}")
    p.add_argument("algebra", nargs="?", default="-")

    p = add("ext", cmd_ext, help="Hom and Ext dimensions between two indecomposables")
    p.add_argument("--x", required=True, help="source module as 'i,j'")
    p.add_argument("--y", required=True, help="target module as 'i,j'")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("algebra", nargs="?", default="-")

    p = add("ar-quiver", cmd_ar_quiver, help="the Auslander-Reiten quiver")
    p.add_argument("--render", choices=("dot", "tikz", "ascii"), default=None)
    p.add_argument("--highlight", default=None, help="subcategory JSON to box")
    p.add_argument("--circle", default=None, help="module set JSON to circle")
    p.add_argument("algebra", nargs="?", default="-")

    p = add("resolution-quiver", cmd_resolution_quiver, help="the resolution quiver")
    p.add_argument("--render", choices=("dot", "tikz", "ascii"), default=None)
    p.add_argument("algebra", nargs="?", default="-")

    p = add("singularity", cmd_singularity, help="singularity-category model data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("algebra", nargs="?", default="-")

    p = add("glue", cmd_glue, help="glue two acyclic algebras")
    p.add_argument("first")
    p.add_argument("second")

    p = add("self-glue", cmd_self_glue, help="self-glue an acyclic algebra")
    p.add_argument("algebra", nargs="?", default="-")

    p = add("gldim", cmd_gldim, help="global dimension")
    p.add_argument("algebra", nargs="?", default="-")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroundSetTooLarge as exc:
        sys.stderr.write(json.dumps({"error": "GroundSetTooLarge", "reason": str(exc)}) + "\n")
        return EXIT_CAPACITY
    except NakctError as exc:
        sys.stderr.write(
            json.dumps({"error": type(exc).__name__, "reason": str(exc)}) + "\n"
        )
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
