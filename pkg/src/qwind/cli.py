"""Command-line surface: generators, checks, enumeration, bounds, hunt, serve.

Machine-readable JSON goes to stdout, a one-line human summary to
stderr.  Exit codes: 0 ok, 1 check failed, 2 usage error, 3 bad input
file or a file that does not fit the command.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from . import drawings, qwinding, tverberg, winding
from .complexes import Face, FaceFamily
from .drawings import ParseError
from .errors import QwindError


def _emit(obj: dict, summary: str) -> None:
    json.dump(obj, sys.stdout, sort_keys=True, indent=1)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def _read_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def parse_family_spec(spec: str) -> FaceFamily:
    """Family syntax: faces split by ';', vertices by ','  e.g. '4;0,1,6;2,3,5'."""
    faces = []
    for part in spec.split(";"):
        try:
            vertices = [int(v) for v in part.split(",") if v.strip() != ""]
        except ValueError:
            raise ParseError(f"bad family spec near {part!r}") from None
        if not vertices:
            raise ParseError("empty face in family spec")
        faces.append(Face.of(*vertices))
    try:
        return FaceFamily.of(faces)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cmd_generate(args) -> int:
    if args.kind == "alternating":
        dr = drawings.alternating_linear_drawing(args.n)
        _emit(drawings.drawing_to_obj(dr), f"alternating linear drawing of K_{args.n}")
        return 0
    config_points = drawings.sierksma_configuration(args.d, args.q, Fraction(args.spread))
    if args.d == 1:
        config = tverberg.PointConfig(1, args.q, tuple(config_points))
    else:
        config = tverberg.PointConfig(2, args.q, tuple(config_points))
    _emit(
        tverberg.config_to_obj(config),
        f"tight-cluster configuration d={args.d} q={args.q} ({len(config_points)} points)",
    )
    return 0


def cmd_gp_check(args) -> int:
    dr = drawings.read_drawing(_read_file(args.file))
    violations = drawings.general_position_check(dr)
    _emit(drawings.gp_report_obj(violations), f"{len(violations)} general-position violation(s)")
    return 0 if not violations else 1


def cmd_perturb(args) -> int:
    dr = drawings.read_drawing(_read_file(args.file))
    out = drawings.perturb(dr, args.seed, Fraction(args.mag))
    _emit(drawings.drawing_to_obj(out), f"perturbed with seed {args.seed}, magnitude {args.mag}")
    return 0


def cmd_enumerate(args) -> int:
    data = _read_file(args.file)
    if args.what == "winding":
        dr = drawings.read_drawing(data)
        certs = winding.enumerate_winding(dr, args.q, jobs=args.jobs)
        obj = {
            "count": len(certs),
            "certificates": [winding.certificate_to_obj(c) for c in certs],
        }
        _emit(obj, f"{len(certs)} winding partition(s) for q={args.q}")
        return 0
    config = tverberg.read_config(data)
    certs = tverberg.enumerate_tverberg(config, args.q)
    obj = {
        "count": len(certs),
        "certificates": [
            {
                "family": [list(f.vertices) for f in c.family.faces],
                "witness": (
                    [str(c.witness)]
                    if config.d == 1
                    else [str(c.witness.x), str(c.witness.y)]
                ),
            }
            for c in certs
        ],
    }
    _emit(obj, f"{len(certs)} Tverberg partition(s) for q={args.q}")
    return 0


def cmd_check(args) -> int:
    dr = drawings.read_drawing(_read_file(args.file))
    family = parse_family_spec(args.family)
    cert = winding.is_winding_partition(dr, family)
    obj = {
        "certified": cert is not None,
        "certificate": winding.certificate_to_obj(cert) if cert else None,
    }
    _emit(obj, "certified" if cert else "not a winding partition")
    return 0 if cert else 1


def cmd_bounds(args) -> int:
    report = bounds_mod.bound_report(args.d, args.q, args.observed)
    _emit(report.to_obj(), f"bounds for d={args.d}, q={args.q}")
    return 0


def cmd_qwinding(args) -> int:
    dr = drawings.read_drawing(_read_file(args.file))
    found = qwinding.has_q_winding_partition(dr, args.q, args.max_len)
    if found is None:
        _emit({"found": False, "family": None, "witness": None}, "no q-winding partition")
        return 0
    family, witness = found
    obj = {
        "found": True,
        "family": [
            {"kind": m.kind, "vertices": list(m.vertices)} for m in family.members
        ],
        "witness": [str(witness.x), str(witness.y)],
    }
    _emit(obj, f"{args.q}-winding partition found")
    return 0


def cmd_outerplanar(args) -> int:
    graph = drawings.read_graph(_read_file(args.file))
    result = qwinding.is_outerplanar(graph)
    obj = {
        "outerplanar": result.outerplanar,
        "minor": (
            {
                "name": result.minor.name,
                "branch_sets": [sorted(s) for s in result.minor.branch_sets],
            }
            if result.minor
            else None
        ),
    }
    _emit(obj, "outerplanar" if result.outerplanar else f"{result.minor.name} minor found")
    return 0


def cmd_hunt(args) -> int:
    graph = qwinding.preset_graph(args.graph)
    result = winding.hunt(graph, args.q, args.seed, args.budget)
    obj = {
        "best_count": result.best_count,
        "drawing": drawings.drawing_to_obj(result.best_drawing),
        "trace": result.trace,
    }
    _emit(obj, f"best count {result.best_count} after {args.budget} step(s)")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(ui_dir=args.ui_dir), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwind", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="canonical drawings and configurations")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    g_alt = gen_sub.add_parser("alternating", help="alternating linear drawing of K_n")
    g_alt.add_argument("--n", type=int, required=True)
    g_alt.set_defaults(func=cmd_generate)
    g_sk = gen_sub.add_parser("sierksma", help="tight-cluster point configuration")
    g_sk.add_argument("--d", type=int, required=True, choices=(1, 2))
    g_sk.add_argument("--q", type=int, required=True)
    g_sk.add_argument("--spread", default="1/1000")
    g_sk.set_defaults(func=cmd_generate)

    gp = sub.add_parser("gp-check", help="general-position check of a drawing file")
    gp.add_argument("file")
    gp.set_defaults(func=cmd_gp_check)

    pert = sub.add_parser("perturb", help="exact random perturbation of a drawing")
    pert.add_argument("file")
    pert.add_argument("--seed", type=int, required=True)
    pert.add_argument("--mag", required=True)
    pert.set_defaults(func=cmd_perturb)

    enum = sub.add_parser("enumerate", help="enumerate partitions")
    enum.add_argument("what", choices=("winding", "tverberg"))
    enum.add_argument("file")
    enum.add_argument("--q", type=int, required=True)
    enum.add_argument("--jobs", type=int, default=1)
    enum.set_defaults(func=cmd_enumerate)

    chk = sub.add_parser("check", help="certify one face family on a drawing")
    chk.add_argument("file")
    chk.add_argument("--family", required=True, help="e.g. '4;0,1,6;2,3,5'")
    chk.set_defaults(func=cmd_check)

    bnd = sub.add_parser("bounds", help="evaluate the lower-bound formulas")
    bnd.add_argument("--d", type=int, required=True)
    bnd.add_argument("--q", type=int, required=True)
    bnd.add_argument("--observed", type=int, default=None)
    bnd.set_defaults(func=cmd_bounds)

    qw = sub.add_parser("qwinding", help="search a drawing for a q-winding partition")
    qw.add_argument("file")
    qw.add_argument("--q", type=int, required=True)
    qw.add_argument("--max-len", type=int, default=3, dest="max_len")
    qw.set_defaults(func=cmd_qwinding)

    op = sub.add_parser("outerplanar", help="forbidden-minor outerplanarity test")
    op.add_argument("file")
    op.set_defaults(func=cmd_outerplanar)

    hunt_p = sub.add_parser("hunt", help="anneal vertex positions to minimize the count")
    hunt_p.add_argument("--graph", required=True, help="preset: K16, K7_minus_matching, ...")
    hunt_p.add_argument("--q", type=int, required=True)
    hunt_p.add_argument("--seed", type=int, required=True)
    hunt_p.add_argument("--budget", type=int, required=True)
    hunt_p.set_defaults(func=cmd_hunt)

    srv = sub.add_parser("serve", help="run the local HTTP service")
    srv.add_argument("--port", type=int, default=8787)
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--ui-dir", default=None, dest="ui_dir")
    srv.set_defaults(func=cmd_serve)
    return parser


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except QwindError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
