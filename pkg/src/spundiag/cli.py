"""Command-line interface: catalog, spin, verify, homology, render.

Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .heegaard import HeegaardDiagram, catalog_names, from_catalog, h1, h2
from .io_json import SchemaError, parse, serialize
from .spin import GeneratorError, MultisectionDiagram, spin_diagram
from .spun_homology import spun_homology
from .svg import render_svg, render_svg_per_system
from .verify import verify_heegaard, verify_multisection
from .wordgen import RoutingError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def _load_fiber(spec: str) -> HeegaardDiagram:
    if spec.startswith("file:"):
        path = Path(spec[len("file:") :])
        diagram = parse(path.read_text(encoding="utf-8"))
        if not isinstance(diagram, HeegaardDiagram):
            raise SchemaError("/kind", "fiber file must contain a heegaard diagram")
        return diagram
    return from_catalog(spec)


def _cmd_catalog(_args) -> int:
    print("available fibers:")
    for name in catalog_names():
        print(f"  {name}")
    print("  file:<path>   (JSON heegaard document)")
    return EXIT_OK


def _cmd_spin(args) -> int:
    fiber = _load_fiber(args.fiber)
    diagram = spin_diagram(fiber, args.m)
    report = verify_multisection(diagram)
    print(report.to_table())
    Path(args.out).write_text(serialize(diagram), encoding="utf-8")
    print(f"wrote {args.out}")
    return EXIT_OK if report.passed else EXIT_INVALID


def _cmd_verify(args) -> int:
    diagram = parse(Path(args.path).read_text(encoding="utf-8"))
    if isinstance(diagram, MultisectionDiagram):
        report = verify_multisection(diagram)
    else:
        report = verify_heegaard(diagram)
    print(report.to_table())
    return EXIT_OK if report.passed else EXIT_INVALID


def _cmd_homology(args) -> int:
    fiber = _load_fiber(args.fiber)
    if args.m < 1:
        print(
            "homology: m must be >= 1 (the 0-spun is the connected sum; "
            "spin it and verify instead)",
            file=sys.stderr,
        )
        return EXIT_USAGE
    graded = spun_homology(h1(fiber), h2(fiber), args.m)
    print("[" + ",".join(graded.strings()) + "]")
    return EXIT_OK


def _cmd_render(args) -> int:
    diagram = parse(Path(args.path).read_text(encoding="utf-8"))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.path).stem
    written = []
    if args.per_system:
        for name, svg in render_svg_per_system(diagram):
            safe = name.replace("^", "").replace("α", "alpha").replace("δ", "delta").replace("ε", "epsilon")
            path = out_dir / f"{stem}.{safe}.svg"
            path.write_text(svg, encoding="utf-8")
            written.append(path)
    else:
        path = out_dir / f"{stem}.svg"
        path.write_text(render_svg(diagram), encoding="utf-8")
        written.append(path)
    for p in written:
        print(f"wrote {p}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spundiag",
        description="Multisection diagrams of spun 3-manifolds: generate, "
        "verify, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list the built-in fiber 3-manifolds")

    p = sub.add_parser("spin", help="generate and verify a multisection diagram")
    p.add_argument("--fiber", required=True, help="lens:p,q | torus3 | poincare | file:path")
    p.add_argument("--m", type=int, required=True, help="spun parameter (>= 0)")
    p.add_argument("--out", required=True, help="output JSON path")

    p = sub.add_parser("verify", help="verify a diagram document")
    p.add_argument("path", help="JSON diagram file")

    p = sub.add_parser("homology", help="print the graded homology of the m-spun")
    p.add_argument("--fiber", required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("render", help="render a diagram document to SVG")
    p.add_argument("path", help="JSON diagram file")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--per-system", action="store_true", help="one SVG per cut system")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "catalog": _cmd_catalog,
        "spin": _cmd_spin,
        "verify": _cmd_verify,
        "homology": _cmd_homology,
        "render": _cmd_render,
    }
    try:
        return handlers[args.command](args)
    except (SchemaError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RoutingError, GeneratorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
