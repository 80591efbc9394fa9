"""Command-line interface; every subcommand prints a single JSON document."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .boxspace import box_dimension
from .centralizer import PairShape, build_T, canonical_pair_shape, orbit_basis, structure_constants
from .diagrams import (
    SET_PARTITION_LIMIT,
    SetPartitionDiagram,
    enumerate_diagram_classes,
    lambda_mu_of,
    lozenge_canonical,
    m_matrix,
    phi,
)
from .dimension import METHODS, dimension_crosscheck, dimension_formula
from .partitions import PartitionConstraint, parse_partition
from .verify import run_invariant_suite

SCHEMA = "v1"
THREADS_ENV = "BOXCENTRALIZER_THREADS"


class CliError(Exception):
    def __init__(self, kind: str, message: str, status: int = 1):
        super().__init__(message)
        self.kind = kind
        self.status = status


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise CliError("usage", f"{self.prog}: {message}", status=2)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parse_class(text: str, c: PartitionConstraint) -> PairShape:
    """A class is either a JSON PairShape ``[[a, b], ...]`` or a representative ``A/B``."""
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid class JSON: {exc}") from None
        shape = PairShape.from_json(data, c.n)
        if shape.k != c.k:
            raise ValueError(f"class {data} has pair sums {shape.k}, expected k={c.k}")
        return shape
    if "/" not in text:
        raise ValueError(f"class must be JSON pairs or 'lambda/mu', got {text!r}")
    lam, mu = text.split("/", 1)
    return canonical_pair_shape(parse_partition(lam), parse_partition(mu), c)


def _load_blocks(text: str, k: int) -> SetPartitionDiagram:
    source = text
    if not text.lstrip().startswith(("{", "[")):
        path = Path(text)
        if not path.exists():
            raise ValueError(f"--blocks is neither JSON nor an existing file: {text!r}")
        source = path.read_text()
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid diagram JSON: {exc}") from None
    if isinstance(data, list):
        data = {"k": k, "blocks": data}
    diagram = SetPartitionDiagram.from_json(data)
    if diagram.k != k:
        raise ValueError(f"diagram has k={diagram.k} but --k {k} was given")
    return diagram


def cmd_dim(args) -> dict:
    n = args.n if args.n is not None else 2 * args.k
    methods = METHODS if args.method == "all" else (args.method,)
    if args.method in ("diagram", "formula") and 2 * args.k > n:
        raise ValueError(f"method {args.method!r} requires 2k <= n, got k={args.k}, n={n}")
    report = dimension_crosscheck(args.k, n, methods, threads=args.threads)
    if report.stable and not report.agree:
        print(
            f"note: dimension methods disagree at k={args.k}, n={n}: "
            f"orbit={report.orbit} diagram={report.diagram} formula={report.formula}",
            file=sys.stderr,
        )
    return report.to_json()


def cmd_basis(args) -> dict:
    c = PartitionConstraint(args.k, args.n)
    basis = orbit_basis(c, args.threads)
    return {
        "schema": SCHEMA,
        "k": c.k,
        "n": c.n,
        "box_dimension": box_dimension(c),
        "dimension": len(basis),
        "basis": [e.to_json() for e in basis],
    }


def cmd_expand_t(args) -> dict:
    c = PartitionConstraint(args.k, args.n)
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    t = build_T(lam, mu, c)
    return {
        "schema": SCHEMA,
        "lambda": list(lam),
        "mu": list(mu),
        "class": canonical_pair_shape(lam, mu, c).to_json(),
        "endomorphism": t.to_json(),
    }


def cmd_classes(args) -> dict:
    classes = enumerate_diagram_classes(args.k)
    listing = []
    for cls in classes:
        top, bottom = cls.row_partitions()
        listing.append({"class": cls.to_json(), "top_sizes": list(top), "bottom_sizes": list(bottom)})
    return {"schema": SCHEMA, "k": args.k, "count": len(classes), "classes": listing}


def cmd_phi(args) -> dict:
    diagram = _load_blocks(args.blocks, args.k)
    top, bottom = m_matrix(diagram)
    lam, mu = lambda_mu_of(diagram)
    return {
        "schema": SCHEMA,
        "k": args.k,
        "n": args.n,
        "diagram": diagram.to_json(),
        "m_matrix": [list(top), list(bottom)],
        "lambda": list(lam),
        "mu": list(mu),
        "block_shape": lozenge_canonical(diagram).to_json(),
        "pair_shape": phi(diagram, args.n).to_json(),
    }


def cmd_verify(args) -> dict:
    report = run_invariant_suite(args.k, args.n, seed=args.seed, limit=args.limit)
    if not report["ok"]:
        failed = [chk["name"] for chk in report["checks"] if not chk["ok"]]
        report["error"] = {"type": "invariant_failure", "message": f"failed checks: {', '.join(failed)}"}
    return report


def cmd_mult(args) -> dict:
    c = PartitionConstraint(args.k, args.n)
    left, right = _parse_class(args.left, c), _parse_class(args.right, c)
    coeffs = structure_constants(left, right, c)
    return {
        "schema": SCHEMA,
        "k": c.k,
        "n": c.n,
        "left": left.to_json(),
        "right": right.to_json(),
        "product": [{"class": shape.to_json(), "coeff": coeff} for shape, coeff in coeffs.items()],
    }


def cmd_sequence(args) -> dict:
    return {"schema": SCHEMA, "max_k": args.max_k, "sequence": [dimension_formula(k) for k in range(1, args.max_k + 1)]}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boxcentralizer", description=__doc__)
    parser.add_argument("--output", help="write the JSON document to this file instead of stdout")
    parser.add_argument(
        "--threads", type=_positive, default=_default_threads(),
        help=f"worker processes for orbit enumeration (default from ${THREADS_ENV}, else 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", help="dimension by orbit counting, diagram classes and the closed formula")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, help="defaults to 2k")
    p.add_argument("--method", choices=(*METHODS, "all"), default="all")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("basis", help="list the orbit basis")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("expand-t", help="expand T^lambda_mu into matrix units")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="comma separated parts")
    p.add_argument("--mu", required=True, help="comma separated parts")
    p.set_defaults(func=cmd_expand_t)

    p = sub.add_parser("classes", help="list the diagram classes")
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("phi", help="M(S), lambda(S), mu(S) and the orbit class of a diagram")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--blocks", required=True, help="diagram JSON, inline or a file path")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verify", help="run the invariant suite at (k, n)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--limit", type=_positive, default=SET_PARTITION_LIMIT,
        help=f"largest k for exhaustive set-partition enumeration (default {SET_PARTITION_LIMIT})",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mult", help="structure constants of a product of two orbit basis elements")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--left", required=True, help="class as JSON pairs or 'lambda/mu'")
    p.add_argument("--right", required=True, help="class as JSON pairs or 'lambda/mu'")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("sequence", help="closed-formula dimensions for k = 1..max-k")
    p.add_argument("--max-k", type=_positive, required=True)
    p.set_defaults(func=cmd_sequence)

    return parser


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    output = None
    try:
        args = build_parser().parse_args(argv)
        output = args.output
        doc = args.func(args)
    except CliError as exc:
        _emit({"schema": SCHEMA, "error": {"type": exc.kind, "message": str(exc)}}, output)
        return exc.status
    except ValueError as exc:
        _emit({"schema": SCHEMA, "error": {"type": "invalid_input", "message": str(exc)}}, output)
        return 1
    _emit(doc, output)
    return 1 if "error" in doc else 0


if __name__ == "__main__":
    sys.exit(main())
