"""Command-line interface: analyze, check, enumerate, continuant, pullback.

Exit codes: 0 success, 1 validation error (bad input, bad graph),
2 assertion failure (enumerate row checks or a delta_min oracle
mismatch), 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .classify import SingularityKind, graph_shape, singularity_kind
from .continuant import continuant, inverse_entry
from .cycles import (
    BoundaryData,
    boundary_component,
    canonical_cycle,
    exceptional_pullback,
    fundamental_cycle,
)
from .families import (
    chain_family_size,
    chain_graph,
    iter_chain_weights,
    rdp_family,
    smooth_graph,
)
from .graph import (
    DualGraph,
    GraphValidationError,
    build_graph,
    intersection_matrix,
    validate,
)
from .invariants import DEFAULT_EPSILON, delta_min
from .linalg import matvec, quadratic_form
from .report import (
    NefData,
    build_report,
    fraction_str,
    render_text,
    report_to_dict,
)


class InputError(ValueError):
    """Malformed input document; the message carries field context."""


class _Parser(argparse.ArgumentParser):
    # usage problems are validation errors (exit 1), not assertion
    # failures (exit 2, reserved for enumerate/oracle mismatches)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class EnumerationFailure(Exception):
    """A family row violated an asserted invariant."""


@dataclass(frozen=True)
class ParsedInput:
    graph: DualGraph
    boundary: BoundaryData
    nef: NefData | None


_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[1-9][0-9]*)?$")


def parse_rational(value: object, where: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: non-rational literal {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise InputError(
        f"{where}: non-rational literal {value!r} (use an integer or a 'p/q' string)"
    )


def _require_int(value: object, where: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    if value < minimum:
        raise InputError(f"{where}: must be >= {minimum}, got {value}")
    return value


def _require_str(value: object, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise InputError(f"{where}: expected a nonempty string, got {value!r}")
    return value


def parse_input(text: str) -> ParsedInput:
    """Parse the JSON input document; see README for the format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"syntax error: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("top level must be a JSON object")
    known = {"vertices", "edges", "boundary", "nef"}
    for key in doc:
        if key not in known:
            raise InputError(f"unknown top-level key {key!r}")

    raw_vertices = doc.get("vertices")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise InputError("'vertices' must be a nonempty list")
    vertices = []
    for k, item in enumerate(raw_vertices):
        where = f"vertices[{k}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object")
        for key in item:
            if key not in {"id", "weight", "genus"}:
                raise InputError(f"{where}: unknown key {key!r}")
        vid = _require_str(item.get("id"), f"{where}.id")
        weight = _require_int(item.get("weight"), f"{where}.weight", 1)
        genus = _require_int(item.get("genus", 0), f"{where}.genus", 0)
        vertices.append((vid, weight, genus))

    edges = []
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InputError("'edges' must be a list")
    for k, item in enumerate(raw_edges):
        where = f"edges[{k}]"
        if not isinstance(item, list) or len(item) not in (2, 3):
            raise InputError(f"{where}: expected [a, b] or [a, b, multiplicity]")
        a = _require_str(item[0], f"{where}[0]")
        b = _require_str(item[1], f"{where}[1]")
        mult = _require_int(item[2], f"{where}[2]", 1) if len(item) == 3 else 1
        edges.append((a, b, mult))

    graph = build_graph(vertices, edges)

    components = []
    raw_boundary = doc.get("boundary") or []
    if not isinstance(raw_boundary, list):
        raise InputError("'boundary' must be a list")
    for k, item in enumerate(raw_boundary):
        where = f"boundary[{k}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object")
        for key in item:
            if key not in {"name", "coeff", "meets"}:
                raise InputError(f"{where}: unknown key {key!r}")
        name = _require_str(item.get("name"), f"{where}.name")
        coeff = parse_rational(item.get("coeff"), f"{where}.coeff")
        if coeff < 0 or coeff > 1:
            raise InputError(f"{where}.coeff: coefficient {coeff} out of [0, 1]")
        raw_meets = item.get("meets", {})
        if not isinstance(raw_meets, dict):
            raise InputError(f"{where}.meets: expected an object of id -> count")
        meets = [0] * graph.n
        for vid, count in raw_meets.items():
            if vid not in graph.index:
                raise InputError(f"{where}.meets: unknown vertex reference {vid!r}")
            meets[graph.index[vid]] = _require_int(
                count, f"{where}.meets[{vid!r}]", 0
            )
        components.append(boundary_component(name, coeff, meets))

    nef = None
    raw_nef = doc.get("nef")
    if raw_nef is not None:
        if not isinstance(raw_nef, dict):
            raise InputError("'nef' must be an object")
        for key in raw_nef:
            if key not in {"M2", "minMC"}:
                raise InputError(f"nef: unknown key {key!r}")
        if "M2" not in raw_nef or "minMC" not in raw_nef:
            raise InputError("nef: both 'M2' and 'minMC' are required")
        nef = NefData(
            m2=parse_rational(raw_nef["M2"], "nef.M2"),
            min_mc=parse_rational(raw_nef["minMC"], "nef.minMC"),
        )

    return ParsedInput(graph=graph, boundary=BoundaryData(tuple(components)), nef=nef)


def _read_input(path: str) -> ParsedInput:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_input(handle.read())


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text, end="")


def _cmd_analyze(args: argparse.Namespace) -> int:
    parsed = _read_input(args.file)
    report = build_report(
        parsed.graph,
        parsed.boundary,
        parsed.nef,
        epsilon=args.epsilon,
        verify_delta_min=args.oracle,
    )
    _emit(args, report_to_dict(report), render_text(report))
    if report.oracle_matches is False:
        print("error: delta_min oracle disagrees with the active-set search",
              file=sys.stderr)
        return 2
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    parsed = _read_input(args.file)
    if parsed.nef is None:
        raise InputError("missing nef data: 'check' needs {\"nef\": {\"M2\", \"minMC\"}}")
    report = build_report(
        parsed.graph, parsed.boundary, parsed.nef, epsilon=args.epsilon
    )
    _emit(args, report_to_dict(report), render_text(report))
    return 0


def _enumerate_rows(args: argparse.Namespace):
    for weights in iter_chain_weights(args.max_length, args.max_weight):
        label = "chain(" + ",".join(str(w) for w in weights) + ")"
        yield label, chain_graph(weights)
    if args.forks:
        for name, graph in rdp_family():
            if name.startswith("A"):
                continue  # all-2 chains are already in the chain sweep
            yield name, graph
        yield "smooth", smooth_graph()


def _cmd_enumerate(args: argparse.Namespace) -> int:
    total = chain_family_size(args.max_length, args.max_weight)
    if args.forks:
        total += sum(1 for name, _ in rdp_family() if not name.startswith("A")) + 1
    if total > args.limit:
        raise InputError(
            f"family has {total} rows, exceeding the row limit {args.limit} "
            "(raise it with --limit)"
        )
    rows = []
    failures = []
    for label, graph in _enumerate_rows(args):
        validate(graph)
        # One pass per row: with B = 0 the gradient at x = 0 decides
        # delta_min without the full active-set search in most cases.
        form = intersection_matrix(graph).positive_form
        z = fundamental_cycle(graph)
        canonical = canonical_cycle(graph)
        v = z - canonical
        dy = quadratic_form(form, v.coeffs)
        gradient = matvec(form, v.coeffs)
        dmin = dy if all(gj >= 0 for gj in gradient) else delta_min(graph).value
        kind = singularity_kind(graph)
        shape = graph_shape(graph)
        log_terminal = all(a < 1 for a in canonical)
        rows.append(
            {
                "label": label,
                "shape": shape.kind.value,
                "kind": kind.value,
                "log_terminal": log_terminal,
                "delta_y": fraction_str(dy),
                "delta_min": fraction_str(dmin),
            }
        )
        if kind is SingularityKind.SMOOTH:
            if dy != 4:
                failures.append(f"{label}: smooth point must have delta_y = 4, got {dy}")
        elif kind is SingularityKind.RDP:
            if dy != 2:
                failures.append(f"{label}: RDP must have delta_y = 2, got {dy}")
        elif log_terminal:
            if not 0 < dy < 2:
                failures.append(
                    f"{label}: log-terminal point must have 0 < delta_y < 2, got {dy}"
                )
    if args.json:
        print(
            json.dumps(
                {"rows": rows, "count": len(rows), "failures": failures}, indent=2
            )
        )
    else:
        header = f"{'label':<28} {'shape':<12} {'kind':<9} {'lt':<3} {'delta_y':<10} delta_min"
        print(header)
        for row in rows:
            lt = "yes" if row["log_terminal"] else "no"
            print(
                f"{row['label']:<28} {row['shape']:<12} {row['kind']:<9} "
                f"{lt:<3} {row['delta_y']:<10} {row['delta_min']}"
            )
        print(f"total: {len(rows)} rows, {len(failures)} failures")
    if failures:
        for failure in failures:
            print(f"assertion failed: {failure}", file=sys.stderr)
        return 2
    return 0


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        weights = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"weights must be a comma-separated integer list, got {text!r}")
    return weights


def _cmd_continuant(args: argparse.Namespace) -> int:
    weights = _parse_weights(args.weights)
    value = continuant(weights)
    payload: dict = {
        "weights": list(weights),
        "continuant": str(value),
    }
    lines = [f"continuant: {value}"]
    if args.inverse is not None:
        i, j = args.inverse
        entry = inverse_entry(weights, i, j)
        payload["inverse"] = {"i": i, "j": j, "value": fraction_str(entry)}
        lines.append(f"inverse entry ({i}, {j}): {fraction_str(entry)}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def _cmd_pullback(args: argparse.Namespace) -> int:
    parsed = _read_input(args.file)
    validate(parsed.graph)
    parts = args.meets.split(",")
    if len(parts) != parsed.graph.n:
        raise InputError(
            f"--meets needs {parsed.graph.n} entries, got {len(parts)}"
        )
    meets = [parse_rational(part.strip(), f"meets[{k}]") for k, part in enumerate(parts)]
    result = exceptional_pullback(parsed.graph, meets)
    payload = {
        "vertex_ids": [v.id for v in parsed.graph.vertices],
        "meets": [fraction_str(m) for m in meets],
        "exceptional_part": [fraction_str(c) for c in result],
    }
    text = (
        "exceptional part of the pullback:\n"
        + "\n".join(
            f"  {v.id}: {fraction_str(c)}"
            for v, c in zip(parsed.graph.vertices, result)
        )
        + "\n"
    )
    _emit(args, payload, text)
    return 0


def _epsilon_arg(text: str) -> Fraction:
    value = parse_rational(text, "--epsilon")
    if value <= 0:
        raise InputError(f"--epsilon must be positive, got {text}")
    return value


def _inverse_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--inverse",
        nargs=2,
        type=int,
        metavar=("I", "J"),
        default=None,
        help="also print entry (I, J) of the inverse intersection form (1-based)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="singinv",
        description=(
            "Exact singularity invariants (fundamental and canonical cycles, the "
            "delta family, mu) from the weighted dual graph of a normal surface "
            "singularity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full invariant report for one input file")
    analyze.add_argument("file")
    analyze.add_argument("--json", action="store_true", help="machine-readable output")
    analyze.add_argument(
        "--epsilon",
        type=_epsilon_arg,
        default=DEFAULT_EPSILON,
        help="stand-in value for the dihedral-fork delta' (default 1/1000)",
    )
    analyze.add_argument(
        "--oracle",
        action="store_true",
        help="re-verify delta_min by exhaustive active-set enumeration",
    )
    analyze.set_defaults(handler=_cmd_analyze)

    check = sub.add_parser("check", help="evaluate the nef-divisor hypotheses")
    check.add_argument("file")
    check.add_argument("--json", action="store_true")
    check.add_argument("--epsilon", type=_epsilon_arg, default=DEFAULT_EPSILON)
    check.set_defaults(handler=_cmd_check)

    enum = sub.add_parser(
        "enumerate", help="sweep a graph family and verify the delta_y trichotomy"
    )
    enum.add_argument("--max-length", type=int, default=6)
    enum.add_argument("--max-weight", type=int, default=6)
    enum.add_argument(
        "--forks",
        action="store_true",
        help="include the all-weight-2 D/E forks and the smooth graph",
    )
    enum.add_argument("--limit", type=int, default=100_000, help="row cap")
    enum.add_argument("--json", action="store_true")
    enum.set_defaults(handler=_cmd_enumerate)

    cont = sub.add_parser("continuant", help="chain determinant calculus")
    cont.add_argument("weights", help="comma-separated weights, e.g. 2,3,5")
    _inverse_arg(cont)
    cont.add_argument("--json", action="store_true")
    cont.set_defaults(handler=_cmd_continuant)

    pull = sub.add_parser(
        "pullback", help="exceptional part of a pullback from intersection counts"
    )
    pull.add_argument("file")
    pull.add_argument(
        "--meets",
        required=True,
        help="comma-separated intersection counts with each vertex, in order",
    )
    pull.add_argument("--json", action="store_true")
    pull.set_defaults(handler=_cmd_pullback)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    try:
        return args.handler(args)
    except (InputError, GraphValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
