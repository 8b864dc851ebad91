"""Command-line interface: ``kohnert <command> [diagram input] [options]``.

Exit codes: 0 success, 2 usage or parse error, 3 precondition violated,
4 verification mismatch or structural failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .closure import kohnert_closure, kohnert_polynomial, poset_edges
from .crystal import demazure_components
from .diagram import (
    Diagram,
    Permutation,
    is_northwest,
    key_diagram,
    parse_composition,
    parse_diagram,
    render_grid,
    rothe_diagram,
)
from .errors import (
    KohnertError,
    NotKeyPositiveError,
    ParseError,
    PreconditionError,
    ScaleGuardError,
    StructuralError,
)
from .labeling import is_flagged, is_kohnert_tableau, label_left, label_northwest
from .magyar import format_trace, magyar_character, reduction_trace
from .poly import key_expand, pretty, to_json
from .render import cells_json, crystal_dot, dumps, poset_dot
from .schur import flagged_character_report, tightness_witness
from .sweeps import northwest_diagrams, verify_diagram

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    path = Path(value)
    if path.is_file():
        return path.read_text()
    return value


def _diagram_from_args(args: argparse.Namespace) -> Diagram:
    if args.grid is not None:
        if args.grid != "-" and not Path(args.grid).is_file():
            raise UsageError(f"grid file not found: {args.grid}")
        return parse_diagram(_read_source(args.grid))
    if args.cells is not None:
        return parse_diagram(_read_source(args.cells))
    if args.key is not None:
        return key_diagram(parse_composition(args.key))
    if args.rothe is not None:
        try:
            w = Permutation.parse(args.rothe)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        return rothe_diagram(w)
    raise UsageError("a diagram is required: use --grid, --cells, --key or --rothe")


def _add_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--grid", metavar="FILE", help="grid of '.' and '#', row 1 first ('-' for stdin)")
    g.add_argument("--cells", metavar="CELLS", help="file or inline list of r,c pairs, e.g. '1,2 2,1 2,2'")
    g.add_argument("--key", metavar="A", help="key diagram of a weak composition, e.g. 0,1,2,1")
    g.add_argument("--rothe", metavar="W", help="Rothe diagram of a permutation in one-line notation")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kohnert", description="Kohnert diagrams, Demazure crystals and flagged Schur characters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kd", help="Kohnert closure of a diagram")
    _add_input(p)
    p.add_argument("--dot", action="store_true", help="emit the move poset as DOT")

    p = sub.add_parser("poly", help="Kohnert polynomial")
    _add_input(p)

    p = sub.add_parser("magyar", help="character by Magyar's recurrence, with the reduction trace")
    _add_input(p)

    p = sub.add_parser("oracle", help="flagged Schur module character by brute force")
    _add_input(p)
    p.add_argument("--max-cells", type=int, default=None, help="raise the cell limit of the oracle")

    p = sub.add_parser("crystal", help="Demazure decomposition of the Kohnert crystal")
    _add_input(p)
    p.add_argument("--dot", action="store_true", help="emit the colored crystal graph as DOT")

    p = sub.add_parser("expand", help="key expansion of the Kohnert polynomial")
    _add_input(p)

    p = sub.add_parser("verify", help="check Kohnert polynomial = Magyar recurrence = oracle")
    _add_input(p, required=False)
    p.add_argument("--sweep", metavar="RxC:N", help="check every northwest diagram with at most N cells in an R x C box")

    p = sub.add_parser("tight", help="witness that the Kohnert polynomial differs from the module character")
    _add_input(p)

    p = sub.add_parser("tableaux", help="Kohnert labeling of a diagram")
    _add_input(p)
    wrt = p.add_mutually_exclusive_group(required=True)
    wrt.add_argument("--content", metavar="A", help="label with respect to the key diagram of A")
    wrt.add_argument("--wrt", metavar="CELLS", help="label with respect to a northwest diagram (file or inline cells)")
    return parser


# ---------------------------------------------------------------------------
# commands; each returns (exit code, text, payload)
# ---------------------------------------------------------------------------


def _poly_payload(f) -> dict:
    return {"pretty": pretty(f), "polynomial": to_json(f)}


def cmd_kd(D: Diagram, args) -> tuple[int, str, dict]:
    members = kohnert_closure(D).members
    edges = poset_edges(D)
    if args.dot:
        return EXIT_OK, poset_dot(members, edges).rstrip("\n"), {}
    payload = {
        "command": "kd",
        "size": len(members),
        "edges": len(set(edges)),
        "members": [cells_json(T) for T in members],
    }
    text = [f"{len(members)} diagrams, {len(set(edges))} covering moves"]
    for T in members:
        text.append("")
        text.append(render_grid(T) or "(empty)")
    return EXIT_OK, "\n".join(text), payload


def cmd_poly(D: Diagram, args) -> tuple[int, str, dict]:
    f = kohnert_polynomial(D)
    return EXIT_OK, pretty(f), {"command": "poly", **_poly_payload(f)}


def cmd_magyar(D: Diagram, args) -> tuple[int, str, dict]:
    steps = reduction_trace(D)
    f = magyar_character(D)
    payload = {
        "command": "magyar",
        "trace": [{"rule": s.rule, "param": s.param, "cells": cells_json(s.diagram)} for s in steps],
        **_poly_payload(f),
    }
    text = format_trace(steps) + "\n\n" + "steps: " + ", ".join(map(str, steps)) + "\n" + pretty(f)
    return EXIT_OK, text, payload


def cmd_oracle(D: Diagram, args) -> tuple[int, str, dict]:
    res = flagged_character_report(D, max_cells=args.max_cells)
    dims = [{"weight": list(w), "dim": d} for w, d in sorted(res.dimensions.items())]
    lines = [pretty(res.character), f"fillings: {res.fillings}"]
    lines += [f"  dim {tuple(w)}: {d}" for w, d in sorted(res.dimensions.items())]
    return EXIT_OK, "\n".join(lines), {"command": "oracle", "dimensions": dims, "fillings": res.fillings, **_poly_payload(res.character)}


def cmd_crystal(D: Diagram, args) -> tuple[int, str, dict]:
    comps = demazure_components(D)
    if args.dot:
        return EXIT_OK, crystal_dot([c.graph for c in comps]).rstrip("\n"), {}
    report = [
        {"component_size": c.size, "highest_weight": list(c.highest_weight), "key_index": list(c.key_index)}
        for c in comps
    ]
    lines = [f"{len(comps)} components"]
    lines += [f"  size {c.size}: highest weight {c.highest_weight}, key {c.key_index}" for c in comps]
    return EXIT_OK, "\n".join(lines), {"command": "crystal", "components": report}


def cmd_expand(D: Diagram, args) -> tuple[int, str, dict]:
    f = kohnert_polynomial(D)
    try:
        terms = key_expand(f)
    except NotKeyPositiveError as exc:
        if is_northwest(D):
            raise StructuralError(f"northwest diagram is not key positive: {exc}") from None
        payload = {"command": "expand", "key_positive": False, "message": str(exc)}
        return EXIT_OK, f"not key positive: {exc}", payload
    lines = [f"{c} * kappa{tuple(a)}" if c != 1 else f"kappa{tuple(a)}" for a, c in terms]
    payload = {
        "command": "expand",
        "key_positive": True,
        "terms": [{"index": list(a), "coef": c} for a, c in terms],
    }
    return EXIT_OK, " + ".join(lines) if lines else "0", payload


def _parse_box(spec: str) -> tuple[int, int, int]:
    try:
        box, n = spec.split(":")
        r, c = box.lower().split("x")
        return int(r), int(c), int(n)
    except ValueError:
        raise UsageError(f"--sweep expects RxC:N, got {spec!r}") from None


def cmd_verify(D: Diagram | None, args) -> tuple[int, str, dict]:
    if args.sweep:
        rows, cols, n = _parse_box(args.sweep)
        checked = with_oracle = 0
        failures = []
        for E in northwest_diagrams(rows, cols, n):
            v = verify_diagram(E)
            checked += 1
            with_oracle += v.oracle is not None
            if not v.ok:
                failures.append({"cells": cells_json(E), "mismatches": v.mismatches})
        code = EXIT_MISMATCH if failures else EXIT_OK
        text = f"{checked} northwest diagrams checked ({with_oracle} against the oracle), {len(failures)} mismatches"
        return code, text, {"command": "verify", "checked": checked, "oracle_checked": with_oracle, "failures": failures}
    if D is None:
        raise UsageError("verify needs a diagram or --sweep")
    v = verify_diagram(D)
    lines = [f"{v.closure_size} diagrams in the closure", f"kohnert: {pretty(v.kohnert)}", f"magyar:  {pretty(v.magyar)}"]
    lines.append(f"oracle:  {pretty(v.oracle)}" if v.oracle is not None else f"oracle:  skipped ({v.oracle_skipped})")
    lines.append("ok" if v.ok else "MISMATCH: " + ", ".join(v.mismatches))
    payload = {
        "command": "verify",
        "closure_size": v.closure_size,
        "ok": v.ok,
        "mismatches": v.mismatches,
        "kohnert": pretty(v.kohnert),
        "magyar": pretty(v.magyar),
        "oracle": None if v.oracle is None else pretty(v.oracle),
    }
    return (EXIT_OK if v.ok else EXIT_MISMATCH), "\n".join(lines), payload


def cmd_tight(D: Diagram, args) -> tuple[int, str, dict]:
    w = tightness_witness(D)
    mono = pretty(w.monomial)
    text = f"rows r={w.r}, s={w.s}, K={w.K}, columns {list(w.columns)}\nwitness: {mono}"
    payload = {
        "command": "tight",
        "r": w.r,
        "s": w.s,
        "K": w.K,
        "columns": list(w.columns),
        "exponent": list(w.exponent),
        "monomial": mono,
    }
    return EXIT_OK, text, payload


def cmd_tableaux(D: Diagram, args) -> tuple[int, str, dict]:
    if args.content is not None:
        a = parse_composition(args.content)
        L = label_left(D, a)
        kt = L is not None and is_kohnert_tableau(L, a)
    else:
        W = parse_diagram(_read_source(args.wrt))
        L = label_northwest(D, W)
        kt = None
    flagged = L is not None and is_flagged(L)
    payload = {
        "command": "tableaux",
        "defined": L is not None,
        "flagged": flagged,
        "member": flagged,
        "labels": None if L is None else L.to_json()["cells"],
    }
    if kt is not None:
        payload["kohnert_tableau"] = kt
    if L is None:
        text = "labeling undefined: not a member"
    else:
        text = L.render() + "\n" + ("flagged: member" if flagged else "not flagged: not a member")
    return EXIT_OK, text, payload


COMMANDS = {
    "kd": cmd_kd,
    "poly": cmd_poly,
    "magyar": cmd_magyar,
    "oracle": cmd_oracle,
    "crystal": cmd_crystal,
    "expand": cmd_expand,
    "verify": cmd_verify,
    "tight": cmd_tight,
    "tableaux": cmd_tableaux,
}


def _error(kind: str, message: str, as_json: bool, code: int) -> int:
    if as_json:
        print(dumps({"error": kind, "message": message, "exit_code": code}))
    else:
        print(f"kohnert: {kind}: {message}", file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        need = args.command != "verify" or not args.sweep
        has_input = any(getattr(args, k) is not None for k in ("grid", "cells", "key", "rothe"))
        D = _diagram_from_args(args) if (need or has_input) else None
        code, text, payload = COMMANDS[args.command](D, args)
    except UsageError as exc:
        return _error("usage", str(exc), as_json, EXIT_USAGE)
    except ParseError as exc:
        return _error("parse", str(exc), as_json, EXIT_USAGE)
    except (PreconditionError, ScaleGuardError) as exc:
        return _error("precondition", str(exc), as_json, EXIT_PRECONDITION)
    except StructuralError as exc:
        return _error("structural", str(exc), as_json, EXIT_MISMATCH)
    except KohnertError as exc:
        return _error("error", str(exc), as_json, EXIT_PRECONDITION)
    if as_json and payload:
        print(dumps({**payload, "exit_code": code}))
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())
