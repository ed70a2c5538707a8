"""Command-line front end.

Subcommands: count, gf, ehrhart, check, stats. Instances are JSON files
with integers encoded as decimal strings (plain ints are also accepted);
see README for the schemas. Exit codes: 1 for parse errors, 2 for
precondition violations.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .ehrhart import ehrhart_quasipolynomial, qp_to_json
from .errors import LatcountError, ParseError
from .evaluate import specialize_count
from .genfun import gf_inequality, gf_standard, gf_vrep, srf_to_json
from .intlinalg import IntMatrix, delta_stats, rank
from .oracle import Box, brute_count, indicator_identity_check
from .polyhedron import HRepPolyhedron


def _as_int(token) -> int:
    if isinstance(token, bool):
        raise ParseError(f"not an integer: {token!r}")
    if isinstance(token, int):
        return token
    if isinstance(token, str):
        stripped = token.strip()
        try:
            return int(stripped, 10)
        except ValueError:
            raise ParseError(f"not an integer: {token!r}") from None
    raise ParseError(f"not an integer: {token!r}")


def _int_matrix(data, what: str) -> IntMatrix:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ParseError(f"{what} must be a non-empty list of rows")
    try:
        return IntMatrix([[_as_int(x) for x in row] for row in data])
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad {what}: {exc}") from None


def load_instance(path: str) -> dict:
    """Parse an instance file into {'form': ..., matrices...}."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError("instance file must hold a JSON object")
    form = raw.get("form")
    if form in ("inequality", "standard"):
        A = _int_matrix(raw.get("A"), "A")
        b = raw.get("b")
        if not isinstance(b, list):
            raise ParseError("b must be a list")
        b = tuple(_as_int(x) for x in b)
        if len(b) != A.rows:
            raise ParseError("b length does not match the row count of A")
        return {"form": form, "P": HRepPolyhedron(form, A, b)}
    if form == "vrep":
        pts = _int_matrix(raw.get("P"), "P")
        # points arrive as rows; columns internally
        P = pts.transpose()
        R = None
        if raw.get("R"):
            R = _int_matrix(raw["R"], "R").transpose()
            if R.rows != P.rows:
                raise ParseError("P and R dimensions disagree")
        return {"form": form, "P": P, "R": R}
    raise ParseError("form must be one of inequality, standard, vrep")


def _build_gf(inst):
    if inst["form"] == "inequality":
        return gf_inequality(inst["P"])
    if inst["form"] == "standard":
        return gf_standard(inst["P"])
    return gf_vrep(inst["P"], inst["R"])


def _emit(text: str, out: str | None):
    if out is None:
        print(text)
        return
    tmp = out + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
        fh.write("\n")
    os.replace(tmp, out)


def _cmd_count(inst, args) -> int:
    print(specialize_count(_build_gf(inst)))
    return 0


def _cmd_gf(inst, args) -> int:
    _emit(json.dumps(srf_to_json(_build_gf(inst)), indent=2), args.out)
    return 0


def _cmd_ehrhart(inst, args) -> int:
    if inst["form"] == "vrep":
        raise ParseError("ehrhart expects an H-form instance")
    _emit(json.dumps(qp_to_json(ehrhart_quasipolynomial(inst["P"])), indent=2), args.out)
    return 0


def _cmd_check(inst, args) -> int:
    if inst["form"] == "vrep":
        raise ParseError("check expects an H-form instance")
    P = inst["P"]
    gf_count = specialize_count(_build_gf(inst))
    box = None
    if args.oracle_box is not None:
        lo, hi = args.oracle_box
        box = Box(lower=(lo,) * P.n, upper=(hi,) * P.n)
    oracle_count = brute_count(P, box)
    ok = gf_count == oracle_count
    result = {
        "gf_count": gf_count,
        "brute_count": oracle_count,
        "match": ok,
        "samples": args.samples,
        "seed": args.seed,
    }
    _emit(json.dumps(result, indent=2), args.out)
    return 0 if ok else 3


def _cmd_stats(inst, args) -> int:
    if inst["form"] == "vrep":
        mat = inst["P"] if inst["R"] is None else IntMatrix.from_columns(
            inst["P"].columns() + inst["R"].columns()
        )
        n = mat.rows
        k = mat.cols - n
        d = n
    else:
        mat = inst["P"].A
        if inst["form"] == "inequality":
            d = mat.cols
            k = mat.rows - mat.cols
        else:
            d = mat.cols - mat.rows
            k = mat.rows
    order = rank(mat)
    stats = delta_stats(mat, order)
    if inst["form"] == "vrep":
        bound = math.comb(d + k, k - 1) if k >= 1 else 1
        bound_desc = f"C({d + k},{k - 1})"
    else:
        growth = d ** math.log2(stats.delta_max) if stats.delta_max > 0 and d > 0 else 1.0
        bound = math.comb(d + k, k) * growth
        bound_desc = f"C({d + k},{k}) * {d}^log2({stats.delta_max})"
    result = {
        "rank": order,
        "delta_max": stats.delta_max,
        "delta_gcd": stats.delta_gcd,
        "delta_lcm": stats.delta_lcm,
        "term_bound": float(bound),
        "term_bound_formula": bound_desc,
    }
    _emit(json.dumps(result, indent=2), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latcount",
        description="Exact lattice point counting via short rational generating functions.",
    )
    ap.add_argument("command", choices=["count", "gf", "ehrhart", "check", "stats"])
    ap.add_argument("instance", help="path to an instance JSON file")
    ap.add_argument("--out", default=None, help="write output to this path")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--oracle-box", nargs=2, type=int, metavar=("L", "U"), default=None)
    ap.add_argument("--json-errors", action="store_true")
    return ap


_COMMANDS = {
    "count": _cmd_count,
    "gf": _cmd_gf,
    "ehrhart": _cmd_ehrhart,
    "check": _cmd_check,
    "stats": _cmd_stats,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inst = load_instance(args.instance)
        return _COMMANDS[args.command](inst, args)
    except ParseError as exc:
        _report_error(exc, args.json_errors, code=1)
        return 1
    except LatcountError as exc:
        _report_error(exc, args.json_errors, code=2)
        return 2


def _report_error(exc: Exception, as_json: bool, code: int):
    if as_json:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc), "code": code}}))
    else:
        print(f"error: {exc}", file=sys.stderr)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
