"""Command-line front end.

    sgverma annihilator --n 2 --flag 1 --weights 3 --max-level 4
    sgverma jets --n 3 --flag 1 --weights 3 --max-level 4 --format csv

Reports go to stdout, diagnostics to stderr.  Exit status: 0 success,
1 a ``verify`` invariant failed, 2 invalid input or capacity exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from math import comb

from .checks import invariant_suite
from .errors import CapacityError, InvalidInputError, VermaError
from .ideals import equality_report
from .quotient import classify, maximal_submodule_trunc
from .rootdata import ParabolicCharacter, as_rational, format_rational, m_of_lambda
from .verma import TruncatedModule, weight_spaces

COMMANDS = ("basis", "weights", "annihilator", "simple", "jets", "classify", "verify")
DEFAULT_MAX_DIM = 20000


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sgverma", description="Scalar generalized Verma modules for sl_n.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--flag", required=True, help="comma list, e.g. 1,2")
    p.add_argument("--weights", required=True, help="comma list of rationals, e.g. 2,-1/2")
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return p


def _parse_list(text: str, conv, what: str) -> tuple:
    try:
        return tuple(conv(x.strip()) for x in text.split(","))
    except (ValueError, InvalidInputError):
        raise InvalidInputError(f"malformed {what} list: {text!r}") from None


def _render(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else format_rational(x)
    return x


def _max_dim() -> int:
    raw = os.environ.get("VERMA_MAX_DIM", "")
    try:
        return int(raw) if raw.strip() else DEFAULT_MAX_DIM
    except ValueError:
        raise InvalidInputError(f"VERMA_MAX_DIM must be an integer, got {raw!r}") from None


def _cap(dim: int, what: str):
    limit = _max_dim()
    if dim > limit:
        raise CapacityError(f"{what} has dimension {dim}, above VERMA_MAX_DIM={limit}")


def _cmd_basis(pc, level):
    rows = [{"level": l, "dim_M": TruncatedModule(pc, l).dimension} for l in range(level + 1)]
    return rows, [f"m={pc.m} complement generators"]


def _cmd_weights(pc, level):
    q = maximal_submodule_trunc(pc, level)
    rows = []
    for mu, idxs in weight_spaces(pc, level).items():
        rows.append({"level": level, "weight": str(mu), "dim_M": len(idxs), "dim_L": q.weight_dims[mu]})
    return rows, []


def _cmd_annihilator(pc, level):
    notes = []
    if pc.lam.is_integral():
        notes.append(f"m(lambda)={m_of_lambda(pc.lam)}")
    return equality_report(pc, max(level, 1)), notes


def _cmd_simple(pc, level):
    rows = []
    for l in range(level + 1):
        q = maximal_submodule_trunc(pc, l)
        rows.append({"level": l, "dim_M": q.dim_M, "dim_K": q.dim_K, "dim_L": q.dim_L})
    return rows, []


def _cmd_jets(pc, level):
    m_flag = pc.m_lambda_flag
    m_all = min(pc.lam.coords)
    rows = []
    for l in range(level + 1):
        q = maximal_submodule_trunc(pc, l)
        rows.append({
            "level": l,
            "dim_jet_fiber": q.dim_M,
            "dim_L": q.dim_L,
            "dim_K": q.dim_K,
            "identity": q.dim_K == 0,
            "within_m_flag": l <= m_flag,
            "within_m_all": l <= m_all,
        })
    notes = [
        "dim_jet_fiber = dim U_l(sl_n) (x)_U(p) L_rho = dim M_l(rho)",
        "identity: M_l(rho) = L_l(rho), i.e. K_l = 0",
        f"m(lambda) read as min over flag weights: {format_rational(m_flag)}",
        f"m(lambda) read as min over all fundamental coordinates: {format_rational(m_all)}",
    ]
    return rows, notes


def _cmd_classify(pc, level):
    res = classify(pc, max(level, 1))
    rows = [{"level": l, "dim_L": d} for l, d in enumerate(res.dims)]
    notes = [f"classification={res.kind}"]
    if res.dimension is not None:
        notes.append(f"dimension={res.dimension}")
    notes.extend(f"tag={t}" for t in res.tags)
    return rows, notes


def _cmd_verify(pc, level):
    rows = []
    for name, check in invariant_suite(pc, level):
        rows.append({"level": level, "invariant": name, "passed": bool(check())})
    failed = [r["invariant"] for r in rows if not r["passed"]]
    notes = [f"failed: {', '.join(failed)}"] if failed else ["all invariants hold"]
    return rows, notes


HANDLERS = {
    "basis": _cmd_basis,
    "weights": _cmd_weights,
    "annihilator": _cmd_annihilator,
    "simple": _cmd_simple,
    "jets": _cmd_jets,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def emit(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    rows = report["rows"]
    keys = sorted({k for r in rows for k in r}, key=lambda k: (k != "level", k))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: ("true" if v is True else "false" if v is False else v)
                         for k, v in r.items()})
    return buf.getvalue()


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        flag = _parse_list(args.flag, int, "flag")
        weights = _parse_list(args.weights, as_rational, "weights")
        level = args.max_level if args.max_level is not None else args.level
        if level is None:
            level = 3
        if level < 0:
            raise InvalidInputError("level must be >= 0")
        pc = ParabolicCharacter(args.n, flag, weights)
        if args.command in ("annihilator", "verify"):
            _cap(comb(args.n * args.n - 1 + level, level), f"U_{level}(sl_{args.n})")
        _cap(comb(pc.m + level, level), f"M_{level}")
        rows, notes = HANDLERS[args.command](pc, level)
    except _ArgError as exc:
        print(f"sgverma: error: {exc}", file=stderr)
        return 2
    except CapacityError as exc:
        print(f"sgverma: capacity: {exc}", file=stderr)
        return 2
    except (InvalidInputError, VermaError) as exc:
        print(f"sgverma: error: {exc}", file=stderr)
        return 2
    report = {
        "config": {
            "command": args.command,
            "n": args.n,
            "flag": list(flag),
            "weights": [_render(w) for w in pc.ell],
            "level": level,
        },
        "rows": [{k: _render(v) for k, v in r.items()} for r in rows],
        "notes": notes,
    }
    stdout.write(emit(report, args.format))
    if args.command == "verify" and any(not r["passed"] for r in rows):
        print(f"sgverma: verify failed: {notes[0]}", file=stderr)
        return 1
    return 0


def main():
    sys.exit(run())
