"""Command-line front end: ``eval``, ``table`` and ``verify``.

Exit codes
----------
0  success (``verify``: every identity passed)
1  malformed flags, sweep or plan file
2  an evaluation did not converge
3  domain error (divergent integral, pole, parameter out of range)
4  ``verify``: some checks skipped, none failed
5  ``verify``: at least one check failed
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import classical as cl
from .errors import DomainError, NonConvergenceError
from .gamma_beta import REPRESENTATIONS, Affine, ml_beta_p, ml_gamma_mellin, ml_gamma_p
from .hypergeometric import ml_1f1, ml_1f1_nth_derivative, ml_2f1, ml_2f1_nth_derivative
from .identities import PlanEntry, SuiteReport, default_plan, run_suite
from .mittag_leffler import MLParams, ml3
from .numerics import Estimate
from .reports import EvalPoint, IdentityId

EXIT_OK, EXIT_USAGE, EXIT_NONCONVERGENCE, EXIT_DOMAIN = 0, 1, 2, 3

FIELDS = ("alpha", "beta", "gamma", "p", "x", "y", "a", "b", "c", "z", "s", "n")
MAX_SWEEPS = 2


class UsageError(Exception):
    """Malformed command line or plan file."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for non-convergence here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- function registry ------------------------------------------------------------------------


def _params(v: dict) -> MLParams:
    return MLParams(v["alpha"], v["beta"], v["gamma"])


def _exact(value: float) -> Estimate:
    return Estimate(value, 0.0, 0, math.isfinite(value))


def _rel_tol(v: dict) -> dict:
    return {} if v.get("tol") is None else {"rel_tol": v["tol"]}


def _eval_ml2f1(v: dict) -> Estimate:
    method = v.get("method") or "auto"
    args = (v["a"], v["b"], v["c"], v["z"], v["p"], _params(v), method)
    if v.get("n") is not None:
        return ml_2f1_nth_derivative(int(v["n"]), *args, **_rel_tol(v))
    return ml_2f1(*args, **_rel_tol(v))


def _eval_ml1f1(v: dict) -> Estimate:
    method = v.get("method") or "auto"
    args = (v["b"], v["c"], v["z"], v["p"], _params(v), method)
    if v.get("n") is not None:
        return ml_1f1_nth_derivative(int(v["n"]), *args, **_rel_tol(v))
    return ml_1f1(*args, **_rel_tol(v))


def _rep(v: dict):
    rep = v.get("rep") or "unit"
    if rep not in REPRESENTATIONS:
        raise UsageError(f"unknown --rep {rep!r}; expected one of {', '.join(REPRESENTATIONS)}")
    return Affine() if rep == "affine" else rep


@dataclass(frozen=True)
class _Function:
    required: tuple[str, ...]
    optional: tuple[str, ...]
    evaluate: Callable[[dict], Estimate]


_ML = ("alpha", "beta", "gamma")

FUNCTIONS: dict[str, _Function] = {
    "ml3": _Function(_ML + ("z",), (), lambda v: ml3(_params(v), v["z"])),
    "ml-gamma": _Function(_ML + ("x", "p"), ("tol",),
                          lambda v: ml_gamma_p(v["x"], v["p"], _params(v), **_rel_tol(v))),
    "ml-beta": _Function(_ML + ("x", "y", "p"), ("tol", "rep"),
                         lambda v: ml_beta_p(v["x"], v["y"], v["p"], _params(v), _rep(v),
                                             **_rel_tol(v))),
    "ml-2f1": _Function(_ML + ("a", "b", "c", "z", "p"), ("tol", "method", "n"), _eval_ml2f1),
    "ml-1f1": _Function(_ML + ("b", "c", "z", "p"), ("tol", "method", "n"), _eval_ml1f1),
    "gamma": _Function(("x",), (), lambda v: _exact(cl.gamma_fn(v["x"]))),
    "beta": _Function(("x", "y"), (), lambda v: _exact(cl.beta_fn(v["x"], v["y"]))),
    "2f1": _Function(("a", "b", "c", "z"), ("method",),
                     lambda v: cl.gauss_2f1((v["a"], v["b"], v["c"]), v["z"],
                                            method=v.get("method") or "auto")),
    "1f1": _Function(("b", "c", "z"), ("method",),
                     lambda v: cl.kummer_1f1(v["b"], v["c"], v["z"],
                                             method=v.get("method") or "auto")),
    "ml-gamma-mellin": _Function(_ML + ("s",), (), lambda v: _exact(ml_gamma_mellin(v["s"], _params(v)))),
}


# -- argument handling ------------------------------------------------------------------------------


def _number(text: str, name: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"--{name}: not a number: {text!r}") from None
    if math.isnan(value):
        raise UsageError(f"--{name}: NaN is not accepted")
    if name == "n":
        if not value.is_integer():
            raise UsageError(f"--n must be an integer, got {text!r}")
        return int(value)
    return value


def _sweep(text: str, name: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--{name}: sweep must be start:stop:count, got {text!r}")
    start, stop = _number(parts[0], name), _number(parts[1], name)
    try:
        count = int(parts[2])
    except ValueError:
        raise UsageError(f"--{name}: sweep count must be an integer, got {parts[2]!r}") from None
    if count < 1:
        raise UsageError(f"--{name}: sweep count must be at least 1")
    if name == "n":
        values = np.linspace(start, stop, count)
        if not np.all(values == np.round(values)):
            raise UsageError("--n sweep must hit integers only")
        return [int(v) for v in values]
    return [float(v) for v in np.linspace(start, stop, count)]


def _check_required(fn_name: str, values: dict) -> _Function:
    spec = FUNCTIONS[fn_name]
    missing = [f for f in spec.required if values.get(f) is None]
    if missing:
        raise UsageError(f"{fn_name} needs " + ", ".join(f"--{m}" for m in missing))
    extra = [f for f in FIELDS if values.get(f) is not None and f not in spec.required
             and f not in spec.optional]
    if extra:
        raise UsageError(f"{fn_name} does not take " + ", ".join(f"--{m}" for m in extra))
    return spec


@dataclass
class _Row:
    inputs: dict
    value: float | None = None
    err_estimate: float | None = None
    evaluations: int | None = None
    status: str = "ok"
    message: str = ""

    @property
    def code(self) -> int:
        return {"ok": EXIT_OK, "nonconvergence": EXIT_NONCONVERGENCE,
                "domain_error": EXIT_DOMAIN}[self.status]


def _evaluate(spec: _Function, inputs: dict, options: dict) -> _Row:
    row = _Row(inputs)
    try:
        est = spec.evaluate({**inputs, **options})
    except DomainError as exc:
        row.status, row.message = "domain_error", str(exc)
        return row
    except NonConvergenceError as exc:
        row.status, row.message = "nonconvergence", str(exc)
        return row
    row.value, row.err_estimate, row.evaluations = est.value, est.err_estimate, est.evaluations
    if not est.converged:
        row.status, row.message = "nonconvergence", "error estimate above tolerance"
    return row


# -- output ---------------------------------------------------------------------------------------------


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".17g")


def _json_number(v):
    if v is None:
        return None
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return int(v)
    v = float(v)
    return v if math.isfinite(v) else None


def _row_dict(fn_name: str, columns: Sequence[str], row: _Row) -> dict:
    out: dict = {"function": fn_name}
    for c in columns:
        out[c] = _json_number(row.inputs[c])
    out.update(value=_json_number(row.value), err_estimate=_json_number(row.err_estimate),
               evaluations=row.evaluations, status=row.status, message=row.message)
    return out


def _render_rows(fn_name: str, columns: Sequence[str], rows: list[_Row], fmt: str,
                 single: bool) -> str:
    header = ["function", *columns, "value", "err_estimate", "evaluations", "status", "message"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for r in rows:
            writer.writerow([fn_name, *(_fmt(r.inputs[c]) for c in columns), _fmt(r.value),
                             _fmt(r.err_estimate), _fmt(r.evaluations), r.status, r.message])
        return buf.getvalue()
    if fmt == "json":
        dicts = [_row_dict(fn_name, columns, r) for r in rows]
        payload = dicts[0] if single else dicts
        return json.dumps(payload, indent=2) + "\n"
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for r in rows:
        cells = [fn_name, *(_fmt(r.inputs[c]) for c in columns), _fmt(r.value),
                 _fmt(r.err_estimate), _fmt(r.evaluations), r.status, r.message]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def _suite_csv(suite: SuiteReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    point_cols = [c for c in FIELDS] + ["function"]
    writer.writerow(["identity", "status", *point_cols, "lhs", "rhs", "abs_diff", "rel_diff",
                     "tolerance", "cost", "note"])
    for r in suite.reports:
        point = r.point.as_dict()
        writer.writerow([str(r.identity), str(r.status),
                         *(_fmt(point.get(c)) if c != "function" else point.get(c, "")
                           for c in point_cols),
                         _fmt(r.lhs), _fmt(r.rhs), _fmt(r.abs_diff), _fmt(r.rel_diff),
                         _fmt(r.tolerance), _fmt(r.cost), r.note])
    return buf.getvalue()


# -- plan files --------------------------------------------------------------------------------------


def parse_plan(text: str) -> list[PlanEntry]:
    """Parse ``key=value`` blocks separated by blank lines; ``#`` starts a comment.

    Each block is one check: ``identity=...``, point fields (``alpha``,
    ``beta``, ``gamma``, ``p``, ``x``, ..., ``n``, ``function``) and an
    optional ``tolerance``.
    """
    blocks: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            if blocks[-1]:
                blocks.append([])
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        blocks[-1].append((lineno, line))
    blocks = [b for b in blocks if b]
    if not blocks:
        raise UsageError("plan file contains no checks")
    plan = []
    for block in blocks:
        data: dict[str, str] = {}
        for lineno, line in block:
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not key:
                raise UsageError(f"plan line {lineno}: expected key=value, got {line!r}")
            if key in data:
                raise UsageError(f"plan line {lineno}: duplicate key {key!r}")
            data[key] = value
        first = block[0][0]
        if "identity" not in data:
            raise UsageError(f"plan block at line {first}: missing identity=")
        try:
            identity = IdentityId(data.pop("identity"))
        except ValueError:
            raise UsageError(f"plan block at line {first}: unknown identity") from None
        tolerance = None
        if "tolerance" in data:
            tolerance = _number(data.pop("tolerance"), "tolerance")
            if not tolerance > 0:
                raise UsageError(f"plan block at line {first}: tolerance must be positive")
        try:
            point = EvalPoint.from_mapping(data)
        except (ValueError, DomainError) as exc:
            raise UsageError(f"plan block at line {first}: {exc}") from None
        plan.append(PlanEntry(identity, (point,), tolerance))
    return plan


# -- commands ------------------------------------------------------------------------------------------


def _collect(args, allow_sweep: bool) -> tuple[dict, dict[str, list]]:
    fixed: dict = {}
    swept: dict[str, list] = {}
    for name in FIELDS:
        text = getattr(args, name)
        if text is None:
            continue
        if ":" in text:
            if not allow_sweep:
                raise UsageError(f"--{name}: sweeps are only accepted by the table command")
            swept[name] = _sweep(text, name)
        else:
            fixed[name] = _number(text, name)
    if len(swept) > MAX_SWEEPS:
        raise UsageError(f"at most {MAX_SWEEPS} flags may be swept")
    return fixed, swept


def _options(args) -> dict:
    if args.tol is not None and not args.tol > 0:
        raise UsageError("--tol must be positive")
    return {"tol": args.tol, "method": args.method, "rep": args.rep}


def _check_options(fn_name: str, spec: _Function, options: dict) -> None:
    bad = [k for k, v in options.items() if v is not None and k not in spec.optional]
    if bad:
        raise UsageError(f"{fn_name} does not take " + ", ".join(f"--{k}" for k in bad))


def cmd_eval(args, out) -> int:
    fixed, _ = _collect(args, allow_sweep=False)
    options = _options(args)
    spec = _check_required(args.function, fixed)
    _check_options(args.function, spec, options)
    columns = [f for f in FIELDS if f in fixed]
    row = _evaluate(spec, fixed, options)
    if row.status == "domain_error":
        print(f"error: {row.message}", file=sys.stderr)
        return EXIT_DOMAIN
    out.write(_render_rows(args.function, columns, [row], args.format or "csv", single=True))
    if row.status != "ok":
        print(f"error: {row.message}", file=sys.stderr)
    return row.code


def cmd_table(args, out) -> int:
    fixed, swept = _collect(args, allow_sweep=True)
    options = _options(args)
    merged = {**fixed, **{k: v[0] for k, v in swept.items()}}
    spec = _check_required(args.function, merged)
    _check_options(args.function, spec, options)
    columns = [f for f in FIELDS if f in merged]
    names = [f for f in FIELDS if f in swept]
    rows = []
    for combo in itertools.product(*(swept[n] for n in names)):
        inputs = {**fixed, **dict(zip(names, combo))}
        rows.append(_evaluate(spec, inputs, options))
    out.write(_render_rows(args.function, columns, rows, args.format or "csv", single=False))
    if any(r.status == "ok" for r in rows):
        return EXIT_OK
    return EXIT_NONCONVERGENCE if any(r.status == "nonconvergence" for r in rows) else EXIT_DOMAIN


def cmd_verify(args, out) -> int:
    if args.default:
        plan = default_plan()
    else:
        try:
            with open(args.plan, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read plan file: {exc}") from None
        plan = parse_plan(text)
    if args.tol is not None:
        if not args.tol > 0:
            raise UsageError("--tol must be positive")
        plan = [PlanEntry(e.identity, e.points, args.tol) for e in plan]
    suite = run_suite(plan, fail_fast=args.fail_fast)
    fmt = args.format or "markdown"
    if fmt == "json":
        out.write(suite.to_json())
    elif fmt == "csv":
        out.write(_suite_csv(suite))
    else:
        out.write(suite.to_markdown())
    return suite.exit_code()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mlspecial",
                     description="Mittag-Leffler generalized special functions and identity checks.",
                     epilog="exit codes: 0 ok, 1 usage, 2 non-convergence, 3 domain error, "
                            "4 verify: skips only, 5 verify: failures")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def point_flags(p, sweeps: bool):
        help_suffix = " (or start:stop:count)" if sweeps else ""
        for name in FIELDS:
            p.add_argument(f"--{name}", metavar="V", help=f"{name}{help_suffix}")
        p.add_argument("--tol", type=float, help="target relative accuracy")
        p.add_argument("--method", help="evaluation method for 2f1/1f1 families")
        p.add_argument("--rep", help="beta representation: " + ", ".join(REPRESENTATIONS))
        p.add_argument("--format", choices=("csv", "json", "markdown"), default=None)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", choices=sorted(FUNCTIONS))
    point_flags(ev, sweeps=False)
    ev.set_defaults(handler=cmd_eval)

    tb = sub.add_parser("table", help="tabulate a function over up to two swept flags")
    tb.add_argument("function", choices=sorted(FUNCTIONS))
    point_flags(tb, sweeps=True)
    tb.set_defaults(handler=cmd_table)

    vf = sub.add_parser("verify", help="run identity checks")
    src = vf.add_mutually_exclusive_group(required=True)
    src.add_argument("--plan", help="plan file of key=value blocks")
    src.add_argument("--default", action="store_true", help="run the shipped plan")
    vf.add_argument("--tol", type=float, help="override every tolerance")
    vf.add_argument("--format", choices=("csv", "json", "markdown"), default=None)
    vf.add_argument("--fail-fast", action="store_true", help="stop after the first failure")
    vf.set_defaults(handler=cmd_verify)
    return parser


_NEGATIVE = re.compile(r"^-(\d|\.\d|inf)")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--z -0.5:0.7:4`` as ``--z=-0.5:0.7:4``.

    argparse only recognizes plain negative numbers as values, so negative
    sweep specifications would otherwise be taken for options.
    """
    flags = {f"--{name}" for name in FIELDS} | {"--tol"}
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in flags and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_negative_values(argv))
    try:
        return args.handler(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"mlspecial: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:  # unknown method names and similar option errors
        parser.print_usage(sys.stderr)
        print(f"mlspecial: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
