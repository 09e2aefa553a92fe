"""Command-line scans over the entropy machinery, with CSV/JSON output.

Each subcommand evaluates a deterministic grid and writes one row per
grid point (CSV by default, to stdout).  Repeated runs with identical
arguments produce byte-identical output.  Grid points are evaluated in
parallel when the ISING_THREADS environment variable asks for it, but
rows are always emitted in grid order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .blockmatrix import build_gamma_single, build_gamma_two_blocks
from .corr import CorrelationKernel, build_gl_table
from .errors import IsingBlocksError, NonConvergence, PairingFailure
from .fitmodel import collect_fit_data, fit_k, model_entropy
from .oracle import (
    FiniteChainSpec,
    SubsystemMask,
    ed_ground_state,
    ff_finite_correlations,
    masked_entropy,
    reduced_entropy,
)
from .spectral import entropy_from_spectrum, entropy_of_matrix, nu_spectrum

_FLOAT_FMT = "%.17g"


class _NumericFailure(Exception):
    pass


class _ValidationFailure(Exception):
    pass


@dataclass
class ScanRequest:
    command: str
    params: dict = field(default_factory=dict)
    fmt: str = "csv"
    output: str | None = None


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("ISING_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    items = list(items)
    w = _workers()
    if w == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=w) as ex:
        return list(ex.map(fn, items))


def _guard(point: str, fn):
    try:
        return fn()
    except (NonConvergence, PairingFailure) as exc:
        raise _NumericFailure(f"numeric failure at grid point {point}: {exc}") from exc


def _parse_lambda_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError:
        raise _ValidationFailure(f"bad lambda list {text!r}")


def _parse_range(text: str) -> list[float]:
    """start:end:count grid with exact endpoints, or a comma list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise _ValidationFailure(f"range must be start:end:count, got {text!r}")
        try:
            start, end, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise _ValidationFailure(f"bad range {text!r}")
        if count < 2:
            raise _ValidationFailure("range needs count >= 2")
        return [(start * (count - 1 - i) + end * i) / (count - 1) for i in range(count)]
    return _parse_lambda_list(text)


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise _ValidationFailure(f"bad integer list {text!r}")


def _fmt_cell(v) -> str:
    if isinstance(v, float):
        return _FLOAT_FMT % v
    return str(v)


def _emit(req: ScanRequest, columns: list[str], rows: list[tuple]) -> None:
    if req.fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt_cell(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "meta": {"command": req.command, "params": req.params, "version": __version__},
            "rows": [dict(zip(columns, row)) for row in rows],
        }
        text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if req.output:
        with open(req.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _mask_label(mask: SubsystemMask) -> str:
    runs: list[list[int]] = [[mask.sites[0], mask.sites[0]]]
    for s in mask.sites[1:]:
        if s == runs[-1][1] + 1:
            runs[-1][1] = s
        else:
            runs.append([s, s])
    return "+".join(f"{a}-{b}" if a != b else f"{a}" for a, b in runs)


def _cmd_gl(req: ScanRequest):
    p = req.params
    kernel = CorrelationKernel(p["lam"], p["quad_points"], p["rel_tol"])
    table = _guard(f"lambda={p['lam']}", lambda: build_gl_table(kernel, p["l_max"]))
    rows = [(int(l), float(table.g(l))) for l in table.offsets()]
    return ["l", "g_l"], rows


def _cmd_entropy(req: ScanRequest):
    p = req.params
    kernel = CorrelationKernel(p["lam"], p["quad_points"], p["rel_tol"])
    L, d = p["L"], p["d"]
    if d is None:
        table = _guard(f"lambda={p['lam']}", lambda: build_gl_table(kernel, max(1, L - 1)))
        s = _guard(f"(L={L})", lambda: entropy_of_matrix(build_gamma_single(table, L)))
        return ["lambda", "L", "d", "entropy_bits"], [(kernel.lam, L, "", s)]
    table = _guard(f"lambda={p['lam']}", lambda: build_gl_table(kernel, max(1, 2 * L + d - 1)))
    s = _guard(f"(L={L},d={d})", lambda: entropy_of_matrix(build_gamma_two_blocks(table, L, d)))
    return ["lambda", "L", "d", "entropy_bits"], [(kernel.lam, L, d, s)]


def _cmd_scan_d(req: ScanRequest):
    p = req.params
    kernel = CorrelationKernel(p["lam"], p["quad_points"], p["rel_tol"])
    L, d_max = p["L"], p["d_max"]
    table = _guard(f"lambda={p['lam']}", lambda: build_gl_table(kernel, max(1, 2 * L + d_max - 1)))

    def one(d):
        def work():
            spec = nu_spectrum(build_gamma_two_blocks(table, L, d))
            return (d, *map(float, spec.nus), entropy_from_spectrum(spec))

        return _guard(f"(L={L},d={d})", work)

    rows = _pmap(one, range(0, d_max + 1))
    cols = ["d"] + [f"nu_{k + 1}" for k in range(2 * L)] + ["entropy_bits"]
    return cols, rows


def _cmd_scan_lambda(req: ScanRequest):
    p = req.params
    lams, L, ds = p["lams"], p["L"], p["ds"]
    l_max = max(1, 2 * L + max(ds) - 1)

    def one(lam):
        def work():
            kernel = CorrelationKernel(lam, p["quad_points"], p["rel_tol"])
            table = build_gl_table(kernel, l_max)
            return (lam, *[entropy_of_matrix(build_gamma_two_blocks(table, L, d)) for d in ds])

        return _guard(f"lambda={lam}", work)

    rows = _pmap(one, lams)
    return ["lambda"] + [f"entropy_bits_d{d}" for d in ds], rows


def _cmd_surface(req: ScanRequest):
    p = req.params
    kernel = CorrelationKernel(p["lam"], p["quad_points"], p["rel_tol"])
    l_top, d_top = p["l_max"], p["d_max"]
    table = _guard(
        f"lambda={p['lam']}", lambda: build_gl_table(kernel, max(1, 2 * l_top + d_top - 1))
    )
    grid = [(L, d) for L in range(1, l_top + 1) for d in range(0, d_top + 1)]

    def one(pt):
        L, d = pt
        return _guard(
            f"(L={L},d={d})",
            lambda: (L, d, entropy_of_matrix(build_gamma_two_blocks(table, L, d))),
        )

    return ["L", "d", "entropy_bits"], _pmap(one, grid)


def _cmd_fit_k(req: ScanRequest):
    p = req.params
    kernel = CorrelationKernel(p["lam"], p["quad_points"], p["rel_tol"])
    data = _guard("fit data", lambda: collect_fit_data(kernel, p["fit_min"], p["fit_max"]))
    res = fit_k(data, (p["fit_min"], p["fit_max"]))
    cols = ["lambda", "fit_min", "fit_max", "k_const", "alpha", "beta", "slope_fitted", "residual_max"]
    row = (kernel.lam, *res.fit_range, res.k_const, res.alpha, res.beta, res.slope_fitted, res.residual_max)
    return cols, [row]


def _cmd_model_compare(req: ScanRequest):
    p = req.params
    kernel = CorrelationKernel(1.0, p["quad_points"], p["rel_tol"])
    data = collect_fit_data(kernel, p["fit_min"], p["fit_max"])
    res = fit_k(data, (p["fit_min"], p["fit_max"]))
    d_top = p["d_max"]
    table = build_gl_table(kernel, max(1, 2 * max(p["Ls"]) + d_top - 1))
    grid = [(L, d) for L in p["Ls"] for d in range(0, d_top + 1)]

    def one(pt):
        L, d = pt

        def work():
            numeric = entropy_of_matrix(build_gamma_two_blocks(table, L, d))
            model = model_entropy(res.params, res.k_const, L, d)
            return (L, d, numeric, model, abs(numeric - model))

        return _guard(f"(L={L},d={d})", work)

    return ["L", "d", "numeric_bits", "model_bits", "abs_diff"], _pmap(one, grid)


def _oracle_masks(n: int) -> list[SubsystemMask]:
    masks = []
    for L in (1, 2, 3):
        start = (n - L) // 2
        if start >= 1 and start + L <= n - 1:
            masks.append(SubsystemMask.single_block(start, L))
    for L in (1, 2):
        for d in (1, 2):
            width = 2 * L + d
            start = (n - width) // 2
            if start >= 1 and start + width <= n - 1:
                masks.append(SubsystemMask.two_blocks(start, L, d))
    return masks


def _cmd_oracle_check(req: ScanRequest):
    p = req.params
    grid = [(n, lam) for n in range(p["n_min"], p["n_max"] + 1) for lam in p["lams"]]

    def one(pt):
        n, lam = pt

        def work():
            spec = FiniteChainSpec(n, lam)
            gs = ed_ground_state(spec)
            ff = ff_finite_correlations(spec)
            out = []
            for mask in _oracle_masks(n):
                ed_s = reduced_entropy(gs.vector, mask)
                ff_s = masked_entropy(ff.gamma, mask)
                out.append(
                    (n, lam, _mask_label(mask), ed_s, ff_s, abs(ed_s - ff_s), abs(gs.energy - ff.energy))
                )
            return out

        return _guard(f"(n={n},lambda={lam})", work)

    rows = [row for chunk in _pmap(one, grid) for row in chunk]
    cols = ["n", "lambda", "mask", "ed_entropy_bits", "ff_entropy_bits", "entropy_abs_diff", "energy_abs_diff"]
    return cols, rows


_HANDLERS = {
    "gl": _cmd_gl,
    "entropy": _cmd_entropy,
    "scan-d": _cmd_scan_d,
    "scan-lambda": _cmd_scan_lambda,
    "surface": _cmd_surface,
    "fit-k": _cmd_fit_k,
    "model-compare": _cmd_model_compare,
    "oracle-check": _cmd_oracle_check,
}


def run_scan(req: ScanRequest) -> int:
    """Execute a request; returns the process exit code."""
    try:
        columns, rows = _HANDLERS[req.command](req)
    except _NumericFailure as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except _ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(req, columns, rows)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ising-blocks",
        description="Two-block entanglement entropy of the infinite transverse-field Ising chain",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, lam_default=None):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", default=None, help="output path (default: stdout)")
        sp.add_argument("--quad-points", type=int, default=256)
        sp.add_argument("--rel-tol", type=float, default=1e-13)
        if lam_default is not None:
            sp.add_argument("--lambda", dest="lam", type=float, default=lam_default)

    sp = sub.add_parser("gl", help="tabulate the correlators g_l")
    common(sp, lam_default=1.0)
    sp.add_argument("--l-max", type=int, required=True)

    sp = sub.add_parser("entropy", help="one entropy value, single block or two blocks")
    common(sp, lam_default=1.0)
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--d", type=int, default=None)

    sp = sub.add_parser("scan-d", help="eigenvalues and entropy versus block distance")
    common(sp, lam_default=1.0)
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--d-max", type=int, required=True)

    sp = sub.add_parser("scan-lambda", help="entropy versus field for several distances")
    common(sp)
    sp.add_argument("--lambda", dest="lam_range", required=True, help="start:end:count or comma list")
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--d", dest="ds", required=True, help="comma list of distances")

    sp = sub.add_parser("surface", help="entropy over the (L, d) grid")
    common(sp, lam_default=1.0)
    sp.add_argument("--L-max", type=int, required=True)
    sp.add_argument("--d-max", type=int, required=True)

    sp = sub.add_parser("fit-k", help="fit the critical entropy constant K")
    common(sp, lam_default=1.0)
    sp.add_argument("--fit-min", type=int, default=10)
    sp.add_argument("--fit-max", type=int, default=200)

    sp = sub.add_parser("model-compare", help="surface model against numeric entropies")
    common(sp)
    sp.add_argument("--L", dest="Ls", required=True, help="comma list of block sizes")
    sp.add_argument("--d-max", type=int, required=True)
    sp.add_argument("--fit-min", type=int, default=10)
    sp.add_argument("--fit-max", type=int, default=200)

    sp = sub.add_parser("oracle-check", help="exact diagonalization against free fermions")
    common(sp)
    sp.add_argument("--n-min", type=int, default=6)
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--lambdas", default="0.3,1,1.7", help="comma list of fields")

    return parser


def _request_from_args(args: argparse.Namespace) -> ScanRequest:
    p: dict = {}
    if hasattr(args, "lam"):
        p["lam"] = args.lam
    p["quad_points"] = args.quad_points
    p["rel_tol"] = args.rel_tol
    cmd = args.command
    if cmd == "gl":
        p["l_max"] = args.l_max
    elif cmd == "entropy":
        p["L"], p["d"] = args.L, args.d
    elif cmd == "scan-d":
        p["L"], p["d_max"] = args.L, args.d_max
    elif cmd == "scan-lambda":
        p["lams"], p["L"], p["ds"] = _parse_range(args.lam_range), args.L, _parse_int_list(args.ds)
    elif cmd == "surface":
        p["l_max"], p["d_max"] = args.L_max, args.d_max
    elif cmd == "fit-k":
        p["fit_min"], p["fit_max"] = args.fit_min, args.fit_max
    elif cmd == "model-compare":
        p["Ls"], p["d_max"] = _parse_int_list(args.Ls), args.d_max
        p["fit_min"], p["fit_max"] = args.fit_min, args.fit_max
    elif cmd == "oracle-check":
        p["n_min"], p["n_max"] = args.n_min, args.n_max
        p["lams"] = _parse_lambda_list(args.lambdas)
    return ScanRequest(command=cmd, params=p, fmt=args.format, output=args.output)


def _validate(req: ScanRequest) -> None:
    p = req.params
    positive = {"l_max": 1, "L": 1, "d_max": 0, "fit_min": 1, "n_min": 3}
    for key, floor in positive.items():
        if key in p and p[key] is not None and p[key] < floor:
            raise _ValidationFailure(f"--{key.replace('_', '-')} must be >= {floor}")
    if "d" in p and p["d"] is not None and p["d"] < 0:
        raise _ValidationFailure("--d must be >= 0")
    if "ds" in p and (not p["ds"] or min(p["ds"]) < 0):
        raise _ValidationFailure("--d list must be non-empty and non-negative")
    if "Ls" in p and (not p["Ls"] or min(p["Ls"]) < 1):
        raise _ValidationFailure("--L list must be non-empty and positive")
    if "fit_max" in p and p["fit_max"] < 4 * p["fit_min"]:
        raise _ValidationFailure("--fit-max must be >= 4 * --fit-min")
    if "n_max" in p and not (3 <= p["n_min"] <= p["n_max"] <= 12):
        raise _ValidationFailure("oracle-check needs 3 <= n-min <= n-max <= 12")
    if "lams" in p and any(lam < 0 for lam in p["lams"]):
        raise _ValidationFailure("lambda values must be >= 0")
    if "lam" in p and p["lam"] < 0:
        raise _ValidationFailure("--lambda must be >= 0")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        req = _request_from_args(args)
        _validate(req)
    except _ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IsingBlocksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return run_scan(req)
    except IsingBlocksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
