"""Command-line surface: evaluation, tables, regions, zeros, grids, verify.

All commands emit UTF-8 JSON (default) or CSV on stdout.  Exit status:
0 success, 1 domain error, 2 verification failure, 64 usage error.
Complex inputs are RE,IM pairs; no expression parsing.  Grid and census
workloads honour the RAUX_THREADS environment variable.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .coeffs import build_d_table, build_pk, tables_to_csv, tables_to_json
from .errors import RauxError
from .expansion import eval_auto, expand_left, expand_right, z_of_t
from .gfunc import from_strip, g_eval_grid
from .oracle import r_quad_origin_scaled, r_quad_saddle_scaled, u_region
from .regions import classify_region, phi_of_r, phi_series
from .scaled import ScaledComplex
from .verify import SUITES, run_suite

_USAGE_EXIT = 64


@dataclass(frozen=True)
class RunConfig:
    """Validated run options shared by the evaluation commands."""

    precision_target: float = 1e-10
    kmax: int = 8
    theta: float = 0.25 * math.pi
    calibration_path: str | None = None
    output_format: str = "json"

    def __post_init__(self):
        if not (0.0 < self.theta < math.pi):
            raise RauxError("theta must lie in (0, pi)")
        if self.kmax < 1:
            raise RauxError("kmax must be >= 1")
        table_kmax = build_d_table(self.kmax).kmax
        if self.kmax > table_kmax:
            raise RauxError("kmax exceeds the coefficient table")
        if self.output_format not in ("json", "csv"):
            raise RauxError("output format must be json or csv")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(_USAGE_EXIT)


def _parse_complex(text: str) -> complex:
    try:
        re_s, im_s = text.split(",")
        return complex(float(re_s), float(im_s))
    except ValueError as exc:
        raise RauxError(f"expected RE,IM pair, got {text!r}") from exc


def _emit_json(doc) -> None:
    json.dump(doc, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


def _value_doc(value: ScaledComplex) -> dict:
    return {"log_mod": value.log_mod, "phase": value.phase}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RAUX_THREADS", "1")))
    except ValueError:
        return 1


# -- commands ------------------------------------------------------------

def _cmd_eval(args) -> int:
    RunConfig(kmax=max(args.k, 1), theta=args.theta)  # validate the flags
    s = _parse_complex(args.s)
    if args.method == "auto":
        res = eval_auto(s, args.k, theta=args.theta)
    elif args.method == "right":
        res = expand_right(s, args.k)
    elif args.method == "left":
        res = expand_left(s, args.k)
    else:
        value = (
            r_quad_origin_scaled(s) if abs(s) <= 500.0 else r_quad_saddle_scaled(s)
        )
        res = None
    if res is None:
        doc = {
            "s": [s.real, s.imag],
            "value": _value_doc(value),
            "region": classify_region(s, args.theta).tag,
            "k": 0,
            "err_estimate": 1e-10,
        }
    else:
        doc = {
            "s": [s.real, s.imag],
            "value": _value_doc(res.value),
            "region": res.region.tag,
            "k": res.k_used,
            "err_estimate": res.err_estimate,
        }
    _emit_json(doc)
    return 0


def _cmd_z(args) -> int:
    _emit_json({"t": args.t, "z": z_of_t(args.t)})
    return 0


def _cmd_coeffs(args) -> int:
    dt = build_d_table(args.kmax)
    if args.format == "csv":
        sys.stdout.write(tables_to_csv(dt))
    else:
        _emit_json(tables_to_json(dt, build_pk(args.kmax)))
    return 0


def _cmd_region(args) -> int:
    s = _parse_complex(args.s)
    label = classify_region(s, args.theta)
    _emit_json({"s": [s.real, s.imag], "tag": label.tag, "theta": label.theta})
    return 0


def _cmd_phi(args) -> int:
    doc = {"r": args.r}
    p = phi_of_r(args.r)
    doc["phi"] = p
    doc["u_residual"] = u_region(args.r, p)
    if args.series:
        doc["phi_series"] = phi_series(args.r)
    _emit_json(doc)
    return 0


def _cmd_zeros(args) -> int:
    from .zeros import ZeroBox, count_zeros, locate_zeros

    x0, x1, y0, y1 = (float(v) for v in args.box.split(","))
    box = ZeroBox(x0, x1, y0, y1)
    n = count_zeros(box)
    zs: list[complex] = []
    if args.refine:
        zs = locate_zeros(ZeroBox(x0, x1, y0, y1))
    if args.out == "csv":
        sys.stdout.write("re,im\n")
        for z in zs:
            sys.stdout.write(f"{z.real!r},{z.imag!r}\n")
    else:
        _emit_json({
            "box": [x0, x1, y0, y1],
            "count": n,
            "convention": "open box; edges perturbed <= 1e-3 on zero contact",
            "zeros": [[z.real, z.imag] for z in zs],
        })
    if args.plot:
        from .report import render_zeros

        render_zeros(zs, (x0, x1, y0, y1), args.plot)
    return 0


def _grid_eval_r(points: np.ndarray, k: int) -> np.ndarray:
    def one(s):
        return eval_auto(complex(s), k).value.phase

    nt = _threads()
    flat = points.ravel()
    if nt > 1:
        with ThreadPoolExecutor(max_workers=nt) as pool:
            phases = list(pool.map(one, flat))
    else:
        phases = [one(s) for s in flat]
    return np.array(phases).reshape(points.shape)


def _cmd_xray(args) -> int:
    x0, x1, y0, y1 = (float(v) for v in args.window.split(","))
    xs = np.arange(x0, x1 + args.step / 2, args.step)
    ys = np.arange(y0, y1 + args.step / 2, args.step)
    grid = xs[None, :] + 1j * ys[:, None]
    if args.func == "G":
        vals = g_eval_grid(grid)
        sign_re = np.sign(vals.real)
        sign_im = np.sign(vals.imag)
    else:
        phases = _grid_eval_r(grid, args.k)
        sign_re = np.sign(np.cos(phases))
        sign_im = np.sign(np.sin(phases))
    sys.stdout.write("x,y,sign_re,sign_im\n")
    for i, y in enumerate(ys):
        for j, x in enumerate(xs):
            sys.stdout.write(
                f"{x!r},{y!r},{int(sign_re[i, j])},{int(sign_im[i, j])}\n"
            )
    if args.plot:
        from .report import render_xray

        render_xray(xs, ys, sign_re, sign_im, args.func, args.plot)
    return 0


def _cmd_border(args) -> int:
    nu = 1.0 / math.sqrt(2.0)
    corners = [(-2.0, -nu), (2.0, -nu), (2.0, nu), (-2.0, nu), (-2.0, -nu)]
    params, qs = [], []
    for (m0, n0), (m1, n1) in zip(corners, corners[1:]):
        steps = max(2, int(math.hypot(m1 - m0, n1 - n0) / args.step))
        for i in range(steps):
            t = i / steps
            params.append(len(params))
            qs.append(from_strip(m0 + t * (m1 - m0), n0 + t * (n1 - n0)))
    qs.append(qs[0])
    params.append(len(params))
    vals = g_eval_grid(np.array(qs))
    sys.stdout.write("index,re_q,im_q,re_G,im_G\n")
    for idx, (q, v) in enumerate(zip(qs, vals)):
        sys.stdout.write(f"{idx},{q.real!r},{q.imag!r},{v.real!r},{v.imag!r}\n")
    if args.plot:
        from .report import render_border

        render_border(vals, args.plot)
    return 0


def _cmd_oracle(args) -> int:
    s = _parse_complex(args.s)
    if args.path == "origin":
        value = r_quad_origin_scaled(s)
    else:
        value = r_quad_saddle_scaled(s)
    _emit_json({
        "s": [s.real, s.imag],
        "path": args.path,
        "value": _value_doc(value),
    })
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status}  [{res.index:2d}] {res.name} ({res.detail}) "
              f"[{res.seconds:.1f}s]")
        failed += 0 if res.passed else 1
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 0 if failed == 0 else 2


def build_parser() -> _Parser:
    parser = _Parser(prog="raux", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate R(s)")
    p.add_argument("--s", required=True, help="RE,IM")
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--method", choices=("auto", "right", "left", "oracle"),
                   default="auto")
    p.add_argument("--theta", type=float, default=0.25 * math.pi)
    p.add_argument("--json", action="store_true", help="(default output)")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("z", help="Riemann-Siegel Z(t)")
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(fn=_cmd_z)

    p = sub.add_parser("coeffs", help="exact term-coefficient tables")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_coeffs)

    p = sub.add_parser("region", help="classify a point")
    p.add_argument("--s", required=True, help="RE,IM")
    p.add_argument("--theta", type=float, default=0.25 * math.pi)
    p.set_defaults(fn=_cmd_region)

    p = sub.add_parser("phi", help="fourth-quadrant boundary angle")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--series", action="store_true")
    p.set_defaults(fn=_cmd_phi)

    p = sub.add_parser("zeros", help="count (and refine) zeros in a box")
    p.add_argument("--box", required=True, help="X0,X1,Y0,Y1")
    p.add_argument("--refine", action="store_true")
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--plot", help="render a PNG next to the output")
    p.set_defaults(fn=_cmd_zeros)

    p = sub.add_parser("xray", help="sign grid of Re/Im over a window")
    p.add_argument("--func", choices=("G", "R"), required=True)
    p.add_argument("--window", required=True, help="x0,x1,y0,y1")
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--out", choices=("csv",), default="csv")
    p.add_argument("--plot", help="render a PNG next to the output")
    p.set_defaults(fn=_cmd_xray)

    p = sub.add_parser("border", help="image of the strip-parallelogram border")
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--out", choices=("csv",), default="csv")
    p.add_argument("--plot", help="render a PNG next to the output")
    p.set_defaults(fn=_cmd_border)

    p = sub.add_parser("oracle", help="contour-quadrature ground truth")
    p.add_argument("--s", required=True, help="RE,IM")
    p.add_argument("--path", choices=("origin", "saddle"), default="origin")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="run acceptance criteria")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except RauxError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
