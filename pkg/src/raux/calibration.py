"""Empirical error constants for the truncated expansions.

The truncation error of the K-term expansion is modelled as

    |error| <= c_emp[K] * exp(-pi |mu| / (2 sqrt 2)) * |xi|^(-K-1) * |prefactor|

with the per-K constants fitted once against the quadrature oracle on a
fixed grid of rays and radii, then stored in a versioned JSON sidecar so
error estimates are reproducible across machines.  The analogous constant
for the zeta-sum approximation bound exp(-c sqrt|s| / log|s|) (negative-t
half of region L) is fitted the same way.
"""
from __future__ import annotations

import importlib.resources
import json
import math
from functools import lru_cache

_VERSION = 1


@lru_cache(maxsize=None)
def load_calibration(path: str | None = None) -> dict:
    if path is None:
        ref = importlib.resources.files("raux").joinpath("data/calibration.json")
        doc = json.loads(ref.read_text())
    else:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    if doc.get("version") != _VERSION:
        raise ValueError(f"unsupported calibration version {doc.get('version')!r}")
    doc["c_emp"] = {int(k): float(v) for k, v in doc["c_emp"].items()}
    return doc


def c_emp(K: int, calib: dict | None = None) -> float:
    doc = calib if calib is not None else load_calibration()
    table = doc["c_emp"]
    if K in table:
        return table[K]
    raise KeyError(f"no calibrated error constant for K = {K}")


def zeta_sum_c(calib: dict | None = None) -> float:
    doc = calib if calib is not None else load_calibration()
    return float(doc["zeta_sum_c"])


def calibrate(kmax: int = 8, margin: float = 1.6) -> dict:
    """Refit the constants against the saddle-path oracle.

    Grid: rays arg s in {0.15, pi/4, pi/2, 2.2, -0.3, -1.2, -2.2} at radii
    {150, 300, 600, 1200, 2400} (disjoint from the acceptance grid).  Each
    c_emp[K] is the observed max of |error| / bound-without-constant, times
    a safety margin.
    """
    from .expansion import _expand_right_core
    from .oracle import r_quad_saddle_scaled
    from .special import zeta_partial_sum

    args = (0.15, 0.25 * math.pi, 0.5 * math.pi, 2.2, -0.3, -1.2, -2.2)
    radii = (150.0, 300.0, 600.0, 1200.0, 2400.0)
    c = {K: 0.0 for K in range(1, kmax + 1)}
    for a in args:
        for r in radii:
            s = complex(r * math.cos(a), r * math.sin(a))
            oracle = r_quad_saddle_scaled(s)
            for K in range(1, kmax + 1):
                value, frame, pref_log = _expand_right_core(s, K)
                err = value.sub(oracle)
                if err.is_zero:
                    continue
                if err.log_mod - value.log_mod < math.log(1e-12):
                    # truncation is below the arithmetic floor of the
                    # dominant term; nothing to fit here
                    continue
                bound_log = (
                    -math.pi * abs(frame.strip.mu) / (2.0 * math.sqrt(2.0))
                    - (K + 1) * math.log(abs(frame.xi))
                    + pref_log
                )
                ratio = math.exp(min(err.log_mod - bound_log, 50.0))
                c[K] = max(c[K], ratio)

    # negative-t half of L: |R - sum| <= exp(-c sqrt|s|/log|s|)
    from .regions import in_L

    c_zeta = math.inf
    for r in (300.0, 700.0, 1500.0, 3000.0):
        for a in (-0.05, -0.12, -0.2):
            s = complex(r * math.cos(a), r * math.sin(a))
            if not in_L(s):
                continue
            from .frames import saddle_frame

            fr = saddle_frame(s)
            err = r_quad_saddle_scaled(s).sub(zeta_partial_sum(s, fr.ell))
            if err.is_zero:
                continue
            c_here = -err.log_mod * math.log(abs(s)) / math.sqrt(abs(s))
            c_zeta = min(c_zeta, c_here)

    return {
        "version": _VERSION,
        "c_emp": {K: margin * v for K, v in c.items()},
        "zeta_sum_c": 0.9 * c_zeta,
        "grid": "rays {0.15, pi/4, pi/2, 2.2, -0.3, -1.2, -2.2} x radii {150..2400}",
        "margin": margin,
    }


def save_calibration(doc: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(
            {**doc, "c_emp": {str(k): v for k, v in doc["c_emp"].items()}},
            fh,
            indent=1,
            sort_keys=True,
        )
        fh.write("\n")
