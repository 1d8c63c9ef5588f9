"""Scan engine and serialization for the command-line front end.

Three modes: a single phase-space point, a (theta2, theta3) plane scan at
fixed spin, and a spin-rotation scan at fixed (theta2, theta3).  Rows are
serialized to CSV (fixed header, 12 significant digits, '\\n' newlines) or
JSON; identical requests produce byte-identical output.
"""
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .amplitudes import (STATE_BUILDERS, CouplingSet, DecayConfiguration,
                         spin_direction_from_rotation)
from .measures import REPORT_FIELDS, full_report

TWO_PI = 2.0 * math.pi

COLUMNS = ("theta2", "theta3", "alpha", "physical") + REPORT_FIELDS

MODES = ("point", "plane", "spin")

FORMATS = ("csv", "json")

DEFAULT_GRID = 181
DEFAULT_SAMPLES = 361
# default spin direction: +y
DEFAULT_SPIN_THETA = math.pi / 2.0
DEFAULT_SPIN_PHI = math.pi / 2.0


@dataclass(frozen=True)
class ScanRequest:
    interaction: str
    couplings: CouplingSet
    mode: str
    theta2: float = None
    theta3: float = None
    spin_theta: float = None
    spin_phi: float = None
    spin_axis: str = "y"
    grid: int = DEFAULT_GRID
    samples: int = DEFAULT_SAMPLES
    fmt: str = "csv"
    output: str = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.interaction not in STATE_BUILDERS:
            raise ValueError(f"unknown interaction {self.interaction!r}")
        if self.couplings.kind != self.interaction:
            raise ValueError("couplings kind does not match the interaction")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.spin_axis not in ("x", "y"):
            raise ValueError(f"spin axis must be 'x' or 'y', got {self.spin_axis!r}")
        if int(self.grid) < 2:
            raise ValueError("grid size must be at least 2")
        if int(self.samples) < 2:
            raise ValueError("sample count must be at least 2")


@dataclass(frozen=True)
class ScanRow:
    theta2: float
    theta3: float
    alpha: float
    physical: bool
    c12: float = None
    c13: float = None
    c23: float = None
    c1_23: float = None
    c2_13: float = None
    c3_12: float = None
    f3: float = None
    m1: float = None
    m2: float = None
    m3: float = None


def _report_kwargs(rep, idx=None):
    out = {}
    for name in REPORT_FIELDS:
        val = getattr(rep, name)
        out[name] = float(val) if idx is None else float(val[idx])
    return out


def _require_angles(req, names):
    for name in names:
        if getattr(req, name) is None:
            raise ValueError(f"{req.mode} mode needs {name}")


def run_point(req):
    """Evaluate a single configuration; returns one ScanRow."""
    _require_angles(req, ("theta2", "theta3", "spin_theta", "spin_phi"))
    cfg = DecayConfiguration(req.theta2, req.theta3, req.spin_theta, req.spin_phi)
    state = STATE_BUILDERS[req.interaction](cfg, req.couplings)
    rep = full_report(state)
    return ScanRow(theta2=float(req.theta2), theta3=float(req.theta3),
                   alpha=None, physical=cfg.is_physical, **_report_kwargs(rep))


def run_plane(req):
    """Grid scan over [0, pi]^2 at fixed spin; row-major, theta2 outer.

    Unphysical nodes (theta2 + theta3 < pi) are emitted with the physical
    flag false and empty measures, so consumers keep the full rectangle.
    """
    spin_theta = DEFAULT_SPIN_THETA if req.spin_theta is None else req.spin_theta
    spin_phi = DEFAULT_SPIN_PHI if req.spin_phi is None else req.spin_phi
    n = int(req.grid)
    axis = np.linspace(0.0, math.pi, n)
    t2g, t3g = np.meshgrid(axis, axis, indexing="ij")
    t2f, t3f = t2g.ravel(), t3g.ravel()
    cfg = DecayConfiguration(t2f, t3f, spin_theta, spin_phi)
    phys = cfg.is_physical
    sub = DecayConfiguration(t2f[phys], t3f[phys], spin_theta, spin_phi)
    state = STATE_BUILDERS[req.interaction](sub, req.couplings)
    rep = full_report(state)
    rows = []
    k = 0
    for i in range(t2f.size):
        if phys[i]:
            rows.append(ScanRow(theta2=float(t2f[i]), theta3=float(t3f[i]),
                                alpha=None, physical=True,
                                **_report_kwargs(rep, k)))
            k += 1
        else:
            rows.append(ScanRow(theta2=float(t2f[i]), theta3=float(t3f[i]),
                                alpha=None, physical=False))
    return rows


def run_spin(req):
    """Spin-rotation scan at fixed (theta2, theta3).

    alpha is sampled uniformly on [0, 2 pi); the configuration is evaluated
    at every sample even when the fixed angles are kinematically unphysical,
    with the flag reporting that honestly.
    """
    _require_angles(req, ("theta2", "theta3"))
    n = int(req.samples)
    alphas = np.arange(n) * (TWO_PI / n)
    spin_theta, spin_phi = spin_direction_from_rotation(req.spin_axis, alphas)
    cfg = DecayConfiguration(req.theta2, req.theta3, spin_theta, spin_phi)
    state = STATE_BUILDERS[req.interaction](cfg, req.couplings)
    rep = full_report(state)
    flag = bool(req.theta2 + req.theta3 >= math.pi - 1e-12)
    return [ScanRow(theta2=None, theta3=None, alpha=float(alphas[i]),
                    physical=flag, **_report_kwargs(rep, i))
            for i in range(n)]


RUNNERS = {"point": run_point, "plane": run_plane, "spin": run_spin}


def run_request(req):
    result = RUNNERS[req.mode](req)
    return [result] if isinstance(result, ScanRow) else result


def _fmt(value):
    if value is None:
        return ""
    return format(float(value), "#.12g")


def serialize(rows, fmt="csv"):
    """Rows to bytes; CSV keeps a fixed column set, JSON mirrors it."""
    if not rows:
        raise ValueError("no rows to serialize")
    if fmt == "csv":
        lines = [",".join(COLUMNS)]
        for row in rows:
            cells = [_fmt(row.theta2), _fmt(row.theta3), _fmt(row.alpha),
                     "true" if row.physical else "false"]
            cells += [_fmt(getattr(row, name)) for name in REPORT_FIELDS]
            lines.append(",".join(cells))
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "json":
        payload = []
        for row in rows:
            obj = {"theta2": row.theta2, "theta3": row.theta3,
                   "alpha": row.alpha, "physical": row.physical}
            for name in REPORT_FIELDS:
                obj[name] = getattr(row, name)
            payload.append(obj)
        return (json.dumps(payload) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def parse_csv(data):
    """Inverse of serialize(fmt='csv') for round-trip checks."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = [ln for ln in text.split("\n") if ln]
    if not lines or lines[0] != ",".join(COLUMNS):
        raise ValueError("unexpected CSV header")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(COLUMNS):
            raise ValueError("wrong cell count")
        vals = {}
        for name, cell in zip(COLUMNS, cells):
            if name == "physical":
                vals[name] = cell == "true"
            else:
                vals[name] = None if cell == "" else float(cell)
        rows.append(ScanRow(**vals))
    return rows


def write_output(data, path=None):
    """Write bytes to a file, or stdout when no path is given."""
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)
