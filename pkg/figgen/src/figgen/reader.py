"""Reader for the scan CSV dialect.

The input is the exact table written by the trispin CLI: a fixed header,
12-significant-digit cells, empty cells for values that were not evaluated,
and a lowercase true/false physical flag.  Anything off-dialect aborts with
the offending line number.
"""

import numpy as np

HEADER = (
    "theta2,theta3,alpha,physical,c12,c13,c23,c1_23,c2_13,c3_12,f3,m1,m2,m3"
)
COLUMNS = tuple(HEADER.split(","))
MEASURES = COLUMNS[4:]


class MalformedCsv(ValueError):
    """Raised with a 1-based line number when the input is off-dialect."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _cell(text, line):
    if text == "":
        return None
    try:
        return float(text)
    except ValueError:
        raise MalformedCsv(line, f"not a number: {text!r}") from None


def read_rows(path):
    """Parse one CSV file into a list of per-row dicts."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = fh.read().split("\n")
    if not lines or lines[0] != HEADER:
        raise MalformedCsv(1, "unrecognized header")
    if lines[-1] == "":
        lines = lines[:-1]
    rows = []
    for num, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != len(COLUMNS):
            raise MalformedCsv(num, f"expected {len(COLUMNS)} cells, got {len(cells)}")
        rec = {}
        for name, cell in zip(COLUMNS, cells):
            if name == "physical":
                if cell not in ("true", "false"):
                    raise MalformedCsv(num, f"bad physical flag {cell!r}")
                rec[name] = cell == "true"
            else:
                rec[name] = _cell(cell, num)
        rows.append(rec)
    if not rows:
        raise MalformedCsv(2, "no data rows")
    return rows


def plane_grid(rows):
    """Pivot plane-scan rows into (theta2 axis, theta3 axis, masked f3).

    Rows must form a full row-major grid over a (theta2, theta3) product of
    axis values.  Unphysical nodes come back masked.
    """
    t2 = np.array([r["theta2"] for r in rows], dtype=float)
    t3 = np.array([r["theta3"] for r in rows], dtype=float)
    if np.isnan(t2).any() or np.isnan(t3).any():
        raise ValueError("plane input needs theta2/theta3 on every row")
    axis2 = np.unique(t2)
    axis3 = np.unique(t3)
    if axis2.size * axis3.size != len(rows):
        raise ValueError("rows do not form a full grid")
    f3 = np.array(
        [np.nan if r["f3"] is None else r["f3"] for r in rows], dtype=float
    )
    physical = np.array([r["physical"] for r in rows], dtype=bool)
    shape = (axis2.size, axis3.size)
    grid = np.ma.masked_invalid(f3.reshape(shape))
    grid = np.ma.masked_where(~physical.reshape(shape), grid)
    return axis2, axis3, grid


def spin_curves(rows):
    """Extract (alpha, {measure: values}) from spin-scan rows, NaN for gaps."""
    alpha = np.array([r["alpha"] for r in rows], dtype=float)
    if np.isnan(alpha).any():
        raise ValueError("spin input needs alpha on every row")
    curves = {}
    for name in MEASURES:
        curves[name] = np.array(
            [np.nan if r[name] is None else r[name] for r in rows], dtype=float
        )
    return alpha, curves
