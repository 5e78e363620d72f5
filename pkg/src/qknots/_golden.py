"""Tabulated reference values for the named weight families, plus the recipes
that recompute each cell from the closed forms.

Values are stored as the 3-decimal strings they were published with. A few
reference cells are known to disagree with a faithful evaluation of the same
closed forms (see KNOWN_DISPUTED); the tables command recomputes every cell
and flags any mismatch instead of silently echoing the reference.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple

from . import factor
from .core import ProblemExponents

__all__ = [
    "ReferenceCell",
    "ReferenceTable",
    "REFERENCE_TABLES",
    "KNOWN_DISPUTED",
    "compute_table",
    "round3",
]

_INF = math.inf


@dataclass(frozen=True)
class ReferenceCell:
    row: str
    col: str
    printed: str


@dataclass(frozen=True)
class ReferenceTable:
    name: str
    cells: Tuple[ReferenceCell, ...]


def round3(v: float) -> str:
    """Half-to-even 3-decimal formatting with inf literals."""
    if v == _INF:
        return "inf"
    if v == -_INF:
        return "-inf"
    return f"{v:.3f}"


def _table(name: str, rows, cols, printed) -> ReferenceTable:
    cells = []
    for row, values in zip(rows, printed):
        for col, value in zip(cols, values):
            cells.append(ReferenceCell(row, col, value))
    return ReferenceTable(name, tuple(cells))


_A_COLS = ("a=1", "a=2", "a=3", "a=4")

REFERENCE_TABLES: Tuple[ReferenceTable, ...] = (
    _table(
        "gauss-gauss-optimal",
        ("fctr",),
        ("alpha=1", "alpha=2", "alpha=3", "alpha=4"),
        (("1.315", "1.731", "2.276", "2.995"),),
    ),
    _table(
        "gauss-gauss-vary-a",
        ("p=2;r=1", "p=2;r=2", "p=inf;r=1", "p=inf;r=2"),
        _A_COLS,
        (
            ("1.135", "1.476", "4.361", "26.036"),
            ("1.645", "1.552", "5.836", "65.061"),
            ("1.172", "1.179", "1.979", "4.920"),
            ("1.733", "1.269", "2.617", "11.826"),
        ),
    ),
    _table(
        "gauss-exp-optimal",
        ("alpha=1", "alpha=2"),
        ("lam=1", "lam=5", "lam=10", "lam=20", "lam=30", "lam=100"),
        (
            ("1.723", "1.183", "1.162", "1.174", "1.188", "1.231"),
            ("2.468", "1.460", "1.436", "1.465", "1.491", "1.573"),
        ),
    ),
    _table(
        "gauss-exp-vary-a-p2",
        ("r=1;lam=1", "r=1;lam=2", "r=2;lam=1", "r=2;lam=2"),
        _A_COLS,
        (
            ("1.273", "2.426", "9.570", "66.233"),
            ("1.181", "1.642", "4.652", "23.070"),
            ("1.747", "2.546", "12.473", "146.677"),
            ("1.747", "1.729", "5.683", "44.797"),
        ),
    ),
    _table(
        "gauss-exp-vary-a-pinf",
        ("r=1;lam=1", "r=1;lam=2", "r=2;lam=1", "r=2;lam=2"),
        _A_COLS,
        (
            ("1.203", "1.512", "3.156", "9.409"),
            ("1.199", "1.242", "2.081", "4.888"),
            ("1.724", "1.700", "4.509", "23.434"),
            ("1.827", "1.366", "2.647", "9.897"),
        ),
    ),
    _table(
        "lognormal-sup",
        ("alpha=1", "alpha=2"),
        ("sigma=1", "sigma=2", "sigma=3"),
        (
            ("1.315", "2.948", "23.941"),
            ("2.988", "4.615", "7.573"),
        ),
    ),
    _table(
        "lognormal-int",
        ("fctr", "c"),
        ("alpha=1.5", "alpha=2", "alpha=2.5", "alpha=3", "alpha=3.5"),
        (
            ("1.058", "1.224", "1.594", "2.314", "3.648"),
            ("2.555", "2.973", "3.422", "3.899", "4.392"),
        ),
    ),
    _table(
        "logistic-bound",
        ("bound",),
        ("lam=2", "lam=5", "lam=10", "lam=15"),
        (("3.341", "1.710", "1.431", "1.353"),),
    ),
    _table(
        "student-bound",
        ("bound",),
        ("nu=3;b=2;alpha=1", "nu=4;b=2;alpha=2", "nu=5;b=3;alpha=2", "nu=6;b=3;alpha=3"),
        (("1.427", "1.626", "1.710", "1.861"),),
    ),
)

# Cells whose published reference disagrees with a faithful recomputation of
# the same closed form. The gauss-exp-optimal block beyond lam=1 follows a
# formula whose erf argument reads sigma/sqrt(2*alpha*lam) instead of the
# derived sigma/(lam*sqrt(2*alpha)); the two agree only at lam=1. The other
# two are last-digit artifacts of the reference's own optimizer/rounding.
KNOWN_DISPUTED: frozenset = frozenset(
    [("gauss-exp-optimal", f"alpha={a}", f"lam={l}") for a in (1, 2) for l in (5, 10, 20, 30, 100)]
    + [("lognormal-int", "c", "alpha=1.5"), ("student-bound", "bound", "nu=6;b=3;alpha=3")]
)


def _compute_gauss_gauss_optimal() -> Dict[Tuple[str, str], float]:
    out = {}
    for alpha in (1, 2, 3, 4):
        rep = factor.fctr_gauss_gauss(1.0, 2.0, ProblemExponents(_INF, _INF, alpha))
        out[("fctr", f"alpha={alpha}")] = rep.fctr
    return out


def _compute_gauss_gauss_vary_a() -> Dict[Tuple[str, str], float]:
    out = {}
    for p, tag in ((2, "p=2"), (_INF, "p=inf")):
        for r in (1, 2):
            for a in (1, 2, 3, 4):
                rep = factor.fctr_gauss_gauss(1.0, 2.0, ProblemExponents(p, 1, r), a=float(a))
                out[(f"{tag};r={r}", f"a={a}")] = rep.fctr
    return out


def _compute_gauss_exp_optimal() -> Dict[Tuple[str, str], float]:
    out = {}
    for alpha in (1, 2):
        for lam in (1, 5, 10, 20, 30, 100):
            rep = factor.fctr_gauss_exp(1.0, float(lam), ProblemExponents(_INF, _INF, alpha))
            out[(f"alpha={alpha}", f"lam={lam}")] = rep.fctr
    return out


def _compute_gauss_exp_vary_a(p) -> Dict[Tuple[str, str], float]:
    out = {}
    for r in (1, 2):
        for lam in (1, 2):
            for a in (1, 2, 3, 4):
                rep = factor.fctr_gauss_exp(1.0, float(lam), ProblemExponents(p, 1, r), a=float(a))
                out[(f"r={r};lam={lam}", f"a={a}")] = rep.fctr
    return out


def _compute_lognormal_sup() -> Dict[Tuple[str, str], float]:
    out = {}
    for alpha in (1, 2):
        for sigma in (1, 2, 3):
            rep = factor.fctr_lognormal_pleq(float(sigma), 0.0, float(alpha))
            out[(f"alpha={alpha}", f"sigma={sigma}")] = rep.fctr
    return out


def _compute_lognormal_int() -> Dict[Tuple[str, str], float]:
    out = {}
    for alpha, col in ((1.5, "alpha=1.5"), (2.0, "alpha=2"), (2.5, "alpha=2.5"),
                       (3.0, "alpha=3"), (3.5, "alpha=3.5")):
        rep = factor.fctr_lognormal_int(1.0, 0.0, alpha)
        out[("fctr", col)] = rep.fctr
        out[("c", col)] = rep.params["c"]
    return out


def _compute_logistic_bound() -> Dict[Tuple[str, str], float]:
    out = {}
    for lam in (2, 5, 10, 15):
        rep = factor.fctr_bound_logistic(float(lam), 1.0, 1.0)
        out[("bound", f"lam={lam}")] = rep.fctr
    return out


def _compute_student_bound() -> Dict[Tuple[str, str], float]:
    out = {}
    for nu, b, alpha in ((3, 2, 1), (4, 2, 2), (5, 3, 2), (6, 3, 3)):
        rep = factor.fctr_bound_student(float(nu), float(b), float(alpha))
        out[("bound", f"nu={nu};b={b};alpha={alpha}")] = rep.fctr
    return out


_COMPUTERS = {
    "gauss-gauss-optimal": _compute_gauss_gauss_optimal,
    "gauss-gauss-vary-a": _compute_gauss_gauss_vary_a,
    "gauss-exp-optimal": _compute_gauss_exp_optimal,
    "gauss-exp-vary-a-p2": lambda: _compute_gauss_exp_vary_a(2),
    "gauss-exp-vary-a-pinf": lambda: _compute_gauss_exp_vary_a(_INF),
    "lognormal-sup": _compute_lognormal_sup,
    "lognormal-int": _compute_lognormal_int,
    "logistic-bound": _compute_logistic_bound,
    "student-bound": _compute_student_bound,
}


def compute_table(name: str) -> Dict[Tuple[str, str], float]:
    """Recompute one reference table; keys are (row, col)."""
    return _COMPUTERS[name]()
