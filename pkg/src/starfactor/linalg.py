"""Exact rational linear algebra: row echelon form, kernels, Fourier-Motzkin.

Everything works on lists of ``Fraction``; integer inputs are promoted.
"""

from __future__ import annotations

from fractions import Fraction
import math
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

Vector = list[Fraction]


class EliminationLimitError(RuntimeError):
    """Fourier-Motzkin produced more inequalities than the configured cap."""


class Echelon:
    """Incrementally maintained reduced row echelon basis of a row space."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, Vector] = {}  # pivot column -> row with 1 at pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence) -> Vector:
        r = [Fraction(x) for x in row]
        for col, basis in self.rows.items():
            if r[col]:
                f = r[col]
                r = [a - f * b for a, b in zip(r, basis)]
        return r

    def add(self, row: Sequence) -> bool:
        """Add a row; returns True if it increased the rank."""
        r = self.reduce(row)
        pivot = next((j for j, x in enumerate(r) if x), None)
        if pivot is None:
            return False
        inv = 1 / r[pivot]
        r = [x * inv for x in r]
        for col, basis in self.rows.items():
            if basis[pivot]:
                f = basis[pivot]
                self.rows[col] = [a - f * b for a, b in zip(basis, r)]
        self.rows[pivot] = r
        return True

    def kernel(self) -> list[Vector]:
        """Basis of {x : row . x = 0 for every row}, one vector per free column."""
        free = [j for j in range(self.ncols) if j not in self.rows]
        basis = []
        for f in free:
            x = [Fraction(0)] * self.ncols
            x[f] = Fraction(1)
            for col, row in self.rows.items():
                x[col] = -row[f]
            basis.append(x)
        return basis


def rank(matrix: Iterable[Sequence], ncols: int) -> int:
    e = Echelon(ncols)
    for row in matrix:
        e.add(row)
    return e.rank


def nullspace(matrix: Iterable[Sequence], ncols: int) -> list[Vector]:
    e = Echelon(ncols)
    for row in matrix:
        e.add(row)
    return e.kernel()


def mat_vec(matrix: Iterable[Sequence], x: Sequence) -> list:
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in matrix]


# --- Fourier-Motzkin ----------------------------------------------------------

# An inequality (a, b) means  a . t >= b.
Inequality = tuple[tuple[Fraction, ...], Fraction]


def _normalise(a: Sequence[Fraction], b: Fraction) -> Inequality:
    scale = max((abs(x) for x in a if x), default=None)
    if scale is None:
        return tuple(a), b
    return tuple(x / scale for x in a), b / scale


def fourier_motzkin(
    system: Sequence[Inequality], max_rows: int = 50_000
) -> Optional[list[Fraction]]:
    """A rational point satisfying every ``a . t >= b``, or None if there is none.

    Variables are eliminated from last to first; each stage is kept so the
    solution can be rebuilt by back substitution.
    """
    if not system:
        return []
    nvars = len(system[0][0])
    stages: list[list[Inequality]] = []
    current = sorted({_normalise([Fraction(x) for x in a], Fraction(b)) for a, b in system})
    for j in reversed(range(nvars)):
        stages.append(current)
        pos, neg, rest = [], [], []
        for a, b in current:
            (pos if a[j] > 0 else neg if a[j] < 0 else rest).append((a, b))
        combined = set(rest)
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = -an[j], ap[j]
                a = [cp * x + cn * y for x, y in zip(ap, an)]
                a[j] = Fraction(0)
                combined.add(_normalise(a, cp * bp + cn * bn))
                if len(combined) > max_rows:
                    raise EliminationLimitError(
                        f"more than {max_rows} inequalities while eliminating variable {j}"
                    )
        current = sorted(combined)
    if any(b > 0 for _, b in current):
        return None

    t = [Fraction(0)] * nvars
    for j, stage in zip(range(nvars), reversed(stages)):
        lo, hi = None, None
        for a, b in stage:
            # only variables 0..j are live at this stage
            slack = b - sum((a[i] * t[i] for i in range(j)), Fraction(0))
            if a[j] > 0:
                bound = slack / a[j]
                lo = bound if lo is None or bound > lo else lo
            elif a[j] < 0:
                bound = slack / a[j]
                hi = bound if hi is None or bound < hi else hi
        t[j] = _pick(lo, hi)
    return t


def _pick(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    """A simple value in [lo, hi]: 0 if allowed, else the nearest integer, else lo."""
    def inside(v):
        return (lo is None or v >= lo) and (hi is None or v <= hi)

    if inside(Fraction(0)):
        return Fraction(0)
    if lo is not None and lo > 0:
        up = Fraction(math.ceil(lo))
        return up if inside(up) else lo
    down = Fraction(math.floor(hi))
    return down if inside(down) else hi


def integer_scaling(x: Sequence[Fraction]) -> list[int]:
    """Smallest positive multiple of ``x`` with integer entries."""
    den = lcm(*(f.denominator for f in x)) if x else 1
    ints = [int(f * den) for f in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints
