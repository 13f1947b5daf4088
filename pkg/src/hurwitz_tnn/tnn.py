"""Total nonnegativity of finite sections by exhaustive minor enumeration."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .errors import OutOfWindow, ShapeMismatch, UntrustedEntry
from .laurent import LaurentWindow
from .matrices import MatrixSection, hurwitz_section

DEFAULT_MAX_ORDER = 5

ALL_NONNEGATIVE = "all_nonnegative"
NEGATIVE_FOUND = "negative_found"
INCONCLUSIVE = "inconclusive_untrusted"

# int64 stays exact while every Laplace partial sum is below this
_INT64_SAFE = 2**62


def default_max_order() -> int:
    value = os.environ.get("TNN_MAX_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class MinorWitness:
    rows: tuple
    cols: tuple
    value: Fraction

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(rows) != len(cols):
            raise ShapeMismatch("a minor needs as many rows as columns")
        if any(b <= a for a, b in zip(rows, rows[1:])) or any(b <= a for a, b in zip(cols, cols[1:])):
            raise ShapeMismatch("minor labels must be strictly increasing")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def order(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class TnnReport:
    status: str
    max_order_checked: int
    witness: Optional[MinorWitness] = None
    minors_evaluated: int = 0

    def __post_init__(self):
        negative = self.witness is not None and self.witness.value < 0
        if (self.status == NEGATIVE_FOUND) != negative:
            raise ValueError("negative_found must come with a negative witness")

    @property
    def exit_code(self) -> int:
        return {ALL_NONNEGATIVE: 0, NEGATIVE_FOUND: 1}.get(self.status, 2)


def _bareiss(mat: list) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [row[:] for row in mat]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[-1][-1]


def _integer_rows(rows: list):
    """Scale each row by the lcm of its denominators.

    Returns the integer rows and the product of the scale factors.  Row
    scaling by positive integers keeps every minor's sign.
    """
    out, scale = [], 1
    for row in rows:
        m = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (m // x.denominator) for x in row])
        scale *= m
    return out, scale


def det_rows(rows: list) -> Fraction:
    """Exact determinant of a square list-of-lists of Fractions."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ShapeMismatch("determinant needs a nonempty square matrix")
    ints, scale = _integer_rows([[Fraction(x) for x in r] for r in rows])
    return Fraction(_bareiss(ints), scale)


def det_exact(M: MatrixSection, rows: Sequence[int] = None, cols: Sequence[int] = None) -> Fraction:
    """Determinant of the submatrix with the given row/column labels."""
    rows = list(M.row_labels if rows is None else rows)
    cols = list(M.col_labels if cols is None else cols)
    if len(rows) != len(cols) or not rows:
        raise ShapeMismatch("|rows| must equal |cols| and be at least 1")
    rpos, cpos = M.position(rows, cols)
    n = M.n_cols
    for r in rpos:
        for c in cpos:
            if not M.entry_trusted[r * n + c]:
                raise UntrustedEntry(
                    f"entry ({M.row_labels[r]}, {M.col_labels[c]}) is truncation-affected"
                )
    return det_rows([[M.entries[r * n + c] for c in cpos] for r in rpos])


def _sign_matrix(M: MatrixSection, rpos, cpos) -> list:
    """Integer matrix whose minors have the signs of ``M``'s minors.

    Rows are cleared of denominators, then rows and columns are divided by
    their (positive) gcds to keep magnitudes small.
    """
    n = M.n_cols
    rows = [[M.entries[r * n + c] for c in cpos] for r in rpos]
    ints, _ = _integer_rows(rows)
    ints = [[x // (math.gcd(*row) or 1) for x in row] for row in ints]
    if ints and ints[0]:
        for c in range(len(ints[0])):
            g = math.gcd(*(row[c] for row in ints)) or 1
            if g > 1:
                for row in ints:
                    row[c] //= g
    return ints


class _MinorTables:
    """All minors of order 1, 2, ... of an integer matrix.

    The order-k table has one row per k-subset of rows and one column per
    k-subset of columns, both in lexicographic order, and is filled from the
    order-(k-1) table by Laplace expansion along the first selected row.
    """

    def __init__(self, ints: list, max_order: int):
        self.n = len(ints)
        self.m = len(ints[0]) if ints else 0
        biggest = max((abs(x) for row in ints for x in row), default=0)
        exact64 = biggest**max_order * math.factorial(max_order) < _INT64_SAFE
        self.dtype = np.int64 if exact64 else object
        self.base = np.array(ints, dtype=self.dtype).reshape(self.n, self.m)

    def __iter__(self):
        n, m = self.n, self.m
        table = self.base
        prev_rows = [(i,) for i in range(n)]
        prev_cols = [(j,) for j in range(m)]
        k = 1
        yield k, prev_rows, prev_cols, table
        while k < min(n, m):
            k += 1
            row_index = {c: i for i, c in enumerate(prev_rows)}
            col_index = {c: i for i, c in enumerate(prev_cols)}
            rows_k = list(combinations(range(n), k))
            cols_k = list(combinations(range(m), k))
            first = np.array([r[0] for r in rows_k], dtype=np.intp)
            rest = np.array([row_index[r[1:]] for r in rows_k], dtype=np.intp)
            new = np.zeros((len(rows_k), len(cols_k)), dtype=self.dtype)
            for t in range(k):
                col_t = np.array([c[t] for c in cols_k], dtype=np.intp)
                drop_t = np.array([col_index[c[:t] + c[t + 1:]] for c in cols_k], dtype=np.intp)
                term = self.base[np.ix_(first, col_t)] * table[np.ix_(rest, drop_t)]
                if t % 2:
                    new -= term
                else:
                    new += term
            table, prev_rows, prev_cols = new, rows_k, cols_k
            yield k, prev_rows, prev_cols, table


def count_minors(n_rows: int, n_cols: int, max_order: int) -> int:
    """Closed form: sum over k of C(n, k) * C(m, k)."""
    return sum(math.comb(n_rows, k) * math.comb(n_cols, k)
               for k in range(1, min(max_order, n_rows, n_cols) + 1))


def check_tnn(M: MatrixSection, max_order: int = None) -> TnnReport:
    """Enumerate minors of orders 1..max_order over trusted rows and columns.

    Minors are visited in lexicographic order (order, then row subset, then
    column subset) and the first negative one is returned as the witness, so
    the verdict does not depend on how the work is scheduled.
    """
    if max_order is None:
        max_order = default_max_order()
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    rpos = [r for r, ok in enumerate(M.row_trusted) if ok]
    cpos = [c for c, ok in enumerate(M.col_trusted) if ok]
    skipped = len(rpos) < M.n_rows or len(cpos) < M.n_cols
    kmax = min(max_order, len(rpos), len(cpos))
    count = 0
    if kmax >= 1:
        tables = _MinorTables(_sign_matrix(M, rpos, cpos), kmax)
        for k, rows_k, cols_k, table in tables:
            negative = np.flatnonzero(table < 0)
            if negative.size:
                flat = int(negative[0])
                ri, ci = divmod(flat, len(cols_k))
                rows = tuple(M.row_labels[rpos[r]] for r in rows_k[ri])
                cols = tuple(M.col_labels[cpos[c]] for c in cols_k[ci])
                witness = MinorWitness(rows, cols, det_exact(M, rows, cols))
                return TnnReport(NEGATIVE_FOUND, k, witness, count + flat + 1)
            count += table.size
            if k == kmax:
                break
    status = INCONCLUSIVE if skipped else ALL_NONNEGATIVE
    return TnnReport(status, max(kmax, 0), None, count)


@dataclass(frozen=True)
class SectionSchedule:
    """Search budget for :func:`find_negative_minor`.

    Hurwitz sections with rows ``1+o..size+o`` are tried for every size and
    row offset ``o``, with the column anchor sweeping across the coefficient
    support (anchors closest to column 1 first).  Offset 1 starts the section
    on a ``q`` row.
    """

    sizes: tuple = (2, 4, 6, 8, 10, 12)
    max_order: int = 4
    anchor_slack: int = 2
    anchors: Optional[tuple] = field(default=None)
    row_offsets: tuple = (0, 1)


def _support_bounds(p: LaurentWindow, q: LaurentWindow):
    lo, hi = [], []
    for w in (p, q):
        hull = w.nonzero_hull()
        if hull is None:
            continue
        lo.append(w.lo if hull[0] == -math.inf else int(hull[0]))
        hi.append(w.hi if hull[1] == math.inf else int(hull[1]))
    if not lo:
        return None
    return min(lo), max(hi)


def _anchors(size: int, bounds, slack: int):
    half = (size + 1) // 2
    s_lo, s_hi = bounds
    # section exponents are col - i with i in 1..half
    first = s_lo - size + 1 - slack
    last = s_hi + half + slack
    return sorted(range(first, last + 1), key=lambda c: (abs(c - 1), c))


def find_negative_minor(p: LaurentWindow, q: LaurentWindow,
                        search_budget: SectionSchedule = None) -> Optional[MinorWitness]:
    """First negative minor of ``H(p, q)`` found within the budget, else ``None``.

    ``None`` means the budget was exhausted; it is not a certificate of
    total nonnegativity.
    """
    budget = search_budget or SectionSchedule()
    bounds = _support_bounds(p, q)
    if bounds is None:
        return None
    seen = set()
    for size in budget.sizes:
        anchors = budget.anchors if budget.anchors is not None else _anchors(size, bounds, budget.anchor_slack)
        for off in budget.row_offsets:
            for c0 in anchors:
                try:
                    section = hurwitz_section(p, q, range(1 + off, size + 1 + off),
                                              range(c0, c0 + size))
                except OutOfWindow:
                    continue
                key = (section.entries, size)
                if key in seen:
                    continue
                seen.add(key)
                report = check_tnn(section, min(budget.max_order, size))
                if report.status == NEGATIVE_FOUND:
                    return report.witness
    return None
