"""Series and matrix transforms that preserve total nonnegativity.

Every function returns new objects; inputs are never modified.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .errors import InvalidSpec, ShapeMismatch
from .laurent import (
    LaurentWindow,
    reverse_series,
    shift_mul_z,
    window_add,
    window_mul,
    window_scale,
)
from .matrices import (
    MatrixSection,
    hurwitz_section,
    matmul,
    selector_section,
    toeplitz_section,
)
from .rational import to_fraction

TRANSFORM_NAMES = ("remove_pole_right", "remove_pole_left", "whitney", "reversal", "shift", "combine")


@dataclass(frozen=True)
class TransformTrace:
    name: str
    inputs: tuple
    outputs: tuple
    identity_checked: bool = False

    def __post_init__(self):
        if self.name not in TRANSFORM_NAMES:
            raise ValueError(f"unknown transform {self.name!r}")


def _positive(value, what):
    value = to_fraction(value)
    if value <= 0:
        raise InvalidSpec(f"{what} must be positive")
    return value


def remove_pole_right(p: LaurentWindow, q: LaurentWindow, R) -> tuple:
    """Multiply both series by ``1 - z/R``.

    The coefficient at ``m + 1`` becomes ``a_(m+1) - a_m / R``.
    """
    R = _positive(R, "R")
    factor = LaurentWindow.polynomial([1, -1 / R])
    return window_mul(factor, p), window_mul(factor, q)


def remove_pole_left(p: LaurentWindow, q: LaurentWindow, r) -> tuple:
    """Multiply both series by ``1 - r/z``; the coefficient at ``k`` becomes
    ``a_k - r a_(k+1)``."""
    r = _positive(r, "r")
    factor = LaurentWindow.polynomial([-r, 1], lo=-1)
    return window_mul(factor, p), window_mul(factor, q)


def strip_common_poles(p: LaurentWindow, q: LaurentWindow,
                       poles_right: Sequence = (), poles_left: Sequence = ()) -> tuple:
    """Apply :func:`remove_pole_right` for every ``R`` and
    :func:`remove_pole_left` for every ``r`` given."""
    for R in poles_right:
        p, q = remove_pole_right(p, q, R)
    for r in poles_left:
        p, q = remove_pole_left(p, q, r)
    return p, q


def geometric_window(R, length: int) -> LaurentWindow:
    """Right-infinite window of ``1/(1 - z/R)`` on ``[0, length - 1]``."""
    R = _positive(R, "R")
    return LaurentWindow(0, length - 1, tuple(R ** -k for k in range(length)), True, False)


def whitney_reduce(M: MatrixSection, j: int) -> MatrixSection:
    """Drop the leading column of ones/zeros and difference rows ``2..j``.

    ``M`` must have ones in rows ``1..j`` of its first column and zeros
    below.  The result keeps every row and loses the first column, so the
    two matrices are totally nonnegative together.
    """
    if not 1 <= j <= M.n_rows:
        raise ShapeMismatch(f"j must lie in 1..{M.n_rows}")
    if M.n_cols < 2:
        raise ShapeMismatch("need at least two columns")
    first = [M.at(r, 0) for r in range(M.n_rows)]
    if first[:j] != [1] * j or any(first[j:]):
        raise ShapeMismatch("first column must be ones in rows 1..j and zeros below")
    n = M.n_cols
    rows, trusted = [], []
    for r in range(M.n_rows):
        for c in range(1, n):
            if 1 <= r < j:
                rows.append(M.at(r, c) - M.at(r - 1, c))
                trusted.append(M.entry_trusted[r * n + c] and M.entry_trusted[(r - 1) * n + c])
            else:
                rows.append(M.at(r, c))
                trusted.append(M.entry_trusted[r * n + c])
    return MatrixSection(M.n_rows, n - 1, tuple(rows), M.row_labels, M.col_labels[1:],
                         (), tuple(trusted))


def pole_column_reduce(M: MatrixSection, R) -> MatrixSection:
    """Column step used to peel a pole at ``R`` off a section.

    ``M``'s first row must be ``1, 1/R, 1/R^2, ...``.  Returns the matrix with
    column ``k`` replaced by ``col_k - col_(k-1)/R`` (so the first row becomes
    ``1, 0, 0, ...``), computed as a row reduction of the transpose after
    scaling its rows to put ones in the leading column.
    """
    R = _positive(R, "R")
    if [M.at(0, c) for c in range(M.n_cols)] != [R ** -c for c in range(M.n_cols)]:
        raise ShapeMismatch("first row must be the powers of 1/R")
    scaled = [[x * R ** c for x in row] for c, row in enumerate(M.transpose().rows())]
    reduced = whitney_reduce(MatrixSection.from_rows(scaled), M.n_cols)
    body = [[x / R ** c for x in row] for c, row in enumerate(reduced.rows())]
    # body is the transpose of rows 2..m of the result
    out = [[Fraction(1)] + [Fraction(0)] * (M.n_cols - 1)]
    out += [[body[c][r] for c in range(M.n_cols)] for r in range(M.n_rows - 1)]
    return MatrixSection.from_rows(out, M.row_labels, M.col_labels)


def combine(A, B, p: LaurentWindow, q: LaurentWindow) -> tuple:
    """``(A p + B q, A q + B z p)``."""
    A, B = to_fraction(A), to_fraction(B)
    if A < 0 or B < 0:
        raise InvalidSpec("A and B must be nonnegative")
    first = window_add(window_scale(p, A), window_scale(q, B))
    second = window_add(window_scale(q, A), shift_mul_z(p, 1, B))
    return first, second


def _selector_product(A, B, p, q, size, col_start, row_shift, names):
    sel = selector_section(A, B, size, 2 * size)
    rows = range(1 + row_shift, 2 * size + 1 + row_shift)
    H = hurwitz_section(p, q, rows, range(col_start, col_start + size), names)
    if row_shift:
        # relabel so the product goes through; the entries stay mis-anchored
        H = replace(H, row_labels=tuple(range(1, 2 * size + 1)))
    return matmul(sel, H)


def cauchy_binet_check(A, B, p: LaurentWindow, q: LaurentWindow, size: int,
                       col_start: int = 1, hurwitz_row_shift: int = 0) -> bool:
    """Entry-exact check of ``T(Ap+Bq) = Ht(A,B) H(p,q)`` and of
    ``T(Aq+Bzp) = Ht(A,B) H(q,zp)`` on ``size x size`` sections.

    ``hurwitz_row_shift`` cuts the Hurwitz sections off-anchor; any nonzero
    shift should make the check fail for generic data.
    """
    if size < 1:
        raise ShapeMismatch("size must be positive")
    f, g = combine(A, B, p, q)
    rows, cols = range(1, size + 1), range(col_start, col_start + size)
    zp = shift_mul_z(p, 1)
    lhs1 = toeplitz_section(f, rows, cols, "Ap+Bq")
    rhs1 = _selector_product(A, B, p, q, size, col_start, hurwitz_row_shift, ("p", "q"))
    lhs2 = toeplitz_section(g, rows, cols, "Aq+Bzp")
    rhs2 = _selector_product(A, B, q, zp, size, col_start, hurwitz_row_shift, ("q", "zp"))
    return lhs1.entries == rhs1.entries and lhs2.entries == rhs2.entries


def reversal_pair(p: LaurentWindow, q: LaurentWindow) -> tuple:
    """``(q(1/z), p(1/z))``: ``H`` of this pair is ``H(p, q)`` read backwards."""
    return reverse_series(q), reverse_series(p)


def reversal_section(p: LaurentWindow, q: LaurentWindow, rows: Sequence[int],
                     cols: Sequence[int], c: int = 0) -> MatrixSection:
    """Section of ``H(q(1/z), p(1/z))`` matching ``H(p, q)[rows, cols]`` in
    opposite order: its row ``r`` is the original row ``2c - 1 - r`` and its
    column ``j`` is the original column ``c - j``."""
    rq, rp = reversal_pair(p, q)
    new_rows = sorted(2 * c - 1 - r for r in rows)
    new_cols = sorted(c - j for j in cols)
    return hurwitz_section(rq, rp, new_rows, new_cols, ("q_rev", "p_rev"))


def check_reversal_duality(p, q, rows, cols, c: int = 0) -> bool:
    original = hurwitz_section(p, q, rows, cols)
    mirrored = reversal_section(p, q, rows, cols, c)
    flipped = original.reversed_order()
    shifted_rows = tuple(r + 2 * c for r in flipped.row_labels)
    shifted_cols = tuple(j + c for j in flipped.col_labels)
    return (mirrored.entries == flipped.entries and mirrored.row_labels == shifted_rows
            and mirrored.col_labels == shifted_cols)


def shift_pair(p: LaurentWindow, q: LaurentWindow) -> tuple:
    """``(q, z p)``: ``H`` of this pair is ``H(p, q)`` with its rows moved up by one."""
    return q, shift_mul_z(p, 1)


def check_shift_duality(p, q, rows, cols) -> bool:
    sq, sp = shift_pair(p, q)
    shifted = hurwitz_section(sq, sp, rows, cols, ("q", "zp"))
    original = hurwitz_section(p, q, [r + 1 for r in rows], cols)
    return shifted.entries == original.entries


def traced(name: str, *args) -> tuple:
    """Run a transform and verify its defining identity.

    Returns ``(result, TransformTrace)``; ``identity_checked`` is set only
    when the identity held exactly.
    """
    if name == "remove_pole_right":
        p, q, R = args
        out = remove_pole_right(p, q, R)
        ok = all(_recovers(o, w, geometric_window(R, o.hi - o.lo + 2), o.lo) for o, w in zip(out, (p, q)))
    elif name == "remove_pole_left":
        p, q, r = args
        out = remove_pole_left(p, q, r)
        ok = all(_recovers(reverse_series(o), reverse_series(w),
                           geometric_window(1 / to_fraction(r), o.hi - o.lo + 2), -o.hi)
                 for o, w in zip(out, (p, q)))
    elif name == "combine":
        A, B, p, q, size = args
        out = combine(A, B, p, q)
        ok = cauchy_binet_check(A, B, p, q, size)
    elif name == "whitney":
        M, j = args
        out = whitney_reduce(M, j)
        ok = out.n_rows == M.n_rows and out.n_cols == M.n_cols - 1
    elif name == "reversal":
        p, q, rows, cols = args
        out = reversal_pair(p, q)
        ok = check_reversal_duality(p, q, rows, cols)
    elif name == "shift":
        p, q, rows, cols = args
        out = shift_pair(p, q)
        ok = check_shift_duality(p, q, rows, cols)
    else:
        raise ValueError(f"unknown transform {name!r}")
    return out, TransformTrace(name, args, out if isinstance(out, tuple) else (out,), bool(ok))


def _recovers(reduced: LaurentWindow, original: LaurentWindow, geo: LaurentWindow, start: int) -> bool:
    """Does ``reduced * geometric`` reproduce ``original`` where both are known?"""
    if reduced.is_zero_series():
        return original.is_zero_series() or not any(original.coeffs)
    if not reduced.exact_left:
        return True  # nothing anchors the geometric tail; vacuous on finite data
    back = window_mul(reduced, geo)
    return all(back[n] == original[n] for n in range(max(back.lo, start), back.hi + 1)
               if original.knows(n))
