"""Finite sections of the infinite Toeplitz and Hurwitz-type matrices.

Index conventions: rows and columns carry the labels of the infinite matrix
they were cut from.  ``T(f)[i, j] = f_(j-i)``; in ``H(p, q)`` row ``2i-1``
holds ``a_(j-i)`` and row ``2i`` holds ``b_(j-i)``, so row 1 is the
``a_0 a_1 ...`` row when column 1 is the leftmost one.  The selector
``Ht(A, B)`` has ``A`` at ``(i, 2i-1)`` and ``B`` at ``(i, 2i)``, hence
``Ht(A, B) @ H(p, q) = T(A p + B q)`` row for row: selector row ``i`` picks
Hurwitz rows ``2i-1`` and ``2i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ShapeMismatch
from .laurent import LaurentWindow
from .rational import to_fraction


@dataclass(frozen=True)
class MatrixSection:
    n_rows: int
    n_cols: int
    entries: tuple
    row_labels: tuple
    col_labels: tuple
    provenance: tuple = ()
    entry_trusted: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(to_fraction(x) for x in self.entries))
        object.__setattr__(self, "row_labels", tuple(int(r) for r in self.row_labels))
        object.__setattr__(self, "col_labels", tuple(int(c) for c in self.col_labels))
        size = self.n_rows * self.n_cols
        if self.n_rows < 1 or self.n_cols < 1:
            raise ShapeMismatch("sections need at least one row and one column")
        if len(self.entries) != size:
            raise ShapeMismatch(f"expected {size} entries, got {len(self.entries)}")
        if len(self.row_labels) != self.n_rows or len(self.col_labels) != self.n_cols:
            raise ShapeMismatch("label lists do not match the shape")
        if not self.provenance:
            object.__setattr__(self, "provenance", (None,) * size)
        if not self.entry_trusted:
            object.__setattr__(self, "entry_trusted", (True,) * size)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], row_labels=None, col_labels=None):
        rows = [list(r) for r in rows]
        n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(
            n_rows,
            n_cols,
            tuple(x for r in rows for x in r),
            tuple(row_labels or range(1, n_rows + 1)),
            tuple(col_labels or range(1, n_cols + 1)),
        )

    def at(self, r: int, c: int) -> Fraction:
        """Entry at row position ``r``, column position ``c`` (0-based)."""
        return self.entries[r * self.n_cols + c]

    def entry(self, row_label: int, col_label: int) -> Fraction:
        return self.at(self.row_labels.index(row_label), self.col_labels.index(col_label))

    def rows(self) -> list:
        n = self.n_cols
        return [list(self.entries[r * n:(r + 1) * n]) for r in range(self.n_rows)]

    @property
    def row_trusted(self) -> tuple:
        n = self.n_cols
        return tuple(all(self.entry_trusted[r * n:(r + 1) * n]) for r in range(self.n_rows))

    @property
    def col_trusted(self) -> tuple:
        n = self.n_cols
        return tuple(all(self.entry_trusted[c::n]) for c in range(n))

    def position(self, rows: Sequence[int], cols: Sequence[int]):
        """Map label lists to 0-based positions."""
        try:
            return [self.row_labels.index(r) for r in rows], [self.col_labels.index(c) for c in cols]
        except ValueError as exc:
            raise ShapeMismatch(f"label not present in section: {exc}") from None

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixSection":
        rpos, cpos = self.position(rows, cols)
        n = self.n_cols
        idx = [r * n + c for r in rpos for c in cpos]
        return MatrixSection(
            len(rpos),
            len(cpos),
            tuple(self.entries[i] for i in idx),
            tuple(rows),
            tuple(cols),
            tuple(self.provenance[i] for i in idx),
            tuple(self.entry_trusted[i] for i in idx),
        )

    def transpose(self) -> "MatrixSection":
        n, m = self.n_rows, self.n_cols
        idx = [r * m + c for c in range(m) for r in range(n)]
        return MatrixSection(
            m,
            n,
            tuple(self.entries[i] for i in idx),
            self.col_labels,
            self.row_labels,
            tuple(self.provenance[i] for i in idx),
            tuple(self.entry_trusted[i] for i in idx),
        )

    def reversed_order(self) -> "MatrixSection":
        """Rows and columns permuted in the opposite order.

        Row label ``r`` becomes ``-1 - r`` and column label ``j`` becomes
        ``-j``, so labels stay increasing and match the section of
        ``H(q(1/z), p(1/z))`` the reversed matrix is equal to.
        """
        n = self.n_cols
        idx = [r * n + c for r in reversed(range(self.n_rows)) for c in reversed(range(n))]
        return MatrixSection(
            self.n_rows,
            self.n_cols,
            tuple(self.entries[i] for i in idx),
            tuple(-1 - r for r in reversed(self.row_labels)),
            tuple(-j for j in reversed(self.col_labels)),
            tuple(self.provenance[i] for i in idx),
            tuple(self.entry_trusted[i] for i in idx),
        )


def toeplitz_section(f: LaurentWindow, row_indices, col_indices, series: str = "f") -> MatrixSection:
    rows, cols = list(row_indices), list(col_indices)
    entries, prov, trusted = [], [], []
    for i in rows:
        for j in cols:
            n = j - i
            entries.append(f.coeff(n, series))
            prov.append((series, n))
            trusted.append(f.is_trusted(n))
    return MatrixSection(len(rows), len(cols), tuple(entries), tuple(rows), tuple(cols),
                         tuple(prov), tuple(trusted))


def hurwitz_row_source(r: int):
    """For Hurwitz row label ``r`` return ``(which, i)``: ``which`` is 0 for
    the ``p`` rows (``r = 2i-1``) and 1 for the ``q`` rows (``r = 2i``)."""
    if r % 2:
        return 0, (r + 1) // 2
    return 1, r // 2


def hurwitz_section(p: LaurentWindow, q: LaurentWindow, row_indices, col_indices,
                    names=("p", "q")) -> MatrixSection:
    rows, cols = list(row_indices), list(col_indices)
    entries, prov, trusted = [], [], []
    for r in rows:
        which, i = hurwitz_row_source(r)
        w, name = (p, names[0]) if which == 0 else (q, names[1])
        for j in cols:
            n = j - i
            entries.append(w.coeff(n, name))
            prov.append((name, n))
            trusted.append(w.is_trusted(n))
    return MatrixSection(len(rows), len(cols), tuple(entries), tuple(rows), tuple(cols),
                         tuple(prov), tuple(trusted))


def selector_section(A, B, n_rows: int, n_cols: int, row_start: int = 1,
                     col_start: int = 1) -> MatrixSection:
    A, B = to_fraction(A), to_fraction(B)
    if A < 0 or B < 0:
        raise ValueError("selector weights must be nonnegative")
    rows = range(row_start, row_start + n_rows)
    cols = range(col_start, col_start + n_cols)
    entries, prov = [], []
    for i in rows:
        for j in cols:
            if j == 2 * i - 1:
                entries.append(A)
                prov.append(("A", 0))
            elif j == 2 * i:
                entries.append(B)
                prov.append(("B", 0))
            else:
                entries.append(Fraction(0))
                prov.append(("zero", 0))
    return MatrixSection(n_rows, n_cols, tuple(entries), tuple(rows), tuple(cols), tuple(prov))


def matmul(a: MatrixSection, b: MatrixSection) -> MatrixSection:
    """Exact product; the inner labels must agree so that sections compose
    the way the infinite matrices do."""
    if a.col_labels != b.row_labels:
        raise ShapeMismatch("inner labels of the factors differ")
    ar, br = a.rows(), b.rows()
    entries, trusted = [], []
    for r in range(a.n_rows):
        for c in range(b.n_cols):
            entries.append(sum((ar[r][k] * br[k][c] for k in range(a.n_cols)), Fraction(0)))
            trusted.append(
                all(a.entry_trusted[r * a.n_cols + k] and b.entry_trusted[k * b.n_cols + c]
                    for k in range(a.n_cols))
            )
    return MatrixSection(a.n_rows, b.n_cols, tuple(entries), a.row_labels, b.col_labels,
                         (), tuple(trusted))
