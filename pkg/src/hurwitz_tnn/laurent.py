"""Exact Laurent-coefficient windows and the Edrei product form.

A :class:`LaurentWindow` is a contiguous block ``[lo, hi]`` of exact
coefficients of a (possibly infinite) Laurent series.  The two exactness
flags record whether everything outside the block is known to vanish; a
window with both flags set is a complete Laurent polynomial.  Coefficients
whose values were produced by a truncated double sum are listed in
``approx`` and are never treated as exact downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyWindow, InvalidSpec, OutOfWindow
from .rational import to_fraction

DEFAULT_TRUNC = 24

_INF = math.inf


@dataclass(frozen=True)
class LaurentWindow:
    lo: int
    hi: int
    coeffs: tuple
    exact_left: bool = False
    exact_right: bool = False
    approx: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        coeffs = tuple(to_fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "approx", frozenset(int(n) for n in self.approx))
        if self.hi < self.lo:
            raise EmptyWindow(f"window [{self.lo}, {self.hi}] is empty")
        if len(coeffs) != self.hi - self.lo + 1:
            raise ValueError(
                f"window [{self.lo}, {self.hi}] needs {self.hi - self.lo + 1} "
                f"coefficients, got {len(coeffs)}"
            )
        if any(n < self.lo or n > self.hi for n in self.approx):
            raise ValueError("approximate exponents must lie inside the window")

    @classmethod
    def polynomial(cls, coeffs: Sequence, lo: int = 0) -> "LaurentWindow":
        """Complete Laurent polynomial ``sum coeffs[i] z^(lo+i)``."""
        coeffs = list(coeffs) or [0]
        return cls(lo, lo + len(coeffs) - 1, tuple(coeffs), True, True)

    @classmethod
    def zero(cls) -> "LaurentWindow":
        return cls.polynomial([0])

    def knows(self, n: int) -> bool:
        if n < self.lo:
            return self.exact_left
        if n > self.hi:
            return self.exact_right
        return True

    def __getitem__(self, n: int) -> Fraction:
        if self.lo <= n <= self.hi:
            return self.coeffs[n - self.lo]
        if self.knows(n):
            return Fraction(0)
        raise OutOfWindow(n)

    def coeff(self, n: int, series: str = "f") -> Fraction:
        """Like indexing, but names the series in the :class:`OutOfWindow` error."""
        try:
            return self[n]
        except OutOfWindow:
            raise OutOfWindow(n, series) from None

    def is_trusted(self, n: int) -> bool:
        return self.knows(n) and n not in self.approx

    @property
    def is_complete(self) -> bool:
        return self.exact_left and self.exact_right

    def is_zero_series(self) -> bool:
        return self.is_complete and not any(self.coeffs) and not self.approx

    def items(self):
        return zip(range(self.lo, self.hi + 1), self.coeffs)

    def nonzero_hull(self):
        """Bounds of the region that may hold nonzero coefficients.

        Unknown tails count as possibly nonzero, so the bounds are
        ``-inf``/``+inf`` on inexact sides.  Returns ``None`` for the zero
        series.
        """
        nz = [n for n, c in self.items() if c != 0 or n in self.approx]
        if self.exact_left:
            left = nz[0] if nz else self.hi + 1
        else:
            left = -_INF
        if self.exact_right:
            right = nz[-1] if nz else self.lo - 1
        else:
            right = _INF
        if left > right:
            return None
        return left, right

    def trimmed(self) -> "LaurentWindow":
        """Drop known-zero padding on exact sides."""
        hull = self.nonzero_hull()
        if hull is None:
            return LaurentWindow.zero()
        lo = self.lo if hull[0] == -_INF else max(self.lo, int(hull[0]))
        hi = self.hi if hull[1] == _INF else min(self.hi, int(hull[1]))
        if lo > hi:
            # only possible when the nonzero part sits outside the stored block
            lo, hi = (self.lo, self.lo) if hull[0] == -_INF else (self.hi, self.hi)
        return self.restrict(lo, hi, keep_flags=True)

    def restrict(self, lo: int, hi: int, keep_flags: bool = False) -> "LaurentWindow":
        """Sub-window ``[lo, hi]``.

        With ``keep_flags`` the exactness flags are kept only if the dropped
        coefficients are zero (used after trimming); otherwise a side stays
        exact only when the new bound reaches past the old one.
        """
        coeffs = tuple(self[n] for n in range(lo, hi + 1))
        dropped_left = [self[n] for n in range(self.lo, lo)]
        dropped_right = [self[n] for n in range(hi + 1, self.hi + 1)]
        exact_left = self.exact_left and not any(dropped_left)
        exact_right = self.exact_right and not any(dropped_right)
        if not keep_flags:
            exact_left = exact_left and lo <= self.lo
            exact_right = exact_right and hi >= self.hi
        approx = frozenset(n for n in self.approx if lo <= n <= hi)
        return LaurentWindow(lo, hi, coeffs, exact_left, exact_right, approx)


@dataclass(frozen=True)
class EdreiSpec:
    """Finite data of the product ``C z^j e^(A z + A0/z) * zeros / poles``.

    ``zeros_pos`` hold the factors ``(1 + z/beta)``, ``zeros_neg`` the
    factors ``(1 + 1/(z beta))``, ``poles_pos`` the factors
    ``(1 - z/delta)^-1`` and ``poles_neg`` the factors ``(1 - 1/(z delta))^-1``.
    """

    C: Fraction = Fraction(1)
    j: int = 0
    A: Fraction = Fraction(0)
    A0: Fraction = Fraction(0)
    zeros_pos: tuple = ()
    zeros_neg: tuple = ()
    poles_pos: tuple = ()
    poles_neg: tuple = ()

    def __post_init__(self):
        for name in ("C", "A", "A0"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if isinstance(self.j, bool) or int(self.j) != self.j:
            raise InvalidSpec(f"j must be an integer, got {self.j!r}")
        object.__setattr__(self, "j", int(self.j))
        for name in ("zeros_pos", "zeros_neg", "poles_pos", "poles_neg"):
            object.__setattr__(
                self, name, tuple(sorted(to_fraction(v) for v in getattr(self, name)))
            )
        self.validate()

    def validate(self):
        for name in ("C", "A", "A0"):
            if getattr(self, name) < 0:
                raise InvalidSpec(f"{name} must be nonnegative")
        for name in ("zeros_pos", "zeros_neg", "poles_pos", "poles_neg"):
            for v in getattr(self, name):
                if v <= 0:
                    raise InvalidSpec(f"{name} entries must be positive, got {v}")

    def times(self, other: "EdreiSpec") -> "EdreiSpec":
        return EdreiSpec(
            C=self.C * other.C,
            j=self.j + other.j,
            A=self.A + other.A,
            A0=self.A0 + other.A0,
            zeros_pos=self.zeros_pos + other.zeros_pos,
            zeros_neg=self.zeros_neg + other.zeros_neg,
            poles_pos=self.poles_pos + other.poles_pos,
            poles_neg=self.poles_neg + other.poles_neg,
        )

    @property
    def right_finite(self) -> bool:
        return not self.poles_pos and self.A == 0

    @property
    def left_finite(self) -> bool:
        return not self.poles_neg and self.A0 == 0


def _check_determined(lo, hi, what="product"):
    if lo > hi:
        raise EmptyWindow(f"{what} has no fully determined coefficient")


def window_mul(a: LaurentWindow, b: LaurentWindow) -> LaurentWindow:
    """Cauchy product restricted to the coefficients the inputs determine.

    A coefficient ``c_n`` is kept only when every term ``a_k b_(n-k)`` is
    either known or multiplied by a known zero.
    """
    ha, hb = a.nonzero_hull(), b.nonzero_hull()
    if ha is None or hb is None:
        return LaurentWindow.zero()
    nl_a, nh_a = ha
    nl_b, nh_b = hb

    lower = []
    upper = []
    if not a.exact_left:
        lower.append(a.lo + nh_b)
    if not b.exact_left:
        lower.append(b.lo + nh_a)
    if not a.exact_right:
        upper.append(a.hi + nl_b)
    if not b.exact_right:
        upper.append(b.hi + nl_a)
    lo = max(lower) if lower else nl_a + nl_b
    hi = min(upper) if upper else nh_a + nh_b
    if lo == -_INF or hi == _INF or lo > hi:
        raise EmptyWindow("product has no fully determined coefficient")
    lo, hi = int(lo), int(hi)

    coeffs = []
    approx = set()
    for n in range(lo, hi + 1):
        kmin = int(max(nl_a, n - nh_b))
        kmax = int(min(nh_a, n - nl_b))
        total = Fraction(0)
        for k in range(kmin, kmax + 1):
            x, y = a[k], b[n - k]
            total += x * y
            if (k in a.approx and (y != 0 or (n - k) in b.approx)) or (
                (n - k) in b.approx and x != 0
            ):
                approx.add(n)
        coeffs.append(total)
    return LaurentWindow(
        lo, hi, tuple(coeffs), not lower, not upper, frozenset(approx)
    )


def window_scale(w: LaurentWindow, c) -> LaurentWindow:
    c = to_fraction(c)
    if c == 0:
        return LaurentWindow.zero()
    return LaurentWindow(
        w.lo, w.hi, tuple(c * x for x in w.coeffs), w.exact_left, w.exact_right, w.approx
    )


def window_add(a: LaurentWindow, b: LaurentWindow) -> LaurentWindow:
    """Coefficient-wise sum on the range where both summands are known."""
    if a.is_zero_series():
        return b
    if b.is_zero_series():
        return a
    exact_left = a.exact_left and b.exact_left
    exact_right = a.exact_right and b.exact_right
    if exact_left:
        lo = min(a.lo, b.lo)
    else:
        lo = max(x.lo for x in (a, b) if not x.exact_left)
    if exact_right:
        hi = max(a.hi, b.hi)
    else:
        hi = min(x.hi for x in (a, b) if not x.exact_right)
    _check_determined(lo, hi, "sum")
    coeffs = tuple(a[n] + b[n] for n in range(lo, hi + 1))
    approx = frozenset(n for n in range(lo, hi + 1) if n in a.approx or n in b.approx)
    return LaurentWindow(lo, hi, coeffs, exact_left, exact_right, approx)


def exp_factor_coeffs(A, A0, lo: int, hi: int, trunc: int = DEFAULT_TRUNC) -> LaurentWindow:
    """Laurent coefficients of ``exp(A z + A0/z)`` on ``[lo, hi]``.

    One-sided cases (``A0 = 0`` or ``A = 0``) are exact.  When both rates are
    positive each coefficient is an infinite sum; it is truncated after
    ``trunc`` terms and every coefficient is marked approximate.
    """
    A, A0 = to_fraction(A), to_fraction(A0)
    if A < 0 or A0 < 0:
        raise InvalidSpec("exponential rates must be nonnegative")
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    if hi < lo:
        raise EmptyWindow(f"window [{lo}, {hi}] is empty")
    exps = range(lo, hi + 1)
    if A0 == 0:
        coeffs = [A**n / math.factorial(n) if n >= 0 else Fraction(0) for n in exps]
        return LaurentWindow(lo, hi, tuple(coeffs), lo <= 0, A == 0 and hi >= 0)
    if A == 0:
        coeffs = [A0 ** (-n) / math.factorial(-n) if n <= 0 else Fraction(0) for n in exps]
        return LaurentWindow(lo, hi, tuple(coeffs), False, hi >= 0)
    coeffs = []
    for n in exps:
        total = Fraction(0)
        for k in range(max(0, -n), trunc + 1):
            total += Fraction(A ** (n + k) * A0**k, math.factorial(n + k) * math.factorial(k))
        coeffs.append(total)
    return LaurentWindow(lo, hi, tuple(coeffs), False, False, frozenset(exps))


def _truncated_mul(x: list, y: list, n_max: int) -> list:
    out = [Fraction(0)] * (n_max + 1)
    for i, xi in enumerate(x[: n_max + 1]):
        if xi == 0:
            continue
        for k, yk in enumerate(y[: n_max + 1 - i]):
            out[i + k] += xi * yk
    return out


def _one_sided(zeros: Iterable, poles: Iterable, rate: Fraction, n_max: int):
    """Power-series coefficients 0..n_max of one side of the product.

    Returns ``(coeffs, degree)``; ``degree`` is ``None`` for infinite series.
    """
    poly = [Fraction(1)]
    for beta in zeros:
        nxt = poly + [Fraction(0)]
        for i, c in enumerate(poly):
            nxt[i + 1] += c / beta
        poly = nxt
    poles = list(poles)
    if not poles and rate == 0:
        return poly, len(poly) - 1
    series = (poly + [Fraction(0)] * (n_max + 1))[: n_max + 1]
    for delta in poles:
        geometric = [Fraction(1, 1) / delta**n for n in range(n_max + 1)]
        series = _truncated_mul(series, geometric, n_max)
    if rate != 0:
        series = _truncated_mul(series, list(exp_factor_coeffs(rate, 0, 0, n_max).coeffs), n_max)
    return series, None


def edrei_coeffs(spec: EdreiSpec, lo: int, hi: int, trunc: int = DEFAULT_TRUNC) -> LaurentWindow:
    """Coefficient window ``[lo, hi]`` of the Edrei-form function ``spec``.

    The function is split as ``C z^j R(z) L(1/z)`` with ``R``, ``L`` power
    series.  When at least one side is a polynomial every coefficient is a
    finite exact sum and the number of geometric/exponential terms follows
    from the window.  When both sides are infinite the inner sum is cut after
    ``trunc`` terms and the window is marked approximate.
    """
    spec.validate()
    if hi < lo:
        raise EmptyWindow(f"window [{lo}, {hi}] is empty")
    exps = range(lo, hi + 1)
    if spec.C == 0:
        return LaurentWindow(lo, hi, (0,) * len(exps), True, True)

    j = spec.j
    m_lo, m_hi = lo - j, hi - j
    approx = frozenset()
    if spec.left_finite:
        left, d_left = _one_sided(spec.zeros_neg, (), Fraction(0), 0)
        right, d_right = _one_sided(
            spec.zeros_pos, spec.poles_pos, spec.A, max(0, m_hi + d_left)
        )
        k_ranges = [range(max(0, -m), d_left + 1) for m in range(m_lo, m_hi + 1)]
    elif spec.right_finite:
        right, d_right = _one_sided(spec.zeros_pos, (), Fraction(0), 0)
        left, d_left = _one_sided(
            spec.zeros_neg, spec.poles_neg, spec.A0, max(0, d_right - m_lo)
        )
        k_ranges = [range(max(0, -m), d_right - m + 1) for m in range(m_lo, m_hi + 1)]
    else:
        n_right = max(m_hi, 0) + trunc
        n_left = max(-m_lo, 0) + trunc
        right, d_right = _one_sided(spec.zeros_pos, spec.poles_pos, spec.A, n_right)
        left, d_left = _one_sided(spec.zeros_neg, spec.poles_neg, spec.A0, n_left)
        k_ranges = [range(max(0, -m), max(0, -m) + trunc + 1) for m in range(m_lo, m_hi + 1)]
        approx = frozenset(exps)

    coeffs = []
    for m, ks in zip(range(m_lo, m_hi + 1), k_ranges):
        total = Fraction(0)
        for k in ks:
            i = m + k
            if 0 <= i < len(right) and k < len(left):
                total += right[i] * left[k]
        coeffs.append(spec.C * total)

    exact_left = d_left is not None and lo <= j - d_left
    exact_right = d_right is not None and hi >= j + d_right
    return LaurentWindow(lo, hi, tuple(coeffs), exact_left, exact_right, approx)


def reverse_series(w: LaurentWindow) -> LaurentWindow:
    """Window of ``f(1/z)``: the coefficient at ``n`` moves to ``-n``."""
    return LaurentWindow(
        -w.hi,
        -w.lo,
        tuple(reversed(w.coeffs)),
        w.exact_right,
        w.exact_left,
        frozenset(-n for n in w.approx),
    )


def shift_mul_z(w: LaurentWindow, k: int, c=1) -> LaurentWindow:
    """Window of ``c * z^k * f(z)``."""
    c = to_fraction(c)
    if c == 0:
        return LaurentWindow.zero()
    return LaurentWindow(
        w.lo + k,
        w.hi + k,
        tuple(c * x for x in w.coeffs),
        w.exact_left,
        w.exact_right,
        frozenset(n + k for n in w.approx),
    )
