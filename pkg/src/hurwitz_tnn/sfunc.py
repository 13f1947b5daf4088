"""S-functions given by interlacing zeros and poles.

Three shapes are representable:

* ``doubly_infinite``: ``C * prod (1 + z/beta)/(1 + z/alpha)`` over the
  positive indices times ``prod (1 + 1/(z beta))/(1 + 1/(z alpha))`` over the
  negative ones.  ``alphas_neg[0]`` is ``alpha_(-1)``, ``alphas_neg[1]`` is
  ``alpha_(-2)`` and so on.
* ``meromorphic``: ``C * (z + beta0)/(z + alpha0) * prod (1 + z/beta)/(1 + z/alpha)``;
  either of ``beta0``/``alpha0`` may be absent.
* ``affine``: ``C`` (``beta0`` is ``None``) or ``C * (z + beta0)``.

Lists keep index order; they are not re-sorted, so an out-of-order list is
reported by :func:`validate_interlacing` instead of being silently repaired.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DegenerateSpec, InvalidSpec, PoleHit
from .laurent import EdreiSpec
from .rational import to_fraction
from .rng import SplitMix64

DOUBLY_INFINITE = "doubly_infinite"
MEROMORPHIC = "meromorphic"
AFFINE = "affine"
KINDS = (DOUBLY_INFINITE, MEROMORPHIC, AFFINE)


def _opt(value):
    return None if value is None else to_fraction(value)


@dataclass(frozen=True)
class SFunctionSpec:
    kind: str
    C: Fraction = Fraction(1)
    alphas_pos: tuple = ()
    betas_pos: tuple = ()
    alphas_neg: tuple = ()
    betas_neg: tuple = ()
    alpha0: Optional[Fraction] = None
    beta0: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "C", to_fraction(self.C))
        if self.C < 0:
            raise InvalidSpec("C must be nonnegative")
        for name in ("alphas_pos", "betas_pos", "alphas_neg", "betas_neg"):
            values = tuple(to_fraction(v) for v in getattr(self, name))
            if any(v == 0 for v in values):
                raise InvalidSpec(f"{name} entries must be nonzero")
            object.__setattr__(self, name, values)
        object.__setattr__(self, "alpha0", _opt(self.alpha0))
        object.__setattr__(self, "beta0", _opt(self.beta0))
        if self.kind != DOUBLY_INFINITE and (self.alphas_neg or self.betas_neg):
            raise InvalidSpec("negative-index lists belong to the doubly_infinite kind")
        if self.kind == DOUBLY_INFINITE and (self.alpha0 is not None or self.beta0 is not None):
            raise InvalidSpec("alpha0/beta0 belong to the meromorphic and affine kinds")
        if self.kind == AFFINE and (self.alphas_pos or self.betas_pos or self.alpha0 is not None):
            raise InvalidSpec("the affine kind stores only C and beta0")

    @classmethod
    def constant(cls, C) -> "SFunctionSpec":
        return cls(AFFINE, C=C)


@dataclass(frozen=True)
class ChainViolation:
    left: str
    left_value: Fraction
    right: str
    right_value: Optional[Fraction]
    reason: str


@dataclass(frozen=True)
class NotSForm:
    reason: str
    detail: str = ""
    violation: Optional[ChainViolation] = None


@dataclass(frozen=True)
class PartialFractions:
    """``constant + linear*z + sum A * z/(z - pole)``.

    ``linear`` is nonzero only for functions growing like ``z`` at infinity
    (the meromorphic ``beta0 = 0`` shape with one more zero than poles).
    """

    constant: Fraction
    terms: tuple = ()
    linear: Fraction = Fraction(0)

    def evaluate(self, z):
        total = self.constant + self.linear * z
        for pole, A in self.terms:
            total = total + A * z / (z - pole)
        return total


# -- factor model ------------------------------------------------------------
# ("pos", v): 1 + z/v   ("inv", v): 1 + 1/(z v)   ("lin", v): z + v

def _factors(spec: SFunctionSpec):
    num, den = [], []
    if spec.kind == AFFINE:
        if spec.beta0 is not None:
            num.append(("lin", spec.beta0))
        return num, den
    if spec.beta0 is not None:
        num.append(("lin", spec.beta0))
    if spec.alpha0 is not None:
        den.append(("lin", spec.alpha0))
    num += [("pos", v) for v in spec.betas_pos] + [("inv", v) for v in spec.betas_neg]
    den += [("pos", v) for v in spec.alphas_pos] + [("inv", v) for v in spec.alphas_neg]
    return num, den


def _factor_root(kind, v) -> Fraction:
    return -v if kind in ("pos", "lin") else -1 / v


def _eval_factor(kind, v, z):
    if kind == "pos":
        return 1 + z / v
    if kind == "inv":
        return 1 + 1 / (z * v)
    return z + v


def _eval_factor_derivative(kind, v, z):
    if kind == "pos":
        return Fraction(1) / v
    if kind == "inv":
        return -1 / (z * z * v)
    return Fraction(1)


# -- chain validation --------------------------------------------------------

def _chain(spec: SFunctionSpec):
    """Labelled chain in the order it must increase, plus the lower bound."""
    if spec.kind == AFFINE:
        return []
    items = []
    if spec.kind == MEROMORPHIC:
        if spec.beta0 is not None:
            items.append(("beta0", "b", spec.beta0))
        if spec.alpha0 is not None:
            items.append(("alpha0", "a", spec.alpha0))
    else:
        depth = max(len(spec.alphas_neg), len(spec.betas_neg))
        for idx in reversed(range(depth)):
            if idx < len(spec.betas_neg):
                items.append((f"beta-{idx + 1}^-1", "b", 1 / spec.betas_neg[idx]))
            if idx < len(spec.alphas_neg):
                items.append((f"alpha-{idx + 1}^-1", "a", 1 / spec.alphas_neg[idx]))
    depth = max(len(spec.alphas_pos), len(spec.betas_pos))
    for idx in range(depth):
        if idx < len(spec.betas_pos):
            items.append((f"beta{idx + 1}", "b", spec.betas_pos[idx]))
        if idx < len(spec.alphas_pos):
            items.append((f"alpha{idx + 1}", "a", spec.alphas_pos[idx]))
    return items


def validate_interlacing(spec: SFunctionSpec) -> Optional[ChainViolation]:
    """``None`` when the chain holds strictly, else the first offending pair."""
    if spec.kind == AFFINE:
        if spec.beta0 is not None and spec.beta0 < 0:
            return ChainViolation("0", Fraction(0), "beta0", spec.beta0, "beta0 must be >= 0")
        return None
    if spec.kind == DOUBLY_INFINITE and spec.C == 0:
        return ChainViolation("0", Fraction(0), "C", spec.C, "C must be > 0")
    if spec.kind == MEROMORPHIC and spec.alpha0 is not None and spec.beta0 is None:
        return ChainViolation("alpha0", spec.alpha0, "beta0", None, "alpha0 requires beta0")
    if spec.kind == DOUBLY_INFINITE and len(spec.betas_neg) > len(spec.alphas_neg):
        # the left end would leave an uncancelled pole at the origin
        n = len(spec.alphas_neg) + 1
        return ChainViolation(f"beta-{n}^-1", 1 / spec.betas_neg[n - 1], f"alpha-{n}^-1", None,
                              "missing alpha on the negative side")
    items = _chain(spec)
    if not items:
        return None
    label, _, value = items[0]
    if label == "beta0":
        if value < 0:
            return ChainViolation("0", Fraction(0), label, value, "beta0 must be >= 0")
    elif value <= 0:
        return ChainViolation("0", Fraction(0), label, value, "entries must be > 0")
    for (l1, t1, v1), (l2, t2, v2) in zip(items, items[1:]):
        if t1 == t2:
            return ChainViolation(l1, v1, l2, v2, "zeros and poles do not alternate")
        if v2 <= v1:
            return ChainViolation(l1, v1, l2, v2, "not strictly increasing")
    # the positive side must open with a zero unless the origin supplies it
    first_pos = next((it for it in items if not it[0].startswith(("beta-", "alpha-"))), None)
    if spec.kind == MEROMORPHIC and items[0][1] == "a":
        return ChainViolation("0", Fraction(0), items[0][0], items[0][2],
                              "the chain must start with a zero")
    if spec.kind == DOUBLY_INFINITE and first_pos is not None and not (spec.alphas_neg or spec.betas_neg):
        if first_pos[1] == "a":
            return ChainViolation("0", Fraction(0), first_pos[0], first_pos[2],
                                  "the chain must start with a zero")
    return None


# -- canonical rational form -------------------------------------------------

@dataclass(frozen=True)
class RationalForm:
    """``K z^d prod (z + y) / prod (z + x)`` with ``y, x > 0`` sorted."""

    K: Fraction
    d: int
    zeros: tuple
    poles: tuple


def _rational_form(C, num, den) -> RationalForm:
    K, d = Fraction(C), 0
    zeros, poles = Counter(), Counter()
    for kind, v in num:
        if kind == "pos":
            K /= v
            zeros[v] += 1
        elif kind == "inv":
            d -= 1
            zeros[1 / v] += 1
        elif v == 0:
            d += 1
        else:
            zeros[v] += 1
    for kind, v in den:
        if kind == "pos":
            K *= v
            poles[v] += 1
        elif kind == "inv":
            d += 1
            poles[1 / v] += 1
        elif v == 0:
            d -= 1
        else:
            poles[v] += 1
    common = zeros & poles
    zeros -= common
    poles -= common
    return RationalForm(K, d, tuple(sorted(zeros.elements())), tuple(sorted(poles.elements())))


def to_rational_form(spec: SFunctionSpec) -> RationalForm:
    num, den = _factors(spec)
    return _rational_form(spec.C, num, den)


def _prod(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def from_rational_form(form: RationalForm) -> SFunctionSpec:
    """The canonical spec of a rational form.

    Raises :class:`DegenerateSpec` when the power of ``z`` is not 0 or 1.
    """
    K, d, Y, X = form.K, form.d, list(form.zeros), list(form.poles)
    if K == 0:
        return SFunctionSpec(AFFINE, C=0)
    if d not in (0, 1):
        raise DegenerateSpec(f"z^{d} has no S-function form")
    if not X and d + len(Y) <= 1:
        if d == 0 and not Y:
            return SFunctionSpec(AFFINE, C=K)
        return SFunctionSpec(AFFINE, C=K, beta0=Fraction(0) if d else Y[0])
    if d == 1:
        alpha0 = X[0] if X else None
        return SFunctionSpec(MEROMORPHIC, C=K * _prod(Y) / _prod(X[1:]), betas_pos=Y,
                             alphas_pos=X[1:], beta0=Fraction(0), alpha0=alpha0)
    return SFunctionSpec(MEROMORPHIC, C=K * _prod(Y) / _prod(X), betas_pos=Y, alphas_pos=X)


def normalize(spec: SFunctionSpec) -> SFunctionSpec:
    """Canonical representative; two specs describe the same function iff
    their normalizations are equal."""
    return from_rational_form(to_rational_form(spec))


# -- evaluation --------------------------------------------------------------

@dataclass(frozen=True)
class GaussianRational:
    """Exact complex rational ``re + i*im``."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def lift(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(Fraction(x), Fraction(0))

    def __add__(self, other):
        o = GaussianRational.lift(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.lift(other))

    def __rsub__(self, other):
        return GaussianRational.lift(other) - self

    def __mul__(self, other):
        o = GaussianRational.lift(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.lift(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return GaussianRational((self.re * o.re + self.im * o.im) / norm,
                                (self.im * o.re - self.re * o.im) / norm)

    def __rtruediv__(self, other):
        return GaussianRational.lift(other) / self

    def __eq__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            o = GaussianRational.lift(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _is_zero(z) -> bool:
    return z == 0


def evaluate_exact(spec: SFunctionSpec, z):
    """Exact value of the product form at a rational or Gaussian-rational ``z``."""
    num, den = _factors(spec)
    if _is_zero(z) and any(k == "inv" for k, _ in num + den):
        raise PoleHit("z = 0 is an essential point of the negative-index factors")
    value = spec.C
    for kind, v in num:
        value = value * _eval_factor(kind, v, z)
    for kind, v in den:
        f = _eval_factor(kind, v, z)
        if f == 0:
            raise PoleHit(f"z = {_factor_root(kind, v)} is a pole")
        value = value / f
    return value


def evaluate(spec: SFunctionSpec, z) -> complex:
    """Floating-point value of the product form.

    ``z`` is a ``(re, im)`` pair of rationals or a Python complex.  Pole
    detection is exact for rational input.  Each factor is computed in double
    precision, so the relative error is at most a few ulps per factor.
    """
    if isinstance(z, tuple):
        exact = GaussianRational(to_fraction(z[0]), to_fraction(z[1]))
        zf = complex(exact)
    else:
        exact, zf = None, complex(z)
    num, den = _factors(spec)
    if zf == 0:
        raise PoleHit("z must be nonzero")
    for kind, v in den:
        root = _factor_root(kind, v)
        hit = (exact == root) if exact is not None else (zf == complex(float(root)))
        if hit:
            raise PoleHit(f"z = {root} is a pole")
    value = complex(float(spec.C))
    for kind, v in num:
        value *= _eval_factor(kind, float(v), zf)
    for kind, v in den:
        value /= _eval_factor(kind, float(v), zf)
    return value


# -- partial fractions -------------------------------------------------------

def partial_fractions(spec: SFunctionSpec) -> PartialFractions:
    """Residues ``A = C q(x0) / (x0 p'(x0))`` at every pole ``x0``.

    ``q`` and ``p`` are the numerator and denominator products; the constant
    is ``F(0)``, which is ``C * prod alpha/beta`` over the negative indices.
    """
    violation = validate_interlacing(spec)
    if violation is not None:
        raise DegenerateSpec(f"chain violated at ({violation.left}, {violation.right}): "
                             f"{violation.reason}")
    num, den = _factors(spec)
    terms = []
    for k, (kind, v) in enumerate(den):
        x0 = _factor_root(kind, v)
        if x0 == 0:
            continue  # alpha0 = 0 cannot occur in a valid chain
        q_val = spec.C * _prod(_eval_factor(nk, nv, x0) for nk, nv in num)
        p_prime = _eval_factor_derivative(kind, v, x0) * _prod(
            _eval_factor(dk, dv, x0) for i, (dk, dv) in enumerate(den) if i != k)
        terms.append((x0, q_val / (x0 * p_prime)))
    terms.sort()
    form = to_rational_form(spec)
    if form.K == 0 or form.d >= 1:
        constant = Fraction(0)
    else:
        constant = form.K * _prod(form.zeros) / _prod(form.poles)
    linear = form.K if form.d + len(form.zeros) - len(form.poles) == 1 else Fraction(0)
    return PartialFractions(constant, tuple(terms), linear)


# -- half-plane sampling -----------------------------------------------------

@dataclass(frozen=True)
class HalfPlaneReport:
    n_samples: int
    min_imag: Fraction
    argmin: Optional[GaussianRational]
    all_nonnegative: bool


def sample_upper_half_plane(n: int, seed: int) -> list:
    rng = SplitMix64(seed)
    points = []
    for _ in range(n):
        re = Fraction(rng.integer(-256, 256), rng.integer(1, 16))
        im = Fraction(rng.integer(1, 256), rng.integer(1, 16))
        points.append(GaussianRational(re, im))
    return points


def check_halfplane_map(spec: SFunctionSpec, n_samples: int = 100, seed: int = 0) -> HalfPlaneReport:
    """Exact ``Im F`` at seeded rational points of the open upper half-plane."""
    best, arg = None, None
    for z in sample_upper_half_plane(n_samples, seed):
        w = GaussianRational.lift(evaluate_exact(spec, z))
        if best is None or w.im < best:
            best, arg = w.im, z
    if best is None:
        best = Fraction(0)
    return HalfPlaneReport(n_samples, best, arg, best >= 0)


# -- reciprocal transform ----------------------------------------------------

def reciprocal_transform(spec: SFunctionSpec) -> SFunctionSpec:
    """Spec of ``z / F(z)``.

    A doubly infinite spec with ``alpha_(-1)`` pivots on it: the old betas
    become the new alphas, ``1/alpha_(-1)`` becomes the first new beta and
    ``C`` becomes ``1/(C alpha_(-1))``.  Every other shape is handled through
    the canonical rational form.
    """
    if spec.C == 0:
        raise DegenerateSpec("z/F is undefined for F = 0")
    if spec.kind == DOUBLY_INFINITE and spec.alphas_neg:
        a1 = spec.alphas_neg[0]
        return SFunctionSpec(
            DOUBLY_INFINITE,
            C=1 / (spec.C * a1),
            betas_pos=(1 / a1,) + spec.alphas_pos,
            alphas_pos=spec.betas_pos,
            betas_neg=spec.alphas_neg[1:],
            alphas_neg=spec.betas_neg,
        )
    form = to_rational_form(spec)
    return from_rational_form(RationalForm(1 / form.K, 1 - form.d, form.poles, form.zeros))


# -- classification of a ratio q/p -------------------------------------------

def _multiset_cancel(a, b):
    ca, cb = Counter(a), Counter(b)
    common = ca & cb
    return tuple(sorted((ca - common).elements())), tuple(sorted((cb - common).elements()))


def ratio_classify(p: EdreiSpec, q: EdreiSpec) -> Union[SFunctionSpec, NotSForm]:
    """Classify ``q/p`` after cancelling the factor the two series share."""
    if p.C == 0:
        return NotSForm("zero_denominator", "p vanishes identically")
    if p.A != q.A or p.A0 != q.A0:
        return NotSForm("exponential_mismatch",
                        f"rates (A, A0) differ: p has ({p.A}, {p.A0}), q has ({q.A}, {q.A0})")
    if q.C == 0:
        return SFunctionSpec(AFFINE, C=0)
    if Counter(p.poles_pos) != Counter(q.poles_pos) or Counter(p.poles_neg) != Counter(q.poles_neg):
        return NotSForm("residual_pole", "p and q have different pole factors")
    qz_pos, pz_pos = _multiset_cancel(q.zeros_pos, p.zeros_pos)
    qz_neg, pz_neg = _multiset_cancel(q.zeros_neg, p.zeros_neg)
    C = q.C / p.C
    if q.j == p.j:
        if not (qz_pos or pz_pos or qz_neg or pz_neg):
            return SFunctionSpec(AFFINE, C=C)
        kind = DOUBLY_INFINITE if (qz_neg or pz_neg) else MEROMORPHIC
        direct = SFunctionSpec(kind, C=C, betas_pos=qz_pos, alphas_pos=pz_pos,
                               betas_neg=qz_neg, alphas_neg=pz_neg)
        violation = validate_interlacing(direct)
        if violation is None:
            return direct
    num = [("lin", Fraction(0))] * max(q.j - p.j, 0)
    den = [("lin", Fraction(0))] * max(p.j - q.j, 0)
    num += [("pos", v) for v in qz_pos] + [("inv", v) for v in qz_neg]
    den += [("pos", v) for v in pz_pos] + [("inv", v) for v in pz_neg]
    form = _rational_form(C, num, den)
    try:
        spec = from_rational_form(form)
    except DegenerateSpec as exc:
        return NotSForm("power_of_z", str(exc))
    violation = validate_interlacing(spec)
    if violation is not None:
        return NotSForm("chain_violation",
                        f"({violation.left}, {violation.right}): {violation.reason}", violation)
    return spec
