"""Seeded generators and property suites.

Every trial draws from its own SplitMix64 stream seeded with
``derive_seed(master, index)``, so a trial's outcome depends only on the
master seed and its index, never on scheduling or worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import ZeroCoefficient
from .laurent import EdreiSpec, LaurentWindow, edrei_coeffs
from .matrices import hurwitz_section
from .rng import SplitMix64, derive_seed
from .sfunc import (
    AFFINE,
    DOUBLY_INFINITE,
    MEROMORPHIC,
    SFunctionSpec,
)
from .tnn import (
    ALL_NONNEGATIVE,
    MinorWitness,
    SectionSchedule,
    check_tnn,
    det_exact,
    find_negative_minor,
)
from .transforms import (
    check_reversal_duality,
    check_shift_duality,
    remove_pole_left,
    remove_pole_right,
    reversal_section,
)

FORWARD = "forward_a_to_b"
REVERSE = "reverse_violation"
STRUCTURAL = "structural"

G_NONE, G_ZERO, G_POLE_RIGHT, G_POLE_LEFT, G_ZERO_POLE = range(5)


@dataclass(frozen=True)
class ScenarioConfig:
    seed: int = 0
    n_zeros: int = 3
    value_range: tuple = (Fraction(1, 2), Fraction(6))
    section_size: int = 12
    max_minor_order: int = 4
    trials: int = 50
    g_factor: bool = True
    min_ratio: Fraction = Fraction(3, 2)

    def __post_init__(self):
        lo, hi = (Fraction(v) for v in self.value_range)
        object.__setattr__(self, "value_range", (lo, hi))
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.section_size < 2 * self.max_minor_order:
            raise ValueError("section_size must be at least 2 * max_minor_order")
        if self.n_zeros < 1:
            raise ValueError("n_zeros must be at least 1")
        if not 0 < lo < hi:
            raise ValueError("value_range must be a positive interval")
        object.__setattr__(self, "min_ratio", Fraction(self.min_ratio))
        if self.min_ratio < 1:
            raise ValueError("min_ratio must be at least 1")

    def for_trial(self, index: int) -> "ScenarioConfig":
        return replace(self, seed=derive_seed(self.seed, index))


@dataclass(frozen=True)
class VerificationReport:
    direction: str
    trials_run: int
    trials_passed: int
    failures: tuple = ()
    suite: str = ""

    def __post_init__(self):
        if not 0 <= self.trials_passed <= self.trials_run:
            raise ValueError("trials_passed must lie in 0..trials_run")

    @property
    def all_passed(self) -> bool:
        return self.trials_passed == self.trials_run


# -- generators --------------------------------------------------------------

@dataclass(frozen=True)
class PairDraw:
    """Raw ingredients of a generated pair before it is assembled."""

    pos: tuple                # increasing zero magnitudes right of the origin
    neg: tuple                # increasing magnitudes left of the origin (below pos[0])
    C_p: Fraction
    C_q: Fraction
    j: int
    g: EdreiSpec


def interlaced_from_draws(pos, neg=(), C_p=1, C_q=1, j=0, g: EdreiSpec = None):
    """Assemble ``(p, q)`` from sorted zero magnitudes.

    On the positive side the smallest value goes to ``q`` and ownership then
    alternates; on the negative side the largest magnitude goes to ``p``.  A
    negative-side magnitude ``m`` is stored as the factor ``1 + 1/(z/m)``,
    i.e. ``zeros_neg`` entry ``1/m``.
    """
    pos, neg = sorted(Fraction(v) for v in pos), sorted(Fraction(v) for v in neg)
    q_pos, p_pos = pos[0::2], pos[1::2]
    top_down = neg[::-1]
    p_neg = [1 / m for m in top_down[0::2]]
    q_neg = [1 / m for m in top_down[1::2]]
    p = EdreiSpec(C=C_p, j=j, zeros_pos=p_pos, zeros_neg=p_neg)
    q = EdreiSpec(C=C_q, j=j, zeros_pos=q_pos, zeros_neg=q_neg)
    if g is not None:
        p, q = p.times(g), q.times(g)
    return p, q


def _spaced_sample(rng: SplitMix64, grid: list, k: int, ratio: Fraction) -> tuple:
    """``k`` increasing grid values, each at least ``ratio`` times the previous.

    Values are picked left to right among the candidates that still leave
    room for the rest; returns ``None`` if the grid cannot hold ``k`` values.
    """
    out = []
    for i in range(k):
        left = k - i - 1
        floor = out[-1] * ratio if out else grid[0]
        cands = [g for g in grid if g >= floor and g * ratio ** left <= grid[-1]]
        if not cands:
            return None
        out.append(rng.choice(cands))
    return tuple(out)


def _draw(cfg: ScenarioConfig, rng: SplitMix64, allow_poles: bool = True) -> PairDraw:
    lo, hi = cfg.value_range
    grid = [Fraction(k, 4) for k in range(int(lo * 4), int(hi * 4) + 1) if lo <= Fraction(k, 4) <= hi]
    while True:
        k_pos = rng.integer(0, 2 * cfg.n_zeros)
        k_neg = rng.integer(0, 2 * cfg.n_zeros)
        if k_pos + k_neg == 0:
            continue
        pos = _spaced_sample(rng, grid, k_pos, cfg.min_ratio)
        ceiling = pos[0] if pos else Fraction(2)
        # negative-side magnitudes live below the smallest positive value
        unit_grid = [ceiling * Fraction(u, 64) for u in range(1, 64)
                     if ceiling * Fraction(u, 64) * cfg.min_ratio <= ceiling]
        neg = _spaced_sample(rng, unit_grid, k_neg, cfg.min_ratio)
        if pos is not None and neg is not None:
            break
    C_p = Fraction(rng.integer(1, 4), rng.integer(1, 4))
    C_q = Fraction(rng.integer(1, 4), rng.integer(1, 4))
    j = rng.integer(-1, 1)
    g = EdreiSpec()
    if cfg.g_factor:
        mode = rng.integer(0, 4) if allow_poles else rng.choice((G_NONE, G_ZERO))
        zeros_pos, poles_pos, poles_neg = (), (), ()
        if mode in (G_ZERO, G_ZERO_POLE):
            zeros_pos = (rng.choice(grid),)
        if mode in (G_POLE_RIGHT, G_ZERO_POLE):
            poles_pos = (Fraction(rng.integer(8, 12)),)
        if mode == G_POLE_LEFT:
            poles_neg = (Fraction(rng.integer(8, 12)),)
        g = EdreiSpec(zeros_pos=zeros_pos, poles_pos=poles_pos, poles_neg=poles_neg)
    return PairDraw(pos, neg, C_p, C_q, j, g)


def gen_interlaced_pair(cfg: ScenarioConfig) -> tuple:
    """``(p, q)`` whose ratio ``q/p`` has strictly interlacing zeros and poles."""
    d = _draw(cfg, SplitMix64(cfg.seed))
    return interlaced_from_draws(d.pos, d.neg, d.C_p, d.C_q, d.j, d.g)


def gen_violating_pair(cfg: ScenarioConfig) -> tuple:
    """An interlaced pair with one adjacent zero/pole pair swapped.

    Only Laurent polynomials are produced so that the search sees every
    coefficient.  Returns ``(p, q, swapped_index)``.
    """
    rng = SplitMix64(cfg.seed)
    while True:
        d = _draw(cfg, rng, allow_poles=False)
        if len(d.pos) >= 2 or len(d.neg) >= 2:
            break
    p, q = interlaced_from_draws(d.pos, d.neg, d.C_p, d.C_q, d.j)
    sides = [s for s, vals in (("pos", d.pos), ("neg", d.neg)) if len(vals) >= 2]
    side = rng.choice(sides)
    if side == "pos":
        t = rng.below(len(d.pos) // 2)
        beta, alpha = d.pos[2 * t], d.pos[2 * t + 1]
        q_z = [alpha if v == beta else v for v in q.zeros_pos]
        p_z = [beta if v == alpha else v for v in p.zeros_pos]
        p, q = replace_zeros(p, zeros_pos=p_z), replace_zeros(q, zeros_pos=q_z)
    else:
        t = rng.below(len(d.neg) // 2)
        # top-down, the pairs are (alpha_-1^-1, beta_-1^-1), ...
        top_down = d.neg[::-1]
        alpha, beta = 1 / top_down[2 * t], 1 / top_down[2 * t + 1]
        p_z = [beta if v == alpha else v for v in p.zeros_neg]
        q_z = [alpha if v == beta else v for v in q.zeros_neg]
        p, q = replace_zeros(p, zeros_neg=p_z), replace_zeros(q, zeros_neg=q_z)
    if d.g.zeros_pos:
        p, q = p.times(d.g), q.times(d.g)
    return p, q, (side, t)


def replace_zeros(spec: EdreiSpec, **kwargs) -> EdreiSpec:
    return replace(spec, **kwargs)


def gen_sfunction_spec(seed: int, max_len: int = 3) -> SFunctionSpec:
    """A valid interlaced spec of a random kind, with values on a small grid."""
    rng = SplitMix64(seed)
    C = Fraction(rng.integer(1, 6), rng.integer(1, 4))
    kind = rng.choice((DOUBLY_INFINITE, MEROMORPHIC, AFFINE))
    if kind == AFFINE:
        beta0 = None if rng.chance(1, 3) else Fraction(rng.integer(0, 12), rng.integer(1, 4))
        return SFunctionSpec(AFFINE, C=C, beta0=beta0)
    grid = [Fraction(k, 4) for k in range(1, 41)]
    k_pos = rng.integer(0, 2 * max_len)
    chain = sorted(rng.sample(grid, k_pos + 2))
    if kind == MEROMORPHIC:
        beta0 = alpha0 = None
        if rng.chance(1, 2):
            beta0 = Fraction(0) if rng.chance(1, 2) else chain.pop(0)
            alpha0 = chain.pop(0)
        body = chain[:k_pos]
        return SFunctionSpec(MEROMORPHIC, C=C, betas_pos=body[0::2], alphas_pos=body[1::2],
                             beta0=beta0, alpha0=alpha0)
    k_neg = rng.integer(0, 2 * max_len)
    body = chain[:k_pos]
    floor = body[0] if body else Fraction(11)
    units = sorted(rng.sample(range(1, 24), k_neg))
    mags = [floor * Fraction(u, 24) for u in units][::-1]
    return SFunctionSpec(DOUBLY_INFINITE, C=C, betas_pos=body[0::2], alphas_pos=body[1::2],
                         alphas_neg=[1 / m for m in mags[0::2]],
                         betas_neg=[1 / m for m in mags[1::2]])


# -- windows and sections ----------------------------------------------------

def _support_low(spec: EdreiSpec) -> int:
    return spec.j - len(spec.zeros_neg)


def section_layout(p: EdreiSpec, q: EdreiSpec, size: int):
    """Rows ``1..size`` and the columns of a ``size x size`` Hurwitz section
    that straddles the left end of the support, plus the exponent range it
    reads."""
    half = (size + 1) // 2
    low = min(_support_low(p), _support_low(q))
    c0 = low + half // 2
    rows, cols = range(1, size + 1), range(c0, c0 + size)
    return rows, cols, (c0 - half, c0 + size - 2)


def pair_windows(p: EdreiSpec, q: EdreiSpec, lo: int, hi: int) -> tuple:
    return edrei_coeffs(p, lo, hi), edrei_coeffs(q, lo, hi)


def polynomial_window(spec: EdreiSpec) -> LaurentWindow:
    """Complete window of a finite Edrei product."""
    if spec.poles_pos or spec.poles_neg or spec.A or spec.A0:
        raise ValueError("spec is not a Laurent polynomial")
    lo = spec.j - len(spec.zeros_neg)
    hi = spec.j + len(spec.zeros_pos)
    return edrei_coeffs(spec, lo, hi)


# -- forward and reverse suites ----------------------------------------------

def _run(fn, cfg: ScenarioConfig, workers: int):
    indices = range(cfg.trials)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, [cfg] * cfg.trials, indices))
    return [fn(cfg, i) for i in indices]


def forward_trial(cfg: ScenarioConfig, index: int):
    sub = cfg.for_trial(index)
    p, q = gen_interlaced_pair(sub)
    rows, cols, (lo, hi) = section_layout(p, q, cfg.section_size)
    pw, qw = pair_windows(p, q, lo, hi)
    report = check_tnn(hurwitz_section(pw, qw, rows, cols), cfg.max_minor_order)
    return sub.seed, report.status == ALL_NONNEGATIVE, report.witness


def verify_forward(cfg: ScenarioConfig, workers: int = 1) -> VerificationReport:
    """Interlaced pairs must give totally nonnegative Hurwitz sections."""
    results = _run(forward_trial, cfg, workers)
    failures = tuple((seed, w) for seed, ok, w in results if not ok)
    return VerificationReport(FORWARD, cfg.trials, cfg.trials - len(failures), failures)


def reverse_budget(cfg: ScenarioConfig) -> SectionSchedule:
    sizes = tuple(s for s in (2, 4, 6, 8, 10, 12) if s <= cfg.section_size)
    return SectionSchedule(sizes=sizes, max_order=cfg.max_minor_order)


def reverse_trial(cfg: ScenarioConfig, index: int):
    sub = cfg.for_trial(index)
    p, q, _ = gen_violating_pair(sub)
    w = find_negative_minor(polynomial_window(p), polynomial_window(q), reverse_budget(cfg))
    return sub.seed, w is not None, w


def verify_reverse(cfg: ScenarioConfig, workers: int = 1) -> VerificationReport:
    """Chain-violating pairs must expose a negative minor within the budget."""
    results = _run(reverse_trial, cfg, workers)
    failures = tuple((seed, None) for seed, ok, _ in results if not ok)
    return VerificationReport(REVERSE, cfg.trials, cfg.trials - len(failures), failures)


# -- structural checks -------------------------------------------------------

@dataclass(frozen=True)
class GapWitness:
    gap_index: int
    left_nonzero: int
    right_nonzero: int


def check_gap_lemma(w: LaurentWindow) -> Optional[GapWitness]:
    """``None`` when the nonzero coefficients form one block, else the first
    zero sitting between two nonzero ones."""
    nz = [n for n, c in w.items() if c != 0]
    if not nz:
        return None
    for a, b in zip(nz, nz[1:]):
        if b > a + 1:
            return GapWitness(a + 1, a, b)
    return None


@dataclass(frozen=True)
class ChainWitness:
    k: int
    left: tuple
    right: tuple
    which: str


_INF = (1, Fraction(0))


def _ratio(x: Fraction, y: Fraction, k: int, skipped: list, strict: bool):
    """``x/y`` as a sortable key; ``x/0`` is ``+inf`` and ``0/0`` is skipped."""
    if y == 0:
        if x == 0:
            if strict:
                raise ZeroCoefficient(f"0/0 ratio at k = {k}")
            skipped.append(k)
            return None
        return _INF
    return (0, x / y)


def check_ratio_chain(p: LaurentWindow, q: LaurentWindow, k_range, strict: bool = False,
                      skipped: list = None) -> Optional[ChainWitness]:
    """Check ``a_(k-1)/a_k <= b_k/b_(k+1) <= a_k/a_(k+1)`` for each ``k``.

    Undefined ``0/0`` ratios are appended to ``skipped`` (or raise
    :class:`ZeroCoefficient` when ``strict``).
    """
    skipped = [] if skipped is None else skipped
    for k in k_range:
        left = _ratio(p[k - 1], p[k], k, skipped, strict)
        mid = _ratio(q[k], q[k + 1], k, skipped, strict)
        right = _ratio(p[k], p[k + 1], k, skipped, strict)
        if left is not None and mid is not None and left > mid:
            return ChainWitness(k, left, mid, "lower")
        if mid is not None and right is not None and mid > right:
            return ChainWitness(k, mid, right, "upper")
    return None


def check_degenerate(p: LaurentWindow, q: LaurentWindow, size: int) -> bool:
    """Do all order-2 minors of the ``size x size`` section vanish?"""
    M = hurwitz_section(p, q, range(1, size + 1), range(1, size + 1))
    rows = M.rows()
    for r1, r2 in combinations(range(size), 2):
        for c1, c2 in combinations(range(size), 2):
            if rows[r1][c1] * rows[r2][c2] != rows[r1][c2] * rows[r2][c1]:
                return False
    return True


def geometric_pair(a0, a1, b0, lo: int, hi: int) -> tuple:
    """Windows of ``a_k = a0^(1-k) a1^k`` and ``b_k = (b0/a0) a_k``."""
    a0, a1, b0 = Fraction(a0), Fraction(a1), Fraction(b0)
    a = [a0 ** (1 - k) * a1 ** k for k in range(lo, hi + 1)]
    b = [b0 / a0 * x for x in a]
    return LaurentWindow(lo, hi, tuple(a)), LaurentWindow(lo, hi, tuple(b))


def support(w: LaurentWindow):
    nz = [n for n, c in w.items() if c != 0]
    return (nz[0], nz[-1]) if nz else None


def termination_coupled(p: LaurentWindow, q: LaurentWindow) -> bool:
    """``lo_a <= lo_b <= lo_a + 1`` and ``hi_a <= hi_b <= hi_a + 1``."""
    sa, sb = support(p), support(q)
    if sa is None or sb is None:
        return True
    return sa[0] <= sb[0] <= sa[0] + 1 and sa[1] <= sb[1] <= sa[1] + 1


def termination_witness(p: LaurentWindow, q: LaurentWindow) -> Optional[MinorWitness]:
    """The order-2 minor of ``H(p, q)`` that a broken support coupling
    makes negative, or ``None`` if the supports are coupled."""
    (la, ha), (lb, hb) = support(p), support(q)
    if hb > ha + 1:
        k, r = ha + 1, hb - ha - 1
        rows, cols = (2, 3), (k + 1, k + r + 1)
    elif la > lb:
        k, r = la - 1, la - lb
        rows, cols = (1, 2), (k - r + 2, k + 2)
    elif ha > hb:
        k, r = hb + 1, ha - hb
        rows, cols = (1, 2), (k, k + r)
    elif la < lb - 1:
        k, r = lb - 1, lb - 1 - la
        rows, cols = (2, 3), (k - r + 2, k + 2)
    else:
        return None
    section = hurwitz_section(p, q, rows, cols)
    return MinorWitness(rows, cols, det_exact(section))


def check_proportionality(p: LaurentWindow, q: LaurentWindow) -> bool:
    """If some ``a_(k-1) b_k = a_k b_(k-1) != 0`` below the top degree of a
    right-terminating ``p``, then ``q`` must be a multiple of ``p``."""
    sa = support(p)
    if sa is None:
        return True
    n = sa[1]
    lo = min(p.lo, q.lo)
    hit = any(p[k - 1] * q[k] == p[k] * q[k - 1] != 0 for k in range(lo + 1, n))
    if not hit:
        return True
    ratio = q[n] / p[n]
    return all(q[k] == ratio * p[k] for k in range(lo - 1, max(p.hi, q.hi) + 2))


@dataclass
class _Suite:
    name: str
    failures: list = field(default_factory=list)
    run: int = 0

    def record(self, seed, ok, witness=None):
        self.run += 1
        if not ok:
            self.failures.append((seed, witness))

    def report(self) -> VerificationReport:
        return VerificationReport(STRUCTURAL, self.run, self.run - len(self.failures),
                                  tuple(self.failures), self.name)


def _finite_pair(seed: int, n_zeros: int = 3):
    cfg = ScenarioConfig(seed=seed, n_zeros=n_zeros, g_factor=False, trials=1)
    p, q = gen_interlaced_pair(cfg)
    return p, q, polynomial_window(p), polynomial_window(q)


def suite_gap(master: int, trials: int = 25) -> VerificationReport:
    s = _Suite("gap_lemma")
    for i in range(trials):
        seed = derive_seed(master, i)
        _, _, pw, qw = _finite_pair(seed)
        s.record(seed, check_gap_lemma(pw) is None and check_gap_lemma(qw) is None)
    return s.report()


def suite_ratio_chain(master: int, trials: int = 25) -> VerificationReport:
    s = _Suite("ratio_chain")
    for i in range(trials):
        seed = derive_seed(master, i)
        _, _, pw, qw = _finite_pair(seed)
        lo, hi = min(pw.lo, qw.lo) - 1, max(pw.hi, qw.hi) + 1
        w = check_ratio_chain(pw, qw, range(lo, hi + 1))
        s.record(seed, w is None, w)
    return s.report()


def suite_degenerate(master: int, trials: int = 25) -> VerificationReport:
    s = _Suite("degenerate")
    for i in range(trials):
        seed = derive_seed(master, i)
        rng = SplitMix64(seed)
        a0, a1, b0 = (Fraction(rng.integer(1, 9), rng.integer(1, 9)) for _ in range(3))
        p, q = geometric_pair(a0, a1, b0, -12, 12)
        # a bumped coefficient breaks the geometric structure
        bumped = LaurentWindow(p.lo, p.hi, tuple(c + (1 if n == 1 else 0) for n, c in p.items()))
        s.record(seed, check_degenerate(p, q, 6) and not check_degenerate(bumped, q, 6))
    return s.report()


def suite_termination(master: int, trials: int = 25) -> VerificationReport:
    s = _Suite("termination_coupling")
    for i in range(trials):
        seed = derive_seed(master, i)
        rng = SplitMix64(seed)
        p, q, pw, qw = _finite_pair(seed)
        coupled = termination_coupled(pw, qw) and termination_witness(pw, qw) is None
        shift = rng.choice((-3, -2, 2, 3))  # |shift| >= 2 always breaks the coupling
        broken = edrei_coeffs(replace(q, j=q.j + shift), pw.lo - 4, pw.hi + 4).trimmed()
        w = termination_witness(pw, broken)
        s.record(seed, coupled and w is not None and w.value < 0, w)
    return s.report()


def suite_proportionality(master: int, trials: int = 25) -> VerificationReport:
    s = _Suite("proportionality")
    for i in range(trials):
        seed = derive_seed(master, i)
        rng = SplitMix64(seed)
        p, q, pw, qw = _finite_pair(seed)
        c = Fraction(rng.integer(1, 5), rng.integer(1, 5))
        multiple = LaurentWindow(pw.lo, pw.hi, tuple(c * x for x in pw.coeffs), True, True)
        ok = (check_tnn(hurwitz_section(pw, multiple, range(1, 9), range(pw.lo, pw.lo + 8)), 3).status
              == ALL_NONNEGATIVE)
        ok = ok and check_proportionality(pw, multiple) and check_proportionality(pw, qw)
        s.record(seed, ok)
    return s.report()


def suite_symmetry(master: int, trials: int = 25, size: int = 8) -> VerificationReport:
    s = _Suite("reversal_shift")
    for i in range(trials):
        seed = derive_seed(master, i)
        p, q, pw, qw = _finite_pair(seed, n_zeros=2)
        c0 = min(pw.lo, qw.lo) + 1
        rows, cols = range(1, size + 1), range(c0, c0 + size)
        forward = check_tnn(hurwitz_section(pw, qw, rows, cols), 3)
        mirrored = check_tnn(reversal_section(pw, qw, rows, cols, c=5), 3)
        # a violating pair checks that negative verdicts also agree
        vp, vq, _ = gen_violating_pair(ScenarioConfig(seed=seed, n_zeros=2, g_factor=False, trials=1))
        vpw, vqw = polynomial_window(vp), polynomial_window(vq)
        v0 = min(vpw.lo, vqw.lo)
        vf = check_tnn(hurwitz_section(vpw, vqw, range(1, 5), range(v0, v0 + 4)), 2).status
        vm = check_tnn(reversal_section(vpw, vqw, range(1, 5), range(v0, v0 + 4), c=3), 2).status
        ok = (forward.status == mirrored.status == ALL_NONNEGATIVE and vf == vm
              and check_reversal_duality(pw, qw, rows, cols, c=5)
              and check_shift_duality(pw, qw, range(1, size), cols))
        s.record(seed, ok)
    return s.report()


def suite_pole_removal(master: int, trials: int = 25, size: int = 10) -> VerificationReport:
    s = _Suite("pole_removal")
    for i in range(trials):
        seed = derive_seed(master, i)
        rng = SplitMix64(seed)
        p, q, _, _ = _finite_pair(seed, n_zeros=2)
        delta = Fraction(rng.integer(5, 12), rng.integer(1, 2))
        right = rng.chance(1, 2)
        g = EdreiSpec(poles_pos=(delta,)) if right else EdreiSpec(poles_neg=(delta,))
        pg, qg = p.times(g), q.times(g)
        half = (size + 1) // 2
        low = min(_support_low(p), _support_low(q))
        high = max(p.j + len(p.zeros_pos), q.j + len(q.zeros_pos))
        lo, hi = low - 2 * size, high + 2 * size
        pw, qw = pair_windows(pg, qg, lo, hi)
        if right:
            p1, q1 = remove_pole_right(pw, qw, delta)
        else:
            p1, q1 = remove_pole_left(pw, qw, 1 / delta)
        target_p, target_q = polynomial_window(p), polynomial_window(q)
        same = all(p1[n] == target_p[n] and q1[n] == target_q[n] for n in range(p1.lo, p1.hi + 1))
        c0 = low + half // 2
        rows, cols = range(1, size + 1), range(c0, c0 + size)
        before = check_tnn(hurwitz_section(pw, qw, rows, cols), 4).status
        after = check_tnn(hurwitz_section(p1, q1, rows, cols), 4).status
        s.record(seed, same and before == after == ALL_NONNEGATIVE)
    return s.report()


STRUCTURAL_SUITES = {
    "gap_lemma": suite_gap,
    "degenerate": suite_degenerate,
    "ratio_chain": suite_ratio_chain,
    "termination_coupling": suite_termination,
    "proportionality": suite_proportionality,
    "reversal_shift": suite_symmetry,
    "pole_removal": suite_pole_removal,
}


def verify_structural(master: int, trials: int = 25) -> dict:
    return {name: fn(master, trials) for name, fn in STRUCTURAL_SUITES.items()}


def exponential_mismatch_probe(size: int = 8, lo: int = -4, hi: int = 16) -> Optional[MinorWitness]:
    """``p = e^z``, ``q = 1``: report whether a negative minor shows up."""
    p = edrei_coeffs(EdreiSpec(A=1), lo, hi)
    q = LaurentWindow.polynomial([1])
    return find_negative_minor(p, q, SectionSchedule(sizes=(2, 4, 6, size), max_order=4))


__all__ = [
    "FORWARD", "REVERSE", "STRUCTURAL", "ScenarioConfig", "VerificationReport", "PairDraw",
    "interlaced_from_draws", "gen_interlaced_pair", "gen_violating_pair", "gen_sfunction_spec",
    "section_layout", "pair_windows", "polynomial_window", "forward_trial", "verify_forward",
    "reverse_budget", "reverse_trial", "verify_reverse", "GapWitness", "check_gap_lemma",
    "ChainWitness", "check_ratio_chain", "check_degenerate", "geometric_pair", "support",
    "termination_coupled", "termination_witness", "check_proportionality", "STRUCTURAL_SUITES",
    "verify_structural", "exponential_mismatch_probe",
]
