"""Deterministic JSON for every public value type.

Rationals are written as strings (``"3"``, ``"-1/2"``) and keys are sorted,
so equal values always produce byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import InvalidSpec
from .harness import ChainWitness, GapWitness, VerificationReport
from .laurent import EdreiSpec, LaurentWindow
from .matrices import MatrixSection
from .rational import format_fraction, to_fraction
from .sfunc import ChainViolation, HalfPlaneReport, NotSForm, PartialFractions, SFunctionSpec
from .tnn import MinorWitness, TnnReport

_EDREI_LISTS = ("zeros_pos", "zeros_neg", "poles_pos", "poles_neg")
_SFUNC_LISTS = ("alphas_pos", "betas_pos", "alphas_neg", "betas_neg")


def _q(x):
    return None if x is None else format_fraction(x)


def _qs(xs):
    return [format_fraction(x) for x in xs]


def to_json(obj):
    """Plain JSON-ready structure for a library value."""
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, EdreiSpec):
        out = {"C": _q(obj.C), "j": obj.j, "A": _q(obj.A), "A0": _q(obj.A0)}
        out.update({k: _qs(getattr(obj, k)) for k in _EDREI_LISTS})
        return out
    if isinstance(obj, LaurentWindow):
        return {
            "lo": obj.lo,
            "hi": obj.hi,
            "coeffs": _qs(obj.coeffs),
            "exact_left": obj.exact_left,
            "exact_right": obj.exact_right,
            "approx": sorted(obj.approx),
        }
    if isinstance(obj, MatrixSection):
        return {
            "rows": list(obj.row_labels),
            "cols": list(obj.col_labels),
            "entries": [_qs(r) for r in obj.rows()],
        }
    if isinstance(obj, MinorWitness):
        return {"rows": list(obj.rows), "cols": list(obj.cols), "value": _q(obj.value)}
    if isinstance(obj, TnnReport):
        return {
            "status": obj.status,
            "max_order": obj.max_order_checked,
            "witness": to_json(obj.witness),
            "count": obj.minors_evaluated,
        }
    if isinstance(obj, SFunctionSpec):
        out = {"kind": obj.kind, "C": _q(obj.C), "alpha0": _q(obj.alpha0), "beta0": _q(obj.beta0)}
        out.update({k: _qs(getattr(obj, k)) for k in _SFUNC_LISTS})
        return out
    if isinstance(obj, PartialFractions):
        return {
            "constant": _q(obj.constant),
            "linear": _q(obj.linear),
            "terms": [{"pole": _q(p), "residue": _q(a)} for p, a in obj.terms],
        }
    if isinstance(obj, ChainViolation):
        return {
            "left": obj.left,
            "left_value": _q(obj.left_value),
            "right": obj.right,
            "right_value": _q(obj.right_value),
            "reason": obj.reason,
        }
    if isinstance(obj, NotSForm):
        return {"not_s_form": obj.reason, "detail": obj.detail, "violation": to_json(obj.violation)}
    if isinstance(obj, HalfPlaneReport):
        arg = None if obj.argmin is None else [_q(obj.argmin.re), _q(obj.argmin.im)]
        return {"n_samples": obj.n_samples, "min_imag": _q(obj.min_imag), "argmin": arg,
                "all_nonnegative": obj.all_nonnegative}
    if isinstance(obj, VerificationReport):
        return {
            "direction": obj.direction,
            "suite": obj.suite,
            "trials_run": obj.trials_run,
            "trials_passed": obj.trials_passed,
            "failures": [{"seed": seed, "witness": to_json(w)} for seed, w in obj.failures],
        }
    if isinstance(obj, GapWitness):
        return {"gap_index": obj.gap_index, "left_nonzero": obj.left_nonzero,
                "right_nonzero": obj.right_nonzero}
    if isinstance(obj, ChainWitness):
        return {"k": obj.k, "which": obj.which}
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _require(data, keys, what):
    if not isinstance(data, dict):
        raise InvalidSpec(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise InvalidSpec(f"{what} is missing {', '.join(missing)}")


def edrei_from_json(data) -> EdreiSpec:
    if not isinstance(data, dict):
        raise InvalidSpec("Edrei spec must be a JSON object")
    unknown = set(data) - {"C", "j", "A", "A0", *_EDREI_LISTS}
    if unknown:
        raise InvalidSpec(f"unknown keys: {', '.join(sorted(unknown))}")
    kwargs = {k: to_fraction(data[k]) for k in ("C", "A", "A0") if k in data}
    if "j" in data:
        kwargs["j"] = data["j"]
    kwargs.update({k: tuple(to_fraction(v) for v in data[k]) for k in _EDREI_LISTS if k in data})
    return EdreiSpec(**kwargs)


def window_from_json(data) -> LaurentWindow:
    _require(data, ("lo", "hi", "coeffs"), "window")
    return LaurentWindow(
        int(data["lo"]),
        int(data["hi"]),
        tuple(to_fraction(c) for c in data["coeffs"]),
        bool(data.get("exact_left", False)),
        bool(data.get("exact_right", False)),
        frozenset(data.get("approx", ())),
    )


def section_from_json(data) -> MatrixSection:
    _require(data, ("rows", "cols", "entries"), "section")
    return MatrixSection.from_rows([[to_fraction(x) for x in r] for r in data["entries"]],
                                   data["rows"], data["cols"])


def sfunc_from_json(data) -> SFunctionSpec:
    _require(data, ("kind",), "S-function spec")
    kwargs = {"kind": data["kind"]}
    if "C" in data:
        kwargs["C"] = to_fraction(data["C"])
    for k in ("alpha0", "beta0"):
        if data.get(k) is not None:
            kwargs[k] = to_fraction(data[k])
    kwargs.update({k: tuple(to_fraction(v) for v in data[k]) for k in _SFUNC_LISTS if k in data})
    return SFunctionSpec(**kwargs)


def tnn_report_from_json(data) -> TnnReport:
    _require(data, ("status", "max_order", "witness", "count"), "TNN report")
    w = data["witness"]
    witness = None if w is None else MinorWitness(tuple(w["rows"]), tuple(w["cols"]), to_fraction(w["value"]))
    return TnnReport(data["status"], data["max_order"], witness, data["count"])


def load_series(data):
    """An Edrei spec or an explicit window, told apart by the ``coeffs`` key."""
    if isinstance(data, dict) and "coeffs" in data:
        return window_from_json(data)
    return edrei_from_json(data)
