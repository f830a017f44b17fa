"""Helpers shared across calculator implementations."""

from __future__ import annotations

import math
from datetime import date, datetime

from ...errors import OutOfRangeError
from ..types import CalcResult, ParameterSpec, CATEGORICAL, NUMERIC, BOOLEAN


def numeric(value: float, unit: str | None, intermediates: dict | None = None,
            notes: tuple[str, ...] = ()) -> CalcResult:
    return CalcResult(kind="numeric", value=value, unit=unit,
                      intermediates=intermediates or {}, notes=notes)


def score(points: float, intermediates: dict | None = None,
          notes: tuple[str, ...] = ()) -> CalcResult:
    return CalcResult(kind="score", points=points,
                      intermediates=intermediates or {}, notes=notes)


def label(text: str, notes: tuple[str, ...] = ()) -> CalcResult:
    return CalcResult(kind="label", label=text, notes=notes)


def sex_param(description: str = "biological sex") -> ParameterSpec:
    return ParameterSpec("sex", CATEGORICAL, categories=("male", "female"),
                         description=description)


def age_param(lo: float = 0, hi: float = 130) -> ParameterSpec:
    return ParameterSpec("age", NUMERIC, canonical_unit="yr", valid_range=(lo, hi),
                         description="age in years")


def num(name: str, unit: str | None, lo: float, hi: float, *, analyte: str | None = None,
        required: bool = True, default=None, description: str = "") -> ParameterSpec:
    return ParameterSpec(name, NUMERIC, canonical_unit=unit, analyte=analyte,
                         required=required, valid_range=(lo, hi), default=default,
                         description=description)


def flag(name: str, description: str = "") -> ParameterSpec:
    """Optional boolean criterion; absent counts as not met."""
    return ParameterSpec(name, BOOLEAN, required=False, default=False,
                         description=description)


def cat(name: str, categories: tuple[str, ...], *, required: bool = True,
        default: str | None = None, description: str = "") -> ParameterSpec:
    return ParameterSpec(name, CATEGORICAL, categories=categories, required=required,
                         default=default, description=description)


def devine_ibw(female: bool, height_cm: float) -> float:
    """Ideal body weight (Devine 1974), kg; height converted to inches."""
    height_in = height_cm / 2.54
    base = 45.5 if female else 50.0
    return base + 2.3 * (height_in - 60.0)


def bmi_value(weight_kg: float, height_cm: float) -> float:
    h = height_cm / 100.0
    return weight_kg / (h * h)


def mean_arterial_pressure(sbp: float, dbp: float) -> float:
    return (sbp + 2.0 * dbp) / 3.0


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


_DATE_FORMATS = ("%m/%d/%Y", "%Y-%m-%d", "%m-%d-%Y", "%d %B %Y", "%B %d, %Y")


def parse_date(name: str, raw: str) -> date:
    text = " ".join(str(raw).split())
    for fmt in _DATE_FORMATS:
        try:
            return datetime.strptime(text, fmt).date()
        except ValueError:
            continue
    raise OutOfRangeError(name, f"cannot parse date {raw!r}")


def format_date(d: date) -> str:
    return d.strftime("%m/%d/%Y")
