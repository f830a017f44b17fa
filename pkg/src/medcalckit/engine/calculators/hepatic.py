"""Liver disease severity calculators."""

from __future__ import annotations

import math

from ...units import DEFAULT_REGISTRY, MOLAR_CONC, Quantity
from ..types import CalculatorDef, RULE
from .common import cat, flag, num, round_half_up, score, sex_param

LEGACY_BILIRUBIN_MW = 548.66  # historical typo; correct bilirubin MW is 584.66


def _clamp(x, lo, hi):
    return max(lo, min(x, hi))


def _meld_3_0(p):
    """MELD 3.0 (Kim 2021 / OPTN).

    Bounds: creatinine [1.0, 3.0] (3.0 if dialysis), bilirubin >= 1.0,
    INR >= 1.0, sodium [125, 137], albumin [1.5, 3.5]; rounded half-up,
    final score in [6, 40].
    """
    if p.mode.has("meld_na_formula"):
        return _legacy_meld_na(p)
    female = p.require("sex") == "female"
    cr = _clamp(p.require("creatinine"), 1.0, 3.0)
    if p.get("dialysis", False):
        cr = 3.0
    bili = max(p.require("bilirubin"), 1.0)
    inr = max(p.require("inr"), 1.0)
    na = _clamp(p.require("sodium"), 125.0, 137.0)
    alb = _clamp(p.require("albumin"), 1.5, 3.5)
    raw = (1.33 * female
           + 4.56 * math.log(bili)
           + 0.82 * (137.0 - na)
           - 0.24 * (137.0 - na) * math.log(bili)
           + 9.09 * math.log(inr)
           + 11.14 * math.log(cr)
           + 1.85 * (3.5 - alb)
           - 1.83 * (3.5 - alb) * math.log(cr)
           + 6.0)
    return score(float(_clamp(round_half_up(raw), 6, 40)),
                 intermediates={"unrounded": raw})


def _legacy_meld_na(p):
    """Pre-3.0 MELD-Na (UNOS 2016), reproduced for differential testing."""
    cr = _clamp(p.require("creatinine"), 1.0, 4.0)
    if p.get("dialysis", False):
        cr = 4.0
    bili = max(p.require("bilirubin"), 1.0)
    inr = max(p.require("inr"), 1.0)
    meld = round_half_up(10.0 * (0.957 * math.log(cr) + 0.378 * math.log(bili)
                                 + 1.120 * math.log(inr) + 0.643))
    if meld > 11:
        na = _clamp(p.require("sodium"), 125.0, 137.0)
        meld = round_half_up(meld + 1.32 * (137.0 - na)
                             - 0.033 * meld * (137.0 - na))
    return score(float(_clamp(meld, 6, 40)))


def _legacy_bilirubin_mgdl(p, corrected: float) -> float:
    """Molar bilirubin converted with the historical 548.66 molecular weight."""
    raw = p.raw("bilirubin")
    if isinstance(raw, dict):
        try:
            raw = Quantity(float(raw["value"]), str(raw.get("unit") or ""))
        except (KeyError, TypeError, ValueError):
            return corrected
    if not isinstance(raw, Quantity) or not DEFAULT_REGISTRY.has_unit(raw.unit):
        return corrected
    if DEFAULT_REGISTRY.dimension(raw.unit) != MOLAR_CONC:
        return corrected
    umol = DEFAULT_REGISTRY.convert_value(raw.value, raw.unit, "µmol/L")
    return umol * LEGACY_BILIRUBIN_MW / 10000.0


def _child_pugh(p):
    bili = p.require("bilirubin")
    if p.mode.has("child_pugh_bilirubin_mw"):
        bili = _legacy_bilirubin_mgdl(p, bili)
    pts = 0
    # bilirubin mg/dL: <2 -> 1, 2-3 -> 2, >3 -> 3
    if bili < 2.0:
        pts += 1
    elif bili <= 3.0:
        pts += 2
    else:
        pts += 3
    alb = p.require("albumin")
    if alb > 3.5:
        pts += 1
    elif alb >= 2.8:
        pts += 2
    else:
        pts += 3
    inr = p.require("inr")
    if inr < 1.7:
        pts += 1
    elif inr <= 2.3:
        pts += 2
    else:
        pts += 3
    pts += {"absent": 1, "slight": 2, "moderate": 3}[p.require("ascites")]
    pts += {"none": 1, "grade 1-2": 2, "grade 3-4": 3}[p.require("encephalopathy")]
    return score(pts)


_BILIRUBIN = num("bilirubin", "mg/dL", 0.05, 80, analyte="bilirubin",
                 description="total serum bilirubin")
_INR = num("inr", None, 0.5, 20, description="international normalized ratio")

CALCULATORS = [
    CalculatorDef("meld_3_0", "MELD 3.0", RULE,
                  (sex_param(), _BILIRUBIN, _INR,
                   num("creatinine", "mg/dL", 0.05, 40, analyte="creatinine"),
                   num("sodium", "mEq/L", 100, 200),
                   num("albumin", "g/dL", 0.5, 7),
                   flag("dialysis", "dialysis twice in past week or 24h CVVHD")),
                  _meld_3_0, score_range=(6, 40)),
    CalculatorDef("child_pugh", "Child-Pugh Score", RULE,
                  (_BILIRUBIN, num("albumin", "g/dL", 0.5, 7), _INR,
                   cat("ascites", ("absent", "slight", "moderate")),
                   cat("encephalopathy", ("none", "grade 1-2", "grade 3-4"))),
                  _child_pugh, score_range=(5, 15)),
]
