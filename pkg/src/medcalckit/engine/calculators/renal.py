"""Kidney function calculators."""

from __future__ import annotations

from ...errors import CalculatorUnavailableError
from ..types import CalculatorDef, EQUATION, ParameterSpec, BOOLEAN
from .common import age_param, bmi_value, devine_ibw, num, numeric, sex_param

_CREATININE = num("creatinine", "mg/dL", 0.05, 40, analyte="creatinine",
                  description="serum creatinine")


def _cockcroft_gault(p):
    """Creatinine clearance (Cockcroft-Gault 1976) with Devine weight selection.

    Weight used: actual if actual <= IBW; adjusted body weight
    IBW + 0.4 x (actual - IBW) when actual exceeds IBW. Without a height the
    actual weight is used as-is.
    """
    age = p.require("age")
    female = p.require("sex") == "female"
    actual = p.require("weight")
    inter = {}
    selected = actual
    if p.has("height"):
        height = p.get("height")
        ibw = devine_ibw(female, height)
        inter["ideal_body_weight"] = ibw
        inter["bmi"] = bmi_value(actual, height)
        selected = actual if actual <= ibw else ibw + 0.4 * (actual - ibw)
    inter["selected_weight"] = selected
    value = (140.0 - age) * selected / (72.0 * p.require("creatinine"))
    if female:
        value *= 0.85
    return numeric(value, "mL/min", intermediates=inter)


def _ckd_epi_2021(p):
    """CKD-EPI 2021 race-free creatinine equation."""
    female = p.require("sex") == "female"
    scr = p.require("creatinine")
    if female:
        kappa, alpha, sex_factor = 0.7, -0.241, 1.012
    else:
        kappa = 0.7 if p.mode.has("ckd_epi_male_kappa") else 0.9
        alpha, sex_factor = -0.302, 1.0
    ratio = scr / kappa
    value = (142.0 * min(ratio, 1.0) ** alpha * max(ratio, 1.0) ** -1.200
             * 0.9938 ** p.require("age") * sex_factor)
    return numeric(value, "mL/min/1.73m²",
                   intermediates={"age_term": 0.9938 ** p.require("age")})


def _mdrd(p):
    """MDRD study equation (IDMS-traceable, 175 coefficient)."""
    if p.mode.has("mdrd_broken_path"):
        raise CalculatorUnavailableError(
            "mdrd_gfr: calculator resource failed to load (broken file path)")
    value = (175.0 * p.require("creatinine") ** -1.154 * p.require("age") ** -0.203)
    if p.require("sex") == "female":
        value *= 0.742
    if p.get("black_race", False):
        value *= 1.212
    return numeric(value, "mL/min/1.73m²")


CALCULATORS = [
    CalculatorDef("cockcroft_gault", "Creatinine Clearance (Cockcroft-Gault)",
                  EQUATION,
                  (age_param(18, 120), sex_param(),
                   num("weight", "kg", 20, 400, description="actual body weight"),
                   num("height", "cm", 100, 260, required=False,
                       description="height; enables ideal/adjusted weight selection"),
                   _CREATININE),
                  _cockcroft_gault, result_unit="mL/min"),
    CalculatorDef("ckd_epi_2021", "CKD-EPI 2021 eGFR", EQUATION,
                  (age_param(18, 120), sex_param(), _CREATININE),
                  _ckd_epi_2021, result_unit="mL/min/1.73m²"),
    CalculatorDef("mdrd_gfr", "MDRD eGFR", EQUATION,
                  (age_param(18, 120), sex_param(), _CREATININE,
                   ParameterSpec("black_race", BOOLEAN, required=False, default=False,
                                 description="Black race coefficient (1.212)")),
                  _mdrd, result_unit="mL/min/1.73m²"),
]
