"""Laboratory-derived equation calculators."""

from __future__ import annotations

import math

from ...errors import OutOfRangeError
from ...units import DEFAULT_REGISTRY, MOLAR_CONC, Quantity
from ..types import CalculatorDef, EQUATION
from .common import age_param, num, numeric

GLUCOSE_MGDL_PER_MMOL = 18.016


def _anion_gap_value(p) -> float:
    # AG = Na - Cl - HCO3 (potassium-free convention)
    return p.require("sodium") - p.require("chloride") - p.require("bicarbonate")


def _corrected_ag_value(p) -> float:
    return _anion_gap_value(p) + 2.5 * (4.0 - p.require("albumin"))


def _anion_gap(p):
    return numeric(_anion_gap_value(p), "mEq/L")


def _albumin_corrected_anion_gap(p):
    return numeric(_corrected_ag_value(p), "mEq/L")


def _delta_gap(p):
    return numeric(_anion_gap_value(p) - 12.0, "mEq/L")


def _delta_ratio(p):
    denom = 24.0 - p.require("bicarbonate")
    if denom == 0:
        raise OutOfRangeError("bicarbonate", "delta ratio undefined at HCO3 = 24")
    return numeric((_anion_gap_value(p) - 12.0) / denom, None)


def _albumin_corrected_delta_gap(p):
    return numeric(_corrected_ag_value(p) - 12.0, "mEq/L")


def _albumin_corrected_delta_ratio(p):
    denom = 24.0 - p.require("bicarbonate")
    if denom == 0:
        raise OutOfRangeError("bicarbonate", "delta ratio undefined at HCO3 = 24")
    return numeric((_corrected_ag_value(p) - 12.0) / denom, None)


def _calcium_correction(p):
    # Corrected Ca = measured Ca + 0.8 x (4 - albumin)
    value = p.require("calcium") + 0.8 * (4.0 - p.require("albumin"))
    return numeric(value, "mg/dL")


def _ldl(p):
    # Friedewald 1972; invalid at triglycerides >= 400 mg/dL
    tg = p.require("triglycerides")
    value = p.require("total_cholesterol") - p.require("hdl_cholesterol") - tg / 5.0
    return numeric(value, "mg/dL")


def _serum_osmolality(p):
    value = (2.0 * p.require("sodium") + p.require("bun") / 2.8
             + p.require("glucose") / 18.0)
    return numeric(value, "mOsm/kg")


def _sodium_correction(p):
    # Hillier 1999: +2.4 mEq/L Na per 100 mg/dL glucose above 100
    value = p.require("sodium") + 0.024 * (p.require("glucose") - 100.0)
    return numeric(value, "mEq/L")


def _fena(p):
    denom = p.require("sodium") * p.require("urine_creatinine")
    if denom == 0:
        raise OutOfRangeError("urine_creatinine", "FENa undefined for zero product")
    value = 100.0 * p.require("creatinine") * p.require("urine_sodium") / denom
    return numeric(value, "%")


def _legacy_molar_misconversion(p, name: str, factor_per_mmol: float,
                                corrected_value: float) -> float:
    """Reproduce a flipped mass/molar conversion for inputs given in molar units.

    The historical code divided by the mmol/L factor where it should have
    multiplied. Inputs already in mass units never hit the broken branch.
    """
    raw = p.raw(name)
    if not isinstance(raw, (Quantity, dict)):
        return corrected_value
    if isinstance(raw, dict):
        try:
            raw = Quantity(float(raw["value"]), str(raw.get("unit") or ""))
        except (KeyError, TypeError, ValueError):
            return corrected_value
    if not DEFAULT_REGISTRY.has_unit(raw.unit):
        return corrected_value
    if DEFAULT_REGISTRY.dimension(raw.unit) != MOLAR_CONC:
        return corrected_value
    mmol = DEFAULT_REGISTRY.convert_value(raw.value, raw.unit, "mmol/L")
    return mmol / factor_per_mmol


def _homa_ir(p):
    glucose = p.require("glucose")
    if p.mode.has("homa_ir_glucose_conversion"):
        glucose = _legacy_molar_misconversion(p, "glucose",
                                              GLUCOSE_MGDL_PER_MMOL, glucose)
    value = glucose * p.require("insulin") / 405.0
    return numeric(value, None)


def _fib4(p):
    # Sterling 2006: (age x AST) / (platelets[10^9/L] x sqrt(ALT))
    platelets = p.require("platelets")
    if p.mode.has("fib4_platelet_scaling"):
        platelets = platelets / 1000.0  # historical double rescale
    value = (p.require("age") * p.require("ast")) / (platelets * math.sqrt(p.require("alt")))
    return numeric(value, None)


_SODIUM = num("sodium", "mEq/L", 90, 200, description="serum sodium")
_ALBUMIN = num("albumin", "g/dL", 0.5, 7, description="serum albumin")
_GLUCOSE = num("glucose", "mg/dL", 5, 3000, analyte="glucose", description="serum glucose")

CALCULATORS = [
    CalculatorDef("anion_gap", "Anion Gap", EQUATION,
                  (_SODIUM, num("chloride", "mEq/L", 50, 160),
                   num("bicarbonate", "mEq/L", 1, 60)),
                  _anion_gap, result_unit="mEq/L"),
    CalculatorDef("albumin_corrected_anion_gap", "Albumin Corrected Anion Gap",
                  EQUATION,
                  (_SODIUM, num("chloride", "mEq/L", 50, 160),
                   num("bicarbonate", "mEq/L", 1, 60), _ALBUMIN),
                  _albumin_corrected_anion_gap, result_unit="mEq/L"),
    CalculatorDef("delta_gap", "Delta Gap", EQUATION,
                  (_SODIUM, num("chloride", "mEq/L", 50, 160),
                   num("bicarbonate", "mEq/L", 1, 60)),
                  _delta_gap, result_unit="mEq/L"),
    CalculatorDef("delta_ratio", "Delta Ratio", EQUATION,
                  (_SODIUM, num("chloride", "mEq/L", 50, 160),
                   num("bicarbonate", "mEq/L", 1, 60)),
                  _delta_ratio),
    CalculatorDef("albumin_corrected_delta_gap", "Albumin Corrected Delta Gap",
                  EQUATION,
                  (_SODIUM, num("chloride", "mEq/L", 50, 160),
                   num("bicarbonate", "mEq/L", 1, 60), _ALBUMIN),
                  _albumin_corrected_delta_gap, result_unit="mEq/L"),
    CalculatorDef("albumin_corrected_delta_ratio", "Albumin Corrected Delta Ratio",
                  EQUATION,
                  (_SODIUM, num("chloride", "mEq/L", 50, 160),
                   num("bicarbonate", "mEq/L", 1, 60), _ALBUMIN),
                  _albumin_corrected_delta_ratio),
    CalculatorDef("calcium_correction", "Calcium Correction for Hypoalbuminemia",
                  EQUATION,
                  (num("calcium", "mg/dL", 2, 25, analyte="calcium",
                       description="measured serum calcium"), _ALBUMIN),
                  _calcium_correction, result_unit="mg/dL"),
    CalculatorDef("ldl_calculated", "LDL Cholesterol (Friedewald)", EQUATION,
                  (num("total_cholesterol", "mg/dL", 30, 1500, analyte="cholesterol"),
                   num("hdl_cholesterol", "mg/dL", 5, 200, analyte="cholesterol"),
                   num("triglycerides", "mg/dL", 10, 5000, analyte="triglycerides")),
                  _ldl, result_unit="mg/dL"),
    CalculatorDef("serum_osmolality", "Serum Osmolality", EQUATION,
                  (_SODIUM,
                   num("bun", "mg/dL", 1, 300, analyte="urea_nitrogen",
                       description="blood urea nitrogen"),
                   _GLUCOSE),
                  _serum_osmolality, result_unit="mOsm/kg"),
    CalculatorDef("sodium_correction_hyperglycemia",
                  "Sodium Correction for Hyperglycemia", EQUATION,
                  (_SODIUM, _GLUCOSE), _sodium_correction, result_unit="mEq/L"),
    CalculatorDef("fena", "Fractional Excretion of Sodium", EQUATION,
                  (_SODIUM,
                   num("creatinine", "mg/dL", 0.05, 40, analyte="creatinine",
                       description="serum creatinine"),
                   num("urine_sodium", "mEq/L", 1, 400),
                   num("urine_creatinine", "mg/dL", 0.5, 1000, analyte="creatinine")),
                  _fena, result_unit="%"),
    CalculatorDef("homa_ir", "HOMA-IR", EQUATION,
                  (_GLUCOSE,
                   num("insulin", "µIU/mL", 0.1, 1000, description="fasting insulin")),
                  _homa_ir),
    CalculatorDef("fib4", "FIB-4 Index", EQUATION,
                  (age_param(18, 120),
                   num("ast", "U/L", 1, 10000), num("alt", "U/L", 1, 10000),
                   num("platelets", "×10⁹/L", 1, 5000,
                       description="platelet count")),
                  _fib4),
]
