"""Body size, composition, hemodynamic, and fluid calculators."""

from __future__ import annotations

import math

from ..types import CalculatorDef, EQUATION
from .common import (age_param, bmi_value, devine_ibw, mean_arterial_pressure,
                     num, numeric, sex_param)


def _bmi(p):
    value = bmi_value(p.require("weight"), p.require("height"))
    return numeric(value, "kg/m²")


def _bsa(p):
    # Mosteller 1987
    value = math.sqrt(p.require("weight") * p.require("height") / 3600.0)
    return numeric(value, "m²")


def _ibw(p):
    value = devine_ibw(p.require("sex") == "female", p.require("height"))
    return numeric(value, "kg")


def _abw(p):
    ibw = devine_ibw(p.require("sex") == "female", p.require("height"))
    value = ibw + 0.4 * (p.require("weight") - ibw)
    return numeric(value, "kg", intermediates={"ideal_body_weight": ibw})


def _target_weight(p):
    h_m = p.require("height") / 100.0
    return numeric(p.require("target_bmi") * h_m * h_m, "kg")


def _map(p):
    return numeric(mean_arterial_pressure(p.require("systolic_bp"),
                                          p.require("diastolic_bp")), "mmHg")


def _maintenance_fluids(p):
    # Holliday-Segar 4-2-1 rule, mL/hr
    w = p.require("weight")
    if w <= 10:
        rate = 4.0 * w
    elif w <= 20:
        rate = 40.0 + 2.0 * (w - 10.0)
    else:
        rate = 60.0 + 1.0 * (w - 20.0)
    return numeric(rate, "mL/hr")


def _free_water_deficit(p):
    age = p.require("age")
    female = p.require("sex") == "female"
    # total body water fraction: children 0.6; adult M 0.6 / F 0.5; >=65 M 0.5 / F 0.45
    if age < 18:
        tbw = 0.6
    elif age < 65:
        tbw = 0.5 if female else 0.6
    else:
        tbw = 0.45 if female else 0.5
    value = tbw * p.require("weight") * (p.require("sodium") / 140.0 - 1.0)
    return numeric(value, "L", intermediates={"total_body_water_fraction": tbw})


_WEIGHT = num("weight", "kg", 0.5, 500, description="actual body weight")
_HEIGHT = num("height", "cm", 30, 260, description="body height")

CALCULATORS = [
    CalculatorDef("bmi", "Body Mass Index", EQUATION, (_WEIGHT, _HEIGHT),
                  _bmi, result_unit="kg/m²"),
    CalculatorDef("bsa", "Body Surface Area (Mosteller)", EQUATION,
                  (_WEIGHT, _HEIGHT), _bsa, result_unit="m²"),
    CalculatorDef("ideal_body_weight", "Ideal Body Weight (Devine)", EQUATION,
                  (sex_param(), _HEIGHT), _ibw, result_unit="kg"),
    CalculatorDef("adjusted_body_weight", "Adjusted Body Weight", EQUATION,
                  (sex_param(), _HEIGHT, _WEIGHT), _abw, result_unit="kg"),
    CalculatorDef("target_weight", "Target Weight for BMI", EQUATION,
                  (num("target_bmi", "kg/m²", 10, 60), _HEIGHT),
                  _target_weight, result_unit="kg"),
    CalculatorDef("mean_arterial_pressure", "Mean Arterial Pressure", EQUATION,
                  (num("systolic_bp", "mmHg", 30, 300),
                   num("diastolic_bp", "mmHg", 10, 200)),
                  _map, result_unit="mmHg"),
    CalculatorDef("maintenance_fluids", "Maintenance Fluids (4-2-1 rule)", EQUATION,
                  (_WEIGHT,), _maintenance_fluids, result_unit="mL/hr"),
    CalculatorDef("free_water_deficit", "Free Water Deficit", EQUATION,
                  (age_param(), sex_param(), _WEIGHT,
                   num("sodium", "mEq/L", 100, 200, description="serum sodium")),
                  _free_water_deficit, result_unit="L"),
]
