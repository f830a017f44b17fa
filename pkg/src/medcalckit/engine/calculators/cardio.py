"""Cardiac and thromboembolism calculators."""

from __future__ import annotations

import math

from ...units import DEFAULT_REGISTRY, MOLAR_CONC, Quantity
from ..types import CalculatorDef, EQUATION, RULE
from .common import age_param, cat, flag, num, numeric, score, sex_param

_QT = num("qt_interval", "ms", 100, 1000, description="QT interval")
_HR = num("heart_rate", "bpm", 10, 400, required=False, description="heart rate")
_RR = num("rr_interval", "s", 0.15, 6, required=False,
          description="RR interval; alternative to heart rate")


def _rr_seconds(p) -> float:
    name, value = p.require_any("rr_interval", "heart_rate")
    if name == "rr_interval":
        return value
    return 60.0 / value


def _qtc(formula):
    def fn(p):
        qt = p.require("qt_interval")
        rr = _rr_seconds(p)
        if formula == "bazett":
            value = qt / math.sqrt(rr)
        elif formula == "fridericia":
            value = qt / rr ** (1.0 / 3.0)
        elif formula == "framingham":
            if p.mode.has("qtc_framingham_operator"):
                value = qt / 154.0 * (1.0 - rr)
            else:
                value = qt + 154.0 * (1.0 - rr)
        elif formula == "hodges":
            value = qt + 1.75 * (60.0 / rr - 60.0)
        else:  # rautaharju
            value = qt * (120.0 + 60.0 / rr) / 180.0
        return numeric(value, "ms")
    return fn


def _cha2ds2_vasc(p):
    age = p.require("age")
    pts = 0
    if age >= 75:
        pts += 2
    elif age >= 65:
        pts += 1
    if p.require("sex") == "female":
        pts += 1
    pts += p.get("congestive_heart_failure", False)
    pts += p.get("hypertension", False)
    pts += 2 * p.get("stroke_tia_thromboembolism", False)
    pts += p.get("vascular_disease", False)
    pts += p.get("diabetes", False)
    return score(pts)


def _has_bled(p):
    pts = 0
    pts += p.get("hypertension_uncontrolled", False)
    pts += p.get("abnormal_renal_function", False)
    pts += p.get("abnormal_liver_function", False)
    pts += p.get("stroke_history", False)
    pts += p.get("bleeding_history", False)
    pts += p.get("labile_inr", False)
    if p.require("age") > 65:
        pts += 1
    pts += p.get("bleeding_predisposing_medication", False)
    pts += p.get("alcohol_use", False)
    return score(pts)


_HEART_HISTORY = {"slightly suspicious": 0, "moderately suspicious": 1,
                  "highly suspicious": 2}
_HEART_ECG = {"normal": 0, "nonspecific repolarization": 1,
              "significant st deviation": 2}
_HEART_TROPONIN = {"normal": 0, "1-3x normal": 1, ">3x normal": 2}
_HEART_RISK_FLAGS = ("hypertension", "hypercholesterolemia", "diabetes",
                     "obesity", "smoking", "family_history_cad")


def _heart_score(p):
    pts = _HEART_HISTORY[p.require("history")]
    pts += _HEART_ECG[p.require("ecg")]
    age = p.require("age")
    if age >= 65:
        pts += 2
    elif age >= 45:
        pts += 1
    # Risk factors: >=3 factors or known atherosclerotic disease -> 2 points
    risk_count = sum(bool(p.get(name, False)) for name in _HEART_RISK_FLAGS)
    athero = p.get("atherosclerotic_disease", False)
    if p.mode.has("heart_atherosclerosis_logic"):
        risk_count += bool(athero)  # historical: counted as just another factor
        athero = False
    if athero or risk_count >= 3:
        pts += 2
    elif risk_count >= 1:
        pts += 1
    pts += _HEART_TROPONIN[p.require("troponin")]
    return score(pts)


def _rcri(p):
    key = ("ischemetic_heart_disease" if p.mode.has("rcri_ischemic_key")
           else "ischemic_heart_disease")
    pts = 0
    pts += p.get("high_risk_surgery", False)
    pts += bool(p.get(key, False))
    pts += p.get("congestive_heart_failure", False)
    pts += p.get("cerebrovascular_disease", False)
    pts += p.get("insulin_treatment", False)
    if p.get("creatinine", 0.0) > 2.0:
        pts += 1
    return score(pts)


def _legacy_swapped_cholesterol(p, name: str, corrected: float) -> float:
    """Converter called with from/to swapped: molar inputs get the inverse factor."""
    raw = p.raw(name)
    if isinstance(raw, dict):
        try:
            raw = Quantity(float(raw["value"]), str(raw.get("unit") or ""))
        except (KeyError, TypeError, ValueError):
            return corrected
    if not isinstance(raw, Quantity) or not DEFAULT_REGISTRY.has_unit(raw.unit):
        return corrected
    if DEFAULT_REGISTRY.dimension(raw.unit) != MOLAR_CONC:
        return corrected
    mmol = DEFAULT_REGISTRY.convert_value(raw.value, raw.unit, "mmol/L")
    return mmol / 38.665  # should be mmol x 38.665


def _framingham_risk(p):
    """10-year hard CHD risk (ATP III Framingham point-free equations), percent."""
    age = p.require("age")
    tc = p.require("total_cholesterol")
    hdl = p.require("hdl_cholesterol")
    if p.mode.has("framingham_converter_arg_order"):
        tc = _legacy_swapped_cholesterol(p, "total_cholesterol", tc)
        hdl = _legacy_swapped_cholesterol(p, "hdl_cholesterol", hdl)
    sbp = p.require("systolic_bp")
    treated = 1.0 if p.get("bp_treated", False) else 0.0
    smoker = 1.0 if p.get("smoker", False) else 0.0
    ln = math.log
    if p.require("sex") == "male":
        l = (52.00961 * ln(age) + 20.014077 * ln(tc) - 0.905964 * ln(hdl)
             + 1.305784 * ln(sbp) + 0.241549 * treated + 12.096316 * smoker
             - 4.605038 * ln(age) * ln(tc)
             - 2.84367 * ln(min(age, 70.0)) * smoker
             - 2.93323 * ln(age) * ln(age) - 172.300168)
        risk = 1.0 - 0.9402 ** math.exp(l)
    else:
        l = (31.764001 * ln(age) + 22.465206 * ln(tc) - 1.187731 * ln(hdl)
             + 2.552905 * ln(sbp) + 0.420251 * treated + 13.07543 * smoker
             - 5.060998 * ln(age) * ln(tc)
             - 2.996945 * ln(min(age, 78.0)) * smoker - 146.5933061)
        risk = 1.0 - 0.98767 ** math.exp(l)
    return numeric(100.0 * risk, "%")


def _wells_pe(p):
    pts = 0.0
    pts += 3.0 * p.get("clinical_signs_dvt", False)
    pts += 3.0 * p.get("pe_most_likely_diagnosis", False)
    if p.require("heart_rate") > 100.0:
        pts += 1.5
    pts += 1.5 * p.get("immobilization_or_recent_surgery", False)
    pts += 1.5 * p.get("prior_pe_or_dvt", False)
    pts += 1.0 * p.get("hemoptysis", False)
    pts += 1.0 * p.get("malignancy", False)
    return score(pts)


_WELLS_DVT_FLAGS = ("active_cancer", "bedridden_or_major_surgery",
                    "calf_swelling_over_3cm", "collateral_superficial_veins",
                    "entire_leg_swollen", "localized_deep_vein_tenderness",
                    "pitting_edema_symptomatic_leg", "paralysis_or_immobilization",
                    "previous_dvt")


def _wells_dvt(p):
    pts = sum(bool(p.get(name, False)) for name in _WELLS_DVT_FLAGS)
    if p.get("alternative_diagnosis_likely", False):
        pts -= 2
    return score(pts)


def _perc(p):
    pts = 0
    if p.require("age") >= 50:
        pts += 1
    if p.require("heart_rate") >= 100:
        pts += 1
    if p.require("oxygen_saturation") < 95:
        pts += 1
    pts += p.get("unilateral_leg_swelling", False)
    pts += p.get("hemoptysis", False)
    pts += p.get("recent_surgery_or_trauma", False)
    pts += p.get("prior_pe_or_dvt", False)
    pts += p.get("hormone_use", False)
    return score(pts)


def _qtc_def(calc_id, name, formula):
    return CalculatorDef(calc_id, name, EQUATION, (_QT, _HR, _RR), _qtc(formula),
                         result_unit="ms")


CALCULATORS = [
    _qtc_def("qtc_bazett", "Corrected QT Interval (Bazett)", "bazett"),
    _qtc_def("qtc_fridericia", "Corrected QT Interval (Fridericia)", "fridericia"),
    _qtc_def("qtc_framingham", "Corrected QT Interval (Framingham)", "framingham"),
    _qtc_def("qtc_hodges", "Corrected QT Interval (Hodges)", "hodges"),
    _qtc_def("qtc_rautaharju", "Corrected QT Interval (Rautaharju)", "rautaharju"),
    CalculatorDef("cha2ds2_vasc", "CHA2DS2-VASc Score", RULE,
                  (age_param(18, 120), sex_param(),
                   flag("congestive_heart_failure"), flag("hypertension"),
                   flag("stroke_tia_thromboembolism",
                        "prior stroke, TIA, or thromboembolism"),
                   flag("vascular_disease"), flag("diabetes")),
                  _cha2ds2_vasc, score_range=(0, 9)),
    CalculatorDef("has_bled", "HAS-BLED Score", RULE,
                  (age_param(18, 120),
                   flag("hypertension_uncontrolled", "SBP > 160 mmHg"),
                   flag("abnormal_renal_function"), flag("abnormal_liver_function"),
                   flag("stroke_history"), flag("bleeding_history"),
                   flag("labile_inr", "time in therapeutic range < 60%"),
                   flag("bleeding_predisposing_medication",
                        "antiplatelet agents or NSAIDs"),
                   flag("alcohol_use", ">= 8 drinks per week")),
                  _has_bled, score_range=(0, 9)),
    CalculatorDef("heart_score", "HEART Score", RULE,
                  (age_param(18, 120),
                   cat("history", tuple(_HEART_HISTORY)),
                   cat("ecg", tuple(_HEART_ECG)),
                   cat("troponin", tuple(_HEART_TROPONIN)),
                   flag("hypertension"), flag("hypercholesterolemia"),
                   flag("diabetes"), flag("obesity", "BMI > 30 kg/m²"),
                   flag("smoking", "current or quit within 3 months"),
                   flag("family_history_cad"),
                   flag("atherosclerotic_disease",
                        "prior MI, PCI/CABG, stroke/TIA, or peripheral arterial disease")),
                  _heart_score, score_range=(0, 10)),
    CalculatorDef("rcri", "Revised Cardiac Risk Index", RULE,
                  (flag("high_risk_surgery",
                        "intraperitoneal, intrathoracic, or suprainguinal vascular"),
                   flag("ischemic_heart_disease"), flag("congestive_heart_failure"),
                   flag("cerebrovascular_disease"), flag("insulin_treatment"),
                   num("creatinine", "mg/dL", 0.05, 40, analyte="creatinine",
                       required=False, default=0.0,
                       description="pre-operative serum creatinine")),
                  _rcri, score_range=(0, 6)),
    CalculatorDef("framingham_risk", "Framingham 10-Year Hard CHD Risk", EQUATION,
                  (age_param(30, 79), sex_param(),
                   num("total_cholesterol", "mg/dL", 50, 1000, analyte="cholesterol"),
                   num("hdl_cholesterol", "mg/dL", 5, 200, analyte="cholesterol"),
                   num("systolic_bp", "mmHg", 60, 300),
                   flag("bp_treated", "on antihypertensive treatment"),
                   flag("smoker")),
                  _framingham_risk, result_unit="%"),
    CalculatorDef("wells_pe", "Wells' Criteria for Pulmonary Embolism", RULE,
                  (num("heart_rate", "bpm", 10, 400),
                   flag("clinical_signs_dvt"), flag("pe_most_likely_diagnosis"),
                   flag("immobilization_or_recent_surgery",
                        "immobilization >= 3 days or surgery within 4 weeks"),
                   flag("prior_pe_or_dvt"), flag("hemoptysis"),
                   flag("malignancy", "treated within 6 months or palliative")),
                  _wells_pe, score_range=(0, 12.5)),
    CalculatorDef("wells_dvt", "Wells' Criteria for DVT", RULE,
                  tuple(flag(name) for name in _WELLS_DVT_FLAGS)
                  + (flag("alternative_diagnosis_likely"),),
                  _wells_dvt, score_range=(-2, 9)),
    CalculatorDef("perc_rule", "PERC Rule Criteria Count", RULE,
                  (age_param(18, 120), num("heart_rate", "bpm", 10, 400),
                   num("oxygen_saturation", "%", 40, 100),
                   flag("unilateral_leg_swelling"), flag("hemoptysis"),
                   flag("recent_surgery_or_trauma", "within 4 weeks"),
                   flag("prior_pe_or_dvt"), flag("hormone_use")),
                  _perc, score_range=(0, 8)),
]
