"""Registry of reproduced upstream implementation bugs.

Each identifier names one documented defect in the original MedCalc-Bench
calculator code. The corrected engine never exhibits them; legacy mode
reproduces exactly the requested subset so regression tests can diff the
two implementations one bug at a time.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BugInfo:
    id: str
    calculator_id: str
    category: str
    summary: str


_BUGS = [
    # -- logic & formula errors -------------------------------------------------
    BugInfo("ckd_epi_male_kappa", "ckd_epi_2021", "logic",
            "male creatinine kappa set to 0.7 instead of 0.9"),
    BugInfo("meld_na_formula", "meld_3_0", "logic",
            "computes the older MELD-Na score instead of MELD 3.0"),
    BugInfo("homa_ir_glucose_conversion", "homa_ir", "logic",
            "glucose mmol/L -> mg/dL conversion divides instead of multiplies"),
    BugInfo("child_pugh_bilirubin_mw", "child_pugh", "logic",
            "bilirubin molecular weight 548.66 instead of 584.66"),
    BugInfo("mme_fentanyl_patch_factor", "mme", "logic",
            "fentanyl patch factor 0.13 (buccal µg factor) instead of 2.4 per µg/hr"),
    BugInfo("heart_atherosclerosis_logic", "heart_score", "logic",
            "known atherosclerotic disease counted as one risk factor instead of "
            "granting the 2-point risk-factor maximum"),
    BugInfo("sirs_band_neutrophils", "sirs", "logic",
            "band neutrophils >10% missing from the WBC criterion"),
    BugInfo("sofa_fio2_vasopressors", "sofa", "logic",
            "FiO2 percent treated as a fraction and shifted vasopressor dose bands"),
    BugInfo("gcs_not_testable", "gcs", "logic",
            "'Not Testable' components default to the component maximum instead "
            "of the minimum of 1"),
    # -- runtime & implementation bugs -------------------------------------------
    BugInfo("framingham_converter_arg_order", "framingham_risk", "runtime",
            "cholesterol unit converter called with from/to units swapped"),
    BugInfo("cci_liver_disease_key", "charlson_comorbidity_index", "runtime",
            "reads key 'liver_diease', silently zeroing liver disease points"),
    BugInfo("rcri_ischemic_key", "rcri", "runtime",
            "reads key 'ischemetic_heart_disease', silently dropping the criterion"),
    BugInfo("mdrd_broken_path", "mdrd_gfr", "runtime",
            "calculator resource fails to load (broken file path)"),
    BugInfo("curb65_broken_path", "curb65", "runtime",
            "calculator resource fails to load (broken file path)"),
    # -- threshold & boundary errors ----------------------------------------------
    BugInfo("gbs_bun_70_boundary", "glasgow_blatchford", "threshold",
            "BUN exactly 70 mg/dL scored in the 4-point band instead of 6"),
    BugInfo("curb65_bun_threshold", "curb65", "threshold",
            "urea criterion fires for BUN >19 mg/dL instead of >20"),
    BugInfo("fib4_platelet_scaling", "fib4", "threshold",
            "platelet count rescaled /1000 a second time after canonicalization"),
    # -- precision & rounding errors ------------------------------------------------
    BugInfo("steroid_intermediate_rounding", "steroid_conversion", "precision",
            "equivalence ratio rounded to 2 decimals before multiplying"),
    BugInfo("sig_digits_off_by_one", "*", "precision",
            "answer formatter keeps one significant digit too few for |x| < 1"),
    BugInfo("qtc_framingham_operator", "qtc_framingham", "precision",
            "heart-rate correction divides (QT/154)·(1−RR) instead of adding "
            "QT + 154·(1−RR)"),
    # -- ground-truth impacting key mismatch ------------------------------------------
    BugInfo("apache_ii_chronic_health_key", "apache_ii", "runtime",
            "reads key 'severe_organ_failure_or_immunocompromise' while the schema "
            "provides 'organ_failure_immunocompromise'; chronic health points never apply"),
]

BUGS: dict[str, BugInfo] = {b.id: b for b in _BUGS}

ALL_BUG_IDS: tuple[str, ...] = tuple(sorted(BUGS))


def bugs_for_calculator(calculator_id: str) -> tuple[str, ...]:
    """Bug identifiers whose legacy behavior can affect this calculator."""
    hits = [b.id for b in _BUGS if b.calculator_id == calculator_id]
    # the formatter bug touches every equation answer string
    hits.append("sig_digits_off_by_one")
    return tuple(sorted(set(hits)))
