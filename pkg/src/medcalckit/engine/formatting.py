"""Answer-string formatting shared by every calculator.

Equation answers follow the benchmark's rounding utility: two decimal
places for |x| >= 1, three significant digits for |x| < 1. Nothing upstream
of this module may round; legacy mode reproduces the historical off-by-one
(one significant digit too few below 1) behind its own bug identifier.
"""

from __future__ import annotations

import math

from .types import CalcResult, EngineMode, CORRECTED

SMALL_VALUE_SIG_DIGITS = 3


def round_numeric_answer(x: float, mode: EngineMode = CORRECTED) -> float:
    """Round a continuous result to the benchmark display precision."""
    if x == 0 or not math.isfinite(x):
        return x
    if abs(x) >= 1:
        return round(x, 2)
    extra = SMALL_VALUE_SIG_DIGITS - 1
    if mode.has("sig_digits_off_by_one"):
        extra -= 1
    decimals = -int(math.floor(math.log10(abs(x)))) + extra
    return round(x, decimals)


def format_score(points: float) -> str:
    """Integral scores render as integers; half-point scales keep one decimal."""
    if points == int(points):
        return str(int(points))
    return f"{points:g}"


def format_answer(result: CalcResult, mode: EngineMode = CORRECTED) -> str:
    """Render a CalcResult as the benchmark-facing answer string."""
    if result.kind == "numeric":
        return str(round_numeric_answer(result.value, mode))
    if result.kind == "score":
        return format_score(result.points)
    return result.label
