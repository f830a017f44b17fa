"""Core datatypes for the calculator engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

EQUATION = "equation"
RULE = "rule"

NUMERIC = "numeric"
BOOLEAN = "boolean"
CATEGORICAL = "categorical"


@dataclass(frozen=True)
class ParameterSpec:
    """Schema for one calculator input.

    Numeric parameters declare the canonical unit all internal math uses;
    conversion happens exactly once, at the boundary. ``analyte`` enables
    mass/molar bridging for concentrations. Optional parameters document
    their absent-value semantics via ``default`` (None means truly absent).
    """

    name: str
    kind: str
    canonical_unit: str | None = None
    analyte: str | None = None
    required: bool = True
    valid_range: tuple[float, float] | None = None
    categories: tuple[str, ...] | None = None
    default: object | None = None
    description: str = ""

    def __post_init__(self):
        if self.kind == NUMERIC and self.valid_range is not None:
            lo, hi = self.valid_range
            if lo > hi:
                raise ValueError(f"{self.name}: invalid range {self.valid_range}")


@dataclass(frozen=True)
class CalculatorDef:
    """Identity, schema, and implementation of one calculator."""

    id: str
    name: str
    category: str  # equation | rule
    params: tuple[ParameterSpec, ...]
    fn: Callable  # (Resolved) -> CalcResult
    result_unit: str | None = None
    score_range: tuple[float, float] | None = None
    bug_ids: tuple[str, ...] = ()

    def param(self, name: str) -> ParameterSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)

    def param_names(self) -> set[str]:
        return {p.name for p in self.params}


@dataclass(frozen=True)
class EngineMode:
    """corrected (default) or legacy with a set of reproduced bug identifiers.

    Legacy with an empty bug set is behaviorally identical to corrected.
    """

    legacy_bugs: frozenset[str] = frozenset()

    def has(self, bug_id: str) -> bool:
        return bug_id in self.legacy_bugs

    @property
    def is_corrected(self) -> bool:
        return not self.legacy_bugs

    def describe(self) -> str:
        if self.is_corrected:
            return "corrected"
        return "legacy{" + ",".join(sorted(self.legacy_bugs)) + "}"


CORRECTED = EngineMode()


@dataclass(frozen=True)
class CalcResult:
    """Outcome of one computation.

    kind 'numeric' carries a continuous value in ``unit``; 'score' an
    integer-or-half-point total; 'label' a categorical/date answer.
    ``display`` is the benchmark-facing answer string, produced only by the
    shared formatter — nothing upstream rounds.
    """

    kind: str  # numeric | score | label
    value: float | None = None
    unit: str | None = None
    points: float | None = None
    label: str | None = None
    display: str = ""
    intermediates: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()
